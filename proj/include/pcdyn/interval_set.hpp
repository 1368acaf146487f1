#pragma once

#include <string>
#include <vector>

#include "pcdyn/scalar.hpp"

namespace pcdyn {

// Subinterval of [0,1] with per-endpoint openness flags. A point interval
// (lo == hi) must be closed on both sides; empty sets are represented only
// by an empty IntervalSet.
struct Interval {
    Scalar lo, hi;
    bool lo_closed = true;
    bool hi_closed = true;

    static Interval make(Scalar lo, Scalar hi, bool lo_closed, bool hi_closed);
    static Interval closed(Scalar lo, Scalar hi) { return make(std::move(lo), std::move(hi), true, true); }
    static Interval open(Scalar lo, Scalar hi) { return make(std::move(lo), std::move(hi), false, false); }
    static Interval half_open(Scalar lo, Scalar hi) { return make(std::move(lo), std::move(hi), true, false); }
    static Interval point(Scalar p) { return make(p, p, true, true); }

    bool is_point() const { return lo == hi; }
    Scalar length() const { return hi - lo; }
    Scalar midpoint() const;
    bool contains(const Scalar& x) const;
    // set containment with endpoint flags: every point of inner is in *this
    bool contains_interval(const Interval& inner) const;
    std::string str() const;
};

struct LocateResult {
    enum class Kind { Inside, Boundary, Outside };
    Kind kind = Kind::Outside;
    int component = -1;        // index into components(), -1 when outside
    bool member = false;       // whether x belongs to the set
};

// Canonical finite union of intervals: components pairwise disjoint, sorted,
// and non-mergeable. Immutable after construction.
class IntervalSet {
public:
    explicit IntervalSet(Backend b) : backend_(b) {}

    // canonicalizes arbitrary valid intervals (sorts, merges); validates inputs
    static IntervalSet normalize(std::vector<Interval> raw, Backend b);
    static IntervalSet of(std::vector<Interval> raw);  // backend inferred, raw non-empty
    static IntervalSet empty_set(Backend b) { return IntervalSet(b); }
    static IntervalSet unit(Backend b);  // [0,1)

    Backend backend() const { return backend_; }
    const std::vector<Interval>& components() const { return comps_; }
    bool empty() const { return comps_.empty(); }
    size_t size() const { return comps_.size(); }

    IntervalSet complement_in_unit() const;
    IntervalSet intersect(const IntervalSet& o) const;
    IntervalSet unite(const IntervalSet& o) const;
    bool is_disjoint(const IntervalSet& o) const;
    // drops point components and opens all endpoints
    IntervalSet interior() const;

    LocateResult locate(const Scalar& x) const;
    bool member(const Scalar& x) const { return locate(x).member; }

    Scalar total_length() const;
    Scalar min_component_length() const;  // over non-point components; error if none

    bool operator==(const IntervalSet& o) const;
    std::string str() const;

private:
    Backend backend_;
    std::vector<Interval> comps_;
};

}  // namespace pcdyn
