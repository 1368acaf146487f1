#include "pcdyn/interval_set.hpp"

#include <algorithm>

namespace pcdyn {

Interval Interval::make(Scalar lo, Scalar hi, bool lo_closed, bool hi_closed) {
    Interval iv{std::move(lo), std::move(hi), lo_closed, hi_closed};
    Scalar zero = Scalar::zero(iv.lo.backend());
    Scalar one = Scalar::one(iv.lo.backend());
    if (iv.lo > iv.hi)
        throw_validation("malformed interval " + iv.str() + ": lo > hi");
    if (iv.lo < zero || iv.hi > one)
        throw_validation("malformed interval " + iv.str() + ": outside [0,1]");
    if (iv.lo == iv.hi && !(iv.lo_closed && iv.hi_closed))
        throw_validation("malformed interval " + iv.str() + ": degenerate but not a closed point");
    return iv;
}

Scalar Interval::midpoint() const {
    Scalar two = Scalar::of(2, lo.backend());
    return (lo + hi) / two;
}

bool Interval::contains(const Scalar& x) const {
    int cl = x.cmp(lo), ch = x.cmp(hi);
    if (cl < 0 || ch > 0) return false;
    if (cl == 0 && !lo_closed) return false;
    if (ch == 0 && !hi_closed) return false;
    return true;
}

bool Interval::contains_interval(const Interval& inner) const {
    int cl = lo.cmp(inner.lo);
    bool lo_ok = cl < 0 || (cl == 0 && (lo_closed || !inner.lo_closed));
    int ch = hi.cmp(inner.hi);
    bool hi_ok = ch > 0 || (ch == 0 && (hi_closed || !inner.hi_closed));
    return lo_ok && hi_ok;
}

std::string Interval::str() const {
    return std::string(lo_closed ? "[" : "(") + lo.str() + "," + hi.str() + (hi_closed ? "]" : ")");
}

IntervalSet IntervalSet::unit(Backend b) {
    IntervalSet s(b);
    s.comps_.push_back(Interval::half_open(Scalar::zero(b), Scalar::one(b)));
    return s;
}

IntervalSet IntervalSet::of(std::vector<Interval> raw) {
    if (raw.empty()) throw_validation("IntervalSet::of requires at least one interval");
    Backend b = raw.front().lo.backend();
    return normalize(std::move(raw), b);
}

IntervalSet IntervalSet::normalize(std::vector<Interval> raw, Backend b) {
    for (const Interval& iv : raw) {
        // re-validate (callers may have built the struct directly)
        Interval::make(iv.lo, iv.hi, iv.lo_closed, iv.hi_closed);
        if (iv.lo.backend() != b) throw_validation("interval backend mismatch in normalize");
    }
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& c) {
        int cl = a.lo.cmp(c.lo);
        if (cl != 0) return cl < 0;
        if (a.lo_closed != c.lo_closed) return a.lo_closed;  // closed starts first
        return a.hi.cmp(c.hi) < 0;
    });

    IntervalSet out(b);
    for (Interval& iv : raw) {
        if (out.comps_.empty()) {
            out.comps_.push_back(std::move(iv));
            continue;
        }
        Interval& cur = out.comps_.back();
        int c = iv.lo.cmp(cur.hi);
        bool mergeable = c < 0 || (c == 0 && (cur.hi_closed || iv.lo_closed));
        if (!mergeable) {
            out.comps_.push_back(std::move(iv));
            continue;
        }
        // union of two overlapping/touching intervals is their hull
        int ch = iv.hi.cmp(cur.hi);
        if (ch > 0) {
            cur.hi = iv.hi;
            cur.hi_closed = iv.hi_closed;
        } else if (ch == 0) {
            cur.hi_closed = cur.hi_closed || iv.hi_closed;
        }
        int clo = iv.lo.cmp(cur.lo);
        if (clo == 0) cur.lo_closed = cur.lo_closed || iv.lo_closed;
    }
    return out;
}

IntervalSet IntervalSet::complement_in_unit() const {
    Backend b = backend_;
    Scalar cursor = Scalar::zero(b);
    bool cursor_closed = true;
    Scalar one = Scalar::one(b);
    std::vector<Interval> gaps;
    auto push_gap = [&](const Scalar& hi, bool hi_closed) {
        int c = cursor.cmp(hi);
        if (c > 0) return;
        if (c == 0 && !(cursor_closed && hi_closed)) return;
        gaps.push_back(Interval::make(cursor, hi, cursor_closed, hi_closed));
    };
    for (const Interval& iv : comps_) {
        push_gap(iv.lo, !iv.lo_closed);
        cursor = iv.hi;
        cursor_closed = !iv.hi_closed;
        if (cursor >= one) break;
    }
    if (cursor < one) push_gap(one, false);
    return normalize(std::move(gaps), b);
}

namespace {

// returns true (and the intersection) when a ∩ b is nonempty
bool intersect_pair(const Interval& a, const Interval& b, Interval& out) {
    const Scalar* lo;
    bool lo_closed;
    int cl = a.lo.cmp(b.lo);
    if (cl > 0) {
        lo = &a.lo;
        lo_closed = a.lo_closed;
    } else if (cl < 0) {
        lo = &b.lo;
        lo_closed = b.lo_closed;
    } else {
        lo = &a.lo;
        lo_closed = a.lo_closed && b.lo_closed;
    }
    const Scalar* hi;
    bool hi_closed;
    int ch = a.hi.cmp(b.hi);
    if (ch < 0) {
        hi = &a.hi;
        hi_closed = a.hi_closed;
    } else if (ch > 0) {
        hi = &b.hi;
        hi_closed = b.hi_closed;
    } else {
        hi = &a.hi;
        hi_closed = a.hi_closed && b.hi_closed;
    }
    int c = lo->cmp(*hi);
    if (c > 0 || (c == 0 && !(lo_closed && hi_closed))) return false;
    out = Interval{*lo, *hi, lo_closed, hi_closed};
    return true;
}

}  // namespace

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
    if (backend_ != o.backend_) throw_validation("intersect: backend mismatch");
    std::vector<Interval> res;
    size_t i = 0, j = 0;
    while (i < comps_.size() && j < o.comps_.size()) {
        Interval out{Scalar::zero(backend_), Scalar::zero(backend_), true, true};
        if (intersect_pair(comps_[i], o.comps_[j], out)) res.push_back(out);
        // advance the component that ends first
        int c = comps_[i].hi.cmp(o.comps_[j].hi);
        if (c < 0 || (c == 0 && !comps_[i].hi_closed)) {
            ++i;
        } else {
            ++j;
        }
    }
    return normalize(std::move(res), backend_);
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
    if (backend_ != o.backend_) throw_validation("unite: backend mismatch");
    std::vector<Interval> all = comps_;
    all.insert(all.end(), o.comps_.begin(), o.comps_.end());
    return normalize(std::move(all), backend_);
}

bool IntervalSet::is_disjoint(const IntervalSet& o) const {
    return intersect(o).empty();
}

IntervalSet IntervalSet::interior() const {
    std::vector<Interval> res;
    for (const Interval& iv : comps_) {
        if (iv.is_point()) continue;
        res.push_back(Interval::open(iv.lo, iv.hi));
    }
    IntervalSet out(backend_);
    out.comps_ = std::move(res);  // already canonical
    return out;
}

LocateResult IntervalSet::locate(const Scalar& x) const {
    for (size_t k = 0; k < comps_.size(); ++k) {
        const Interval& iv = comps_[k];
        int cl = x.cmp(iv.lo);
        if (cl < 0) break;  // sorted; x before this and all later components
        int ch = x.cmp(iv.hi);
        if (ch > 0) continue;
        LocateResult r;
        r.component = static_cast<int>(k);
        if (iv.is_point()) {
            r.kind = LocateResult::Kind::Boundary;
            r.member = true;
        } else if (cl == 0) {
            r.kind = LocateResult::Kind::Boundary;
            r.member = iv.lo_closed;
        } else if (ch == 0) {
            r.kind = LocateResult::Kind::Boundary;
            r.member = iv.hi_closed;
        } else {
            r.kind = LocateResult::Kind::Inside;
            r.member = true;
        }
        return r;
    }
    return LocateResult{};
}

Scalar IntervalSet::total_length() const {
    Scalar sum = Scalar::zero(backend_);
    for (const Interval& iv : comps_) sum = sum + iv.length();
    return sum;
}

Scalar IntervalSet::min_component_length() const {
    bool found = false;
    Scalar best = Scalar::zero(backend_);
    for (const Interval& iv : comps_) {
        if (iv.is_point()) continue;
        if (!found || iv.length() < best) {
            best = iv.length();
            found = true;
        }
    }
    if (!found) throw_validation("min_component_length: no non-degenerate component");
    return best;
}

bool IntervalSet::operator==(const IntervalSet& o) const {
    if (comps_.size() != o.comps_.size()) return false;
    for (size_t k = 0; k < comps_.size(); ++k) {
        const Interval& a = comps_[k];
        const Interval& b = o.comps_[k];
        if (a.lo != b.lo || a.hi != b.hi) return false;
        // flags on equal endpoints must agree exactly
        if (a.lo_closed != b.lo_closed || a.hi_closed != b.hi_closed) return false;
    }
    return true;
}

std::string IntervalSet::str() const {
    if (comps_.empty()) return "{}";
    std::string s;
    for (size_t k = 0; k < comps_.size(); ++k) {
        if (k) s += " u ";
        s += comps_[k].str();
    }
    return s;
}

}  // namespace pcdyn
