#pragma once

#include <optional>
#include <vector>

#include "pcdyn/expanding.hpp"

namespace pcdyn {

// Digit word over {1..n}. Either a plain truncated observation or an
// eventually periodic word with exact preperiod/period (digits then holds
// the preperiod followed by one period).
struct ItineraryWord {
    enum class Kind { Truncated, EventuallyPeriodic };
    Kind kind = Kind::Truncated;
    std::vector<int> digits;
    int preperiod = 0;
    int period = 0;

    int digit(size_t k) const {
        if (kind == Kind::Truncated || k < digits.size()) return digits.at(k);
        size_t s = static_cast<size_t>(preperiod);
        return digits[s + (k - s) % static_cast<size_t>(period)];
    }
};

std::vector<Scalar> forward_orbit(const PiecewiseContraction& f, const Scalar& x, long steps);
std::vector<Scalar> g_orbit(const ExpandingMap& g, const Scalar& x, long steps);
// digits d_0..d_{steps-1}, d_k = branch of f^k(x)
ItineraryWord itinerary(const PiecewiseContraction& f, const Scalar& x, long steps);

struct EventualPeriod {
    int preperiod = 0;  // s
    int period = 0;     // p
};

// Heuristic certificate of eventual digit periodicity: the least (p, s)
// making the observed digits (s,p)-periodic across the horizon, accepted
// only if some tail index also passes a point-recurrence test (float:
// |f^{k+p}(x)-f^k(x)| <= tol*(1-kappa^p); rational: exact confinement of
// the hull from the orbit point to the word's fixed point, half-open at
// the fixed-point end so converging-but-never-arriving orbits certify).
// The rigorous route is quasi_partition::symbolic_itinerary_from_tau.
std::optional<EventualPeriod> detect_eventual_period(const PiecewiseContraction& f, const Scalar& x, long horizon,
                                                     double tol = 1e-9);

// Exact certificate (rational backend, affine branches) that iterating f
// from y follows `word` forever and converges to the word's fixed point.
// The hull toward the fixed point is half-open there, so limits that break
// the word at the endpoint (phantom attractors) still certify.
bool affine_word_confines(const PiecewiseContraction& f, const Scalar& y, const std::vector<int>& word);

struct GConnection {
    int cut_index;       // i in 1..n-1
    int endpoint_index;  // j in 0..n (0 and n are the interval endpoints 0 and 1)
    long steps;          // k >= 1 with g^k(x_i) = x_j
};

// Scans g-orbits of the cuts against {x_0=0, x_1, ..., x_{n-1}, x_n=1}
// under backend equality; exact decision up to k_max on the rational
// backend.
std::optional<GConnection> detect_g_connection(const PiecewiseContraction& f, const ExpandingMap& g, long k_max);

}  // namespace pcdyn
