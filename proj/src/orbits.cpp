#include "pcdyn/orbits.hpp"

#include <cmath>

namespace pcdyn {

std::vector<Scalar> forward_orbit(const PiecewiseContraction& f, const Scalar& x, long steps) {
    if (steps < 0) throw_domain("forward_orbit: negative step count");
    std::vector<Scalar> orbit;
    orbit.reserve(steps + 1);
    orbit.push_back(x);
    for (long k = 0; k < steps; ++k) orbit.push_back(f.eval(orbit.back()));
    return orbit;
}

std::vector<Scalar> g_orbit(const ExpandingMap& g, const Scalar& x, long steps) {
    if (steps < 0) throw_domain("g_orbit: negative step count");
    std::vector<Scalar> orbit;
    orbit.reserve(steps + 1);
    orbit.push_back(x);
    for (long k = 0; k < steps; ++k) orbit.push_back(g.eval(orbit.back()));
    return orbit;
}

ItineraryWord itinerary(const PiecewiseContraction& f, const Scalar& x, long steps) {
    ItineraryWord w;
    Scalar y = x;
    for (long k = 0; k < steps; ++k) {
        w.digits.push_back(f.branch_at(y));
        y = f.eval(y);
    }
    return w;
}

bool affine_word_confines(const PiecewiseContraction& f, const Scalar& y, const std::vector<int>& word) {
    Backend bk = f.backend();
    for (const BranchDescriptor& b : f.branches())
        if (b.kind() != BranchDescriptor::Kind::Affine) return false;
    // compose F(t) = alpha t + beta over the word
    Scalar alpha = Scalar::one(bk), beta = Scalar::zero(bk);
    for (int d : word) {
        const BranchDescriptor& b = f.branches()[d - 1];
        alpha = b.coeff(1) * alpha;
        beta = b.coeff(1) * beta + b.coeff(0);
    }
    Scalar fixed = beta / (Scalar::one(bk) - alpha);
    if (fixed < Scalar::zero(bk) || fixed > Scalar::one(bk)) return false;
    int dir = y.cmp(fixed);
    if (dir == 0) {
        // exactly periodic point: check the word pointwise
        Scalar t = y;
        for (int d : word) {
            if (f.branch_at(t) != d) return false;
            t = f.eval(t);
        }
        return true;
    }
    Interval hull = dir < 0 ? Interval::make(y, fixed, true, false) : Interval::make(fixed, y, false, true);
    for (int d : word) {
        const Interval& dom = f.continuity_interval(d);
        if (!dom.contains_interval(hull)) return false;
        const BranchDescriptor& b = f.branches()[d - 1];
        Scalar a = b.eval(hull.lo), c = b.eval(hull.hi);
        hull = b.increasing() ? Interval::make(a, c, hull.lo_closed, hull.hi_closed)
                              : Interval::make(c, a, hull.hi_closed, hull.lo_closed);
    }
    return true;
}

std::optional<EventualPeriod> detect_eventual_period(const PiecewiseContraction& f, const Scalar& x, long horizon,
                                                     double tol) {
    if (horizon < 2) throw_domain("detect_eventual_period: horizon must be >= 2");
    std::vector<Scalar> pts = forward_orbit(f, x, horizon);
    std::vector<int> digits;
    digits.reserve(horizon);
    for (long k = 0; k < horizon; ++k) digits.push_back(f.branch_at(pts[k]));

    double kappa = f.kappa().to_double();
    for (long p = 1; p <= horizon / 2; ++p) {
        // least s with digits (s,p)-periodic over the horizon
        long s = 0;
        for (long k = horizon - p - 1; k >= 0; --k) {
            if (digits[k] != digits[k + p]) {
                s = k + 1;
                break;
            }
        }
        if (horizon - s < 2 * p) continue;  // want at least two observed periods
        // point-recurrence certificate anywhere in the tail
        bool certified = false;
        for (long k = s; k + p < static_cast<long>(pts.size()) && !certified; ++k) {
            if (f.backend() == Backend::Rational) {
                std::vector<int> word(digits.begin() + k, digits.begin() + k + p);
                certified = affine_word_confines(f, pts[k], word);
            } else {
                double margin = 1.0 - std::pow(kappa, static_cast<double>(p));
                certified = std::fabs(pts[k + p].to_double() - pts[k].to_double()) <= tol * margin;
            }
        }
        if (certified) return EventualPeriod{static_cast<int>(s), static_cast<int>(p)};
    }
    return std::nullopt;
}

std::optional<GConnection> detect_g_connection(const PiecewiseContraction& f, const ExpandingMap& g, long k_max) {
    if (k_max < 1) throw_domain("detect_g_connection: k_max must be >= 1");
    Backend bk = f.backend();
    std::vector<Scalar> endpoints;
    endpoints.push_back(Scalar::zero(bk));
    for (const Scalar& c : f.cuts()) endpoints.push_back(c);
    endpoints.push_back(Scalar::one(bk));
    for (size_t i = 0; i < f.cuts().size(); ++i) {
        Scalar y = f.cuts()[i];
        for (long k = 1; k <= k_max; ++k) {
            y = g.eval(y);
            for (size_t j = 0; j < endpoints.size(); ++j) {
                if (y == endpoints[j])
                    return GConnection{static_cast<int>(i) + 1, static_cast<int>(j), k};
            }
        }
    }
    return std::nullopt;
}

}  // namespace pcdyn
