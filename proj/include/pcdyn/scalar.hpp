#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "pcdyn/error.hpp"

namespace pcdyn {

enum class Backend { Rational, Float };

const char* backend_name(Backend b);
Backend backend_from_name(std::string_view name);

// Equality tolerance of the float backend: scalars within this distance
// compare equal. Applied once, centrally, in Scalar::cmp.
double float_eq_eps();
void set_float_eq_eps(double eps);

// A number from one of the two backends. Rational scalars are exact
// (GMP mpq); float scalars are doubles whose comparisons snap within
// float_eq_eps(). Mixing backends in one operation is a logic error.
class Scalar {
public:
    Scalar() : backend_(Backend::Rational), q_(0) {}

    static Scalar rational(long num, long den = 1);
    static Scalar rational(mpq_class q);
    static Scalar floating(double v);
    static Scalar zero(Backend b) { return of(0, b); }
    static Scalar one(Backend b) { return of(1, b); }
    static Scalar of(long v, Backend b);
    // Accepts "p/q", integers, plain decimals and exponent notation.
    // On the rational backend decimal text parses exactly ("0.3" -> 3/10).
    static Scalar parse(std::string_view text, Backend b);

    Backend backend() const { return backend_; }
    bool is_rational() const { return backend_ == Backend::Rational; }
    const mpq_class& rat() const;
    double to_double() const;

    // Three-way comparison; fuzzy (eps-snapped) on the float backend.
    int cmp(const Scalar& o) const;
    bool operator==(const Scalar& o) const { return cmp(o) == 0; }
    bool operator!=(const Scalar& o) const { return cmp(o) != 0; }
    bool operator<(const Scalar& o) const { return cmp(o) < 0; }
    bool operator<=(const Scalar& o) const { return cmp(o) <= 0; }
    bool operator>(const Scalar& o) const { return cmp(o) > 0; }
    bool operator>=(const Scalar& o) const { return cmp(o) >= 0; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar abs() const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }

    // Fraction string on the rational backend, shortest round-trip decimal
    // on the float backend.
    std::string str() const;

private:
    void check_same(const Scalar& o) const;

    Backend backend_;
    mpq_class q_;
    double d_ = 0.0;
};

inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

}  // namespace pcdyn
