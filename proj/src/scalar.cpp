#include "pcdyn/scalar.hpp"

#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace pcdyn {

namespace {
std::atomic<double> g_float_eq_eps{1e-12};
}

const char* backend_name(Backend b) {
    return b == Backend::Rational ? "rational" : "float";
}

Backend backend_from_name(std::string_view name) {
    if (name == "rational" || name == "rat" || name == "exact") return Backend::Rational;
    if (name == "float" || name == "double") return Backend::Float;
    throw_parse("unknown backend '" + std::string(name) + "' (expected rational|float)");
}

double float_eq_eps() { return g_float_eq_eps.load(std::memory_order_relaxed); }

void set_float_eq_eps(double eps) {
    if (!(eps >= 0.0) || !std::isfinite(eps)) throw_validation("float_eq_eps must be finite and >= 0");
    g_float_eq_eps.store(eps, std::memory_order_relaxed);
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw_validation("rational scalar with zero denominator");
    Scalar s;
    s.backend_ = Backend::Rational;
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::rational(mpq_class q) {
    Scalar s;
    s.backend_ = Backend::Rational;
    q.canonicalize();
    s.q_ = std::move(q);
    return s;
}

Scalar Scalar::floating(double v) {
    if (!std::isfinite(v)) throw_validation("float scalar must be finite");
    Scalar s;
    s.backend_ = Backend::Float;
    s.d_ = v;
    return s;
}

Scalar Scalar::of(long v, Backend b) {
    return b == Backend::Rational ? rational(v) : floating(static_cast<double>(v));
}

namespace {

bool parse_decimal_to_mpq(std::string_view text, mpq_class& out) {
    // [sign] digits [. digits] [ (e|E) [sign] digits ]
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    std::string int_digits, frac_digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) int_digits += text[i++];
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) frac_digits += text[i++];
    }
    long exp10 = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            eneg = text[i] == '-';
            ++i;
        }
        std::string ed;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ed += text[i++];
        if (ed.empty()) return false;
        exp10 = std::strtol(ed.c_str(), nullptr, 10);
        if (eneg) exp10 = -exp10;
    }
    if (i != text.size()) return false;
    if (int_digits.empty() && frac_digits.empty()) return false;

    mpz_class num(int_digits.empty() ? std::string("0") : int_digits);
    for (char c : frac_digits) {
        num *= 10;
        num += c - '0';
    }
    mpz_class den(1);
    long down = static_cast<long>(frac_digits.size()) - exp10;
    mpz_class ten(10);
    if (down > 0) {
        mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(down));
    } else if (down < 0) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-down));
        num *= scale;
    }
    out = mpq_class(num, den);
    out.canonicalize();
    if (neg) out = -out;
    return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text, Backend b) {
    std::string t(text);
    // trim
    size_t a = t.find_first_not_of(" \t");
    size_t z = t.find_last_not_of(" \t");
    if (a == std::string::npos) throw_parse("empty scalar literal");
    t = t.substr(a, z - a + 1);

    if (b == Backend::Rational) {
        if (t.find('/') != std::string::npos) {
            mpq_class q;
            if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
                throw_parse("bad rational literal '" + t + "'");
            if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
                throw_parse("zero denominator in '" + t + "'");
            q.canonicalize();
            return rational(std::move(q));
        }
        mpq_class q;
        if (!parse_decimal_to_mpq(t, q)) throw_parse("bad numeric literal '" + t + "'");
        return rational(std::move(q));
    }

    if (t.find('/') != std::string::npos) {
        // fraction literal on the float backend: evaluate as a quotient
        mpq_class q;
        if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
            throw_parse("bad rational literal '" + t + "'");
        q.canonicalize();
        return floating(q.get_d());
    }
    double v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) throw_parse("bad numeric literal '" + t + "'");
    return floating(v);
}

const mpq_class& Scalar::rat() const {
    if (backend_ != Backend::Rational) throw Error(Errc::Internal, "rat() on a float scalar");
    return q_;
}

double Scalar::to_double() const {
    return backend_ == Backend::Rational ? q_.get_d() : d_;
}

void Scalar::check_same(const Scalar& o) const {
    if (backend_ != o.backend_)
        throw Error(Errc::Internal, "mixed scalar backends in one operation");
}

int Scalar::cmp(const Scalar& o) const {
    check_same(o);
    if (backend_ == Backend::Rational) {
        int c = ::cmp(q_, o.q_);
        return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    double diff = d_ - o.d_;
    double eps = float_eq_eps();
    if (std::fabs(diff) <= eps) return 0;
    return diff < 0 ? -1 : 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    if (backend_ == Backend::Rational) return rational(q_ + o.q_);
    return floating(d_ + o.d_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    if (backend_ == Backend::Rational) return rational(q_ - o.q_);
    return floating(d_ - o.d_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    if (backend_ == Backend::Rational) return rational(q_ * o.q_);
    return floating(d_ * o.d_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    if (backend_ == Backend::Rational) {
        if (o.q_ == 0) throw_numeric("division by zero");
        return rational(q_ / o.q_);
    }
    if (o.d_ == 0.0) throw_numeric("division by zero");
    return floating(d_ / o.d_);
}

Scalar Scalar::operator-() const {
    if (backend_ == Backend::Rational) return rational(-q_);
    return floating(-d_);
}

Scalar Scalar::abs() const {
    if (backend_ == Backend::Rational) return rational(::abs(q_));
    return floating(std::fabs(d_));
}

int Scalar::sign() const {
    if (backend_ == Backend::Rational) return sgn(q_);
    return d_ < 0 ? -1 : d_ > 0 ? 1 : 0;
}

std::string Scalar::str() const {
    if (backend_ == Backend::Rational) {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, d_);
    (void)ec;
    return std::string(buf, p);
}

}  // namespace pcdyn
