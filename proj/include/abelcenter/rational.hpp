#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace abelcenter {

/* Exact rational scalar. Canonical form is maintained at all times:
 * denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1. The underlying
 * mpq_class does not canonicalize two-argument construction, so every
 * constructor that can produce a non-canonical value calls canonicalize(). */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::invalid_argument("rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(mpz_class n) : v_(std::move(n)) {}

    static Rational from_string(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational pow(unsigned e) const {
        Rational r(1), base = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= base;
            if (e > 1) base *= base;
        }
        return r;
    }

    double to_double() const { return v_.get_d(); }

    /* Serialized as "num/den" in lowest terms, e.g. "3/2", "-1/3", "0/1".
     * This is the wire format used by the CLI's JSON output. */
    std::string to_fraction_string() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /* Compact form for human-readable text: integers drop the "/1". */
    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return to_fraction_string();
    }

    /* Fixed-point decimal rendering with the given number of fractional
     * digits, rounded toward zero. Used only at output boundaries. */
    std::string to_decimal_string(int digits) const;

private:
    mpq_class v_;
};

inline Rational Rational::from_string(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char ch : s)
        if (ch != ' ' && ch != '\t') t += ch;
    if (t.empty()) throw std::invalid_argument("rational: empty string");
    auto slash = t.find('/');
    std::string num = (slash == std::string::npos) ? t : t.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : t.substr(slash + 1);
    auto valid_int = [](const std::string& u) {
        if (u.empty()) return false;
        size_t i = (u[0] == '-' || u[0] == '+') ? 1 : 0;
        if (i == u.size()) return false;
        for (; i < u.size(); ++i)
            if (u[i] < '0' || u[i] > '9') return false;
        return true;
    };
    if (!valid_int(num) || !valid_int(den))
        throw std::invalid_argument("rational: malformed value '" + s + "'");
    /* mpz_class rejects an explicit plus sign, so drop it after validation. */
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("rational: zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

inline std::string Rational::to_decimal_string(int digits) const {
    mpz_class num = v_.get_num(), den = v_.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class whole = num / den;
    mpz_class frac = ((num - whole * den) * scale) / den;
    std::string f = frac.get_str();
    if (static_cast<int>(f.size()) < digits)
        f = std::string(digits - f.size(), '0') + f;
    std::string out = whole.get_str();
    if (digits > 0) out += "." + f;
    return (neg && (whole != 0 || frac != 0)) ? "-" + out : out;
}

} // namespace abelcenter
