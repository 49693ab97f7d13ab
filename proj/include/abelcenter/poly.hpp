#pragma once

#include "abelcenter/rational.hpp"

#include <limits>
#include <string>
#include <vector>

namespace abelcenter {

/* Dense univariate polynomial over Rational. coeff(i) is the coefficient of
 * x^i. Invariant: the highest stored coefficient is nonzero; the zero
 * polynomial stores nothing and reports the minus-infinity degree sentinel. */
class Poly {
public:
    static constexpr int degree_minus_infinity = std::numeric_limits<int>::min();

    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Poly constant(const Rational& v) { return Poly(std::vector<Rational>{v}); }
    static Poly x() { return Poly({Rational(0), Rational(1)}); }
    static Poly monomial(int e, const Rational& v);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return c_.empty() ? degree_minus_infinity : static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const;
    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(i)];
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;

    Poly derivative() const;
    /* Antiderivative F with F' = *this and F(base) = 0. */
    Poly antiderivative(const Rational& base) const;

    Poly pow(unsigned e) const;

    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Poly& g);
    Poly operator-() const;
    friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }
    friend bool operator!=(const Poly& f, const Poly& g) { return f.c_ != g.c_; }

    /* Text rendering in the grammar shared with the parser: terms in
     * descending degree joined by " + " / " - ", rational coefficients as
     * num/den, e.g. "2x^3 - 3x^2 + x" or "1/2x^2 - 1/2x". Zero prints "0". */
    std::string to_string() const;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

Poly add(const Poly& f, const Poly& g);
Poly mul(const Poly& f, const Poly& g);
Poly scale(const Poly& f, const Rational& c);
/* f(g(x)), computed by Horner over g. */
Poly compose(const Poly& f, const Poly& g);

struct Interval {
    Rational a, b;
    Interval(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == b) throw std::invalid_argument("interval: endpoints must differ");
    }
};

Poly derivative(const Poly& f);
Poly antiderivative(const Poly& f, const Rational& base);
Rational definite_integral(const Poly& f, const Interval& iv);

/* Euclidean division: f = q*g + r with deg r < deg g. */
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);

} // namespace abelcenter
