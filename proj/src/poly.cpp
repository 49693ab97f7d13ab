#include "abelcenter/poly.hpp"

#include <stdexcept>

namespace abelcenter {

Poly Poly::monomial(int e, const Rational& v) {
    if (e < 0) throw std::invalid_argument("poly: negative exponent");
    if (v.is_zero()) return Poly();
    std::vector<Rational> c(static_cast<size_t>(e) + 1, Rational(0));
    c.back() = v;
    return Poly(std::move(c));
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw std::logic_error("poly: zero polynomial has no leading coefficient");
    return c_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::antiderivative(const Rational& base) const {
    std::vector<Rational> f(c_.size() + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        f[i + 1] = c_[i] / Rational(static_cast<long>(i) + 1);
    Poly F(std::move(f));
    Rational at_base = F.eval(base);
    if (!at_base.is_zero()) F = F - Poly::constant(at_base);
    return F;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(Rational(1));
    Poly base = *this;
    for (; e; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

Poly operator+(const Poly& f, const Poly& g) {
    std::vector<Rational> c(std::max(f.c_.size(), g.c_.size()), Rational(0));
    for (size_t i = 0; i < f.c_.size(); ++i) c[i] += f.c_[i];
    for (size_t i = 0; i < g.c_.size(); ++i) c[i] += g.c_[i];
    return Poly(std::move(c));
}

Poly operator-(const Poly& f, const Poly& g) {
    std::vector<Rational> c(std::max(f.c_.size(), g.c_.size()), Rational(0));
    for (size_t i = 0; i < f.c_.size(); ++i) c[i] += f.c_[i];
    for (size_t i = 0; i < g.c_.size(); ++i) c[i] -= g.c_[i];
    return Poly(std::move(c));
}

Poly operator*(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly();
    std::vector<Rational> c(f.c_.size() + g.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < f.c_.size(); ++i) {
        if (f.c_[i].is_zero()) continue;
        for (size_t j = 0; j < g.c_.size(); ++j) c[i + j] += f.c_[i] * g.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Poly(std::move(c));
}

Poly add(const Poly& f, const Poly& g) { return f + g; }
Poly mul(const Poly& f, const Poly& g) { return f * g; }

Poly scale(const Poly& f, const Rational& c) {
    if (c.is_zero()) return Poly();
    std::vector<Rational> out(f.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = f.coeffs()[i] * c;
    return Poly(std::move(out));
}

Poly compose(const Poly& f, const Poly& g) {
    Poly r;
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        r = r * g;
        const Rational& c = f.coeffs()[i];
        if (!c.is_zero()) r = r + Poly::constant(c);
    }
    return r;
}

Poly derivative(const Poly& f) { return f.derivative(); }

Poly antiderivative(const Poly& f, const Rational& base) { return f.antiderivative(base); }

Rational definite_integral(const Poly& f, const Interval& iv) {
    Poly F = f.antiderivative(iv.a);
    return F.eval(iv.b);
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("poly: division by zero polynomial");
    Poly r = f;
    Poly q;
    int dg = g.degree();
    while (!r.is_zero() && r.degree() >= dg) {
        int shift = r.degree() - dg;
        Rational c = r.leading() / g.leading();
        Poly term = Poly::monomial(shift, c);
        q = q + term;
        r = r - term * g;
    }
    return {q, r};
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += (c.sign() < 0) ? " - " : " + ";
        }
        bool unit = (mag == Rational(1));
        if (i == 0) {
            out += mag.to_string();
        } else {
            if (!unit) out += mag.to_string();
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace abelcenter
