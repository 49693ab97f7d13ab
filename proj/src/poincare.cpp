#include "abelcenter/poincare.hpp"

#include <cmath>
#include <stdexcept>

namespace abelcenter {

ReturnMapSeries return_map(const Poly& P, const Poly& Q, const Interval& iv, int N) {
    if (N < 2) throw std::invalid_argument("return_map: order must be >= 2");
    Poly p = derivative(P);
    Poly q = derivative(Q);
    ReturnMapSeries s;
    s.order = N;
    s.u.assign(static_cast<size_t>(N) + 1, Poly());
    s.v.assign(static_cast<size_t>(N) + 1, Rational(0));
    s.u[1] = Poly::constant(Rational(1));
    /* c2[m] = sum over i+j=m of u_i u_j; the cubic sum reuses it. */
    std::vector<Poly> c2(static_cast<size_t>(N) + 1, Poly());
    for (int n = 2; n <= N; ++n) {
        Poly s2;
        for (int i = 1; i <= n - 1; ++i) s2 = s2 + s.u[static_cast<size_t>(i)] * s.u[static_cast<size_t>(n - i)];
        c2[static_cast<size_t>(n)] = s2;
        Poly s3;
        for (int i = 1; i <= n - 2; ++i) s3 = s3 + s.u[static_cast<size_t>(i)] * c2[static_cast<size_t>(n - i)];
        s.u[static_cast<size_t>(n)] = antiderivative(p * s3 + q * s2, iv.a);
        s.v[static_cast<size_t>(n)] = s.u[static_cast<size_t>(n)].eval(iv.b);
    }
    return s;
}

CenterVerdict center_check(const Poly& P, const Poly& Q, const Interval& iv, int N) {
    ReturnMapSeries s = return_map(P, Q, iv, N);
    for (int n = 2; n <= N; ++n) {
        if (!s.v[static_cast<size_t>(n)].is_zero())
            return {false, N, n, s.v[static_cast<size_t>(n)]};
    }
    return {true, N, 0, Rational(0)};
}

namespace {

/* Polynomials in a formal scalar lambda with Poly coefficients, ascending. */
using LPoly = std::vector<Poly>;

LPoly ladd(const LPoly& a, const LPoly& b) {
    LPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = r[i] + a[i];
        if (i < b.size()) r[i] = r[i] + b[i];
    }
    return r;
}

LPoly lmul(const LPoly& a, const LPoly& b) {
    if (a.empty() || b.empty()) return {};
    LPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

LPoly lantiderivative(const LPoly& a, const Rational& base) {
    LPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = antiderivative(a[i], base);
    return r;
}

} // namespace

std::vector<Rational> lambda_expansion(const Poly& P, const Poly& Q, const Interval& iv,
                                       int k) {
    if (k < 2) throw std::invalid_argument("lambda_expansion: order must be >= 2");
    LPoly lp{Poly(), derivative(P)};
    LPoly lq{derivative(Q)};
    std::vector<LPoly> u(static_cast<size_t>(k) + 1);
    u[1] = LPoly{Poly::constant(Rational(1))};
    std::vector<LPoly> c2(static_cast<size_t>(k) + 1);
    for (int n = 2; n <= k; ++n) {
        LPoly s2;
        for (int i = 1; i <= n - 1; ++i)
            s2 = ladd(s2, lmul(u[static_cast<size_t>(i)], u[static_cast<size_t>(n - i)]));
        c2[static_cast<size_t>(n)] = s2;
        LPoly s3;
        for (int i = 1; i <= n - 2; ++i)
            s3 = ladd(s3, lmul(u[static_cast<size_t>(i)], c2[static_cast<size_t>(n - i)]));
        u[static_cast<size_t>(n)] = lantiderivative(ladd(lmul(lp, s3), lmul(lq, s2)), iv.a);
    }
    std::vector<Rational> out;
    for (const Poly& part : u[static_cast<size_t>(k)]) out.push_back(part.eval(iv.b));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

std::pair<int, Rational> leading_part_at_infinity(const Poly& P, const Poly& Q,
                                                  const Interval& iv, int k) {
    if (k < 4) throw std::invalid_argument("leading_part_at_infinity: order must be >= 4");
    std::vector<Rational> c = lambda_expansion(P, Q, iv, k);
    if (c.empty()) return {Poly::degree_minus_infinity, Rational(0)};
    return {static_cast<int>(c.size()) - 1, c.back()};
}

Rational linear_functional_L(const Poly& P0, const Poly& Q, const Poly& P1,
                             const Interval& iv, int k) {
    if (k < 4) throw std::invalid_argument("linear_functional_L: order must be >= 4");
    Rational val =
        definite_integral(P0.pow(static_cast<unsigned>(k - 4)) * derivative(Q) * P1, iv);
    return Rational(-(k - 3)) * val;
}

Rational eval_series(const ReturnMapSeries& s, const Rational& y0) {
    Rational sum = y0;
    Rational pw = y0 * y0;
    for (int n = 2; n <= s.order; ++n) {
        sum = sum + s.v[static_cast<size_t>(n)] * pw;
        pw = pw * y0;
    }
    return sum;
}

namespace {

std::vector<double> double_coeffs(const Poly& f) {
    std::vector<double> c;
    for (int i = 0; i <= std::max(f.degree(), -1); ++i) c.push_back(f.coeff(i).raw().get_d());
    return c;
}

double eval_double(const std::vector<double>& c, double x) {
    double r = 0.0;
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

} // namespace

double return_map_numeric(const Poly& P, const Poly& Q, const Interval& iv, double y0,
                          double rel_tol) {
    std::vector<double> pc = double_coeffs(derivative(P));
    std::vector<double> qc = double_coeffs(derivative(Q));
    auto f = [&](double x, double y) {
        return eval_double(pc, x) * y * y * y + eval_double(qc, x) * y * y;
    };
    double x = iv.a.raw().get_d();
    double xe = iv.b.raw().get_d();
    double y = y0;
    double dir = xe > x ? 1.0 : -1.0;
    double h = (xe - x) / 64.0;
    double k1 = f(x, y);
    long steps = 0;
    while ((xe - x) * dir > 0.0) {
        if (++steps > 5000000) throw std::runtime_error("return_map_numeric: step limit exceeded");
        if ((x + h - xe) * dir > 0.0) h = xe - x;
        /* Dormand-Prince 5(4) embedded pair. */
        double k2 = f(x + h / 5, y + h * (k1 / 5));
        double k3 = f(x + 3 * h / 10, y + h * (3 * k1 / 40 + 9 * k2 / 40));
        double k4 = f(x + 4 * h / 5, y + h * (44 * k1 / 45 - 56 * k2 / 15 + 32 * k3 / 9));
        double k5 = f(x + 8 * h / 9,
                      y + h * (19372 * k1 / 6561 - 25360 * k2 / 2187 + 64448 * k3 / 6561 -
                               212 * k4 / 729));
        double k6 = f(x + h, y + h * (9017 * k1 / 3168 - 355 * k2 / 33 + 46732 * k3 / 5247 +
                                      49 * k4 / 176 - 5103 * k5 / 18656));
        double y5 = y + h * (35 * k1 / 384 + 500 * k3 / 1113 + 125 * k4 / 192 -
                             2187 * k5 / 6784 + 11 * k6 / 84);
        double k7 = f(x + h, y5);
        double err = h * (71 * k1 / 57600 - 71 * k3 / 16695 + 71 * k4 / 1920 -
                          17253 * k5 / 339200 + 22 * k6 / 525 - k7 / 40);
        double sc = 1e-300 + rel_tol * std::max(std::fabs(y), std::fabs(y5));
        double ratio = std::fabs(err) / sc;
        if (ratio <= 1.0) {
            x += h;
            y = y5;
            k1 = k7;
        }
        double grow = 0.9 * std::pow(std::max(ratio, 1e-10), -0.2);
        h *= std::min(5.0, std::max(0.2, grow));
    }
    return y;
}

} // namespace abelcenter
