#pragma once

#include "abelcenter/poly.hpp"

#include <vector>

namespace abelcenter {

/* Truncated return map of y' = p y^3 + q y^2 on [a,b], where p = P' and
 * q = Q': y(b; y0) = y0 + sum_{n=2..N} v_n y0^n. Sequences are indexed so
 * that u[n] and v[n] refer to order n (entries below 1 resp. 2 unused). */
struct ReturnMapSeries {
    int order;
    std::vector<Poly> u;
    std::vector<Rational> v;
};

/* Coefficients u_n solve u_n' = p sum_{i+j+l=n} u_i u_j u_l
 * + q sum_{i+j=n} u_i u_j with u_1 = 1 and u_n(a) = 0 for n >= 2. Only the
 * derivatives of P and Q enter, so v_2 = Q(b) - Q(a) and
 * v_3 = P(b) - P(a) + (Q(b) - Q(a))^2; the usual closed forms v_2 = Q(b),
 * v_3 = P(b) + Q(b)^2 apply when P(a) = Q(a) = 0. */
ReturnMapSeries return_map(const Poly& P, const Poly& Q, const Interval& iv, int N = 12);

struct CenterVerdict {
    bool center;
    int order;
    /* First violated equation when not a center. */
    int first_nonzero_k;
    Rational first_nonzero_value;
};

CenterVerdict center_check(const Poly& P, const Poly& Q, const Interval& iv, int N = 12);

/* v_k(lambda P, Q) as a polynomial in the formal scalar lambda attached to
 * p, ascending coefficients. Index d holds the part of v_k of degree d in p. */
std::vector<Rational> lambda_expansion(const Poly& P, const Poly& Q, const Interval& iv,
                                       int k);

/* Top lambda-degree of v_k(lambda P, Q) and its coefficient; the sentinel
 * (Poly::degree_minus_infinity, 0) when v_k vanishes identically. k >= 4. */
std::pair<int, Rational> leading_part_at_infinity(const Poly& P, const Poly& Q,
                                                  const Interval& iv, int k);

/* Linearization of the order-k equation at infinity around P0 in the
 * direction P1: -(k-3) int_a^b P0^(k-4) q P1 with q = Q'. k >= 4. */
Rational linear_functional_L(const Poly& P0, const Poly& Q, const Poly& P1,
                             const Interval& iv, int k);

/* Exact truncated series value y0 + sum v_n y0^n. */
Rational eval_series(const ReturnMapSeries& s, const Rational& y0);

/* Adaptive embedded Runge-Kutta 5(4) integration of y' = p y^3 + q y^2
 * from a to b starting at y0; double-precision cross-check of the series. */
double return_map_numeric(const Poly& P, const Poly& Q, const Interval& iv, double y0,
                          double rel_tol = 1e-13);

} // namespace abelcenter
