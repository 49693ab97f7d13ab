#pragma once

#include "abelcenter/errors.hpp"
#include "abelcenter/poly.hpp"

#include <vector>

namespace abelcenter {

/* Index of an iterated integral: entries over {1, 2}, where 1 selects q = Q'
 * and 2 selects p = P' as the integrand at that nesting level. */
struct MultiIndex {
    std::vector<int> entries;
};

struct MomentVector {
    std::vector<Rational> values;
    Poly P;
    Poly Q;
    Interval iv;
};

/* m_l = integral over [a,b] of P^l q with q = Q'. */
Rational moment(const Poly& P, const Poly& Q, const Interval& iv, int l);

/* m_0 .. m_K. K defaults to deg P + deg Q + 2 (degrees clamped at 0); no
 * finite sufficiency bound is available, so vanishing is only ever reported
 * as "up to K" with K explicit. */
MomentVector moment_vector(const Poly& P, const Poly& Q, const Interval& iv, int K = -1);

/* All indices with exactly two 1-entries and entry sum k-1, in ascending
 * lexicographic order. Reductions over this list are performed left to
 * right so results are bit-identical regardless of worker count. */
std::vector<MultiIndex> melnikov_indices(int k);

/* Nested integral computed inside out by exact antiderivative-and-multiply;
 * every intermediate is a polynomial. */
Rational iterated_integral(const MultiIndex& alpha, const Poly& P, const Poly& Q,
                           const Interval& iv);

/* n_alpha = (-1)^s prod_{r=1..s} (k - alpha_1 - ... - alpha_r); always an
 * integer. Requires sum alpha_j = k - 1. */
long long weight(const MultiIndex& alpha, int k);

/* Sum of n_alpha I_alpha over melnikov_indices(k); k odd, k >= 5. The
 * alpha terms may be evaluated by several workers (see worker_count). */
Rational melnikov_sum(int k, const Poly& P, const Poly& Q, const Interval& iv);

/* Integration-by-parts normal form of the iterated integral whose 2-blocks
 * around the two 1-entries have sizes (m0, m1, m2):
 *   sum_{i=0..m1} (-1)^(m0+m1-i) / (m0! m2! i! (m1-i)!)
 *       * integral P^(m0+i) q (integral^x P^(m1+m2-i) q).
 * Equals iterated_integral on the corresponding index. */
Rational reduce_by_parts(int m0, int m1, int m2, const Poly& P, const Poly& Q,
                         const Interval& iv);

/* Same sum as melnikov_sum but with every term routed through
 * reduce_by_parts; an independent cross-check of the reduction. */
Rational melnikov_sum_by_parts(int k, const Poly& P, const Poly& Q, const Interval& iv);

/* Closed forms of the first four coefficients at infinity, j = 1..4:
 *   D_1 = int Q^2 p
 *   D_2 = int Q^2 P p
 *   D_3 = 2 int Q^2 P^2 p + int Q P p (int^t Q p)
 *   D_4 = int Q^2 P^3 p + int Q P^2 p (int^t Q p)
 * Requires P(a) = P(b) = Q(a) = Q(b) = 0. */
Rational melnikov_closed(int j, const Poly& P, const Poly& Q, const Interval& iv);

/* Worker count for partitionable sums: ABEL_CENTER_THREADS when set to a
 * positive integer, otherwise the hardware concurrency (at least 1). */
int worker_count();

} // namespace abelcenter
