#pragma once

#include "abelcenter/rational.hpp"

#include <array>
#include <map>
#include <utility>

namespace abelcenter::tables {

/* A linear form over the quartic coefficients (c_1..c_4): value =
 * prefactor * (bracket . c). */
struct LinearFormRow {
    Rational prefactor;
    std::array<Rational, 4> bracket;
};

/* The five published rows for k = 1, 3, 5, 7, 9. */
const std::map<int, LinearFormRow>& printed_L_rows();

/* Same rows with the two prefactor corrections applied (k = 1 is off by a
 * factor 20 as printed, k = 3 by 19/9); brackets are unchanged. These are
 * the rows the library's own integration reproduces. */
const std::map<int, LinearFormRow>& corrected_L_rows();

/* Bilinear system rows: row j reads w1*alpha1*L_{k1} + w2*alpha2*L_{k2}. */
struct BilinearWeights {
    Rational w1, w2;
    int k1, k2;
};
const std::array<BilinearWeights, 4>& system62_weights();

/* Closed-form coefficient j evaluated on the assembled family equals
 * scalar_j times bilinear row j. */
const std::array<Rational, 4>& system62_scalars();

/* Reduced-system rows over the columns (c_1, t, c_4) with t = 4c_2 - c_3;
 * each entry stored as (coefficient of K, constant term). */
using System63Row = std::array<std::pair<Rational, Rational>, 3>;
const std::array<System63Row, 4>& printed_system63_rows();

/* Determinant cubics in K, ascending coefficients. */
const std::array<Rational, 4>& printed_delta1_coeffs();
const std::array<Rational, 4>& printed_delta2_coeffs();

/* Published decimal rendering of the resultant and the exact rational value
 * pinned as a regression constant after the first verified run. */
extern const char* const printed_resultant_decimal;
const Rational& resultant_exact();

/* Rows re-derived from the corrected linear forms equal row_scalar times
 * the published rows (regression pins). */
const std::array<Rational, 4>& system63_row_scalars();

/* Proportionality ledger between the weighted-sum route and the closed
 * forms: melnikov_sum(k) = ratio * closed_form(j). No pair-independent
 * ratio exists at k = 11; the k = 7 and k = 9 ratios hold on pairs with
 * vanishing moments only. */
struct RouteRatio {
    int k;
    int j;
    bool has_ratio;
    Rational ratio;
    bool family_only;
};
const std::array<RouteRatio, 4>& melnikov_route_ratios();

/* Leading lambda-coefficient at even order k equals sigma_k * m_{k/2-1}
 * for pairs vanishing at both endpoints (verified through degree 6). */
const std::map<int, Rational>& grading_sigma();

} // namespace abelcenter::tables
