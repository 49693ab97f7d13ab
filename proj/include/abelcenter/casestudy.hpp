#pragma once

#include "abelcenter/poly.hpp"

#include <array>
#include <vector>

namespace abelcenter {

/* The worked example fixes P as the degree-6 shifted Chebyshev composite on
 * (0, 1) and parametrizes Q = S1(T2) + alpha1 T3 + alpha2 T3^3 with
 * S1 = c1 x + c2 x^2 + c3 x^3 + c4 x^4 (T2, T3 the shifted representatives). */
Poly family_Q(const Rational& alpha1, const Rational& alpha2,
              const std::array<Rational, 4>& c);

/* L_k = integral over (0,1) of S1(T2) T3^k dT6 for k in {1,3,5,7,9},
 * computed through dT6 = 2 T3 dT3, T3^2 = T2^2 + 4 T2^3 and the closed form
 * for integrals of T2 powers. */
Rational compute_L(int k, const std::array<Rational, 4>& c);

/* Coefficient row of compute_L over (c1..c4). */
std::array<Rational, 4> compute_L_row(int k);

/* The four bilinear equations w1 alpha1 L_{k1} + w2 alpha2 L_{k2}. Each
 * residual is cross-checked against the closed-form coefficient evaluated
 * on the family; a mismatch with the pinned per-row scalar throws. */
std::array<Rational, 4> assemble_system62(const Rational& alpha1, const Rational& alpha2,
                                          const std::array<Rational, 4>& c);

/* Reduced system over (c1, t, c4) with t = 4 c2 - c3 and the ratio
 * parameter K (alpha1 = K, alpha2 = 1). Row entries are linear in K. */
struct System63Analysis {
    /* Golden rows transcribed from the publication. */
    std::array<std::array<Poly, 3>, 4> printed_rows;
    /* Rows re-derived from the closed forms by exact polarization. */
    std::array<std::array<Poly, 3>, 4> derived_rows;
    /* The c2 column of each bilinear row equals -4 times its c3 column,
     * which is what makes the t substitution lossless. */
    bool column_collapse_ok;
    /* derived = row_scalar * printed, entrywise. */
    std::array<Rational, 4> row_scalar;
    bool rows_proportional;
    /* Determinants of printed rows (1,2,3) and (1,3,4) as cubics in K, and
     * their exact resultant. */
    Poly delta1;
    Poly delta2;
    Rational resultant_value;
};
System63Analysis system63_analysis();

struct DegreeFinding {
    int degree;
    int samples;
    int non_definite;
    /* Every non-definite hit decomposed into the expected factor pattern
     * (degrees {2,3} at 6, {2,5} at 10, quadratic factor x^2 - x). */
    bool normal_forms_ok;
};

struct ClassificationReport {
    int d_max;
    std::vector<DegreeFinding> findings;
    /* The planted degree-6 composite and the three planted degree-10
     * instances all came out non-definite. */
    bool planted_hits_found;
    /* Non-definite hits occurred only at degrees 6 and 10 and matched the
     * normal forms. */
    bool pass;
};

/* Samples polynomials with P(0) = P(1) in every degree 2..d_max (random
 * products x(x-1)R plus the constructed instances) and checks where
 * definiteness fails. Deterministic for a fixed seed. */
ClassificationReport verify_classification(int d_max = 11, int samples_per_degree = 4,
                                           unsigned long seed = 20240901);

struct SSpaceBasis {
    int d;
    std::vector<Poly> basis;
    int dimension;
};

/* Span of {T2^i : 2i <= d} and {T3^j : j odd, 3j <= d}; the generators have
 * pairwise distinct degrees, so they form a basis directly. */
SSpaceBasis s_space_basis(int d);

struct SSpaceMembership {
    bool member;
    /* Q = S1(T2) + S2(T3) with S2 odd when member. */
    Poly S1;
    Poly S2;
};
SSpaceMembership s_space_membership(const Poly& Q, int d);

struct DimensionComparison {
    int d;
    int computed;
    /* floor((d+1)/2) + floor((d+1)/3) - floor((d+1)/6), and the same minus
     * one; the two published readings of the dimension formula. */
    int statement_reading;
    int proof_reading;
    bool matches_statement;
    bool matches_proof;
};
DimensionComparison s_space_dimension_comparison(int d);

} // namespace abelcenter
