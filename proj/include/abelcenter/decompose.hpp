#pragma once

#include "abelcenter/errors.hpp"
#include "abelcenter/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace abelcenter {

/* Composition factors are considered up to left composition with degree-one
 * polynomials; the canonical representative of each class is monic with zero
 * constant term. */
Poly canonical_representative(const Poly& W);

/* The unique monic, zero-constant-term degree-m candidate for a right
 * composition factor of P, from the triangular coefficient solve against the
 * formal (deg P / m)-th root of P at infinity. Existence of the candidate
 * does not imply it is a factor; that is decided by w_adic_expansion.
 * Requires 2 <= m < deg P and m | deg P. */
Poly kth_root_candidate(const Poly& P, int m);

/* Remainders r_0, r_1, ... with P = sum r_i W^i and deg r_i < deg W, from
 * repeated Euclidean division. P is a polynomial in W iff every remainder is
 * constant. Requires deg W >= 1. */
std::vector<Poly> w_adic_expansion(const Poly& P, const Poly& W);

/* The lift S with P = S(W), when the W-adic remainders are all constant. */
std::optional<Poly> lift_through(const Poly& P, const Poly& W);

struct FactorEntry {
    int degree;
    Poly W;
};

struct FactorReport {
    Poly subject;
    Interval interval;
    /* Canonical factor per divisor degree admitting one; the subject itself
     * is listed (at full degree) only when subject(a) = subject(b). */
    std::vector<FactorEntry> right_factors;
    /* Sublist with W(a) = W(b). */
    std::vector<FactorEntry> ab_factors;
    /* Sublist of ab_factors with no proper right factor V, deg V >= 2,
     * satisfying V(a) = V(b). */
    std::vector<FactorEntry> ab_indecomposable;
};

/* Requires deg P >= 2. */
FactorReport factor_report(const Poly& P, const Interval& iv);

struct CompositionWitness {
    Poly W, P_tilde, Q_tilde;
};

/* Common right factor W with W(a) = W(b) and both lifts, or nullopt.
 * Requires P(a) = P(b) = 0 and Q(a) = Q(b) = 0. */
std::optional<CompositionWitness> composition_condition(const Poly& P, const Poly& Q,
                                                        const Interval& iv);

struct StructuralDecomposition {
    bool member = false;
    /* Pairs (W_j, S_j) with Q = sum S_j(W_j) exactly when member. */
    std::vector<std::pair<Poly, Poly>> parts;
};

/* Exact membership of Q in the span of powers of the [a,b]-indecomposable
 * factors of P (constants included). Requires P(a) = P(b) and deg P >= 2. */
StructuralDecomposition moment_vanishing_structural(const Poly& P, const Poly& Q,
                                                    const Interval& iv);

/* True iff P has exactly one [a,b]-indecomposable right factor.
 * Requires P(a) = P(b) and deg P >= 2. */
bool definite(const Poly& P, const Interval& iv);

struct SubspaceBasis {
    Poly W;
    std::vector<Poly> basis; /* W^i - W(a)^i for 1 <= i*deg W <= d */
};

/* One linear subspace per [a,b]-indecomposable factor of Q.
 * Requires Q(a) = Q(b) = 0 and deg Q >= 2. */
std::vector<SubspaceBasis> composition_set_basis(const Poly& Q, int d, const Interval& iv);

/* Basis of the intersection of two spans, inside degree bound d. */
std::vector<Poly> span_intersection(const std::vector<Poly>& u, const std::vector<Poly>& v, int d);

struct PrimeSet {
    static PrimeSet all() { return PrimeSet{true, {}}; }
    static PrimeSet of(std::vector<long> ps) { return PrimeSet{false, std::move(ps)}; }
    bool all_primes = false;
    std::vector<long> primes;
};

/* Membership in U(R): every exponent with nonzero coefficient (the constant
 * term is ignored) is either coprime with each prime of R or a power of a
 * single prime of R. */
bool prime_power_support(const Poly& P, const PrimeSet& R);

/* Membership in U1(R): every prime factor of every such exponent lies in R. */
bool prime_factor_support(const Poly& Q, const PrimeSet& R);

} // namespace abelcenter
