#include "abelcenter/decompose.hpp"

#include "abelcenter/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace abelcenter {

Poly canonical_representative(const Poly& W) {
    if (W.degree() < 1) throw std::invalid_argument("canonical_representative: degree must be >= 1");
    Poly monic = scale(W, Rational(1) / W.leading());
    return monic - Poly::constant(monic.coeff(0));
}

Poly kth_root_candidate(const Poly& P, int m) {
    int n = P.degree();
    if (n < 2) throw std::invalid_argument("kth_root_candidate: deg P must be >= 2");
    if (m < 2 || m >= n || n % m != 0)
        throw std::invalid_argument("kth_root_candidate: m must be a proper divisor of deg P, m >= 2");
    unsigned k = static_cast<unsigned>(n / m);
    Poly Pm = scale(P, Rational(1) / P.leading());
    /* W = x^m + w_{m-1} x^{m-1} + ... ; matching the coefficient of x^{n-j}
     * in W^k determines w_{m-j}, since it enters linearly with factor k and
     * every other contribution involves already-fixed higher coefficients. */
    std::vector<Rational> w(static_cast<size_t>(m) + 1, Rational(0));
    w.back() = Rational(1);
    for (int j = 1; j <= m; ++j) {
        Poly Wk = Poly(w).pow(k);
        Rational cur = Wk.coeff(n - j);
        Rational want = Pm.coeff(n - j);
        w[static_cast<size_t>(m - j)] = (want - cur) / Rational(static_cast<long>(k));
    }
    w[0] = Rational(0);
    return Poly(std::move(w));
}

std::vector<Poly> w_adic_expansion(const Poly& P, const Poly& W) {
    if (W.degree() < 1) throw std::invalid_argument("w_adic_expansion: W must be nonconstant");
    std::vector<Poly> remainders;
    Poly cur = P;
    if (cur.is_zero()) return {Poly()};
    while (!cur.is_zero()) {
        auto [q, r] = divmod(cur, W);
        remainders.push_back(r);
        cur = q;
    }
    return remainders;
}

std::optional<Poly> lift_through(const Poly& P, const Poly& W) {
    std::vector<Poly> rs = w_adic_expansion(P, W);
    std::vector<Rational> s(rs.size(), Rational(0));
    for (size_t i = 0; i < rs.size(); ++i) {
        if (rs[i].degree() > 0) return std::nullopt;
        s[i] = rs[i].coeff(0);
    }
    return Poly(std::move(s));
}

namespace {

std::vector<int> divisors_of(int n) {
    std::vector<int> ds;
    for (int d = 2; d <= n; ++d)
        if (n % d == 0) ds.push_back(d);
    return ds;
}

bool has_proper_ab_factor(const Poly& W, const Interval& iv) {
    int n = W.degree();
    for (int m : divisors_of(n)) {
        if (m == n) continue;
        Poly cand = kth_root_candidate(W, m);
        if (lift_through(W, cand) && cand.eval(iv.a) == cand.eval(iv.b)) return true;
    }
    return false;
}

} // namespace

FactorReport factor_report(const Poly& P, const Interval& iv) {
    if (P.degree() < 2) throw std::invalid_argument("factor_report: deg P must be >= 2");
    FactorReport rep{P, iv, {}, {}, {}};
    int n = P.degree();
    for (int m : divisors_of(n)) {
        if (m == n) {
            if (P.eval(iv.a) == P.eval(iv.b))
                rep.right_factors.push_back({m, canonical_representative(P)});
            continue;
        }
        Poly cand = kth_root_candidate(P, m);
        if (lift_through(P, cand)) rep.right_factors.push_back({m, cand});
    }
    for (const auto& e : rep.right_factors)
        if (e.W.eval(iv.a) == e.W.eval(iv.b)) rep.ab_factors.push_back(e);
    for (const auto& e : rep.ab_factors)
        if (!has_proper_ab_factor(e.W, iv)) rep.ab_indecomposable.push_back(e);
    return rep;
}

std::optional<CompositionWitness> composition_condition(const Poly& P, const Poly& Q,
                                                        const Interval& iv) {
    auto vanishes = [&iv](const Poly& f) {
        return f.eval(iv.a).is_zero() && f.eval(iv.b).is_zero();
    };
    if (!vanishes(P) || !vanishes(Q))
        throw PreconditionError("composition_condition: P and Q must vanish at both endpoints");
    /* Zero inputs: any factor of the other side works; for both zero use the
     * canonical quadratic vanishing symmetrically about the interval. */
    if (P.is_zero() && Q.is_zero()) {
        Poly W({Rational(0), -(iv.a + iv.b), Rational(1)});
        return CompositionWitness{W, Poly(), Poly()};
    }
    if (P.is_zero()) {
        Poly W = canonical_representative(Q);
        return CompositionWitness{W, Poly(), *lift_through(Q, W)};
    }
    if (Q.is_zero()) {
        Poly W = canonical_representative(P);
        return CompositionWitness{W, *lift_through(P, W), Poly()};
    }
    FactorReport rep = factor_report(P, iv);
    for (const auto& e : rep.ab_factors) {
        auto qt = lift_through(Q, e.W);
        if (qt) return CompositionWitness{e.W, *lift_through(P, e.W), *qt};
    }
    return std::nullopt;
}

StructuralDecomposition moment_vanishing_structural(const Poly& P, const Poly& Q,
                                                    const Interval& iv) {
    if (P.eval(iv.a) != P.eval(iv.b))
        throw PreconditionError("moment_vanishing_structural: P(a) must equal P(b)");
    FactorReport rep = factor_report(P, iv);
    int dq = Q.is_zero() ? 0 : Q.degree();

    /* Columns: powers of each indecomposable factor up to deg Q, plus the
     * constant (the lifts S_j are unconstrained, so constants are free). */
    struct Col {
        size_t factor;
        int power;
        Poly value;
    };
    std::vector<Col> cols;
    for (size_t f = 0; f < rep.ab_indecomposable.size(); ++f) {
        const Poly& W = rep.ab_indecomposable[f].W;
        Poly p = W;
        for (int i = 1; i * W.degree() <= dq; ++i) {
            cols.push_back({f, i, p});
            p = p * W;
        }
    }
    Matrix m(static_cast<size_t>(dq) + 1, std::vector<Rational>(cols.size() + 1, Rational(0)));
    std::vector<Rational> rhs(static_cast<size_t>(dq) + 1, Rational(0));
    for (size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r <= dq; ++r) m[static_cast<size_t>(r)][c] = cols[c].value.coeff(r);
    for (int r = 0; r <= dq; ++r) m[static_cast<size_t>(r)][cols.size()] = (r == 0) ? Rational(1) : Rational(0);
    for (int r = 0; r <= dq; ++r) rhs[static_cast<size_t>(r)] = Q.coeff(r);

    auto sol = solve(std::move(m), std::move(rhs));
    StructuralDecomposition out;
    if (!sol) return out;
    out.member = true;
    std::vector<std::vector<Rational>> s_coeffs(rep.ab_indecomposable.size());
    for (size_t f = 0; f < s_coeffs.size(); ++f) s_coeffs[f].assign(1, Rational(0));
    for (size_t c = 0; c < cols.size(); ++c) {
        auto& sc = s_coeffs[cols[c].factor];
        if (static_cast<size_t>(cols[c].power) >= sc.size())
            sc.resize(static_cast<size_t>(cols[c].power) + 1, Rational(0));
        sc[static_cast<size_t>(cols[c].power)] = (*sol)[c];
    }
    /* The subject is always an ab factor under the precondition, so the
     * indecomposable list is nonempty and S_1 can absorb the constant. */
    s_coeffs[0][0] = (*sol)[cols.size()];
    for (size_t f = 0; f < s_coeffs.size(); ++f)
        out.parts.emplace_back(rep.ab_indecomposable[f].W, Poly(std::move(s_coeffs[f])));
    return out;
}

bool definite(const Poly& P, const Interval& iv) {
    if (P.eval(iv.a) != P.eval(iv.b))
        throw PreconditionError("definite: P(a) must equal P(b)");
    return factor_report(P, iv).ab_indecomposable.size() == 1;
}

std::vector<SubspaceBasis> composition_set_basis(const Poly& Q, int d, const Interval& iv) {
    if (!Q.eval(iv.a).is_zero() || !Q.eval(iv.b).is_zero())
        throw PreconditionError("composition_set_basis: Q must vanish at both endpoints");
    FactorReport rep = factor_report(Q, iv);
    std::vector<SubspaceBasis> out;
    for (const auto& e : rep.ab_indecomposable) {
        SubspaceBasis sb;
        sb.W = e.W;
        Poly p = e.W;
        Rational wa = e.W.eval(iv.a);
        for (int i = 1; i * e.W.degree() <= d; ++i) {
            sb.basis.push_back(p - Poly::constant(wa.pow(static_cast<unsigned>(i))));
            p = p * e.W;
        }
        out.push_back(std::move(sb));
    }
    return out;
}

std::vector<Poly> span_intersection(const std::vector<Poly>& u, const std::vector<Poly>& v, int d) {
    /* Kernel vectors of [U | -V] give coefficients of common elements. */
    size_t rows = static_cast<size_t>(d) + 1;
    Matrix m(rows, std::vector<Rational>(u.size() + v.size(), Rational(0)));
    for (size_t c = 0; c < u.size(); ++c)
        for (size_t r = 0; r < rows; ++r) m[r][c] = u[c].coeff(static_cast<int>(r));
    for (size_t c = 0; c < v.size(); ++c)
        for (size_t r = 0; r < rows; ++r) m[r][u.size() + c] = -v[c].coeff(static_cast<int>(r));
    std::vector<Poly> out;
    for (const auto& ker : nullspace(std::move(m))) {
        Poly e;
        for (size_t c = 0; c < u.size(); ++c) e = e + scale(u[c], ker[c]);
        if (!e.is_zero()) out.push_back(std::move(e));
    }
    return out;
}

namespace {

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

} // namespace

bool prime_power_support(const Poly& P, const PrimeSet& R) {
    for (int e = 1; e <= P.degree(); ++e) {
        if (P.coeff(e).is_zero()) continue;
        std::vector<long> fs = prime_factors(e);
        bool power_of_one = fs.size() == 1 &&
                            (R.all_primes ||
                             std::find(R.primes.begin(), R.primes.end(), fs[0]) != R.primes.end());
        bool coprime_to_all;
        if (R.all_primes) {
            coprime_to_all = (e == 1);
        } else {
            coprime_to_all = true;
            for (long r : R.primes)
                if (e % r == 0) coprime_to_all = false;
        }
        if (!power_of_one && !coprime_to_all) return false;
    }
    return true;
}

bool prime_factor_support(const Poly& Q, const PrimeSet& R) {
    if (R.all_primes) return true;
    for (int e = 1; e <= Q.degree(); ++e) {
        if (Q.coeff(e).is_zero()) continue;
        for (long f : prime_factors(e))
            if (std::find(R.primes.begin(), R.primes.end(), f) == R.primes.end()) return false;
    }
    return true;
}

} // namespace abelcenter
