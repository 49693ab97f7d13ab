#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abelcenter/chebyshev.hpp"
#include "abelcenter/decompose.hpp"
#include "abelcenter/parse.hpp"

#include <random>

using namespace abelcenter;

namespace {

const Interval unit(Rational(0), Rational(1));

Poly rand_poly(std::mt19937_64& rng, int deg, bool zero_constant) {
    std::vector<Rational> c(static_cast<size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) c[static_cast<size_t>(i)] = Rational(static_cast<long>(rng() % 9) - 4);
    if (zero_constant) c[0] = Rational(0);
    if (c.back().is_zero()) c.back() = Rational(1);
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("canonical_representative is monic with zero constant") {
    CHECK(canonical_representative(parse_poly("2x^3 - 3x^2 + x")) ==
          parse_poly("x^3 - 3/2x^2 + 1/2x"));
    CHECK(canonical_representative(parse_poly("3x^2 - 3x + 7")) == parse_poly("x^2 - x"));
    CHECK(canonical_representative(parse_poly("-x^2")) == parse_poly("x^2"));
    CHECK(canonical_representative(Poly::x()) == Poly::x());
    CHECK_THROWS_AS(canonical_representative(Poly::constant(Rational(3))), std::invalid_argument);
    /* Idempotent, and invariant under left composition with degree one. */
    Poly w = parse_poly("x^3 + 2x^2 - x + 5");
    Poly canon = canonical_representative(w);
    CHECK(canonical_representative(canon) == canon);
    CHECK(canonical_representative(compose(parse_poly("3x - 4"), w)) == canon);
}

TEST_CASE("kth_root_candidate solves the triangular system") {
    Poly t6 = shifted_chebyshev(6);
    CHECK(kth_root_candidate(t6, 2) == parse_poly("x^2 - x"));
    CHECK(kth_root_candidate(t6, 3) == parse_poly("x^3 - 3/2x^2 + 1/2x"));
    CHECK(kth_root_candidate(parse_poly("x^4"), 2) == parse_poly("x^2"));
    /* Candidate for a non-composite: the solve still produces the unique
     * formal root, which then fails to divide. */
    Poly p = parse_poly("x^4 + x^3");
    Poly cand = kth_root_candidate(p, 2);
    CHECK(cand == parse_poly("x^2 + 1/2x"));
    CHECK_FALSE(lift_through(p, cand).has_value());

    CHECK_THROWS_AS(kth_root_candidate(t6, 4), std::invalid_argument);
    CHECK_THROWS_AS(kth_root_candidate(t6, 6), std::invalid_argument);
    CHECK_THROWS_AS(kth_root_candidate(t6, 1), std::invalid_argument);
    CHECK_THROWS_AS(kth_root_candidate(Poly::x(), 2), std::invalid_argument);

    /* Round trip: for genuine composites the candidate recovers the
     * canonical right factor. */
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Poly w = canonical_representative(rand_poly(rng, 2 + static_cast<int>(rng() % 3), true));
        Poly s = rand_poly(rng, 2 + static_cast<int>(rng() % 2), false);
        Poly comp = compose(s, w);
        CHECK(kth_root_candidate(comp, w.degree()) == w);
    }
}

TEST_CASE("w_adic_expansion") {
    Poly w = parse_poly("x^2 - x");
    /* Constructed digits: P = r0 + r1 W + W^3 with deg r_i < 2. */
    Poly r0 = parse_poly("1"), r1 = parse_poly("3x + 1");
    Poly p = r0 + r1 * w + w.pow(3);
    auto rs = w_adic_expansion(p, w);
    REQUIRE(rs.size() == 4);
    CHECK(rs[0] == r0);
    CHECK(rs[1] == r1);
    CHECK(rs[2].is_zero());
    CHECK(rs[3] == Poly::constant(Rational(1)));
    /* Reassemble. */
    Poly back;
    for (size_t i = rs.size(); i-- > 0;) back = back * w + rs[i];
    CHECK(back == p);

    /* All-constant digits certify a composition factor. */
    auto rs6 = w_adic_expansion(shifted_chebyshev(6), canonical_representative(shifted_chebyshev(3)));
    for (const auto& r : rs6) CHECK(r.degree() <= 0);

    /* Non-constant digit blocks the lift. */
    auto rsx = w_adic_expansion(parse_poly("x^3 + x"), parse_poly("x^2"));
    REQUIRE(rsx.size() == 2);
    CHECK(rsx[0] == Poly::x());
    CHECK(rsx[1] == Poly::x());
    CHECK_FALSE(lift_through(parse_poly("x^3 + x"), parse_poly("x^2")).has_value());

    CHECK_THROWS_AS(w_adic_expansion(p, Poly::constant(Rational(2))), std::invalid_argument);
}

TEST_CASE("lift_through recovers the outer polynomial") {
    Poly t2 = shifted_chebyshev(2), t3 = shifted_chebyshev(3), t6 = shifted_chebyshev(6);
    auto s = lift_through(t6, t2);
    REQUIRE(s.has_value());
    CHECK(*s == parse_poly("4x^3 + x^2"));
    CHECK(compose(*s, t2) == t6);
    auto s2 = lift_through(t6, t3);
    REQUIRE(s2.has_value());
    CHECK(*s2 == parse_poly("x^2"));
    CHECK_FALSE(lift_through(t6, parse_poly("x^2 + x")).has_value());
    /* Lift of zero is zero. */
    auto z = lift_through(Poly(), t2);
    REQUIRE(z.has_value());
    CHECK(z->is_zero());
}

TEST_CASE("factor_report on the degree six composite") {
    Poly t6 = shifted_chebyshev(6);
    FactorReport rep = factor_report(t6, unit);

    REQUIRE(rep.right_factors.size() == 3);
    CHECK(rep.right_factors[0].degree == 2);
    CHECK(rep.right_factors[0].W == parse_poly("x^2 - x"));
    CHECK(rep.right_factors[1].degree == 3);
    CHECK(rep.right_factors[1].W == parse_poly("x^3 - 3/2x^2 + 1/2x"));
    CHECK(rep.right_factors[2].degree == 6);
    CHECK(rep.right_factors[2].W == canonical_representative(t6));

    /* All three match endpoints here, but only the proper ones are
     * indecomposable; the subject decomposes through the quadratic. */
    CHECK(rep.ab_factors.size() == 3);
    REQUIRE(rep.ab_indecomposable.size() == 2);
    CHECK(rep.ab_indecomposable[0].W == parse_poly("x^2 - x"));
    CHECK(rep.ab_indecomposable[1].W == parse_poly("x^3 - 3/2x^2 + 1/2x"));
    CHECK_FALSE(definite(t6, unit));
}

TEST_CASE("factor_report lists the subject only when endpoints match") {
    /* Prime degree, endpoints match: the subject is its own only factor. */
    Poly p = parse_poly("x^3 - 3/2x^2 + 1/2x");
    FactorReport rep = factor_report(p, unit);
    REQUIRE(rep.right_factors.size() == 1);
    CHECK(rep.right_factors[0].degree == 3);
    CHECK(rep.ab_indecomposable.size() == 1);
    CHECK(definite(p, unit));

    /* Endpoints differ: no degree-3 entry at all. */
    FactorReport rep2 = factor_report(parse_poly("x^3"), unit);
    CHECK(rep2.right_factors.empty());
    CHECK(rep2.ab_factors.empty());

    CHECK_THROWS_AS(factor_report(Poly::x(), unit), std::invalid_argument);
}

TEST_CASE("factor_report on the degree ten composites") {
    /* The degree-10 Chebyshev composite factors through degrees 2 and 5, but
     * its degree-5 factor swaps the endpoint values, so only the quadratic
     * survives the endpoint filter and the subject counts as definite. */
    Poly t10 = shifted_chebyshev(10);
    REQUIRE(t10.eval(Rational(0)) == Rational(0));
    REQUIRE(t10.eval(Rational(1)) == Rational(0));
    FactorReport rep = factor_report(t10, unit);
    REQUIRE(rep.right_factors.size() == 3);
    CHECK(rep.right_factors[0].degree == 2);
    CHECK(rep.right_factors[0].W == parse_poly("x^2 - x"));
    CHECK(rep.right_factors[1].degree == 5);
    CHECK(rep.right_factors[2].degree == 10);
    REQUIRE(rep.ab_factors.size() == 2);
    CHECK(rep.ab_factors[0].degree == 2);
    CHECK(rep.ab_factors[1].degree == 10);
    REQUIRE(rep.ab_indecomposable.size() == 1);
    CHECK(rep.ab_indecomposable[0].W == parse_poly("x^2 - x"));
    CHECK(definite(t10, unit));

    /* A planted even composite (z^5 - z)^2 pulled back to (0,1) keeps both
     * the quadratic and a quintic endpoint-matching factor. */
    Poly z = Poly::x();
    Poly w5 = z * z * z * z * z - z;
    Poly planted = compose(w5 * w5, parse_poly("2x - 1"));
    FactorReport prep = factor_report(planted, unit);
    REQUIRE(prep.ab_indecomposable.size() == 2);
    CHECK(prep.ab_indecomposable[0].degree == 2);
    CHECK(prep.ab_indecomposable[0].W == parse_poly("x^2 - x"));
    CHECK(prep.ab_indecomposable[1].degree == 5);
    CHECK_FALSE(definite(planted, unit));
}

TEST_CASE("recomposition is exact for every reported factor") {
    std::mt19937_64 rng(11);
    std::vector<Poly> subjects = {shifted_chebyshev(6), shifted_chebyshev(8),
                                  shifted_chebyshev(10), parse_poly("x^4 - 2x^3 + x^2")};
    for (int trial = 0; trial < 12; ++trial) {
        Poly w = canonical_representative(rand_poly(rng, 2 + static_cast<int>(rng() % 2), true));
        Poly s = rand_poly(rng, 2 + static_cast<int>(rng() % 2), false);
        subjects.push_back(compose(s, w));
    }
    for (const Poly& p : subjects) {
        FactorReport rep = factor_report(p, unit);
        int last_degree = 1;
        for (const auto& e : rep.right_factors) {
            /* One canonical factor per degree, listed in ascending order. */
            CHECK(e.degree > last_degree);
            last_degree = e.degree;
            CHECK(e.W.leading() == Rational(1));
            CHECK(e.W.coeff(0) == Rational(0));
            auto lift = lift_through(p, e.W);
            REQUIRE(lift.has_value());
            CHECK(compose(*lift, e.W) == p);
        }
        CHECK(rep.ab_indecomposable.size() <= 3);
    }
}

TEST_CASE("composition_condition finds a shared factor") {
    Poly t2 = shifted_chebyshev(2);
    Poly p = t2 * t2;
    Poly q = t2 + t2.pow(3);
    auto w = composition_condition(p, q, unit);
    REQUIRE(w.has_value());
    CHECK(w->W == parse_poly("x^2 - x"));
    CHECK(compose(w->P_tilde, w->W) == p);
    CHECK(compose(w->Q_tilde, w->W) == q);
}

TEST_CASE("composition_condition counterexample pair has no witness") {
    Poly p = shifted_chebyshev(6);
    Poly q = shifted_chebyshev(2) + shifted_chebyshev(3);
    CHECK_FALSE(composition_condition(p, q, unit).has_value());
}

TEST_CASE("composition_condition edge cases") {
    Poly t6 = shifted_chebyshev(6);
    /* P = Q: any endpoint-matching factor of P works; the scan returns the
     * smallest degree. */
    auto self = composition_condition(t6, t6, unit);
    REQUIRE(self.has_value());
    CHECK(self->W == parse_poly("x^2 - x"));
    CHECK(compose(self->P_tilde, self->W) == t6);

    /* Zero on either side. */
    auto pz = composition_condition(Poly(), t6, unit);
    REQUIRE(pz.has_value());
    CHECK(pz->P_tilde.is_zero());
    CHECK(compose(pz->Q_tilde, pz->W) == t6);
    auto qz = composition_condition(t6, Poly(), unit);
    REQUIRE(qz.has_value());
    CHECK(qz->Q_tilde.is_zero());
    auto bz = composition_condition(Poly(), Poly(), unit);
    REQUIRE(bz.has_value());
    CHECK(bz->W == parse_poly("x^2 - x"));

    /* Endpoint vanishing is a hard precondition. */
    CHECK_THROWS_AS(composition_condition(parse_poly("x^2"), t6, unit), PreconditionError);
    CHECK_THROWS_AS(composition_condition(t6, parse_poly("x^2 - 2x"), unit), PreconditionError);
}

TEST_CASE("moment_vanishing_structural membership") {
    Poly t6 = shifted_chebyshev(6);
    Poly t2 = shifted_chebyshev(2), t3 = shifted_chebyshev(3);

    /* The counterexample pair is structurally decomposable even though the
     * two-sided composition test fails. */
    auto mvs = moment_vanishing_structural(t6, t2 + t3, unit);
    REQUIRE(mvs.member);
    REQUIRE(mvs.parts.size() == 2);
    Poly sum;
    for (const auto& [w, s] : mvs.parts) sum = sum + compose(s, w);
    CHECK(sum == t2 + t3);

    /* Single-factor membership. */
    auto sq = moment_vanishing_structural(t2 * t2, t2.pow(2), unit);
    CHECK(sq.member);

    /* x^3 is not in the span of powers of the two factors. */
    CHECK_FALSE(moment_vanishing_structural(t6, parse_poly("x^3"), unit).member);

    /* Constants are always members (the lifts absorb them). */
    CHECK(moment_vanishing_structural(t6, Poly::constant(Rational(5)), unit).member);
    CHECK(moment_vanishing_structural(t6, Poly(), unit).member);

    CHECK_THROWS_AS(moment_vanishing_structural(Poly::x(), t2, unit), PreconditionError);
}

TEST_CASE("witness pairs are always structurally decomposable") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        /* Endpoint-matching canonical factors on (0,1): the quadratic is
         * forced, the cubics form a one-parameter family. */
        Poly w;
        if (rng() % 2 == 0) {
            w = parse_poly("x^2 - x");
        } else {
            long u = static_cast<long>(rng() % 7) - 3;
            w = parse_poly("x^3") + scale(parse_poly("x^2"), Rational(u)) -
                scale(Poly::x(), Rational(u + 1));
        }
        Poly s = rand_poly(rng, 1 + static_cast<int>(rng() % 3), true);
        Poly t = rand_poly(rng, 1 + static_cast<int>(rng() % 3), true);
        Poly p = compose(s, w), q = compose(t, w);
        CHECK(composition_condition(p, q, unit).has_value());
        CHECK(moment_vanishing_structural(p, q, unit).member);
    }
}

TEST_CASE("definite subjects turn structural membership into a witness") {
    /* One-parameter family of endpoint-matching cubics. */
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int trial = 0; trial < 30 && checked < 8; ++trial) {
        long u = static_cast<long>(rng() % 7) - 3;
        Poly w = parse_poly("x^3") + scale(parse_poly("x^2"), Rational(u)) -
                 scale(Poly::x(), Rational(u + 1));
        Poly s = rand_poly(rng, 1 + static_cast<int>(rng() % 3), true);
        Poly p = compose(s, w);
        if (p.degree() < 2) continue;
        if (!definite(p, unit)) continue;
        ++checked;
        std::vector<Rational> qc(3, Rational(0));
        for (auto& c : qc) c = Rational(static_cast<long>(rng() % 9) - 4);
        Poly q;
        for (size_t i = 0; i < qc.size(); ++i)
            q = q + scale(w.pow(static_cast<unsigned>(i) + 1), qc[i]);
        CHECK(moment_vanishing_structural(p, q, unit).member);
        CHECK(composition_condition(p, q, unit).has_value());
    }
    CHECK(checked >= 8);
}

TEST_CASE("composition_set_basis") {
    Poly t6 = shifted_chebyshev(6);
    auto bases = composition_set_basis(t6, 6, unit);
    REQUIRE(bases.size() == 2);
    CHECK(bases[0].W == parse_poly("x^2 - x"));
    REQUIRE(bases[0].basis.size() == 3);
    CHECK(bases[0].basis[2] == parse_poly("x^2 - x").pow(3));
    CHECK(bases[1].W == parse_poly("x^3 - 3/2x^2 + 1/2x"));
    CHECK(bases[1].basis.size() == 2);

    /* Indecomposable subject: a single subspace of dimension d / deg W. */
    Poly t2 = shifted_chebyshev(2);
    auto single = composition_set_basis(t2, 9, unit);
    REQUIRE(single.size() == 1);
    CHECK(single[0].basis.size() == 4);

    /* Every basis element vanishes at both endpoints, and no subspace
     * exceeds the floor(d/2) bound. */
    for (int d : {4, 6, 9, 12}) {
        for (const auto& sb : composition_set_basis(t6, d, unit)) {
            CHECK(static_cast<int>(sb.basis.size()) <= d / 2);
            for (const Poly& e : sb.basis) {
                CHECK(e.eval(Rational(0)) == Rational(0));
                CHECK(e.eval(Rational(1)) == Rational(0));
                CHECK(e.degree() <= d);
            }
        }
    }

    /* Nonzero shared endpoint value: the power of W(a) is subtracted off. */
    Interval wide(Rational(-1), Rational(2));
    Poly q = parse_poly("x^2 - x").pow(2) - Poly::constant(Rational(4));
    auto shifted = composition_set_basis(q, 4, wide);
    REQUIRE(shifted.size() == 1);
    REQUIRE(shifted[0].basis.size() == 2);
    CHECK(shifted[0].basis[0] == parse_poly("x^2 - x - 2"));
    for (const Poly& e : shifted[0].basis) {
        CHECK(e.eval(Rational(-1)) == Rational(0));
        CHECK(e.eval(Rational(2)) == Rational(0));
    }

    CHECK_THROWS_AS(composition_set_basis(parse_poly("x^2"), 4, unit), PreconditionError);
}

TEST_CASE("span_intersection") {
    Poly t2 = shifted_chebyshev(2), t3 = shifted_chebyshev(3), t6 = shifted_chebyshev(6);
    std::vector<Poly> u = {t2, t2.pow(2), t2.pow(3)};
    std::vector<Poly> v = {t3, t3.pow(2)};
    auto common = span_intersection(u, v, 6);
    REQUIRE(common.size() == 1);
    /* The unique common element is the degree six composite, up to scale. */
    CHECK(scale(common[0], Rational(1) / common[0].leading()) ==
          scale(t6, Rational(1) / t6.leading()));

    auto disjoint = span_intersection({Poly::x()}, {parse_poly("x^2")}, 3);
    CHECK(disjoint.empty());
    auto same = span_intersection({Poly::x(), parse_poly("x^2")},
                                  {parse_poly("x^2"), parse_poly("x^3")}, 3);
    REQUIRE(same.size() == 1);
    CHECK(same[0] == parse_poly("x^2"));
}

TEST_CASE("prime exponent support predicates") {
    PrimeSet all = PrimeSet::all();
    CHECK(prime_power_support(parse_poly("x^8 + x^3"), all));
    CHECK(prime_power_support(parse_poly("x^9 + x^4 + x"), all));
    CHECK_FALSE(prime_power_support(parse_poly("x^6 + x"), all));
    CHECK_FALSE(prime_power_support(parse_poly("x^10"), all));
    /* The constant term never counts. */
    CHECK(prime_power_support(parse_poly("x^8 + x^3 + 5"), all));
    CHECK(prime_power_support(Poly::constant(Rational(3)), all));

    PrimeSet two = PrimeSet::of({2});
    CHECK(prime_power_support(parse_poly("x^8 + x^4"), two));
    /* 3 and 15 are coprime with 2; 6 is neither coprime nor a power. */
    CHECK(prime_power_support(parse_poly("x^8 + x^3 + x^15"), two));
    CHECK_FALSE(prime_power_support(parse_poly("x^8 + x^6"), two));

    CHECK(prime_factor_support(parse_poly("x^6 + x^2"), PrimeSet::of({2, 3})));
    CHECK_FALSE(prime_factor_support(parse_poly("x^6 + x^5"), PrimeSet::of({2, 3})));
    CHECK_FALSE(prime_factor_support(parse_poly("x^6 + x"), PrimeSet::of({2})));
    CHECK(prime_factor_support(parse_poly("x^4 + x^2"), PrimeSet::of({2})));
    /* Exponent one has no prime factors, and R = all accepts anything. */
    CHECK(prime_factor_support(Poly::x(), PrimeSet::of({})));
    CHECK(prime_factor_support(parse_poly("x^30 + x^7"), all));
}
