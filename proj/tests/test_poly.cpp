#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abelcenter/chebyshev.hpp"
#include "abelcenter/parse.hpp"
#include "abelcenter/poly.hpp"

using namespace abelcenter;

namespace {

Poly P(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    for (long v : ascending) c.emplace_back(v);
    return Poly(std::move(c));
}

Rational fact(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

} // namespace

TEST_CASE("degree, leading and zero handling") {
    CHECK(Poly().is_zero());
    CHECK(Poly().degree() == Poly::degree_minus_infinity);
    CHECK(Poly::constant(Rational(0)).is_zero());
    CHECK(Poly({Rational(1), Rational(0), Rational(0)}).degree() == 0);
    CHECK(P({0, 0, 3}).degree() == 2);
    CHECK(P({0, 0, 3}).leading() == Rational(3));
    CHECK_THROWS_AS(Poly().leading(), std::logic_error);
    CHECK(Poly::monomial(4, Rational(1, 2)) == Poly({Rational(0), Rational(0), Rational(0), Rational(0), Rational(1, 2)}));
    CHECK(Poly::monomial(3, Rational(0)).is_zero());
    CHECK_THROWS_AS(Poly::monomial(-1, Rational(1)), std::invalid_argument);
}

TEST_CASE("ring operations") {
    Poly f = P({1, 2, 3});  /* 3x^2 + 2x + 1 */
    Poly g = P({0, -1, 1}); /* x^2 - x */
    CHECK(f + g == P({1, 1, 4}));
    CHECK(f - g == P({1, 3, 2}));
    CHECK(f * g == Poly({Rational(0), Rational(-1), Rational(-1), Rational(-1), Rational(3)}));
    CHECK(-g == P({0, 1, -1}));
    CHECK((f - f).is_zero());
    CHECK(scale(g, Rational(1, 2)) == Poly({Rational(0), Rational(-1, 2), Rational(1, 2)}));
    CHECK(scale(g, Rational(0)).is_zero());
    CHECK((f * Poly()).is_zero());

    /* Degree drop through cancellation of the top coefficients. */
    CHECK((P({0, 0, 1}) - P({0, 1, 1})).degree() == 1);
}

TEST_CASE("evaluation and calculus") {
    Poly f = P({1, -2, 0, 4}); /* 4x^3 - 2x + 1 */
    CHECK(f.eval(Rational(0)) == Rational(1));
    CHECK(f.eval(Rational(1, 2)) == Rational(1, 2));
    CHECK(f.derivative() == P({-2, 0, 12}));
    CHECK(Poly::constant(Rational(5)).derivative().is_zero());

    Poly F = f.antiderivative(Rational(1, 3));
    CHECK(F.derivative() == f);
    CHECK(F.eval(Rational(1, 3)) == Rational(0));
    CHECK(derivative(antiderivative(f, Rational(0))) == f);

    Interval iv(Rational(0), Rational(1));
    CHECK(definite_integral(f, iv) == Rational(1));
    CHECK(definite_integral(Poly(), iv) == Rational(0));
    /* Orientation flips the sign. */
    CHECK(definite_integral(f, Interval(Rational(1), Rational(0))) == Rational(-1));
    CHECK_THROWS_AS(Interval(Rational(2), Rational(2)), std::invalid_argument);
}

TEST_CASE("pow and compose") {
    Poly g = P({0, -1, 1});
    CHECK(g.pow(0) == Poly::constant(Rational(1)));
    CHECK(g.pow(1) == g);
    CHECK(g.pow(3) == g * g * g);
    CHECK(compose(P({0, 0, 1}), g) == g * g);
    CHECK(compose(g, Poly::x()) == g);
    CHECK(compose(Poly::constant(Rational(7)), g) == Poly::constant(Rational(7)));
    /* Composition is associative: (f.g).h = f.(g.h). */
    Poly f = P({1, 2, 3}), h = P({-1, 0, 0, 2});
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
}

TEST_CASE("divmod") {
    Poly f = P({1, -2, 0, 4});
    Poly g = P({0, -1, 1});
    auto [q, r] = divmod(f, g);
    CHECK(f == q * g + r);
    CHECK(r.degree() < g.degree());
    CHECK_THROWS_AS(divmod(f, Poly()), std::invalid_argument);
    auto [q2, r2] = divmod(g, f);
    CHECK(q2.is_zero());
    CHECK(r2 == g);
}

TEST_CASE("parse round-trips to_string") {
    std::vector<Poly> samples = {
        P({0, -1, 1}),
        P({0, 1, -3, 2}),
        Poly({Rational(1, 2), Rational(-1, 3), Rational(0), Rational(5)}),
        Poly::constant(Rational(-7, 3)),
        Poly(),
        Poly::x(),
        -Poly::x(),
        Poly::monomial(9, Rational(2, 11)),
    };
    for (const Poly& f : samples) {
        CAPTURE(f.to_string());
        CHECK(parse_poly(f.to_string()) == f);
    }
    CHECK(P({0, -1, 1}).to_string() == "x^2 - x");
    CHECK(P({0, 1, -3, 2}).to_string() == "2x^3 - 3x^2 + x");
    CHECK(Poly({Rational(0), Rational(-1, 2), Rational(1, 2)}).to_string() == "1/2x^2 - 1/2x");
    CHECK(Poly().to_string() == "0");
    CHECK((-Poly::x()).to_string() == "-x");
}

TEST_CASE("parse grammar") {
    CHECK(parse_poly("4x^3 - 3x") == P({0, -3, 0, 4}));
    CHECK(parse_poly("-7") == Poly::constant(Rational(-7)));
    CHECK(parse_poly("+x") == Poly::x());
    CHECK(parse_poly("1/2x^2 - 1/2x") == Poly({Rational(0), Rational(-1, 2), Rational(1, 2)}));
    CHECK(parse_poly(" 2 x ^ 3 ") == P({0, 0, 0, 2}));
    CHECK(parse_poly("3/6x") == Poly({Rational(0), Rational(1, 2)}));
    /* The UTF-8 minus sign is treated as '-'. */
    CHECK(parse_poly("x− 1") == P({-1, 1}));
    CHECK(parse_poly("−x^2") == P({0, 0, -1}));
    /* Repeated exponents accumulate. */
    CHECK(parse_poly("x + x") == P({0, 2}));
    CHECK(parse_poly("x^2 - x^2").is_zero());
    CHECK(parse_poly("2x^3 + x - x^3") == P({0, 1, 0, 1}));
}

TEST_CASE("parse errors carry 1-based positions") {
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("   "), ParseError);
    try {
        parse_poly("x^");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
    try {
        parse_poly("2x^3 + + 4");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
    }
    try {
        parse_poly("3y");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^99999"), ParseError);
    CHECK_THROWS_AS(parse_poly("x + "), ParseError);
    CHECK_THROWS_AS(parse_poly("^2"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^-2"), ParseError);
}

TEST_CASE("classical Chebyshev commutation") {
    CHECK(chebyshev(2) == P({-1, 0, 2}));
    CHECK(chebyshev(3) == P({0, -3, 0, 4}));
    CHECK(chebyshev(6) == compose(chebyshev(2), chebyshev(3)));
    CHECK(chebyshev(6) == compose(chebyshev(3), chebyshev(2)));
    CHECK(chebyshev(12) == compose(chebyshev(4), chebyshev(3)));
    CHECK_THROWS_AS(chebyshev(0), std::invalid_argument);
}

TEST_CASE("shifted representatives") {
    Poly t2 = shifted_chebyshev(2);
    Poly t3 = shifted_chebyshev(3);
    Poly t6 = shifted_chebyshev(6);
    CHECK(t2 == P({0, -1, 1}));
    CHECK(t3 == P({0, 1, -3, 2}));
    CHECK(t6 == P({0, 0, 1, -6, 13, -12, 4}));
    CHECK(t6 == t3 * t3);
    CHECK(t6 == t2 * t2 + scale(t2.pow(3), Rational(4)));
    /* t6 factors through both halves: t3^2 = S(t3), t2^2 + 4t2^3 = R(t2). */
    CHECK(t6 == compose(P({0, 0, 1}), t3));
    CHECK(t6 == compose(P({0, 0, 1, 4}), t2));

    CHECK(shifted_chebyshev(4) ==
          Poly({Rational(0), Rational(-1, 3), Rational(7, 3), Rational(-4), Rational(2)}));
    CHECK(shifted_chebyshev(5) ==
          Poly({Rational(0), Rational(5, 36), Rational(-5, 2), Rational(25, 3), Rational(-10),
                Rational(4)}));
    CHECK(shifted_chebyshev(7) ==
          Poly({Rational(0), Rational(-7, 216), Rational(-7, 12), Rational(119, 18),
                Rational(-70, 3), Rational(112, 3), Rational(-28), Rational(8)}));
    CHECK(shifted_chebyshev(8) ==
          Poly({Rational(0), Rational(1, 54), Rational(5, 54), Rational(-26, 9),
                Rational(145, 9), Rational(-40), Rational(152, 3), Rational(-32), Rational(8)}));

    /* Zero constant term throughout, and even-index members vanish at 1. */
    for (int n = 2; n <= 9; ++n) {
        Poly t = shifted_chebyshev(n);
        CHECK(t.coeff(0) == Rational(0));
        if (n % 2 == 0) CHECK(t.eval(Rational(1)) == Rational(0));
    }
    CHECK_THROWS_AS(shifted_chebyshev(0), std::invalid_argument);
}

TEST_CASE("integrals of t2 powers over the unit interval") {
    /* int_0^1 (x^2 - x)^n dx = (-1)^n (n!)^2 / (2n+1)!. */
    Interval iv(Rational(0), Rational(1));
    Poly t2 = P({0, -1, 1});
    for (int n = 0; n <= 8; ++n) {
        Rational expect = fact(n) * fact(n) / fact(2 * n + 1);
        if (n % 2 == 1) expect = -expect;
        CHECK(definite_integral(t2.pow(static_cast<unsigned>(n)), iv) == expect);
    }
    /* A mixed product: int_0^1 x^4 (x-1)^2 (2x-1) dx = 1/420. */
    Poly f = Poly::monomial(4, Rational(1)) * P({-1, 1}).pow(2) * P({-1, 2});
    CHECK(definite_integral(f, iv) == Rational(1, 420));
}
