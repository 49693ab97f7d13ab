#include "abelcenter/reference_tables.hpp"

namespace abelcenter::tables {

namespace {

Rational fact(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r = r * Rational(i);
    return r;
}

Rational frac(long n, long d) { return Rational(n, d); }

std::map<int, LinearFormRow> build_printed_L() {
    std::map<int, LinearFormRow> m;
    m[1] = {-frac(8, 13) * fact(5) * fact(5) / fact(11),
            {Rational(-13), Rational(4), Rational(-1), frac(4, 17)}};
    m[3] = {-frac(3, 14 * 9) * fact(8) * fact(8) / fact(17),
            {frac(-38, 3), Rational(4), Rational(-1), frac(16, 69)}};
    m[5] = {-frac(4, 33 * 25) * fact(11) * fact(11) / fact(23),
            {frac(-25, 2), Rational(4), Rational(-1), frac(20, 87)}};
    m[7] = {-frac(10, 11 * 13 * 31) * fact(14) * fact(14) / fact(29),
            {frac(-62, 5), Rational(4), Rational(-1), frac(8, 35)}};
    m[9] = {-frac(9, 13 * 17 * 37) * fact(17) * fact(17) / fact(35),
            {frac(-37, 3), Rational(4), Rational(-1), frac(28, 123)}};
    return m;
}

std::map<int, LinearFormRow> build_corrected_L() {
    std::map<int, LinearFormRow> m = build_printed_L();
    m[1].prefactor = -frac(2, 65) * fact(5) * fact(5) / fact(11);
    m[3].prefactor = -frac(3, 14 * 19) * fact(8) * fact(8) / fact(17);
    return m;
}

} // namespace

const std::map<int, LinearFormRow>& printed_L_rows() {
    static const std::map<int, LinearFormRow> m = build_printed_L();
    return m;
}

const std::map<int, LinearFormRow>& corrected_L_rows() {
    static const std::map<int, LinearFormRow> m = build_corrected_L();
    return m;
}

const std::array<BilinearWeights, 4>& system62_weights() {
    static const std::array<BilinearWeights, 4> w = {{
        {Rational(1), Rational(1), 1, 3},
        {Rational(1), Rational(1), 3, 5},
        {frac(16, 15), frac(36, 35), 5, 7},
        {frac(25, 21), frac(49, 45), 7, 9},
    }};
    return w;
}

const std::array<Rational, 4>& system62_scalars() {
    static const std::array<Rational, 4> s = {Rational(2), Rational(2), Rational(4),
                                              Rational(2)};
    return s;
}

const std::array<System63Row, 4>& printed_system63_rows() {
    static const std::array<System63Row, 4> rows = {{
        {{{Rational(-4199), Rational(-19)},
          {Rational(323), frac(3, 2)},
          {Rational(76), frac(8, 23)}}},
        {{{Rational(-874), Rational(-5)},
          {Rational(69), frac(2, 5)},
          {Rational(16), frac(8, 87)}}},
        {{{Rational(-40600), Rational(-252)},
          {Rational(3248), frac(630, 31)},
          {frac(2240, 3), frac(144, 31)}}},
        {{{Rational(-7750), Rational(-49)},
          {Rational(625), frac(147, 37)},
          {frac(1000, 7), frac(1372, 1517)}}},
    }};
    return rows;
}

const std::array<Rational, 4>& printed_delta1_coeffs() {
    static const std::array<Rational, 4> c = {frac(24, 103385), frac(1368, 4495),
                                              frac(2736, 31), frac(21280, 3)};
    return c;
}

const std::array<Rational, 4>& printed_delta2_coeffs() {
    static const std::array<Rational, 4> c = {frac(3528, 1081621), frac(3934112, 1081621),
                                              frac(101998240, 104673), Rational(76000)};
    return c;
}

const char* const printed_resultant_decimal = "21.51447438";

const Rational& resultant_exact() {
    static const Rational r = Rational::from_string(
        "3037887138473421622881906851840/141202015152204794943693510009");
    return r;
}

const std::array<Rational, 4>& system63_row_scalars() {
    static const std::array<Rational, 4> s = {
        Rational::from_string("-1/14549535"),
        Rational::from_string("-1/669278610"),
        Rational::from_string("-2/5094883418625"),
        Rational::from_string("-1/135378330837750"),
    };
    return s;
}

const std::array<RouteRatio, 4>& melnikov_route_ratios() {
    static const std::array<RouteRatio, 4> r = {{
        {5, 1, true, Rational(-1), false},
        {7, 2, true, Rational(-2), true},
        {9, 3, true, Rational(-2), true},
        {11, 4, false, Rational(0), true},
    }};
    return r;
}

const std::map<int, Rational>& grading_sigma() {
    static const std::map<int, Rational> s = {
        {4, Rational(-1)}, {6, frac(-1, 2)}, {8, frac(-1, 2)},
        {10, frac(-5, 8)}, {12, frac(-7, 8)},
    };
    return s;
}

} // namespace abelcenter::tables
