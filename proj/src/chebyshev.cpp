#include "abelcenter/chebyshev.hpp"

#include <stdexcept>

namespace abelcenter {

Poly chebyshev(int n) {
    if (n < 1) throw std::invalid_argument("chebyshev: n must be >= 1");
    Poly prev = Poly::constant(Rational(1));
    Poly cur = Poly::x();
    Poly two_x = scale(Poly::x(), Rational(2));
    for (int m = 1; m < n; ++m) {
        Poly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly shifted_chebyshev(int n) {
    if (n < 1) throw std::invalid_argument("shifted_chebyshev: n must be >= 1");
    Poly prev = Poly::constant(Rational(1));
    Poly cur = Poly({Rational(-1, 2), Rational(1)});
    Poly two_x_minus_1({Rational(-1), Rational(2)});
    for (int m = 1; m < n; ++m) {
        Rational c = (m % 2 == 1) ? Rational(3) : Rational(1);
        Poly next = scale(two_x_minus_1 * cur, c) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    Poly out = cur - Poly::constant(cur.eval(Rational(0)));
    return scale(out, Rational(1) / Rational(6).pow(static_cast<unsigned>(n / 2)));
}

} // namespace abelcenter
