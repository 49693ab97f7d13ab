#pragma once

#include "abelcenter/poly.hpp"

namespace abelcenter {

/* Classical Chebyshev polynomial T_n via T_{n+1} = 2x T_n - T_{n-1}. n >= 1. */
Poly chebyshev(int n);

/* The [0,1]-normalized family used for rational-endpoint work:
 * T~2 = x(x-1), T~3 = x(x-1)(2x-1), T~6 = T~3^2 = T~2^2 + 4 T~2^3.
 *
 * General n: transport T_n through the affine map sending [0,1] onto
 * [-sqrt(3)/2, sqrt(3)/2]. Writing T_n(sqrt(3)(x - 1/2)) = sqrt(3)^(n mod 2)
 * S_n(x) keeps S_n rational, with S_0 = 1, S_1 = x - 1/2 and
 * S_{m+1} = c_m (2x-1) S_m - S_{m-1}, c_m = 3 for odd m, 1 for even m.
 * The returned representative is (S_n - S_n(0)) / 6^floor(n/2), which
 * reproduces the three pinned polynomials above. n >= 1. */
Poly shifted_chebyshev(int n);

} // namespace abelcenter
