#pragma once

#include "abelcenter/poly.hpp"

#include <optional>
#include <vector>

namespace abelcenter {

using Matrix = std::vector<std::vector<Rational>>;

/* In-place reduced row echelon form; returns the pivot column indices. */
std::vector<int> rref(Matrix& m);

int rank(Matrix m);

/* One exact solution of A x = rhs with free variables set to zero, or
 * nullopt when the system is inconsistent. */
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> rhs);

/* Basis of the right kernel of A. */
std::vector<std::vector<Rational>> nullspace(Matrix a);

Rational determinant(Matrix m);

/* Resultant of f and g as the determinant of their Sylvester matrix. */
Rational resultant(const Poly& f, const Poly& g);

} // namespace abelcenter
