#include "abelcenter/linalg.hpp"

#include <stdexcept>

namespace abelcenter {

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Rational inv = Rational(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> rhs) {
    if (a.size() != rhs.size()) throw std::invalid_argument("solve: dimension mismatch");
    if (a.empty()) return std::vector<Rational>{};
    size_t cols = a[0].size();
    for (size_t i = 0; i < a.size(); ++i) a[i].push_back(rhs[i]);
    std::vector<int> pivots = rref(a);
    /* A pivot in the appended column marks an inconsistent row. */
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[static_cast<size_t>(pivots[k])] = a[k][cols];
    return x;
}

std::vector<std::vector<Rational>> nullspace(Matrix a) {
    if (a.empty()) return {};
    size_t cols = a[0].size();
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_c] = Rational(1);
        for (size_t k = 0; k < pivots.size(); ++k)
            v[static_cast<size_t>(pivots[k])] = -a[k][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(Matrix m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    Rational det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Rational inv = Rational(1) / m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] * inv;
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

Rational resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    int df = f.degree(), dg = g.degree();
    if (df == 0) return f.leading().pow(static_cast<unsigned>(dg));
    if (dg == 0) return g.leading().pow(static_cast<unsigned>(df));
    size_t n = static_cast<size_t>(df + dg);
    Matrix s(n, std::vector<Rational>(n, Rational(0)));
    /* Rows of g-shifts on top, f-shifts below, descending coefficients. */
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j <= df; ++j)
            s[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = f.coeff(df - j);
    for (int i = 0; i < df; ++i)
        for (int j = 0; j <= dg; ++j)
            s[static_cast<size_t>(dg + i)][static_cast<size_t>(i + j)] = g.coeff(dg - j);
    return determinant(std::move(s));
}

} // namespace abelcenter
