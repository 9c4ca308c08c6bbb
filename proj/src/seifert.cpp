#include "knots/seifert.hpp"

#include <stdexcept>
#include <utility>

namespace knots {

SeifertMatrix SeifertMatrix::from_rows(std::vector<std::vector<BigInt>> rows) {
    for (auto& r : rows)
        if (r.size() != rows.size())
            throw std::invalid_argument("Seifert matrix must be square");
    return SeifertMatrix{std::move(rows)};
}

namespace {

Laurent det_cofactor(const std::vector<std::vector<Laurent>>& m,
                     std::vector<int> cols, int row) {
    const int n = static_cast<int>(m.size());
    if (row == n) return Laurent::one();
    Laurent acc;
    for (size_t k = 0; k < cols.size(); ++k) {
        const Laurent& pivot = m[row][cols[k]];
        if (pivot.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        Laurent sub = pivot * det_cofactor(m, std::move(rest), row + 1);
        if (k % 2 == 0)
            acc += sub;
        else
            acc -= sub;
    }
    return acc;
}

}  // namespace

Laurent laurent_det(std::vector<std::vector<Laurent>> m) {
    const int n = static_cast<int>(m.size());
    for (auto& r : m)
        if (static_cast<int>(r.size()) != n)
            throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return Laurent::one();
    if (n < 5) {
        std::vector<int> cols(n);
        for (int i = 0; i < n; ++i) cols[i] = i;
        return det_cofactor(m, std::move(cols), 0);
    }

    // Bareiss: all intermediate entries are minors, divisions are exact.
    int sign = 1;
    Laurent prev = Laurent::one();
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Laurent();  // zero column, zero determinant
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = div_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Laurent alexander_from_seifert(const SeifertMatrix& v) {
    const int n = v.dim();
    std::vector<std::vector<Laurent>> m(n, std::vector<Laurent>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Laurent e;
            e.add_term(2, v.a[i][j]);   // t * V_ij
            e.add_term(0, -v.a[j][i]);  // - V_ji
            m[i][j] = std::move(e);
        }
    return laurent_det(std::move(m));
}

Laurent conway_from_seifert(const SeifertMatrix& v) {
    if (v.dim() % 2 != 0)
        throw std::invalid_argument("knot Seifert matrix must have even dimension");
    return conway_from_alexander(normalize_alexander(alexander_from_seifert(v)));
}

}  // namespace knots
