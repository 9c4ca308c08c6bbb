#pragma once

#include "knots/laurent.hpp"

#include <vector>

namespace knots {

// Square integer linking matrix a_ij = lk(alpha_i, alpha_j^+) of a Seifert
// surface basis.
struct SeifertMatrix {
    std::vector<std::vector<BigInt>> a;

    int dim() const { return static_cast<int>(a.size()); }

    static SeifertMatrix from_rows(std::vector<std::vector<BigInt>> rows);
};

// Exact determinant of a square Laurent-polynomial matrix: fraction-free
// Bareiss elimination, plain cofactor expansion below dimension 5.
Laurent laurent_det(std::vector<std::vector<Laurent>> m);

// det(tV - V^T), exact, defined up to units of Z[t,1/t].
Laurent alexander_from_seifert(const SeifertMatrix& v);

// Conway normal form of the knot with Seifert matrix V; throws when the
// matrix does not normalize like a knot matrix.
Laurent conway_from_seifert(const SeifertMatrix& v);

}  // namespace knots
