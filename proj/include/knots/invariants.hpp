#pragma once

#include "knots/diagram.hpp"
#include "knots/laurent.hpp"

namespace knots {

enum class SmoothKind { A, B };

// Union-find accumulator for Kauffman states: smooth every crossing of the
// underlying diagram once, then read off the loop count.
class SmoothingState {
public:
    explicit SmoothingState(const Diagram& d);

    void smooth(int crossing, SmoothKind kind);
    bool complete() const { return smoothed_ == num_crossings_; }
    // Loops of the fully smoothed shadow (crossing-free circles included).
    int loops() const;

private:
    int find(int x);

    int num_crossings_;
    int smoothed_ = 0;
    int merges_ = 0;
    int free_loops_;
    std::vector<int> parent_;
    std::vector<std::array<int, 4>> ends_;  // per crossing: arc indices in
                                            // counterclockwise slot order
};

// Kauffman bracket in the variable A (doubled exponents, so the key of A^k
// is 2k).  Unknot convention <unknot> = 1.
Laurent kauffman_bracket(const Diagram& d);

// (-A)^{-3w} <D> rewritten in t = A^{-4}; half-integer exponents appear for
// even-component links, integer exponents for knots.
Laurent jones(const Diagram& d);

// Normalized Alexander polynomial of a knot diagram via the abelianized
// Wirtinger presentation: one Fox row per crossing over the over-bridges,
// drop one row and column, take the exact determinant.
Laurent alexander(const Diagram& d);

// conway_from_alexander(alexander(d)).
Laurent conway(const Diagram& d);

enum class UnknotVerdict {
    TriviallyCertified,    // reduces to zero crossings by R1/R2 alone
    PolynomialTrivial,     // Alexander and Jones both trivial (evidence only)
    NontrivialPolynomial,
};

UnknotVerdict unknot_certificate(const Diagram& d);

const char* to_string(UnknotVerdict v);

}  // namespace knots
