#pragma once

#include "knots/laurent.hpp"
#include "knots/seifert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knots {

// Conway polynomial of the shape m4*z^4 + m2*z^2 + 1 (every knot with clasp
// number at most two has this shape).
struct ConwayGenus2 {
    long long m4 = 0;
    long long m2 = 0;

    friend bool operator==(const ConwayGenus2&, const ConwayGenus2&) = default;
};

// Parameters (b1, b2, b3, eps, delta) realizing
//   m4 = b1*b2 + eps*b3*(b3+delta),  m2 = b1 + b2 - eps*delta.
struct TwoClaspWitness {
    long long b1 = 0;
    long long b2 = 0;
    long long b3 = 0;
    int eps = +1;    // +1 or -1
    int delta = 0;   // 0 or 1

    friend bool operator==(const TwoClaspWitness&, const TwoClaspWitness&) = default;
};

struct ClaspBounds {
    int lower = 0;
    std::optional<int> upper;
    std::vector<std::string> provenance;
};

// max{g, u} <= c.
int shibuya_lower(int g_lb, int u_lb);

// Extract (m4, m2); throws std::invalid_argument unless the polynomial has
// powers 4, 2, 0 only with constant term exactly 1.
ConwayGenus2 conway_genus2_of(const Laurent& p);

// True exactly when m4 = 3 (mod 8) and m2 = 2 (mod 4); then c >= 3.
bool mod8_obstruction(const ConwayGenus2& c);

// Some(b1) iff p == b1*z^2 + 1 (the one-clasp Conway shape).
std::optional<BigInt> one_clasp_form(const Laurent& p);

// The 4x4 Seifert matrix of a two-clasp disk with clasp signs eps1, eps2
// and band linking data a11, a12, a22 (a21 = a12 + delta).
SeifertMatrix lemma21_matrix(long long a11, long long a12, long long a22,
                             int eps1, int eps2, int delta);

// (b1*b2 + eps*b3*(b3+delta)) z^4 + (b1 + b2 - eps*delta) z^2 + 1.
Laurent lemma21_closed_form(long long b1, long long b2, long long b3, int eps,
                            int delta);

// Exact decision: does any witness exist?  Returned witnesses minimize
// (|X|, |Y|) within the (eps, delta) branch order (+1,0), (+1,1), (-1,0),
// (-1,1), where X = 2*b3 + delta and Y = b1 - b2; ties resolved toward
// nonnegative Y.  A NotRealizable answer together with the shape
// precondition certifies clasp number >= 3.
std::optional<TwoClaspWitness> two_clasp_realizable(const ConwayGenus2& c);

// Exhaustive brute force over |b1|, |b2|, |b3| <= bound (independent oracle).
std::optional<TwoClaspWitness> two_clasp_realizable_oracle(const ConwayGenus2& c,
                                                           long long bound);

// deg_z / 2 of a knot Conway polynomial; throws on odd degree.
int genus_lower_from_conway(const Laurent& p);

}  // namespace knots
