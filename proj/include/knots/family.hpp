#pragma once

#include "knots/clasp.hpp"
#include "knots/diagram.hpp"
#include "knots/laurent.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace knots {

// Calibrated construction data for the twist family K_n: the bundled
// 10-crossing base diagram (K_1 = 10_97) plus the crossing whose twist
// region carries 2n-1 half twists.  Oriented smoothing there produces the
// two-component link J.
struct FamilyConfig {
    PdCode base;
    int twist_crossing = -1;
    int j_smoothing_index = -1;
    bool antiparallel = false;  // orientation pattern of the twist region
};

// The bundled base diagram (10_97).
const PdCode& family_base_pd();

// Locate the twist crossing by brute force over the base's crossings and
// both twist orientations: accepted when rebuilding n = 0 and n = 2 yields
// the closed-form Conway values and the smoothing yields the printed Jones
// polynomial of J.  Deterministic and cached; throws on failure.
const FamilyConfig& calibrate();

// The K_n diagram: 2n+8 crossings for n >= 1, 10-2n for n <= 0.
Diagram kn_diagram(int n);

// -(4n+1) z^4 + 2n z^2 + 1.
Laurent conway_closed(long long n);

// Printed constants: V(K_0), V(J), and nabla(J) = -4z^3 + 2z.
const Laurent& jones_k0();
const Laurent& jones_j();
const Laurent& conway_j();

// Closed-form Jones polynomial of K_n.
Laurent jones_closed(int n);

struct CheckReport {
    bool all_passed = true;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            all_passed = false;
            failures.push_back(what);
        }
    }
};

// Symbolic skein recursions on the closed forms over [n_lo, n_hi], plus the
// re-derivation of nabla(J) from (nabla K_1 - nabla K_0)/z; optionally
// checks engine-computed values from generated diagrams over the
// sub-ranges [-conway_engine, conway_engine] and [-jones_engine, jones_engine].
CheckReport verify_skein_recursions(int n_lo, int n_hi, int conway_engine = 0,
                                    int jones_engine = 0);

enum class Primeness { PrimeByConway, CompositePossible };
// CompositePossible exactly when n^2 + 4n + 1 is a perfect square.
Primeness primeness_test(long long n);

// lower = 2 (genus), raised to 3 by the mod-8 obstruction (odd n); upper = 4
// always; exact values pinned for n = 0 and n = 1.
ClaspBounds clasp_bounds_family(int n);

// Crossing-number bounds (lower bound re-derived from the Jones span).
std::pair<int, int> crossing_bounds(int n);

// Clasp upper bound <= floor((crossing lower bound - 1)/2)?
bool question2_check(int n);

// Exhaustive search over <= k crossing changes producing a diagram whose
// unknot certificate is not NontrivialPolynomial; k in {1, 2}.
std::optional<std::set<int>> unknotting_search(const Diagram& d, int k);

struct TheoremRow {
    int n = 0;
    int genus = -1;
    bool genus_ok = false;
    std::string unknotting;     // "u <= 1/2 (polynomial evidence)" etc.
    bool unknot_le2 = false;
    ClaspBounds clasp;
    Primeness prime = Primeness::PrimeByConway;
    bool conclusion = false;    // max{g,u} < c established (odd n only)
    std::vector<std::string> notes;
};

// Per-n verification of the main theorem's ingredients; the unknotting
// search runs only for |n| <= unknot_search_limit (else "inconclusive").
std::vector<TheoremRow> theorem1_report(int n_lo, int n_hi,
                                        int unknot_search_limit = 2);

}  // namespace knots
