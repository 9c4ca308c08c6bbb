// Derives the bundled base diagram of the twist family (K_1 = 10_97) from
// first principles.
//
// K_1 has a reduced alternating 10-crossing diagram that carries the whole
// family structure: one of its crossings is the twist region at one half
// twist, and smoothing it produces the nine-crossing link J.  Reduced
// alternating diagrams of 10-crossing knots are exactly the realizable
// kink-free alternating DT pairings on 1..20, so the search is bounded:
//
//   1. enumerate pairings of the odd numbers 1..19 with the evens 2..20,
//      skipping kinks (a crossing visited at cyclically adjacent times);
//   2. filter by the knot determinant (the Fox matrix at t = -1 needs no
//      planar embedding, only the pairing);
//   3. realize survivors in the plane, then keep diagrams whose Conway and
//      Jones polynomials equal the closed-form K_1 values (mirroring as
//      needed);
//   4. calibrate: find the crossing whose smoothing has the Jones
//      polynomial of J and whose twist-region rebuilds reproduce the
//      closed-form K_0 and K_2 invariants, with two-change unknottability
//      across n in [-2,2].
//
// Every accepted fact is verified by exact polynomial equality, so a wrong
// candidate cannot slip through; rerunning reproduces the bundled data.

#include "knots/diagram.hpp"
#include "knots/family.hpp"
#include "knots/invariants.hpp"
#include "knots/moves.hpp"

#include <array>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

using namespace knots;

namespace {

constexpr int kCrossings = 10;
constexpr int kTimes = 2 * kCrossings;

// |det(K)| from the pairing alone: at t = -1 the Fox row is 2*over -
// under_in - under_out for either crossing sign.  Bridges are the even
// times (every odd time is an underpass in an alternating code).
long long pairing_determinant(const std::array<int, kCrossings>& even_of) {
    // Row per crossing i (odd time 2i+1, even time even_of[i]).
    long long m[kCrossings][kCrossings] = {};
    auto bridge = [](int even_time) { return (even_time / 2 - 1 + kCrossings) % kCrossings; };
    for (int i = 0; i < kCrossings; ++i) {
        const int odd = 2 * i + 1;
        const int over = bridge(even_of[i]);
        const int uin = bridge((odd - 1 + kTimes - 1) % kTimes + 1);
        const int uout = bridge(odd % kTimes + 1);
        m[i][over] += 2;
        m[i][uin] -= 1;
        m[i][uout] -= 1;
    }
    // Fraction-free elimination on the (n-1)x(n-1) minor.
    const int n = kCrossings - 1;
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            for (int j = 0; j < n; ++j) std::swap(m[k][j], m[r][j]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    long long det = sign * m[n - 1][n - 1];
    return det < 0 ? -det : det;
}

struct Calibration {
    PdCode base;
    int twist = -1;
    bool antiparallel = false;
};

bool verify_family(const Diagram& base, int twist, bool antiparallel,
                   bool check_unknotting) {
    const Crossing c = base.crossings()[twist];
    Diagram templ = base.smooth_oriented(twist);
    auto member = [&](int n) {
        const int m = 2 * n - 1;
        return insert_twists(templ, TwistSite{c.over_in, c.under_in}, m,
                             m > 0 ? c.sign : -c.sign, antiparallel);
    };
    try {
        for (int n = -3; n <= 3; ++n)
            if (n != 1 && conway(member(n)) != conway_closed(n)) return false;
        for (int n : {-2, 0, 2})
            if (jones(member(n)) != jones_closed(n)) return false;
        if (check_unknotting)
            for (int n = -2; n <= 2; ++n) {
                Diagram d = n == 1 ? base : member(n);
                if (!unknotting_search(d, 2)) return false;
            }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

}  // namespace

int main() {
    // Targets, all from closed forms.
    const Laurent nabla_k1 = conway_closed(1);
    const Laurent v_k1 = jones_closed(1);
    long long target_det = 0;
    {
        const Laurent alex = substitute_z(nabla_k1);
        BigInt at_minus1 = 0;
        for (auto& [e, coeff] : alex.terms())
            at_minus1 += (e / 2) % 2 == 0 ? coeff : -coeff;
        target_det = static_cast<long long>(at_minus1 < 0 ? -at_minus1 : at_minus1);
    }
    std::cout << "target determinant " << target_det << std::endl;

    // Enumerate kink-free pairings.
    std::array<int, kCrossings> even_of{};
    std::array<bool, kTimes + 1> used{};
    std::vector<std::array<int, kCrossings>> det_hits;
    long long leaves = 0;

    auto dfs = [&](auto&& self, int i) -> void {
        if (i == kCrossings) {
            ++leaves;
            if (pairing_determinant(even_of) == target_det)
                det_hits.push_back(even_of);
            return;
        }
        const int odd = 2 * i + 1;
        for (int e = 2; e <= kTimes; e += 2) {
            if (used[e]) continue;
            const int diff = (e - odd + kTimes) % kTimes;
            if (diff == 1 || diff == kTimes - 1) continue;  // kink
            used[e] = true;
            even_of[i] = e;
            self(self, i + 1);
            used[e] = false;
        }
    };
    dfs(dfs, 0);
    std::cout << leaves << " kink-free pairings, " << det_hits.size()
              << " with the target determinant" << std::endl;

    // Realize and identify by exact invariants.
    std::vector<Diagram> k1_diagrams;
    std::set<std::string> seen;
    int realizable = 0;
    for (const auto& eo : det_hits) {
        std::ostringstream code;
        for (int i = 0; i < kCrossings; ++i) code << (i ? " " : "") << eo[i];
        PdCode pd;
        try {
            pd = parse_dt(code.str());
        } catch (const PdParseError&) {
            continue;
        }
        ++realizable;
        Diagram d = orient(pd);
        if (conway(d) != nabla_k1) continue;
        const Laurent v = jones(d);
        if (v == v_k1) {
            // keep
        } else if (v.reversed() == v_k1) {
            d = d.mirrored();
        } else {
            continue;
        }
        if (seen.insert(to_string(d.canonical_pd())).second)
            k1_diagrams.push_back(d);
    }
    std::cout << realizable << " realizable, " << k1_diagrams.size()
              << " distinct diagrams with the K_1 invariants" << std::endl;

    // Calibrate: find the twist crossing and the region's strand pattern.
    std::vector<Calibration> good;
    for (const Diagram& d : k1_diagrams) {
        for (int c = 0; c < d.num_crossings(); ++c) {
            Diagram sm = d.smooth_oriented(c);
            if (sm.num_components() != 2 || sm.free_loops() != 0) continue;
            if (jones(sm) != jones_j()) continue;
            std::cout << "J-site: " << to_string(d.renumbered_pd())
                      << "  crossing " << c << std::endl;
            bool hit = false;
            for (bool anti : {false, true})
                if (verify_family(d, c, anti, /*check_unknotting=*/true)) {
                    good.push_back(Calibration{d.renumbered_pd(), c, anti});
                    std::cout << "calibrated: " << to_string(d.renumbered_pd())
                              << "  twist=" << c
                              << (anti ? "  (antiparallel)" : "  (parallel)")
                              << std::endl;
                    hit = true;
                }
            if (!hit)
                std::cout << "  site at crossing " << c
                          << " matched J but failed the family contract"
                          << std::endl;
        }
    }
    if (good.empty()) {
        std::cout << "no diagram calibrated; search failed" << std::endl;
        return 1;
    }

    const Calibration* best = &good[0];
    for (const Calibration& g : good)
        if (to_string(g.base) < to_string(best->base)) best = &g;
    std::cout << "\n=== bundled family base ===\n";
    std::cout << "pd: " << to_string(best->base) << "\n";
    std::cout << "twist_crossing: " << best->twist << "\n";
    return 0;
}
