#include "knots/invariants.hpp"

#include "knots/moves.hpp"
#include "knots/seifert.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace knots {

namespace {

// Arc indices (0-based, dense) and per-crossing counterclockwise slots.
struct ArcTable {
    std::map<int, int> index;
    std::vector<std::array<int, 4>> slots;  // ccw order, matching Crossing sign

    explicit ArcTable(const Diagram& d) {
        for (int id : d.arcs()) {
            int k = static_cast<int>(index.size());
            index.emplace(id, k);
        }
        for (auto& c : d.crossings()) {
            std::array<int, 4> s =
                c.sign < 0
                    ? std::array<int, 4>{c.under_in, c.over_in, c.under_out, c.over_out}
                    : std::array<int, 4>{c.under_in, c.over_out, c.under_out, c.over_in};
            for (int& a : s) a = index.at(a);
            slots.push_back(s);
        }
    }
};

struct Counter {
    std::vector<int> parent;

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // Returns 1 when the union merged two classes.
    int unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return 0;
        parent[a] = b;
        return 1;
    }
};

// Loop counts bucketed by state weight: counts[w][loops] over all states in
// [begin, end), where w = number of B-smoothings.
using Buckets = std::vector<std::vector<uint64_t>>;

Buckets sum_states(const ArcTable& tab, int num_arcs, int free_loops,
                   uint64_t begin, uint64_t end) {
    const int n = static_cast<int>(tab.slots.size());
    Buckets counts(n + 1, std::vector<uint64_t>(num_arcs + free_loops + 1, 0));
    Counter uf;
    uf.parent.resize(num_arcs);
    for (uint64_t state = begin; state < end; ++state) {
        for (int i = 0; i < num_arcs; ++i) uf.parent[i] = i;
        int merges = 0, weight = 0;
        for (int c = 0; c < n; ++c) {
            const auto& s = tab.slots[c];
            if ((state >> c) & 1) {  // B: join slots (0,3) and (1,2)
                ++weight;
                merges += uf.unite(s[0], s[3]);
                merges += uf.unite(s[1], s[2]);
            } else {  // A: join slots (0,1) and (2,3)
                merges += uf.unite(s[0], s[1]);
                merges += uf.unite(s[2], s[3]);
            }
        }
        ++counts[weight][num_arcs - merges + free_loops];
    }
    return counts;
}

}  // namespace

SmoothingState::SmoothingState(const Diagram& d)
    : num_crossings_(d.num_crossings()), free_loops_(d.free_loops()) {
    ArcTable tab(d);
    ends_ = tab.slots;
    parent_.resize(tab.index.size());
    for (size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
}

int SmoothingState::find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
}

void SmoothingState::smooth(int crossing, SmoothKind kind) {
    if (crossing < 0 || crossing >= num_crossings_)
        throw std::out_of_range("crossing index out of range");
    const auto& s = ends_[crossing];
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[a] = b;
            ++merges_;
        }
    };
    if (kind == SmoothKind::A) {
        unite(s[0], s[1]);
        unite(s[2], s[3]);
    } else {
        unite(s[0], s[3]);
        unite(s[1], s[2]);
    }
    ++smoothed_;
}

int SmoothingState::loops() const {
    if (!complete())
        throw std::logic_error("state incomplete: smooth every crossing first");
    return static_cast<int>(parent_.size()) - merges_ + free_loops_;
}

Laurent kauffman_bracket(const Diagram& d) {
    const int n = d.num_crossings();
    const ArcTable tab(d);
    const int num_arcs = static_cast<int>(tab.index.size());

    const uint64_t total = uint64_t(1) << n;
    Buckets counts;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (n >= 14 && hw > 1) {
        const unsigned workers = std::min<uint64_t>(hw, 8);
        std::vector<Buckets> parts(workers);
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            uint64_t b = total * w / workers, e = total * (w + 1) / workers;
            threads.emplace_back([&, w, b, e] {
                parts[w] = sum_states(tab, num_arcs, d.free_loops(), b, e);
            });
        }
        for (auto& t : threads) t.join();
        counts = std::move(parts[0]);
        for (unsigned w = 1; w < workers; ++w)
            for (size_t i = 0; i < counts.size(); ++i)
                for (size_t j = 0; j < counts[i].size(); ++j)
                    counts[i][j] += parts[w][i][j];
    } else {
        counts = sum_states(tab, num_arcs, d.free_loops(), 0, total);
    }

    // delta = -A^2 - A^-2; exponents stored doubled (A^k has key 2k).
    Laurent delta;
    delta.add_term(4, -1);
    delta.add_term(-4, -1);
    const int max_loops = num_arcs + d.free_loops();
    std::vector<Laurent> delta_pow(std::max(1, max_loops));
    delta_pow[0] = Laurent::one();
    for (int i = 1; i < static_cast<int>(delta_pow.size()); ++i)
        delta_pow[i] = delta_pow[i - 1] * delta;

    Laurent result;
    for (int w = 0; w <= n; ++w)
        for (int loops = 1; loops <= max_loops; ++loops) {
            uint64_t cnt = counts[w][loops];
            if (!cnt) continue;
            // A^(#A - #B) = A^(n - 2w): doubled exponent 2n - 4w.
            result += Laurent::monomial(BigInt(cnt), 2 * (n - 2 * w)) *
                      delta_pow[loops - 1];
        }
    return result;
}

Laurent jones(const Diagram& d) {
    const Laurent bracket = kauffman_bracket(d);
    const int w = d.writhe();
    Laurent result;
    for (auto& [key, c] : bracket.terms()) {
        // Multiply by (-A)^{-3w}, then substitute t = A^{-4}.
        const int shifted = key - 6 * w;
        if (shifted % 4 != 0)
            throw std::logic_error("bracket exponent not divisible by 4");
        result.add_term(-shifted / 4, (w % 2 == 0) ? c : -c);
    }
    return result;
}

Laurent alexander(const Diagram& d) {
    if (!d.is_knot())
        throw std::invalid_argument("Alexander polynomial needs a knot diagram");
    const int n = d.num_crossings();
    if (n == 0) return Laurent::one();

    // Over-bridges: arcs merged across each crossing's over-strand.
    ArcTable tab(d);
    Counter uf;
    uf.parent.resize(tab.index.size());
    for (size_t i = 0; i < uf.parent.size(); ++i) uf.parent[i] = static_cast<int>(i);
    for (auto& c : d.crossings())
        uf.unite(tab.index.at(c.over_in), tab.index.at(c.over_out));
    std::map<int, int> bridge;  // root -> bridge index
    auto bridge_of = [&](int arc_id) {
        int root = uf.find(tab.index.at(arc_id));
        auto [it, fresh] = bridge.try_emplace(root, static_cast<int>(bridge.size()));
        return it->second;
    };

    // Abelianized Fox rows: (1-t)*over + t*in - out at positive crossings;
    // the negative row (1-t)*over - in + t*out is its unit-scaled image
    // under t -> 1/t, which is what mirror invariance requires.
    Laurent one_minus_t, t;
    one_minus_t.add_term(0, 1);
    one_minus_t.add_term(2, -1);
    t.add_term(2, 1);

    std::vector<std::vector<Laurent>> m(n, std::vector<Laurent>(n));
    for (int i = 0; i < n; ++i) {
        const Crossing& c = d.crossings()[i];
        const int o = bridge_of(c.over_in);
        const int u = bridge_of(c.under_in);
        const int v = bridge_of(c.under_out);
        if (o >= n || u >= n || v >= n)
            throw std::logic_error("bridge count exceeds crossing count");
        m[i][o] += one_minus_t;
        if (c.sign > 0) {
            m[i][u] += t;
            m[i][v] -= Laurent::one();
        } else {
            m[i][u] -= Laurent::one();
            m[i][v] += t;
        }
    }
    if (static_cast<int>(bridge.size()) != n)
        throw std::logic_error("knot diagram must have one bridge per crossing");

    // Drop the last row and column.
    std::vector<std::vector<Laurent>> minor(n - 1, std::vector<Laurent>(n - 1));
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j) minor[i][j] = std::move(m[i][j]);

    Laurent det = laurent_det(std::move(minor));
    try {
        return normalize_alexander(det);
    } catch (const std::invalid_argument&) {
        throw std::logic_error(
            "Fox determinant failed knot normalization (|p(1)| != 1)");
    }
}

Laurent conway(const Diagram& d) { return conway_from_alexander(alexander(d)); }

UnknotVerdict unknot_certificate(const Diagram& d) {
    if (!d.is_knot())
        throw std::invalid_argument("unknot certificate needs a knot diagram");
    const Diagram reduced = reduce_r1_r2(d);
    if (reduced.num_crossings() == 0) return UnknotVerdict::TriviallyCertified;
    if (alexander(reduced) == Laurent::one() && jones(reduced) == Laurent::one())
        return UnknotVerdict::PolynomialTrivial;
    return UnknotVerdict::NontrivialPolynomial;
}

const char* to_string(UnknotVerdict v) {
    switch (v) {
        case UnknotVerdict::TriviallyCertified: return "trivially_certified";
        case UnknotVerdict::PolynomialTrivial: return "polynomial_trivial";
        case UnknotVerdict::NontrivialPolynomial: return "nontrivial_polynomial";
    }
    return "?";
}

}  // namespace knots
