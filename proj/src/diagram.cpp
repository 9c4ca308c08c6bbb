#include "knots/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace knots {

namespace {

enum SlotRole { UnderIn, OverIn, UnderOut, OverOut };

int slot_arc(const Crossing& c, SlotRole r) {
    switch (r) {
        case UnderIn: return c.under_in;
        case OverIn: return c.over_in;
        case UnderOut: return c.under_out;
        case OverOut: return c.over_out;
    }
    return 0;
}

int& slot_arc(Crossing& c, SlotRole r) {
    switch (r) {
        case UnderIn: return c.under_in;
        case OverIn: return c.over_in;
        case UnderOut: return c.under_out;
        default: return c.over_out;
    }
}

// Counterclockwise slot order around a crossing, starting at under_in.
std::array<SlotRole, 4> rotation(const Crossing& c) {
    return c.sign < 0 ? std::array<SlotRole, 4>{UnderIn, OverIn, UnderOut, OverOut}
                      : std::array<SlotRole, 4>{UnderIn, OverOut, UnderOut, OverIn};
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

std::vector<int> Diagram::arcs() const {
    std::set<int> ids;
    for (auto& c : crossings_) {
        ids.insert(c.under_in);
        ids.insert(c.over_in);
        ids.insert(c.under_out);
        ids.insert(c.over_out);
    }
    return {ids.begin(), ids.end()};
}

int Diagram::next_arc_id() const {
    int mx = 0;
    for (auto& c : crossings_)
        mx = std::max({mx, c.under_in, c.over_in, c.under_out, c.over_out});
    return mx + 1;
}

std::vector<std::vector<int>> Diagram::strand_components() const {
    std::map<int, int> succ;
    for (auto& c : crossings_) {
        succ[c.under_in] = c.under_out;
        succ[c.over_in] = c.over_out;
    }
    std::vector<std::vector<int>> comps;
    std::set<int> done;
    for (auto& [a, b] : succ) {
        if (done.count(a)) continue;
        std::vector<int> cyc;
        int x = a;
        do {
            cyc.push_back(x);
            done.insert(x);
            auto it = succ.find(x);
            if (it == succ.end())
                throw std::logic_error("diagram arc bookkeeping is broken");
            x = it->second;
        } while (x != a);
        comps.push_back(std::move(cyc));
    }
    return comps;
}

int Diagram::embedding_genus() const {
    const int n = num_crossings();
    if (n == 0) return 0;

    // Half-edge slots: 4 per crossing, indexed 4*ci + rotation position.
    // arc_at[s]: arc occupying the slot; outgoing[s]: arc leaves here.
    std::vector<int> arc_at(4 * n);
    std::vector<char> outgoing(4 * n);
    std::map<int, int> head_slot, tail_slot;
    for (int ci = 0; ci < n; ++ci) {
        auto rot = rotation(crossings_[ci]);
        for (int k = 0; k < 4; ++k) {
            SlotRole r = rot[k];
            int s = 4 * ci + k;
            arc_at[s] = slot_arc(crossings_[ci], r);
            outgoing[s] = (r == UnderOut || r == OverOut);
            (outgoing[s] ? tail_slot : head_slot)[arc_at[s]] = s;
        }
    }

    // Directed edges: (arc, forward?) encoded 2*arc_index + dir.
    std::vector<int> ids = arcs();
    std::map<int, int> arc_index;
    for (size_t i = 0; i < ids.size(); ++i) arc_index[ids[i]] = static_cast<int>(i);
    const int ne = static_cast<int>(ids.size());

    std::vector<char> used(2 * ne, 0);
    int faces = 0;
    for (int e0 = 0; e0 < 2 * ne; ++e0) {
        if (used[e0]) continue;
        ++faces;
        int e = e0;
        while (!used[e]) {
            used[e] = 1;
            int arc = ids[e / 2];
            bool fwd = e % 2 == 0;
            int s = fwd ? head_slot.at(arc) : tail_slot.at(arc);
            int s2 = 4 * (s / 4) + (s % 4 + 1) % 4;
            int arc2 = arc_at[s2];
            e = 2 * arc_index.at(arc2) + (outgoing[s2] ? 0 : 1);
        }
    }

    // Connected components of the crossing graph.
    UnionFind uf(n);
    std::map<int, int> seen_at;
    for (int ci = 0; ci < n; ++ci) {
        for (SlotRole r : {UnderIn, OverIn, UnderOut, OverOut}) {
            int a = slot_arc(crossings_[ci], r);
            auto [it, fresh] = seen_at.try_emplace(a, ci);
            if (!fresh) uf.unite(ci, it->second);
        }
    }
    std::map<int, std::array<int, 3>> vef;  // root -> V, E, F
    for (int ci = 0; ci < n; ++ci) vef[uf.find(ci)][0]++;
    for (int id : ids) vef[uf.find(seen_at.at(id))][1]++;
    // Assign each face to a component via any arc on it.
    {
        std::fill(used.begin(), used.end(), 0);
        for (int e0 = 0; e0 < 2 * ne; ++e0) {
            if (used[e0]) continue;
            vef[uf.find(seen_at.at(ids[e0 / 2]))][2]++;
            int e = e0;
            while (!used[e]) {
                used[e] = 1;
                int arc = ids[e / 2];
                bool fwd = e % 2 == 0;
                int s = fwd ? head_slot.at(arc) : tail_slot.at(arc);
                int s2 = 4 * (s / 4) + (s % 4 + 1) % 4;
                e = 2 * arc_index.at(arc_at[s2]) + (outgoing[s2] ? 0 : 1);
            }
        }
    }
    (void)faces;
    int genus = 0;
    for (auto& [root, cnt] : vef) {
        int chi = cnt[0] - cnt[1] + cnt[2];
        genus += (2 - chi) / 2;
    }
    return genus;
}

int Diagram::seifert_circle_count() const {
    std::vector<int> ids = arcs();
    std::map<int, int> arc_index;
    for (size_t i = 0; i < ids.size(); ++i) arc_index[ids[i]] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(ids.size()));
    int circles = static_cast<int>(ids.size());
    for (auto& c : crossings_) {
        if (uf.unite(arc_index.at(c.under_in), arc_index.at(c.over_out))) --circles;
        if (uf.unite(arc_index.at(c.over_in), arc_index.at(c.under_out))) --circles;
    }
    return circles + free_loops_;
}

int Diagram::canonical_seifert_genus() const {
    if (!is_knot())
        throw std::invalid_argument("canonical Seifert genus needs a knot diagram");
    const int s = seifert_circle_count();
    const int c = num_crossings();
    if ((c - s + 1) % 2 != 0)
        throw std::logic_error("Seifert genus parity violated");
    return (c - s + 1) / 2;
}

PdCode Diagram::to_pd() const {
    PdCode pd;
    for (auto& c : crossings_) {
        auto rot = rotation(c);
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) t[k] = slot_arc(c, rot[k]);
        pd.crossings.push_back(t);
    }
    return pd;
}

namespace {

PdCode relabeled(const Diagram& d, const std::vector<std::vector<int>>& comps,
                 const std::vector<int>& comp_order, const std::vector<int>& starts) {
    std::map<int, int> newid;
    int next = 1;
    for (size_t k = 0; k < comp_order.size(); ++k) {
        const auto& cyc = comps[comp_order[k]];
        const int sz = static_cast<int>(cyc.size());
        for (int i = 0; i < sz; ++i)
            newid[cyc[(starts[k] + i) % sz]] = next++;
    }
    PdCode pd = d.to_pd();
    for (auto& t : pd.crossings)
        for (int& a : t) a = newid.at(a);
    return pd;
}

}  // namespace

PdCode Diagram::renumbered_pd() const {
    auto comps = strand_components();
    // Deterministic: order components by smallest arc id, start each at it.
    std::vector<int> order(comps.size()), starts(comps.size(), 0);
    for (size_t i = 0; i < comps.size(); ++i) {
        order[i] = static_cast<int>(i);
        auto it = std::min_element(comps[i].begin(), comps[i].end());
        starts[i] = static_cast<int>(it - comps[i].begin());
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return comps[a][starts[a]] < comps[b][starts[b]];
    });
    std::vector<int> st(order.size());
    for (size_t i = 0; i < order.size(); ++i) st[i] = starts[order[i]];
    return relabeled(*this, comps, order, st);
}

PdCode Diagram::canonical_pd() const {
    auto comps = strand_components();
    const int k = static_cast<int>(comps.size());
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;

    std::optional<PdCode> best;
    auto consider = [&](const PdCode& pd) {
        PdCode sorted = pd;
        std::sort(sorted.crossings.begin(), sorted.crossings.end());
        if (!best || sorted.crossings < best->crossings) best = sorted;
    };
    std::vector<int> starts(k, 0);
    do {
        // Enumerate starting arcs per component (product).
        std::fill(starts.begin(), starts.end(), 0);
        while (true) {
            consider(relabeled(*this, comps, order, starts));
            int i = 0;
            for (; i < k; ++i) {
                if (++starts[i] < static_cast<int>(comps[order[i]].size())) break;
                starts[i] = 0;
            }
            if (i == k) break;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return best ? *best : PdCode{};
}

Diagram orient(const PdCode& pd) {
    Diagram d;
    if (pd.crossings.empty()) {
        d.free_loops_ = 1;
        return d;
    }
    const int arcs = pd.num_arcs();
    std::vector<int> heads(arcs + 1, 0), tails(arcs + 1, 0);
    for (auto& t : pd.crossings) {
        const int a = t[0], b = t[1], c = t[2], dd = t[3];
        Crossing cr;
        cr.under_in = a;
        cr.under_out = c;
        // Over-strand direction from the arc numbering: labels step by one
        // along the orientation, wrapping from a component's max to its min.
        bool b_to_d;
        if (dd == b + 1)
            b_to_d = true;
        else if (b == dd + 1)
            b_to_d = false;
        else
            b_to_d = (b > dd);  // wrap runs from the larger label
        cr.over_in = b_to_d ? b : dd;
        cr.over_out = b_to_d ? dd : b;
        cr.sign = b_to_d ? -1 : +1;
        ++heads[cr.under_in];
        ++heads[cr.over_in];
        ++tails[cr.under_out];
        ++tails[cr.over_out];
        d.crossings_.push_back(cr);
    }
    for (int a = 1; a <= arcs; ++a)
        if (heads[a] != 1 || tails[a] != 1)
            throw std::invalid_argument(
                "inconsistent arc numbering: arc " + std::to_string(a) +
                " does not have exactly one head and one tail");

    // Components must be contiguous label ranges traversed in order.
    for (auto& cyc : d.strand_components()) {
        int lo = *std::min_element(cyc.begin(), cyc.end());
        int hi = *std::max_element(cyc.begin(), cyc.end());
        if (hi - lo + 1 != static_cast<int>(cyc.size()))
            throw std::invalid_argument("inconsistent arc numbering: component "
                                        "labels are not contiguous");
        for (size_t i = 0; i < cyc.size(); ++i) {
            int cur = cyc[i], nxt = cyc[(i + 1) % cyc.size()];
            if (nxt != (cur == hi ? lo : cur + 1))
                throw std::invalid_argument(
                    "inconsistent arc numbering: labels do not increase along "
                    "the orientation");
        }
    }
    return d;
}

void Diagram::replace_head(int old_arc, int new_arc) {
    if (old_arc == new_arc) return;
    for (auto& c : crossings_) {
        if (c.under_in == old_arc) {
            c.under_in = new_arc;
            return;
        }
        if (c.over_in == old_arc) {
            c.over_in = new_arc;
            return;
        }
    }
    throw std::invalid_argument("arc " + std::to_string(old_arc) +
                                " has no incoming end");
}

Diagram Diagram::crossing_change(int i) const {
    if (i < 0 || i >= num_crossings())
        throw std::out_of_range("crossing index out of range");
    Diagram r = *this;
    Crossing& c = r.crossings_[i];
    std::swap(c.under_in, c.over_in);
    std::swap(c.under_out, c.over_out);
    c.sign = -c.sign;
    return r;
}

Diagram Diagram::mirrored() const {
    Diagram r = *this;
    for (auto& c : r.crossings_) {
        std::swap(c.under_in, c.over_in);
        std::swap(c.under_out, c.over_out);
        c.sign = -c.sign;
    }
    return r;
}

Diagram Diagram::smooth_oriented(int i) const {
    if (i < 0 || i >= num_crossings())
        throw std::out_of_range("crossing index out of range");
    Diagram r = *this;
    const Crossing c = r.crossings_[i];
    r.crossings_.erase(r.crossings_.begin() + i);

    // Orientation-respecting resolution joins under_in -> over_out and
    // over_in -> under_out.  Chase renames so kinks close into free loops.
    std::map<int, int> rename;
    auto resolve = [&](int x) {
        auto it = rename.find(x);
        while (it != rename.end()) {
            x = it->second;
            it = rename.find(x);
        }
        return x;
    };
    for (auto [u, v] : {std::pair{c.under_in, c.over_out},
                        std::pair{c.over_in, c.under_out}}) {
        u = resolve(u);
        v = resolve(v);
        if (u == v)
            ++r.free_loops_;
        else
            rename[v] = u;
    }
    for (auto& cr : r.crossings_) {
        cr.under_in = resolve(cr.under_in);
        cr.over_in = resolve(cr.over_in);
        cr.under_out = resolve(cr.under_out);
        cr.over_out = resolve(cr.over_out);
    }
    return r;
}

Diagram connected_sum(const Diagram& d1, int arc1, const Diagram& d2, int arc2) {
    if (!d1.is_knot() || !d2.is_knot())
        throw std::invalid_argument("connected sum needs two knot diagrams");
    if (d1.num_crossings() == 0 || d2.num_crossings() == 0)
        throw std::invalid_argument("connected sum needs crossings on both sides");

    const int offset = d1.next_arc_id();
    Diagram r = d1;
    for (Crossing c : d2.crossings()) {
        c.under_in += offset;
        c.over_in += offset;
        c.under_out += offset;
        c.over_out += offset;
        r.add_crossing(c);
    }
    const int a = arc1, b = arc2 + offset;
    // Splice by exchanging the heads of the two arcs.
    std::vector<std::pair<int, int>> heads;
    int found = 0;
    for (auto& c : r.crossings_) {
        for (int* slot : {&c.under_in, &c.over_in}) {
            if (*slot == a) {
                *slot = b;
                ++found;
            } else if (*slot == b) {
                *slot = a;
                ++found;
            }
        }
    }
    if (found != 2) throw std::invalid_argument("splice arcs not found");
    return r;
}

Diagram insert_twists(const Diagram& d, const TwistSite& site, int k,
                      int forced_sign, bool antiparallel) {
    if (k == 0) return d;
    if (site.arc_first == site.arc_second)
        throw std::invalid_argument("twist site arcs must be distinct");

    const int m = k > 0 ? k : -k;
    const bool first_leads = k > 0;
    const std::vector<int> sign_choices =
        forced_sign != 0 ? std::vector<int>{forced_sign}
                         : std::vector<int>{+1, -1};

    // Head slots of the site arcs in the original crossing list.
    std::array<std::pair<int, int>, 2> head{};  // (crossing, 0=under/1=over)
    {
        const auto& cs = d.crossings();
        int found = 0;
        for (int ci = 0; ci < static_cast<int>(cs.size()); ++ci) {
            if (cs[ci].under_in == site.arc_first) head[0] = {ci, 0}, ++found;
            if (cs[ci].over_in == site.arc_first) head[0] = {ci, 1}, ++found;
            if (cs[ci].under_in == site.arc_second) head[1] = {ci, 0}, ++found;
            if (cs[ci].over_in == site.arc_second) head[1] = {ci, 1}, ++found;
        }
        if (found != 2)
            throw std::invalid_argument("twist site arcs not found in diagram");
    }

    for (int sign : sign_choices) {
        std::vector<Crossing> cs(d.crossings().begin(), d.crossings().end());
        int next = d.next_arc_id();
        std::vector<Crossing> ladder;
        int exit_first, exit_second;

        if (!antiparallel) {
            int cur_f = site.arc_first, cur_s = site.arc_second;
            for (int j = 0; j < m; ++j) {
                const bool f_over = first_leads ? (j % 2 == 0) : (j % 2 == 1);
                Crossing c;
                int nf = next++, ns = next++;
                if (f_over) {
                    c.over_in = cur_f;
                    c.over_out = nf;
                    c.under_in = cur_s;
                    c.under_out = ns;
                } else {
                    c.over_in = cur_s;
                    c.over_out = ns;
                    c.under_in = cur_f;
                    c.under_out = nf;
                }
                c.sign = sign;
                ladder.push_back(c);
                cur_f = nf;
                cur_s = ns;
            }
            exit_first = cur_f;
            exit_second = cur_s;
        } else {
            // First strand a_0 .. a_m forward, second strand b_0 .. b_m in
            // reverse: crossing j carries (a_{j-1} -> a_j) against
            // (b_{m-j} -> b_{m-j+1}); the same strand leads everywhere.
            std::vector<int> a(m + 1), b(m + 1);
            a[0] = site.arc_first;
            b[0] = site.arc_second;
            for (int j = 1; j <= m; ++j) a[j] = next++;
            for (int j = 1; j <= m; ++j) b[j] = next++;
            for (int j = 1; j <= m; ++j) {
                Crossing c;
                if (first_leads) {
                    c.over_in = a[j - 1];
                    c.over_out = a[j];
                    c.under_in = b[m - j];
                    c.under_out = b[m - j + 1];
                } else {
                    c.over_in = b[m - j];
                    c.over_out = b[m - j + 1];
                    c.under_in = a[j - 1];
                    c.under_out = a[j];
                }
                c.sign = sign;
                ladder.push_back(c);
            }
            exit_first = a[m];
            exit_second = b[m];
        }

        // Reattach: after an odd number of half twists the strands have
        // swapped sides.
        const int to_first = (m % 2 == 0) ? exit_first : exit_second;
        const int to_second = (m % 2 == 0) ? exit_second : exit_first;
        auto attach = [&](std::pair<int, int> slot, int arc) {
            Crossing& c = cs[slot.first];
            (slot.second == 0 ? c.under_in : c.over_in) = arc;
        };
        attach(head[0], to_first);
        attach(head[1], to_second);

        Diagram r;
        for (auto& c : cs) r.add_crossing(c);
        for (auto& c : ladder) r.add_crossing(c);
        for (int i = 0; i < d.free_loops(); ++i) r.add_free_loop();
        if (r.embedding_genus() == d.embedding_genus()) return r;
    }
    throw std::invalid_argument("twist site arcs are not co-facial");
}

}  // namespace knots
