#include "knots/moves.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace knots {

namespace {

Diagram rebuild(std::vector<Crossing> cs, int free_loops) {
    Diagram r;
    for (auto& c : cs) r.add_crossing(c);
    for (int i = 0; i < free_loops; ++i) r.add_free_loop();
    return r;
}

}  // namespace

Diagram r1_insert(const Diagram& d, int arc, bool over_first, int sign) {
    std::vector<Crossing> cs(d.crossings().begin(), d.crossings().end());
    int next = d.next_arc_id();
    const int loop = next++, cont = next++;

    int* head = nullptr;
    for (auto& c : cs) {
        if (c.under_in == arc) head = &c.under_in;
        else if (c.over_in == arc) head = &c.over_in;
        if (head) break;
    }
    if (!head) throw std::invalid_argument("arc not found for kink insertion");
    *head = cont;

    Crossing c;
    if (over_first) {
        c.over_in = arc;
        c.over_out = loop;
        c.under_in = loop;
        c.under_out = cont;
    } else {
        c.under_in = arc;
        c.under_out = loop;
        c.over_in = loop;
        c.over_out = cont;
    }
    c.sign = sign;
    cs.push_back(c);
    Diagram r = rebuild(std::move(cs), d.free_loops());
    if (r.embedding_genus() != d.embedding_genus()) {
        // Both kink chiralities are planar; reaching here means the slot
        // bookkeeping above is wrong, not the caller's input.
        throw std::logic_error("kink insertion broke planarity");
    }
    return r;
}

Diagram r2_insert(const Diagram& d, int over, int under, int side,
                  bool antiparallel) {
    if (over == under)
        throw std::invalid_argument("poke needs two distinct arcs");
    if (side != +1 && side != -1)
        throw std::invalid_argument("poke side must be +1 or -1");

    std::vector<Crossing> cs(d.crossings().begin(), d.crossings().end());
    int next = d.next_arc_id();
    const int mo = next++, mu = next++, no = next++, nu = next++;

    int found = 0;
    for (auto& c : cs) {
        for (int* slot : {&c.under_in, &c.over_in}) {
            if (*slot == over) *slot = no, ++found;
            else if (*slot == under) *slot = nu, ++found;
        }
    }
    if (found != 2) throw std::invalid_argument("poke arcs not found");

    // The over strand runs over -> mo -> no through crossings (c1, c2); the
    // under strand passes c1 first when parallel, c2 first otherwise.
    Crossing c1, c2;
    c1.over_in = over;
    c1.over_out = mo;
    c2.over_in = mo;
    c2.over_out = no;
    if (!antiparallel) {
        c1.under_in = under;
        c1.under_out = mu;
        c2.under_in = mu;
        c2.under_out = nu;
    } else {
        c2.under_in = under;
        c2.under_out = mu;
        c1.under_in = mu;
        c1.under_out = nu;
    }
    // R2 is a regular-isotopy move: the pair always cancels in writhe.
    c1.sign = side;
    c2.sign = -side;
    cs.push_back(c1);
    cs.push_back(c2);
    Diagram r = rebuild(std::move(cs), d.free_loops());
    if (r.embedding_genus() != d.embedding_genus())
        throw std::invalid_argument("poke arcs are not co-facial on this side");
    return r;
}

Diagram reduce_r1_r2(const Diagram& d) {
    std::vector<Crossing> cs(d.crossings().begin(), d.crossings().end());
    int free_loops = d.free_loops();

    auto apply_joins =
        [&](std::vector<std::pair<int, int>> joins, std::vector<int> remove) {
            std::map<int, int> rename;
            auto resolve = [&](int x) {
                auto it = rename.find(x);
                while (it != rename.end()) {
                    x = it->second;
                    it = rename.find(x);
                }
                return x;
            };
            for (auto [u, v] : joins) {
                u = resolve(u);
                v = resolve(v);
                if (u == v)
                    ++free_loops;
                else
                    rename[v] = u;
            }
            std::sort(remove.begin(), remove.end());
            for (auto it = remove.rbegin(); it != remove.rend(); ++it)
                cs.erase(cs.begin() + *it);
            for (auto& c : cs) {
                c.under_in = resolve(c.under_in);
                c.over_in = resolve(c.over_in);
                c.under_out = resolve(c.under_out);
                c.over_out = resolve(c.over_out);
            }
        };

    bool progress = true;
    while (progress) {
        progress = false;

        // Kinks.
        for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
            const Crossing& c = cs[i];
            if (c.under_out == c.over_in) {
                apply_joins({{c.under_in, c.over_out}}, {i});
                progress = true;
                break;
            }
            if (c.over_out == c.under_in) {
                apply_joins({{c.over_in, c.under_out}}, {i});
                progress = true;
                break;
            }
        }
        if (progress) continue;

        // Poke bigons: the same strand over at both crossings, the other
        // strand under at both, both connections direct.
        const int n = static_cast<int>(cs.size());
        for (int i = 0; i < n && !progress; ++i) {
            for (int j = 0; j < n && !progress; ++j) {
                if (i == j) continue;
                const Crossing& a = cs[i];
                const Crossing& b = cs[j];
                if (a.over_out != b.over_in) continue;
                // Parallel or antiparallel under-strand connection.
                if (a.under_out == b.under_in) {
                    apply_joins({{a.over_in, b.over_out}, {a.under_in, b.under_out}},
                                {i, j});
                    progress = true;
                } else if (b.under_out == a.under_in) {
                    apply_joins({{a.over_in, b.over_out}, {b.under_in, a.under_out}},
                                {i, j});
                    progress = true;
                }
            }
        }
    }
    return rebuild(std::move(cs), free_loops);
}

}  // namespace knots
