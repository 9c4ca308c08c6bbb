#include "knots/pd_code.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace knots {

namespace {

[[noreturn]] void fail(PdParseError::Kind kind, size_t pos, const std::string& what) {
    throw PdParseError(kind, pos, what + " (at position " + std::to_string(pos) + ")");
}

}  // namespace

PdCode parse_pd(std::string_view text) {
    PdCode pd;
    size_t i = 0;
    const size_t n = text.size();
    while (true) {
        while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
        if (i >= n) break;
        const size_t tok = i;
        if (text[i] != 'X' && text[i] != 'x')
            fail(PdParseError::Kind::MalformedToken, tok, "expected 'X[' token");
        ++i;
        if (i >= n || text[i] != '[')
            fail(PdParseError::Kind::MalformedToken, tok, "expected '[' after X");
        ++i;
        std::array<int, 4> labels{};
        for (int k = 0; k < 4; ++k) {
            while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            size_t start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i)
                fail(PdParseError::Kind::MalformedToken, start, "expected arc label");
            labels[k] = std::stoi(std::string(text.substr(start, i - start)));
            while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            const char want = (k < 3) ? ',' : ']';
            if (i >= n || text[i] != want)
                fail(PdParseError::Kind::MalformedToken, i,
                     std::string("expected '") + want + "'");
            ++i;
        }
        pd.crossings.push_back(labels);
    }

    // Labels 1..2n, each exactly twice.
    const int arcs = pd.num_arcs();
    std::vector<int> count(arcs + 1, 0);
    for (auto& t : pd.crossings)
        for (int a : t) {
            if (a < 1 || a > arcs)
                fail(PdParseError::Kind::BadLabels, 0,
                     "arc label " + std::to_string(a) + " outside 1.." +
                         std::to_string(arcs));
            ++count[a];
        }
    for (int a = 1; a <= arcs; ++a)
        if (count[a] != 2)
            fail(PdParseError::Kind::ArcMultiplicity, 0,
                 "arc " + std::to_string(a) + " appears " +
                     std::to_string(count[a]) + " times, expected 2");

    // Each arc must enter one crossing and leave one.  The over-strand
    // direction follows the arc numbering (labels step by one along the
    // orientation, wrapping from a component's largest label).
    std::vector<int> heads(arcs + 1, 0), tails(arcs + 1, 0);
    for (auto& t : pd.crossings) {
        const int a = t[0], b = t[1], c = t[2], d = t[3];
        const bool b_to_d = d == b + 1 ? true : (b == d + 1 ? false : b > d);
        ++heads[a];
        ++tails[c];
        ++heads[b_to_d ? b : d];
        ++tails[b_to_d ? d : b];
    }
    for (int a = 1; a <= arcs; ++a)
        if (heads[a] != 1 || tails[a] != 1)
            fail(PdParseError::Kind::ArcMultiplicity, 0,
                 "arc " + std::to_string(a) +
                     " is used twice in incompatible positions");
    return pd;
}

std::string to_string(const PdCode& pd) {
    std::ostringstream out;
    for (size_t i = 0; i < pd.crossings.size(); ++i) {
        auto& t = pd.crossings[i];
        if (i) out << ' ';
        out << "X[" << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ']';
    }
    return out.str();
}

PdCode parse_dt(std::string_view text) {
    std::vector<long long> entries;
    {
        std::string s(text);
        std::istringstream in(s);
        long long v;
        while (in >> v) entries.push_back(v);
        if (!in.eof()) {
            std::string rest;
            in.clear();
            in >> rest;
            fail(PdParseError::Kind::MalformedToken, 0, "bad DT entry '" + rest + "'");
        }
    }
    const int n = static_cast<int>(entries.size());
    if (n == 0) return PdCode{};

    std::vector<int> seen(2 * n + 1, 0);
    for (long long v : entries) {
        long long a = v < 0 ? -v : v;
        if (a % 2 != 0)
            fail(PdParseError::Kind::MalformedToken, 0, "odd DT entry " + std::to_string(v));
        if (a < 2 || a > 2 * n)
            fail(PdParseError::Kind::BadLabels, 0,
                 "DT entry " + std::to_string(v) + " out of range");
        ++seen[static_cast<int>(a)];
    }
    for (int e = 2; e <= 2 * n; e += 2)
        if (seen[e] != 1)
            fail(PdParseError::Kind::BadLabels, 0,
                 "DT entries do not pair the even numbers exactly once");

    const int m = 2 * n;
    // Knot traversal: visit times 1..2n; crossing i pairs times 2i-1, |a_i|.
    std::vector<int> crossing_of_time(m + 1), over_of_time(m + 1, 0);
    for (int i = 0; i < n; ++i) {
        int odd = 2 * i + 1;
        int even = static_cast<int>(entries[i] < 0 ? -entries[i] : entries[i]);
        bool odd_under = entries[i] > 0;
        crossing_of_time[odd] = i;
        crossing_of_time[even] = i;
        over_of_time[odd] = odd_under ? 0 : 1;
        over_of_time[even] = odd_under ? 1 : 0;
    }
    std::vector<std::array<int, 2>> visits(n, {0, 0});
    {
        std::vector<int> cnt(n, 0);
        for (int t = 1; t <= m; ++t) visits[crossing_of_time[t]][cnt[crossing_of_time[t]]++] = t;
    }

    // Rotation slots hold signed visit times: +t = departure of visit t
    // (tail of arc t), -t = arrival of visit t (head of arc t-1).  The two
    // chiralities of a crossing with passes p, q, counterclockwise:
    //   bit 0: (-p, -q, +p, +q)      bit 1: (-p, +q, +p, -q)
    std::vector<std::array<int, 4>> rot(n);
    auto set_rot = [&](int c, int bit) {
        int p = visits[c][0], q = visits[c][1];
        rot[c] = bit == 0 ? std::array<int, 4>{-p, -q, p, q}
                          : std::array<int, 4>{-p, q, p, -q};
    };

    auto face_count = [&]() {
        std::vector<std::pair<int, int>> slot(2 * m + 1);
        auto idx = [&](int s) { return s > 0 ? s : m - s; };
        for (int c = 0; c < n; ++c)
            for (int k = 0; k < 4; ++k) slot[idx(rot[c][k])] = {c, k};

        // Directed edges: arc t forward encoded t, backward t+m.
        std::vector<char> used(2 * m + 1, 0);
        int faces = 0;
        for (int e0 = 1; e0 <= 2 * m; ++e0) {
            if (used[e0]) continue;
            ++faces;
            int e = e0;
            while (!used[e]) {
                used[e] = 1;
                int arc = e > m ? e - m : e;
                bool fwd = e <= m;
                int enter = fwd ? -((arc % m) + 1) : arc;
                auto [c, k] = slot[idx(enter)];
                int s2 = rot[c][(k + 1) % 4];
                if (s2 > 0) {
                    e = s2;  // outward = arc s2 forward
                } else {
                    int a2 = (-s2 == 1) ? m : -s2 - 1;
                    e = a2 + m;  // outward = arc (t-1) backward
                }
            }
        }
        return faces;
    };

    // Search chirality assignments for a planar realization (F = n + 2).
    // The first bit is fixed: flipping all bits is a reflection.
    const long long limit = 1LL << (n > 1 ? n - 1 : 0);
    for (long long mask = 0; mask < limit; ++mask) {
        set_rot(0, 0);
        for (int c = 1; c < n; ++c) set_rot(c, (mask >> (c - 1)) & 1);
        if (face_count() != n + 2) continue;

        PdCode result;
        for (int c = 0; c < n; ++c) {
            int start = -1;
            for (int k = 0; k < 4; ++k) {
                int s = rot[c][k];
                if (s < 0 && over_of_time[-s] == 0) start = k;  // under arrival
            }
            std::array<int, 4> tuple{};
            for (int k = 0; k < 4; ++k) {
                int s = rot[c][(start + k) % 4];
                tuple[k] = s > 0 ? s : (-s == 1 ? m : -s - 1);
            }
            result.crossings.push_back(tuple);
        }
        return result;
    }
    fail(PdParseError::Kind::NotRealizable, 0, "DT code is not realizable");
}

}  // namespace knots
