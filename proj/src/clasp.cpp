#include "knots/clasp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace knots {

namespace {

long long isqrt_ll(long long v) {
    if (v < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

bool same_parity(long long a, long long b) { return ((a - b) % 2) == 0; }

long long to_ll(const BigInt& v, const char* what) {
    if (v > std::numeric_limits<long long>::max() / 4 ||
        v < std::numeric_limits<long long>::min() / 4)
        throw std::domain_error(std::string(what) + " coefficient out of range");
    return static_cast<long long>(v);
}

TwoClaspWitness make_witness(long long S, long long Y, long long X, int eps,
                             int delta, const ConwayGenus2& c) {
    TwoClaspWitness w;
    w.b1 = (S + Y) / 2;
    w.b2 = (S - Y) / 2;
    w.b3 = (X - delta) / 2;
    w.eps = eps;
    w.delta = delta;
    if (w.b1 * w.b2 + eps * w.b3 * (w.b3 + delta) != c.m4 ||
        w.b1 + w.b2 - static_cast<long long>(eps) * delta != c.m2)
        throw std::logic_error("witness reconstruction failed");
    return w;
}

}  // namespace

int shibuya_lower(int g_lb, int u_lb) {
    if (g_lb < 0 || u_lb < 0)
        throw std::invalid_argument("genus/unknotting bounds must be nonnegative");
    return std::max(g_lb, u_lb);
}

ConwayGenus2 conway_genus2_of(const Laurent& p) {
    for (auto& [e, coeff] : p.terms())
        if (e != 0 && e != 4 && e != 8)
            throw std::invalid_argument(
                "polynomial is not of the shape m4*z^4 + m2*z^2 + 1");
    if (p.coeff(0) != 1)
        throw std::invalid_argument("constant term must be 1");
    return ConwayGenus2{to_ll(p.coeff(8), "z^4"), to_ll(p.coeff(4), "z^2")};
}

bool mod8_obstruction(const ConwayGenus2& c) {
    const long long m4 = ((c.m4 % 8) + 8) % 8;
    const long long m2 = ((c.m2 % 4) + 4) % 4;
    return m4 == 3 && m2 == 2;
}

std::optional<BigInt> one_clasp_form(const Laurent& p) {
    for (auto& [e, coeff] : p.terms())
        if (e != 0 && e != 4) return std::nullopt;
    if (p.coeff(0) != 1) return std::nullopt;
    return p.coeff(4);
}

SeifertMatrix lemma21_matrix(long long a11, long long a12, long long a22,
                             int eps1, int eps2, int delta) {
    if ((eps1 != 1 && eps1 != -1) || (eps2 != 1 && eps2 != -1))
        throw std::invalid_argument("clasp signs must be +1 or -1");
    if (delta != 0 && delta != 1)
        throw std::invalid_argument("delta must be 0 or 1");
    const long long a21 = a12 + delta;
    return SeifertMatrix::from_rows({
        {a11, a12, 0, 0},
        {a21, a22, 0, 0},
        {-1, 0, -eps1, 0},
        {0, -1, 0, -eps2},
    });
}

Laurent lemma21_closed_form(long long b1, long long b2, long long b3, int eps,
                            int delta) {
    Laurent p;
    p.add_term(8, BigInt(b1) * b2 + BigInt(eps) * b3 * (b3 + delta));
    p.add_term(4, BigInt(b1) + b2 - BigInt(eps) * delta);
    p.add_term(0, 1);
    return p;
}

std::optional<TwoClaspWitness> two_clasp_realizable(const ConwayGenus2& c) {
    struct Branch {
        int eps, delta;
    };
    for (Branch br : {Branch{+1, 0}, Branch{+1, 1}, Branch{-1, 0}, Branch{-1, 1}}) {
        const long long S = c.m2 + static_cast<long long>(br.eps) * br.delta;

        if (br.eps == +1) {
            // Y^2 - X^2 = C, with Y = S (mod 2) and X = delta (mod 2).
            const long long C = S * S - 4 * c.m4 - br.delta * br.delta;
            if (C == 0) {
                // Y = +-X: minimal |X| solution is X = delta, b3 = 0; the
                // parity constraints hold automatically here.
                return make_witness(S, br.delta, br.delta, br.eps, br.delta, c);
            }
            // Divisor pairs u*v = C, Y = (u+v)/2, X = (v-u)/2.
            std::vector<std::pair<long long, long long>> cands;  // (|X|, |Y|)
            const long long absC = C < 0 ? -C : C;
            for (long long d = 1; d * d <= absC; ++d) {
                if (absC % d != 0) continue;
                const long long q = absC / d;
                // Representative pair: (d, q) for C > 0, (-d, q) for C < 0;
                // sign flips only negate X or Y.
                const long long u = C > 0 ? d : -d, v = q;
                if ((u + v) % 2 != 0) continue;
                long long Y = (u + v) / 2, X = (v - u) / 2;
                Y = Y < 0 ? -Y : Y;
                X = X < 0 ? -X : X;
                if (!same_parity(Y, S) || !same_parity(X, br.delta)) continue;
                cands.emplace_back(X, Y);
            }
            if (!cands.empty()) {
                std::sort(cands.begin(), cands.end());
                auto [X, Y] = cands.front();
                return make_witness(S, Y, X, br.eps, br.delta, c);
            }
        } else {
            // Y^2 + X^2 = C'.
            const long long C2 = S * S - 4 * c.m4 + br.delta * br.delta;
            if (C2 < 0) continue;
            for (long long X = br.delta; X * X <= C2; X += 2) {
                const long long Y = isqrt_ll(C2 - X * X);
                if (Y < 0 || Y * Y != C2 - X * X) continue;
                if (!same_parity(Y, S)) continue;
                return make_witness(S, Y, X, br.eps, br.delta, c);
            }
        }
    }
    return std::nullopt;
}

std::optional<TwoClaspWitness> two_clasp_realizable_oracle(const ConwayGenus2& c,
                                                           long long bound) {
    if (bound < 0) throw std::invalid_argument("oracle bound must be >= 0");
    for (int eps : {+1, -1})
        for (int delta : {0, 1})
            for (long long b1 = -bound; b1 <= bound; ++b1) {
                const long long b2 = c.m2 - b1 + static_cast<long long>(eps) * delta;
                if (b2 < -bound || b2 > bound) continue;
                for (long long b3 = -bound; b3 <= bound; ++b3) {
                    if (b1 * b2 + eps * b3 * (b3 + delta) != c.m4) continue;
                    TwoClaspWitness w;
                    w.b1 = b1;
                    w.b2 = b2;
                    w.b3 = b3;
                    w.eps = eps;
                    w.delta = delta;
                    return w;
                }
            }
    return std::nullopt;
}

int genus_lower_from_conway(const Laurent& p) {
    if (p.is_zero())
        throw std::invalid_argument("zero polynomial is not a knot Conway form");
    const int deg2 = p.max_exp2();  // doubled z-degree
    if (deg2 % 4 != 0)
        throw std::invalid_argument("knot Conway polynomial must have even degree");
    return deg2 / 4;
}

}  // namespace knots
