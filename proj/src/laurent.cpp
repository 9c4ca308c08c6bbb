#include "knots/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace knots {

Laurent div_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return Laurent();

    // Shift both to ordinary polynomials and long-divide from the top.
    const int sa = a.min_exp2(), sb = b.min_exp2();
    Laurent rem = a.shifted(-sa);
    const Laurent den = b.shifted(-sb);
    const int dden = den.max_exp2();
    const BigInt& lead = den.terms().rbegin()->second;

    Laurent quot;
    while (!rem.is_zero()) {
        const int drem = rem.max_exp2();
        if (drem < dden) throw std::domain_error("inexact polynomial division");
        const BigInt& c = rem.terms().rbegin()->second;
        if (c % lead != 0) throw std::domain_error("inexact polynomial division");
        Laurent mono = Laurent::monomial(c / lead, drem - dden);
        quot += mono;
        rem -= mono * den;
    }
    return quot.shifted(sa - sb);
}

Laurent normalize_alexander(const Laurent& p) {
    if (p.is_zero())
        throw std::invalid_argument("normalize_alexander: zero polynomial");
    if (!p.has_integer_exponents())
        throw std::invalid_argument(
            "normalize_alexander: half-integer exponents present");

    // Center so the exponent range is symmetric about zero.
    const int mid = p.min_exp2() + p.span2() / 2;
    Laurent q = p.shifted(-mid);
    if (!q.has_integer_exponents())
        throw std::invalid_argument(
            "normalize_alexander: degree span is odd, no symmetric form");
    if (q.reversed() != q)
        throw std::invalid_argument(
            "normalize_alexander: not symmetric up to units");

    const BigInt at_one = q.eval_at_one();
    if (at_one != 1 && at_one != -1)
        throw std::invalid_argument("normalize_alexander: |p(1)| != 1");
    return at_one == 1 ? q : -q;
}

Laurent conway_from_alexander(const Laurent& p) {
    if (p.is_zero() || p.reversed() != p || !p.has_integer_exponents() ||
        p.eval_at_one() != 1)
        throw std::invalid_argument(
            "conway_from_alexander: input is not a normalized Alexander "
            "polynomial");

    const int g = p.max_exp2() / 2;  // highest power of t
    Laurent result = Laurent::constant(p.coeff(0));

    // q_k(z) stands for t^k + t^{-k} under z^2 = t - 2 + 1/t.
    Laurent qkm1 = Laurent::constant(2);              // q_0
    Laurent qk = Laurent::monomial(1, 4) + qkm1;      // q_1 = z^2 + 2
    const Laurent step = qk;
    for (int k = 1; k <= g; ++k) {
        result += Laurent::constant(p.coeff(2 * k)) * qk;
        Laurent next = step * qk - qkm1;
        qkm1 = std::move(qk);
        qk = std::move(next);
    }
    return result;
}

Laurent substitute_z(const Laurent& p_in_z) {
    Laurent u;  // t - 2 + 1/t
    u.add_term(2, 1);
    u.add_term(0, -2);
    u.add_term(-2, 1);

    Laurent result, upow = Laurent::one();
    int j = 0;
    for (auto& [e, c] : p_in_z.terms()) {
        if (e % 4 != 0)
            throw std::invalid_argument("substitute_z: odd power of z present");
        if (e < 0)
            throw std::invalid_argument("substitute_z: negative power of z");
        while (4 * j < e) {
            upow *= u;
            ++j;
        }
        result += Laurent::constant(c) * upow;
    }
    return result;
}

std::string to_string(const Laurent& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit_coeff = (mag == 1) && e != 0;
        if (!unit_coeff) out << mag;
        if (e != 0) {
            if (!unit_coeff) out << "*";
            out << var;
            if (e == 2) {
                // exponent 1: bare variable
            } else if (e % 2 == 0) {
                out << "^" << e / 2;
            } else {
                out << "^(" << e << "/2)";
            }
        }
    }
    return out.str();
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }
    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == digits) fail("expected integer");
        return std::stoll(std::string(s.substr(start, pos - start)));
    }
    BigInt bigint() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == digits) fail("expected integer");
        return BigInt(std::string(s.substr(start, pos - start)));
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool try_consume_word(std::string_view w) {
        skip_ws();
        if (s.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }
};

}  // namespace

Laurent parse_laurent(std::string_view text, std::string_view var) {
    Cursor cur{text};
    Laurent result;
    if (cur.eof()) cur.fail("empty input");

    bool lead = true;
    while (!cur.eof()) {
        int sign = 1;
        if (cur.try_consume('-')) sign = -1;
        else if (cur.try_consume('+')) sign = 1;
        else if (!lead) cur.fail("expected '+' or '-' between terms");
        lead = false;

        BigInt coeff = 1;
        bool saw_coeff = false;
        cur.skip_ws();
        if (!cur.eof() && (std::isdigit(static_cast<unsigned char>(cur.peek())))) {
            coeff = cur.bigint();
            saw_coeff = true;
        }
        bool saw_var = false;
        int exp2 = 0;
        if (saw_coeff) cur.try_consume('*');
        if (cur.try_consume_word(var)) {
            saw_var = true;
            exp2 = 2;
            if (cur.try_consume('^')) {
                if (cur.try_consume('(')) {
                    long long num = cur.integer();
                    if (!cur.try_consume('/')) cur.fail("expected '/'");
                    long long den = cur.integer();
                    if (den != 2) cur.fail("only halved exponents supported");
                    if (!cur.try_consume(')')) cur.fail("expected ')'");
                    exp2 = static_cast<int>(num);
                } else {
                    exp2 = 2 * static_cast<int>(cur.integer());
                }
            }
        }
        if (!saw_coeff && !saw_var) cur.fail("expected term");
        result.add_term(exp2, sign * coeff);
    }
    return result;
}

}  // namespace knots
