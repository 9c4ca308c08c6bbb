#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knots {

using BigInt = boost::multiprecision::cpp_int;

// Exact Laurent polynomial in one formal variable, exponents in (1/2)*Z.
// Term keys are doubled exponents, so t^(1/2) has key 1 and t^k has key 2k.
// The map never stores a zero coefficient; equality is structural.
class Laurent {
public:
    using TermMap = std::map<int, BigInt>;

    Laurent() = default;

    static Laurent constant(BigInt c) {
        Laurent p;
        if (c != 0) p.terms_.emplace(0, std::move(c));
        return p;
    }
    static Laurent one() { return constant(1); }

    // c * x^(exp2/2)
    static Laurent monomial(BigInt c, int exp2) {
        Laurent p;
        if (c != 0) p.terms_.emplace(exp2, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    BigInt coeff(int exp2) const {
        auto it = terms_.find(exp2);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    // Lowest / highest doubled exponent; polynomial must be nonzero.
    int min_exp2() const { require_nonzero(); return terms_.begin()->first; }
    int max_exp2() const { require_nonzero(); return terms_.rbegin()->first; }

    // max exponent - min exponent, in doubled units.
    int span2() const { return max_exp2() - min_exp2(); }

    bool has_integer_exponents() const {
        for (auto& [e, c] : terms_)
            if (e % 2 != 0) return false;
        return true;
    }

    BigInt eval_at_one() const {
        BigInt s = 0;
        for (auto& [e, c] : terms_) s += c;
        return s;
    }

    // Multiply by x^(exp2/2).
    Laurent shifted(int exp2) const {
        Laurent r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e + exp2, c);
        return r;
    }

    // Substitute x -> 1/x.
    Laurent reversed() const {
        Laurent r;
        for (auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    void add_term(int exp2, const BigInt& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(exp2, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
    friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }

    friend Laurent operator-(const Laurent& a) {
        Laurent r;
        for (auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) {
        return !(a == b);
    }

    // Exact quotient; throws std::domain_error if the division is not exact.
    // Valid in Z[x,1/x]: exists iff b divides a in the Laurent ring.
    friend Laurent div_exact(const Laurent& a, const Laurent& b);

private:
    void require_nonzero() const {
        if (terms_.empty())
            throw std::invalid_argument("zero polynomial has no degree span");
    }

    TermMap terms_;
};

// Unique representative q = ±x^k * p with q(x) == q(1/x) and q(1) == +1.
// Input must be an integer-exponent polynomial symmetric up to units with
// p(1) == ±1 (a knot Alexander polynomial); otherwise throws.
Laurent normalize_alexander(const Laurent& p);

// Conway normal form: the unique even polynomial n(z) with n(0)=1 such that
// substituting z^2 = t - 2 + 1/t recovers the normalized Alexander input.
// Uses the basis q_0 = 2, q_1 = z^2+2, q_{k+1} = (z^2+2) q_k - q_{k-1},
// where q_k stands for t^k + t^{-k}.
Laurent conway_from_alexander(const Laurent& p);

// Replace z^2 by t - 2 + 1/t; input must contain even powers of z only.
Laurent substitute_z(const Laurent& p_in_z);

// Text form: terms "c*v^k" or "c*v^(d/2)", descending exponent, " + "/" - "
// separators, "0" for the zero polynomial.
std::string to_string(const Laurent& p, std::string_view var);

// Inverse of to_string for the grammar above (also accepts compact signs).
// Throws parse errors as std::invalid_argument with a character position.
Laurent parse_laurent(std::string_view text, std::string_view var);

}  // namespace knots
