#pragma once

// Polynomials over GF(2) and GF(4), factorization of x^c - 1, and the GF(4)
// trace machinery. Coefficients are stored lowest degree first with no
// trailing zeros; the zero polynomial has an empty coefficient vector.

#include "qldpc/gf2.hpp"

#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace qldpc {

class BinPoly {
public:
    BinPoly() = default;
    explicit BinPoly(std::vector<std::uint8_t> coeffs) : c_(std::move(coeffs)) { trim(); }

    static BinPoly zero() { return BinPoly(); }
    static BinPoly one() { return BinPoly({1}); }

    static BinPoly x_pow(std::size_t k) {
        std::vector<std::uint8_t> c(k + 1, 0);
        c[k] = 1;
        return BinPoly(std::move(c));
    }

    static BinPoly from_exponents(const std::vector<std::size_t>& exps) {
        BinPoly p;
        for (std::size_t e : exps) {
            if (p.c_.size() <= e) p.c_.resize(e + 1, 0);
            p.c_[e] ^= 1;
        }
        p.trim();
        return p;
    }

    static BinPoly x_pow_minus_1(std::size_t n) {
        std::vector<std::uint8_t> c(n + 1, 0);
        c[0] = 1; c[n] ^= 1;
        return BinPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool coeff(std::size_t i) const { return i < c_.size() && c_[i]; }
    std::size_t weight() const {
        std::size_t w = 0;
        for (auto b : c_) w += b;
        return w;
    }
    const std::vector<std::uint8_t>& coeffs() const { return c_; }

    friend bool operator==(const BinPoly& a, const BinPoly& b) { return a.c_ == b.c_; }

    friend BinPoly operator+(const BinPoly& a, const BinPoly& b) {
        std::vector<std::uint8_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] ^= a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] ^= b.c_[i];
        return BinPoly(std::move(c));
    }

    friend BinPoly operator*(const BinPoly& a, const BinPoly& b) {
        if (a.is_zero() || b.is_zero()) return BinPoly();
        std::vector<std::uint8_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i])
                for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] ^= b.c_[j];
        return BinPoly(std::move(c));
    }

    BinPoly reversed() const {
        std::vector<std::uint8_t> c(c_.rbegin(), c_.rend());
        return BinPoly(std::move(c));
    }

    bool is_palindromic() const { return !is_zero() && *this == reversed(); }

    BinPoly mod_xn_minus_1(std::size_t n) const {
        std::vector<std::uint8_t> c(n, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i]) c[i % n] ^= 1;
        return BinPoly(std::move(c));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i]) continue;
            if (!s.empty()) s += "+";
            if (i == 0) s += "1";
            else if (i == 1) s += "x";
            else s += "x^" + std::to_string(i);
        }
        return s;
    }

private:
    std::vector<std::uint8_t> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

struct PolyDivByZero : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline std::pair<BinPoly, BinPoly> poly_divmod(const BinPoly& a, const BinPoly& b) {
    if (b.is_zero()) throw PolyDivByZero("poly_divmod: division by zero polynomial");
    std::vector<std::uint8_t> rem(a.coeffs());
    long db = b.degree();
    std::vector<std::uint8_t> q(rem.size() > static_cast<std::size_t>(db)
                                    ? rem.size() - static_cast<std::size_t>(db)
                                    : 1,
                                0);
    for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
        if (!rem[static_cast<std::size_t>(i)]) continue;
        std::size_t sh = static_cast<std::size_t>(i - db);
        q[sh] ^= 1;
        for (long j = 0; j <= db; ++j) rem[sh + static_cast<std::size_t>(j)] ^= b.coeff(static_cast<std::size_t>(j));
    }
    return {BinPoly(std::move(q)), BinPoly(std::move(rem))};
}

inline BinPoly poly_mod(const BinPoly& a, const BinPoly& b) { return poly_divmod(a, b).second; }
inline BinPoly poly_div(const BinPoly& a, const BinPoly& b) { return poly_divmod(a, b).first; }
inline bool divides(const BinPoly& d, const BinPoly& a) { return poly_mod(a, d).is_zero(); }

// gcd is monic automatically over GF(2)
inline BinPoly poly_gcd(BinPoly a, BinPoly b) {
    while (!b.is_zero()) {
        BinPoly r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

// ---- factorization of x^c - 1 over GF(2) ----

struct Factorization {
    // irreducible base polynomials with their multiplicities (all equal 2^s
    // where c = c' * 2^s with c' odd)
    std::vector<std::pair<BinPoly, std::size_t>> base;
    std::size_t c = 0;

    BinPoly expand() const {
        BinPoly p = BinPoly::one();
        for (const auto& [q, m] : base)
            for (std::size_t i = 0; i < m; ++i) p = p * q;
        return p;
    }
};

namespace detail {
inline std::size_t ord2_mod(std::size_t d) {
    if (d == 1) return 1;
    std::size_t o = 1, t = 2 % d;
    while (t != 1) { t = (t * 2) % d; ++o; }
    return o;
}
} // namespace detail

// Trial division, restricted to the admissible factor degrees ord_d(2) for
// d | c'. Every irreducible factor of x^{c'} - 1 has one of those degrees, so
// the sieve never has to go past degree ord_{c'}(2) and candidates of an
// admissible degree that divide the remaining cofactor are irreducible.
inline Factorization factor_xc_minus_1(std::size_t c) {
    if (c < 1) throw std::invalid_argument("factor_xc_minus_1: c must be >= 1");
    std::size_t s = 0, codd = c;
    while (codd % 2 == 0) { codd /= 2; ++s; }
    std::size_t mult = std::size_t{1} << s;

    std::vector<std::size_t> degs;
    for (std::size_t d = 1; d <= codd; ++d)
        if (codd % d == 0) degs.push_back(detail::ord2_mod(d));
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());

    BinPoly rem = BinPoly::x_pow_minus_1(codd);
    std::vector<BinPoly> factors;
    for (std::size_t m : degs) {
        if (rem.degree() == static_cast<long>(m)) { // last factor
            factors.push_back(rem);
            rem = BinPoly::one();
            break;
        }
        if (rem.degree() < static_cast<long>(m)) break;
        // all monic candidates of degree m with nonzero constant term
        std::uint64_t count = std::uint64_t{1} << (m - 1);
        for (std::uint64_t bits = 0; bits < count; ++bits) {
            std::vector<std::uint8_t> cc(m + 1, 0);
            cc[0] = 1; cc[m] = 1;
            for (std::size_t i = 1; i < m; ++i) cc[i] = static_cast<std::uint8_t>((bits >> (i - 1)) & 1);
            BinPoly cand(std::move(cc));
            while (divides(cand, rem)) {
                factors.push_back(cand);
                rem = poly_div(rem, cand);
            }
            if (rem.degree() == static_cast<long>(m)) {
                factors.push_back(rem);
                rem = BinPoly::one();
                break;
            }
            if (rem.degree() < static_cast<long>(m)) break;
        }
        if (rem.degree() <= 0) break;
    }
    if (!(rem == BinPoly::one()))
        throw std::logic_error("factor_xc_minus_1: incomplete factorization");
    std::sort(factors.begin(), factors.end(), [](const BinPoly& a, const BinPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    Factorization f;
    f.c = c;
    for (const auto& q : factors) f.base.push_back({q, mult});
    return f;
}

// ---- GF(4) ----
// Symbols encoded in two bits as e = u + w*v: bit0 = u, bit1 = v.
// 0 -> 0, 1 -> 1, 2 -> w, 3 -> w^2 (written W).
struct F4 {
    std::uint8_t v = 0;
    constexpr F4() = default;
    constexpr explicit F4(std::uint8_t x) : v(x) {}
    constexpr bool is_zero() const { return v == 0; }
    friend constexpr bool operator==(F4 a, F4 b) { return a.v == b.v; }
};

inline constexpr F4 f4_zero{0}, f4_one{1}, f4_w{2}, f4_wbar{3};

constexpr F4 f4_add(F4 a, F4 b) { return F4(static_cast<std::uint8_t>(a.v ^ b.v)); }

constexpr F4 f4_mul(F4 a, F4 b) {
    std::uint8_t u1 = a.v & 1, v1 = (a.v >> 1) & 1;
    std::uint8_t u2 = b.v & 1, v2 = (b.v >> 1) & 1;
    std::uint8_t u = static_cast<std::uint8_t>((u1 & u2) ^ (v1 & v2));
    std::uint8_t v = static_cast<std::uint8_t>((u1 & v2) ^ (v1 & u2) ^ (v1 & v2));
    return F4(static_cast<std::uint8_t>(u | (v << 1)));
}

constexpr F4 f4_conj(F4 a) {
    std::uint8_t u = a.v & 1, v = (a.v >> 1) & 1;
    return F4(static_cast<std::uint8_t>((u ^ v) | (v << 1)));
}

constexpr F4 f4_inv(F4 a) {
    // 1 -> 1, w -> W, W -> w
    return a.v == 1 ? F4(1) : a.v == 2 ? F4(3) : F4(2);
}

// trace inner product of two GF(4) vectors: e1.conj(e2) + conj(e1).e2,
// evaluated in GF(4); the result always lies in {0, 1}.
inline int f4_trace_inner(const std::vector<F4>& a, const std::vector<F4>& b) {
    if (a.size() != b.size()) throw DimensionError("f4_trace_inner: length mismatch");
    F4 acc{0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc = f4_add(acc, f4_mul(a[i], f4_conj(b[i])));
        acc = f4_add(acc, f4_mul(f4_conj(a[i]), b[i]));
    }
    if (acc.v > 1) throw std::logic_error("f4_trace_inner: non-binary trace value");
    return acc.v;
}

class F4Poly {
public:
    F4Poly() = default;
    explicit F4Poly(std::vector<F4> coeffs) : c_(std::move(coeffs)) { trim(); }

    static F4Poly one() { return F4Poly({f4_one}); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    F4 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F4{0}; }
    const std::vector<F4>& coeffs() const { return c_; }

    friend bool operator==(const F4Poly& a, const F4Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    friend F4Poly operator+(const F4Poly& a, const F4Poly& b) {
        std::vector<F4> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = f4_add(a.coeff(i), b.coeff(i));
        return F4Poly(std::move(c));
    }

    friend F4Poly operator*(const F4Poly& a, const F4Poly& b) {
        if (a.is_zero() || b.is_zero()) return F4Poly();
        std::vector<F4> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = f4_add(c[i + j], f4_mul(a.c_[i], b.c_[j]));
        }
        return F4Poly(std::move(c));
    }

    std::string to_string() const;

private:
    std::vector<F4> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

inline std::pair<F4Poly, F4Poly> poly_divmod(const F4Poly& a, const F4Poly& b) {
    if (b.is_zero()) throw PolyDivByZero("poly_divmod: division by zero polynomial");
    std::vector<F4> rem(a.coeffs());
    long db = b.degree();
    F4 leadinv = f4_inv(b.coeff(static_cast<std::size_t>(db)));
    std::vector<F4> q(rem.size() > static_cast<std::size_t>(db) ? rem.size() - static_cast<std::size_t>(db) : 1);
    for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
        F4 top = rem[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        F4 f = f4_mul(top, leadinv);
        std::size_t sh = static_cast<std::size_t>(i - db);
        q[sh] = f4_add(q[sh], f);
        for (long j = 0; j <= db; ++j)
            rem[sh + static_cast<std::size_t>(j)] =
                f4_add(rem[sh + static_cast<std::size_t>(j)], f4_mul(f, b.coeff(static_cast<std::size_t>(j))));
    }
    return {F4Poly(std::move(q)), F4Poly(std::move(rem))};
}

// monic gcd (leading coefficient normalized to 1 by dividing by it)
inline F4Poly poly_gcd(F4Poly a, F4Poly b) {
    while (!b.is_zero()) {
        F4Poly r = poly_divmod(a, b).second;
        a = b;
        b = r;
    }
    if (!a.is_zero()) {
        F4 inv = f4_inv(a.coeff(static_cast<std::size_t>(a.degree())));
        std::vector<F4> c(a.coeffs());
        for (auto& x : c) x = f4_mul(x, inv);
        a = F4Poly(std::move(c));
    }
    return a;
}

// ---- text syntax: 1+x+x^3, w x^2, W x (whitespace-insensitive; '*' allowed) ----

namespace detail {

struct PolyParser {
    const std::string& s;
    std::size_t p = 0;
    explicit PolyParser(const std::string& str) : s(str) {}
    void skip() { while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p; }
    bool eat(char c) {
        skip();
        if (p < s.size() && s[p] == c) { ++p; return true; }
        return false;
    }
    // term := coeff? ('x' ('^' num)?)? ; coeff := '0' | '1' | 'w' | 'W'
    // returns (f4 coefficient, exponent)
    std::pair<F4, std::size_t> term() {
        skip();
        F4 coef = f4_one;
        bool have_coef = false;
        if (p < s.size() && (s[p] == 'w' || s[p] == 'W')) {
            coef = s[p] == 'w' ? f4_w : f4_wbar;
            have_coef = true;
            ++p;
        } else if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
            std::size_t v = 0;
            while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) v = v * 10 + (s[p++] - '0');
            if (v > 1) throw std::invalid_argument("polynomial parse: coefficient must be 0, 1, w or W");
            coef = v ? f4_one : f4_zero;
            have_coef = true;
        }
        eat('*');
        skip();
        std::size_t e = 0;
        if (p < s.size() && s[p] == 'x') {
            ++p;
            e = 1;
            if (eat('^')) {
                skip();
                if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p])))
                    throw std::invalid_argument("polynomial parse: missing exponent");
                e = 0;
                while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) e = e * 10 + (s[p++] - '0');
            }
        } else if (!have_coef) {
            throw std::invalid_argument("polynomial parse: expected term");
        }
        return {coef, e};
    }
};

} // namespace detail

inline F4Poly parse_f4_poly(const std::string& str) {
    detail::PolyParser pp(str);
    std::vector<F4> coeffs;
    while (true) {
        auto [c, e] = pp.term();
        if (coeffs.size() <= e) coeffs.resize(e + 1);
        coeffs[e] = f4_add(coeffs[e], c);
        pp.skip();
        if (pp.p >= pp.s.size()) break;
        if (!pp.eat('+')) throw std::invalid_argument("polynomial parse: expected '+'");
    }
    return F4Poly(std::move(coeffs));
}

inline BinPoly parse_bin_poly(const std::string& str) {
    F4Poly p = parse_f4_poly(str);
    std::vector<std::uint8_t> c(p.coeffs().size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        F4 s = p.coeff(i);
        if (s.v > 1) throw std::invalid_argument("polynomial parse: GF(4) symbol in binary polynomial");
        c[i] = s.v;
    }
    return BinPoly(std::move(c));
}

inline std::string F4Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += "+";
        std::string sym = c_[i] == f4_one ? "1" : c_[i] == f4_w ? "w" : "W";
        if (i == 0) { s += sym; continue; }
        if (!(c_[i] == f4_one)) s += sym;
        s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return s;
}

} // namespace qldpc
