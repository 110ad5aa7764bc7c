#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wilf/errors.hpp"
#include "wilf/primes.hpp"

namespace wilf::fq {

// Polynomials over F_q, q an odd prime below 2^62. Coefficients ascending,
// normalized (no trailing zeros); the zero polynomial is the empty vector.

using Poly = std::vector<uint64_t>;

inline void normalize(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long degree(const Poly& a) { return static_cast<long>(a.size()) - 1; }

inline Poly mul(const Poly& a, const Poly& b, uint64_t q) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], q), q);
    }
    normalize(out);
    return out;
}

inline Poly scale(Poly a, uint64_t c, uint64_t q) {
    for (auto& x : a) x = mul_mod(x, c, q);
    normalize(a);
    return a;
}

/// Remainder of a modulo m (m nonzero, any leading coefficient).
inline Poly rem(Poly a, const Poly& m, uint64_t q) {
    if (m.empty()) throw DomainError("fq::rem: zero modulus");
    uint64_t lead_inv = inv_mod(m.back(), q);
    while (a.size() >= m.size()) {
        uint64_t c = mul_mod(a.back(), lead_inv, q);
        if (c != 0) {
            std::size_t off = a.size() - m.size();
            for (std::size_t j = 0; j < m.size(); ++j)
                a[off + j] = sub_mod(a[off + j], mul_mod(c, m[j], q), q);
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

/// Exact quotient a / m; throws if the division leaves a remainder.
inline Poly divexact(const Poly& a, const Poly& m, uint64_t q) {
    if (m.empty()) throw DomainError("fq::divexact: zero divisor");
    Poly r = a;
    Poly quot(a.size() >= m.size() ? a.size() - m.size() + 1 : 0, 0);
    uint64_t lead_inv = inv_mod(m.back(), q);
    while (r.size() >= m.size()) {
        uint64_t c = mul_mod(r.back(), lead_inv, q);
        std::size_t off = r.size() - m.size();
        quot[off] = c;
        for (std::size_t j = 0; j < m.size(); ++j)
            r[off + j] = sub_mod(r[off + j], mul_mod(c, m[j], q), q);
        r.pop_back();  // leading term cancels exactly
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    if (!r.empty()) throw ComputeError("fq::divexact: nonzero remainder");
    normalize(quot);
    return quot;
}

inline Poly make_monic(Poly a, uint64_t q) {
    if (a.empty()) return a;
    uint64_t lead_inv = inv_mod(a.back(), q);
    return scale(std::move(a), lead_inv, q);
}

/// Monic gcd.
inline Poly gcd(Poly a, Poly b, uint64_t q) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        Poly r = rem(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), q);
}

inline Poly derivative(const Poly& a, uint64_t q) {
    Poly out;
    for (std::size_t i = 1; i < a.size(); ++i)
        out.push_back(mul_mod(a[i], i % q, q));
    normalize(out);
    return out;
}

/// x^e mod m by repeated squaring.
inline Poly pow_x_mod(uint64_t e, const Poly& m, uint64_t q) {
    Poly result = rem({1}, m, q);
    Poly base = rem({0, 1}, m, q);
    while (e) {
        if (e & 1) result = rem(mul(result, base, q), m, q);
        base = rem(mul(base, base, q), m, q);
        e >>= 1;
    }
    return result;
}

inline uint64_t eval(const Poly& a, uint64_t x, uint64_t q) {
    uint64_t acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = add_mod(mul_mod(acc, x, q), a[i], q);
    return acc;
}

/// prod (x - r_i) as a balanced product tree.
inline Poly from_roots(std::span<const uint64_t> roots, uint64_t q) {
    if (roots.empty()) return {1};
    if (roots.size() == 1) return {sub_mod(0, roots[0] % q, q), 1};
    std::size_t mid = roots.size() / 2;
    return mul(from_roots(roots.first(mid), q), from_roots(roots.subspan(mid), q), q);
}

/// Same product, multiplied out left to right. Kept as an independent
/// route for testing the tree.
inline Poly from_roots_sequential(std::span<const uint64_t> roots, uint64_t q) {
    Poly acc{1};
    for (uint64_t r : roots) acc = mul(acc, Poly{sub_mod(0, r % q, q), 1}, q);
    return acc;
}

}  // namespace wilf::fq
