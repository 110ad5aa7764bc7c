#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "wilf/errors.hpp"

namespace wilf {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored in ascending degree order.
struct IntPolynomial {
    std::vector<mpz_class> coeffs;  // coeffs[i] multiplies x^i

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> c) : coeffs(std::move(c)) {}

    long degree() const {
        for (std::size_t i = coeffs.size(); i-- > 0;)
            if (coeffs[i] != 0) return static_cast<long>(i);
        return -1;
    }

    bool is_monic() const {
        long d = degree();
        return d >= 0 && coeffs[static_cast<std::size_t>(d)] == 1;
    }

    const mpz_class& coeff(std::size_t i) const {
        static const mpz_class zero(0);
        return i < coeffs.size() ? coeffs[i] : zero;
    }

    mpz_class eval(const mpz_class& x) const {
        mpz_class acc(0);
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    }

    /// Coefficients of -P(-x): c_i -> (-1)^{i+1} c_i.
    IntPolynomial reflected_negated() const {
        IntPolynomial r;
        r.coeffs.reserve(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            r.coeffs.push_back(i % 2 == 0 ? mpz_class(-coeffs[i]) : coeffs[i]);
        return r;
    }

    /// Coefficients reduced into [0, q).
    std::vector<uint64_t> mod(uint64_t q) const {
        std::vector<uint64_t> out;
        out.reserve(coeffs.size());
        mpz_class qz(static_cast<unsigned long>(q)), r;
        for (const auto& c : coeffs) {
            mpz_mod(r.get_mpz_t(), c.get_mpz_t(), qz.get_mpz_t());
            out.push_back(mpz_get_ui(r.get_mpz_t()));
        }
        while (out.size() > 1 && out.back() == 0) out.pop_back();
        return out;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a.coeff(i) != b.coeff(i)) return false;
        return true;
    }

    /// Human-readable form, descending powers, e.g. "x^7 - 21*x^5 + ... - 97".
    std::string str(const std::string& var = "x") const {
        long d = degree();
        if (d < 0) return "0";
        std::string out;
        for (long i = d; i >= 0; --i) {
            const mpz_class& c = coeffs[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            mpz_class a = abs(c);
            if (out.empty())
                out += (c < 0 ? "-" : "");
            else
                out += (c < 0 ? " - " : " + ");
            bool unit = (a == 1) && i != 0;
            if (!unit) out += a.get_str();
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
        return os << p.str();
    }
};

}  // namespace wilf
