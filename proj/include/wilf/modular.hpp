#pragma once

#include <gmpxx.h>

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "wilf/errors.hpp"
#include "wilf/rational.hpp"

namespace wilf {

/// A value in Z/mZ, kept reduced into [0, m).
struct Residue {
    mpz_class value;
    mpz_class modulus;

    Residue() : value(0), modulus(1) {}
    Residue(mpz_class v, mpz_class m) : value(std::move(v)), modulus(std::move(m)) {
        if (modulus < 1) throw DomainError("Residue: modulus must be positive");
        mpz_mod(value.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
    }

    friend bool operator==(const Residue& a, const Residue& b) {
        return a.value == b.value && a.modulus == b.modulus;
    }

    friend std::ostream& operator<<(std::ostream& os, const Residue& r) {
        return os << r.value.get_str() << " mod " << r.modulus.get_str();
    }
};

/// base^exp mod m by square-and-multiply.
inline Residue mod_pow(const mpz_class& base, const mpz_class& exp, const mpz_class& m) {
    if (m < 1) throw DomainError("mod_pow: modulus must be positive");
    if (exp < 0) throw DomainError("mod_pow: negative exponent");
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return Residue(std::move(r), m);
}

/// x with a*x == 1 (mod m). Throws NotInvertible when gcd(a, m) != 1.
inline Residue mod_inverse(const mpz_class& a, const mpz_class& m) {
    if (m < 1) throw DomainError("mod_inverse: modulus must be positive");
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NotInvertibleError("mod_inverse: " + a.get_str() + " not invertible mod " +
                                 m.get_str());
    return Residue(std::move(r), m);
}

/// Image of a rational in Z/mZ: num * den^{-1} mod m.
inline Residue rational_mod(const Rational& r, const mpz_class& m) {
    mpz_class g;
    mpz_class den = r.den();
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    if (g != 1)
        throw DenominatorNotCoprimeError("rational_mod: denominator " + den.get_str() +
                                         " shares a factor with modulus " + m.get_str());
    return Residue(r.num() * mod_inverse(den, m).value, m);
}

/// Unique integer in the symmetric range (-M/2, M/2], M = product of the
/// (pairwise coprime) moduli, congruent to every residue. Incremental CRT.
inline mpz_class crt_combine(std::span<const Residue> residues) {
    if (residues.empty()) throw DomainError("crt_combine: empty residue list");
    mpz_class x = residues[0].value;
    mpz_class M = residues[0].modulus;
    for (std::size_t i = 1; i < residues.size(); ++i) {
        const mpz_class& m = residues[i].modulus;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), M.get_mpz_t(), m.get_mpz_t());
        if (g != 1)
            throw ModuliNotCoprimeError("crt_combine: moduli not pairwise coprime at index " +
                                        std::to_string(i));
        // x += M * t with t chosen so the result matches residues[i] mod m.
        mpz_class t = (residues[i].value - x) * mod_inverse(M, m).value;
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
        x += M * t;
        M *= m;
    }
    if (2 * x > M) x -= M;
    return x;
}

inline mpz_class crt_combine(const std::vector<Residue>& residues) {
    return crt_combine(std::span<const Residue>(residues));
}

}  // namespace wilf
