#pragma once

#include <cstdint>
#include <vector>

#include "wilf/bigfloat.hpp"
#include "wilf/errors.hpp"
#include "wilf/fq_poly.hpp"
#include "wilf/numeric_poly.hpp"
#include "wilf/period.hpp"
#include "wilf/primes.hpp"

namespace wilf {

// Everything here follows the index convention of the determinant identity:
// indices live in Z/pZ with representatives {1,...,p}, so "p" plays the role
// of 0.

/// One symbolic matrix entry: the variable slot -x, a root of unity omega^e
/// with e in Z/p^2, exactly 0, or exactly 1.
struct SymEntry {
    enum class Kind : uint8_t { Zero, One, Variable, Exponent } kind = Kind::Zero;
    uint32_t exp = 0;

    static SymEntry zero() { return {Kind::Zero, 0}; }
    static SymEntry one() { return {Kind::One, 0}; }
    static SymEntry variable() { return {Kind::Variable, 0}; }
    static SymEntry exponent(uint32_t e) { return {Kind::Exponent, e}; }

    friend bool operator==(const SymEntry&, const SymEntry&) = default;
};

struct SymMatrix {
    unsigned long p = 0;
    std::vector<SymEntry> entries;  // row-major, 1-based through at()

    explicit SymMatrix(unsigned long dim = 0) : p(dim), entries(dim * dim) {}

    SymEntry& at(unsigned long i, unsigned long j) { return entries[(i - 1) * p + (j - 1)]; }
    const SymEntry& at(unsigned long i, unsigned long j) const {
        return entries[(i - 1) * p + (j - 1)];
    }
};

namespace detail {

/// (m)^p mod p^2 where only m mod p matters; m may be any nonzero residue
/// representative.
inline uint32_t fermat_quotient_exp(uint64_t m, uint64_t p) {
    uint64_t p2 = p * p;
    return static_cast<uint32_t>(pow_mod(m % p2, p, p2));
}

inline void require_odd_prime_ge5(unsigned long p, const char* who) {
    if (p < 5 || !is_prime_u64(p))
        throw InvalidParamsError(std::string(who) + ": p must be a prime >= 5");
}

}  // namespace detail

/// The p x p matrix A: a_{m,n} = -x when m+n == 0 (mod p), else
/// omega^{(m+n)^p mod p^2}.
inline SymMatrix build_granville(unsigned long p) {
    detail::require_odd_prime_ge5(p, "build_granville");
    SymMatrix A(p);
    for (unsigned long m = 1; m <= p; ++m)
        for (unsigned long n = 1; n <= p; ++n)
            A.at(m, n) = (m + n) % p == 0
                             ? SymEntry::variable()
                             : SymEntry::exponent(detail::fermat_quotient_exp(m + n, p));
    return A;
}

/// B = sum_{i != j} omega^{(i-j)^p} E_{i,j}; zero diagonal.
inline SymMatrix build_B(unsigned long p) {
    detail::require_odd_prime_ge5(p, "build_B");
    SymMatrix B(p);
    for (unsigned long i = 1; i <= p; ++i)
        for (unsigned long j = 1; j <= p; ++j)
            if (i != j) B.at(i, j) = SymEntry::exponent(detail::fermat_quotient_exp(i + p - j, p));
    return B;
}

/// F = sum_j E_{j,p-j}: the anti-diagonal permutation j -> p-j (fixing p).
inline SymMatrix build_F(unsigned long p) {
    detail::require_odd_prime_ge5(p, "build_F");
    SymMatrix F(p);
    for (unsigned long j = 1; j <= p; ++j) {
        unsigned long col = (p - j) % p == 0 ? p : p - j;
        F.at(j, col) = SymEntry::one();
    }
    return F;
}

/// T = sum_j E_{j+1,j}: the full cyclic shift e_j -> e_{j+1} (indices wrap).
inline SymMatrix build_T(unsigned long p) {
    detail::require_odd_prime_ge5(p, "build_T");
    SymMatrix T(p);
    for (unsigned long j = 1; j <= p; ++j) T.at(j % p + 1, j) = SymEntry::one();
    return T;
}

/// Column index of the single 1 in row i of F.
inline unsigned long f_perm(unsigned long i, unsigned long p) {
    return (p - i) % p == 0 ? p : p - i;
}

/// The factorization behind the determinant identity, checked entry by
/// entry without any field instantiation: with C = xI - B and the
/// E_{i,j} = (row i, col j) convention the products come out as
///     C = -A F   and   C^T = -F A.
/// A and F are symmetric, so the two lines carry the same content and both
/// orientations are verified; determinants are unaffected either way.
inline bool verify_c_eq_minus_fa(unsigned long p) {
    detail::require_odd_prime_ge5(p, "verify_c_eq_minus_fa");
    SymMatrix A = build_granville(p);
    SymMatrix B = build_B(p);
    uint64_t p2 = static_cast<uint64_t>(p) * p;

    for (unsigned long i = 1; i <= p; ++i) {
        for (unsigned long j = 1; j <= p; ++j) {
            // -(AF)[i][j] = -A[i][sigma(j)] must equal C[i][j] = (xI - B)[i][j].
            const SymEntry& af = A.at(i, f_perm(j, p));
            if (i == j) {
                if (af.kind != SymEntry::Kind::Variable) return false;
            } else {
                if (af.kind != SymEntry::Kind::Exponent) return false;
                if (B.at(i, j).kind != SymEntry::Kind::Exponent) return false;
                if (af.exp % p2 != B.at(i, j).exp % p2) return false;
            }
            // -(FA)[i][j] = -A[sigma(i)][j] must equal C^T[i][j] = C[j][i].
            const SymEntry& fa = A.at(f_perm(i, p), j);
            if (i == j) {
                if (fa.kind != SymEntry::Kind::Variable) return false;
            } else {
                if (fa.kind != SymEntry::Kind::Exponent) return false;
                if (fa.exp % p2 != B.at(j, i).exp % p2) return false;
            }
        }
    }
    return true;
}

/// Checks B = sum_{j=1}^{p-1} omega^{j^p} T^j symbolically: T^j places
/// omega^{j^p} at positions (i, i-j).
inline bool verify_b_shift_decomposition(unsigned long p) {
    SymMatrix B = build_B(p);
    SymMatrix S(p);
    for (unsigned long j = 1; j < p; ++j) {
        uint32_t e = detail::fermat_quotient_exp(j, p);
        for (unsigned long i = 1; i <= p; ++i) {
            unsigned long col = (i + p - j - 1) % p + 1;  // i - j under {1..p}
            if (S.at(i, col).kind != SymEntry::Kind::Zero) return false;
            S.at(i, col) = SymEntry::exponent(e);
        }
    }
    for (unsigned long i = 1; i <= p; ++i)
        for (unsigned long j = 1; j <= p; ++j)
            if (!(S.at(i, j) == B.at(i, j))) return false;
    return true;
}

/// det(F) as permutation parity, counted through inversions.
inline int det_f_sign(unsigned long p) {
    std::vector<unsigned long> sigma(p + 1);
    for (unsigned long j = 1; j <= p; ++j) sigma[j] = f_perm(j, p);
    unsigned long inversions = 0;
    for (unsigned long i = 1; i <= p; ++i)
        for (unsigned long j = i + 1; j <= p; ++j)
            if (sigma[i] > sigma[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

/// Instantiates v_k = sum_j zeta^{pjk} e_j over F_q and checks both
/// eigenvector identities: T v_k = zeta^{-pk} v_k and B v_k = rho_k v_k.
inline bool eigen_check_mod_q(unsigned long p, unsigned long k, const CrtPrime& cp) {
    detail::require_odd_prime_ge5(p, "eigen_check_mod_q");
    if (k > p - 1) throw InvalidParamsError("eigen_check_mod_q: k out of range");
    uint64_t q = cp.q;
    uint64_t p2 = static_cast<uint64_t>(p) * p;
    std::vector<uint64_t> zt = detail::zeta_powers(cp, p2);

    std::vector<uint64_t> v(p + 1);
    for (unsigned long j = 1; j <= p; ++j) v[j] = zt[static_cast<uint64_t>(p) * j % p2 * k % p2];

    // T v = zeta^{-pk} v: (Tv)[i] = v[i-1 (wrap)].
    uint64_t tw = zt[(p2 - static_cast<uint64_t>(p) * k % p2) % p2];
    for (unsigned long i = 1; i <= p; ++i) {
        unsigned long prev = i == 1 ? p : i - 1;
        if (v[prev] != mul_mod(tw, v[i], q)) return false;
    }

    // B v = rho_k v.
    uint64_t rho = rho_k_mod_q(p, k, cp);
    for (unsigned long i = 1; i <= p; ++i) {
        uint64_t acc = 0;
        for (unsigned long j = 1; j <= p; ++j) {
            if (i == j) continue;
            uint64_t d = (i + p - j) % p;  // in {1..p-1} since i != j
            acc = add_mod(acc, mul_mod(zt[pow_mod(d, p, p2)], v[j], q), q);
        }
        if (acc != mul_mod(rho, v[i], q)) return false;
    }
    return true;
}

/// det(A) mod q as a polynomial in x, through the circulant eigenvalue
/// route: det(A) = (-1)^{(p+1)/2} det(xI - B) = (-1)^{(p+1)/2} prod (x - rho_k).
inline fq::Poly det_granville_mod_q(unsigned long p, const CrtPrime& cp) {
    detail::require_odd_prime_ge5(p, "det_granville_mod_q");
    std::vector<uint64_t> rho(p);
    for (unsigned long k = 0; k < p; ++k) rho[k] = rho_k_mod_q(p, k, cp);
    fq::Poly det = fq::from_roots(rho, cp.q);
    if (((p + 1) / 2) % 2 == 1) det = fq::scale(std::move(det), cp.q - 1, cp.q);
    return det;
}

/// Direct complex determinant of A at x = x0 by partial-pivot elimination.
/// Shares no code with the eigenvalue route; small p only.
inline Cplx det_numeric(unsigned long p, const Cplx& x0, const PrecisionConfig& cfg) {
    detail::require_odd_prime_ge5(p, "det_numeric");
    if (p > 11) throw UnsupportedScaleError("det_numeric: direct elimination is kept to p <= 11");
    cfg.validate();
    mpfr_prec_t bits = cfg.bits;
    mpz_class p2(static_cast<unsigned long>(p * p));

    std::vector<std::vector<Cplx>> mat(p, std::vector<Cplx>(p, Cplx(bits)));
    SymMatrix A = build_granville(p);
    for (unsigned long i = 1; i <= p; ++i)
        for (unsigned long j = 1; j <= p; ++j) {
            const SymEntry& e = A.at(i, j);
            mat[i - 1][j - 1] = e.kind == SymEntry::Kind::Variable
                                    ? -x0
                                    : exp_2pi_i(mpz_class(e.exp), p2, bits);
        }

    Cplx det(BigFloat::from_long(1, bits), BigFloat(bits));
    for (unsigned long col = 0; col < p; ++col) {
        unsigned long pivot = col;
        BigFloat best = mat[col][col].abs2();
        for (unsigned long row = col + 1; row < p; ++row) {
            BigFloat cand = mat[row][col].abs2();
            if (best < cand) {
                best = cand;
                pivot = row;
            }
        }
        if (best.is_zero()) return Cplx(bits);  // singular
        if (pivot != col) {
            std::swap(mat[pivot], mat[col]);
            det = -det;
        }
        det = det * mat[col][col];
        for (unsigned long row = col + 1; row < p; ++row) {
            Cplx factor = mat[row][col] / mat[col][col];
            for (unsigned long j = col; j < p; ++j)
                mat[row][j] = mat[row][j] - factor * mat[col][j];
        }
    }
    return det;
}

}  // namespace wilf
