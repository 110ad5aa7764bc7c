#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wilf/bigfloat.hpp"
#include "wilf/errors.hpp"
#include "wilf/int_poly.hpp"

namespace wilf {

struct PrecisionConfig {
    mpfr_prec_t bits = 128;      // working precision; doubled on each retry
    double tau = 1e-6;           // rounding tolerance, must stay below 1/4
    unsigned max_retries = 4;

    void validate() const {
        if (bits < 64) throw InvalidParamsError("PrecisionConfig: bits must be >= 64");
        if (!(tau > 0 && tau < 0.25))
            throw InvalidParamsError("PrecisionConfig: tau must lie in (0, 1/4)");
    }
};

/// Complex-coefficient polynomial (ascending degree) with how far it strays
/// from an integer polynomial: the largest imaginary part seen and the
/// largest distance of a real part from its nearest integer.
struct NumericPolynomial {
    std::vector<Cplx> coeffs;
    double max_imag = 0.0;
    double max_deviation = 0.0;

    void measure() {
        max_imag = 0.0;
        max_deviation = 0.0;
        for (const Cplx& c : coeffs) {
            max_imag = std::max(max_imag, c.im.abs_to_double_up());
            max_deviation = std::max(max_deviation, c.re.dist_to_nearest_int());
        }
    }
};

/// Monic expansion prod (x - root), multiplied out sequentially in the order
/// given (deterministic across runs).
inline NumericPolynomial poly_from_roots(std::span<const Cplx> roots, mpfr_prec_t prec) {
    if (roots.empty()) throw InvalidParamsError("poly_from_roots: no roots");
    NumericPolynomial np;
    np.coeffs.assign(1, Cplx(BigFloat::from_long(1, prec), BigFloat(prec)));
    for (const Cplx& root : roots) {
        std::vector<Cplx> next(np.coeffs.size() + 1, Cplx(prec));
        for (std::size_t i = 0; i < np.coeffs.size(); ++i) {
            next[i + 1] += np.coeffs[i];
            next[i] += -(root * np.coeffs[i]);
        }
        np.coeffs = std::move(next);
    }
    np.measure();
    return np;
}

/// Nearest-integer rounding; refuses when any coefficient is further than
/// tau from an integer (in either the real or imaginary direction).
inline IntPolynomial round_to_int_poly(const NumericPolynomial& np, double tau) {
    if (!(tau > 0 && tau < 0.25))
        throw InvalidParamsError("round_to_int_poly: tau must lie in (0, 1/4)");
    double observed = std::max(np.max_deviation, np.max_imag);
    if (!(observed < tau))
        throw RoundingFailureError(
            "round_to_int_poly: max deviation " + std::to_string(observed) +
                " exceeds tolerance " + std::to_string(tau),
            observed);
    IntPolynomial out;
    out.coeffs.reserve(np.coeffs.size());
    for (const Cplx& c : np.coeffs) out.coeffs.push_back(c.re.round_to_mpz());
    return out;
}

}  // namespace wilf
