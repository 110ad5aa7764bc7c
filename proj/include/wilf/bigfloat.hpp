#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "wilf/errors.hpp"
#include "wilf/rational.hpp"

namespace wilf {

/// Multiprecision real with value semantics on top of MPFR. Binary
/// operations carry the larger operand precision into the result.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 128) {
        mpfr_init2(x_, prec);
        mpfr_set_zero(x_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(x_, MPFR_PREC_MIN);
        mpfr_swap(x_, o.x_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(x_); }

    static BigFloat from_double(double d, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_d(r.x_, d, MPFR_RNDN);
        return r;
    }
    static BigFloat from_long(long v, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.x_, v, MPFR_RNDN);
        return r;
    }
    static BigFloat from_mpz(const mpz_class& z, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_z(r.x_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from_rational(const Rational& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.x_, q.mpq().get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }

    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_abs(r.x_, x_, MPFR_RNDN);
        return r;
    }

    int cmp(const BigFloat& o) const { return mpfr_cmp(x_, o.x_); }
    int cmp(double d) const { return mpfr_cmp_d(x_, d); }
    bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
    bool operator==(const BigFloat& o) const { return cmp(o) == 0; }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    /// Nearest integer (ties to even).
    mpz_class round_to_mpz() const {
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), x_, MPFR_RNDN);
        return z;
    }

    /// |x - nearest integer|, converted with upward rounding.
    double dist_to_nearest_int() const {
        mpz_class n = round_to_mpz();
        mpfr_t d;
        mpfr_init2(d, prec());
        mpfr_sub_z(d, x_, n.get_mpz_t(), MPFR_RNDN);
        mpfr_abs(d, d, MPFR_RNDN);
        double out = mpfr_get_d(d, MPFR_RNDU);
        mpfr_clear(d);
        return out;
    }

    double abs_to_double_up() const {
        mpfr_t d;
        mpfr_init2(d, prec());
        mpfr_abs(d, x_, MPFR_RNDN);
        double out = mpfr_get_d(d, MPFR_RNDU);
        mpfr_clear(d);
        return out;
    }

    static void sin_cos(BigFloat& s, BigFloat& c, const BigFloat& angle) {
        mpfr_prec_t p = angle.prec();
        mpfr_set_prec(s.x_, p);
        mpfr_set_prec(c.x_, p);
        mpfr_sin_cos(s.x_, c.x_, angle.x_, MPFR_RNDN);
    }

    std::string str(std::size_t digits = 20) const {
        mpfr_exp_t e;
        char* raw = mpfr_get_str(nullptr, &e, 10, digits, x_, MPFR_RNDN);
        std::string mant(raw);
        mpfr_free_str(raw);
        std::string sign;
        if (!mant.empty() && mant[0] == '-') {
            sign = "-";
            mant.erase(0, 1);
        }
        return sign + "0." + mant + "e" + std::to_string(e);
    }

private:
    mpfr_t x_;
};

/// Complex number over BigFloat.
struct Cplx {
    BigFloat re, im;

    explicit Cplx(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    Cplx(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator/(const Cplx& a, const Cplx& b) {
        BigFloat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Cplx operator-() const { return {-re, -im}; }

    Cplx& operator+=(const Cplx& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    BigFloat abs2() const { return re * re + im * im; }
};

/// exp(i pi t) for exact rational t; t is reduced mod 2 before any rounding
/// so the argument handed to sin/cos is small regardless of how large the
/// numerator of t is.
inline Cplx exp_i_pi(const Rational& t, mpfr_prec_t prec) {
    Rational reduced = t - Rational(2) * Rational((t / Rational(2)).floor());
    BigFloat angle = BigFloat::pi(prec) * BigFloat::from_rational(reduced, prec);
    Cplx out(prec);
    BigFloat::sin_cos(out.im, out.re, angle);
    return out;
}

/// exp(2 pi i e / m) for integers e, m.
inline Cplx exp_2pi_i(const mpz_class& e, const mpz_class& m, mpfr_prec_t prec) {
    return exp_i_pi(Rational(2 * e, m), prec);
}

}  // namespace wilf
