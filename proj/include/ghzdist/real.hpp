// Thin RAII wrapper around mpfr_t.  Every value carries its binary
// precision; binary operations produce max(precision of operands), so
// precision never degrades silently.

#pragma once

#include <mpfr.h>

#include <string>

#include "ghzdist/rational.hpp"

namespace ghzdist {

class Real {
  public:
    explicit Real(mpfr_prec_t prec = 192) { mpfr_init2(value_, prec); mpfr_set_zero(value_, 1); }
    Real(const Real& other) {
        mpfr_init2(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    Real(Real&& other) noexcept {
        mpfr_init2(value_, other.precision());
        mpfr_swap(value_, other.value_);
    }
    Real& operator=(const Real& other) {
        if (this != &other) {
            mpfr_set_prec(value_, other.precision());
            mpfr_set(value_, other.value_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& other) noexcept {
        if (this != &other) mpfr_swap(value_, other.value_);
        return *this;
    }
    ~Real() { mpfr_clear(value_); }

    static Real of(long value, mpfr_prec_t prec) {
        Real out(prec);
        mpfr_set_si(out.value_, value, MPFR_RNDN);
        return out;
    }
    static Real of(const Int& value, mpfr_prec_t prec) {
        Real out(prec);
        mpfr_set_z(out.value_, value.get_mpz_t(), MPFR_RNDN);
        return out;
    }
    static Real of(const Rat& value, mpfr_prec_t prec) {
        Real out(prec);
        mpfr_set_q(out.value_, value.get_mpq_t(), MPFR_RNDN);
        return out;
    }
    // 2^exponent, exact.
    static Real pow2(long exponent, mpfr_prec_t prec) {
        Real out(prec);
        mpfr_set_ui_2exp(out.value_, 1, exponent, MPFR_RNDN);
        return out;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
    int sign() const { return mpfr_sgn(value_); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    Real abs() const {
        Real out(precision());
        mpfr_abs(out.value_, value_, MPFR_RNDN);
        return out;
    }

    static Real log(const Real& v) {
        Real out(v.precision());
        mpfr_log(out.value_, v.value_, MPFR_RNDN);
        return out;
    }
    static Real log_of(const Rat& v, mpfr_prec_t prec) { return log(of(v, prec)); }

    static Real max(const Real& a, const Real& b) { return mpfr_cmp(a.value_, b.value_) >= 0 ? a : b; }

    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }
    friend Real operator-(const Real& a) {
        Real out(a.precision());
        mpfr_neg(out.value_, a.value_, MPFR_RNDN);
        return out;
    }
    Real& operator+=(const Real& other) { *this = *this + other; return *this; }
    Real& operator-=(const Real& other) { *this = *this - other; return *this; }
    Real& operator*=(const Real& other) { *this = *this * other; return *this; }
    Real& operator/=(const Real& other) { *this = *this / other; return *this; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.value_, b.value_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.value_, b.value_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.value_, b.value_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.value_, b.value_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.value_, b.value_) == 0; }

    // Shortest-ish decimal with the requested number of significant digits.
    std::string to_decimal(int significant_digits = 12) const;
    // All decimal digits the binary precision supports.
    std::string to_full_decimal() const;

    mpfr_srcptr raw() const { return value_; }
    mpfr_ptr raw() { return value_; }

  private:
    using MpfrBinop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real binop(const Real& a, const Real& b, MpfrBinop op) {
        Real out(a.precision() >= b.precision() ? a.precision() : b.precision());
        op(out.value_, a.value_, b.value_, MPFR_RNDN);
        return out;
    }

    mpfr_t value_;
};

}  // namespace ghzdist
