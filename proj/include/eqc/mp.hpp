#pragma once

#include <mpfr.h>

#include <string>

#include "eqc/numeric.hpp"

namespace eqc::mp {

// Owning MPFR value with its own precision; results of binary operations
// take the larger precision of the two operands.
class Real {
public:
    explicit Real(mpfr_prec_t bits = 128);
    Real(long v, mpfr_prec_t bits);
    Real(const Integer& v, mpfr_prec_t bits);
    Real(const Rational& v, mpfr_prec_t bits);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    static Real pi(mpfr_prec_t bits);

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

private:
    mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);
bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);

Real abs(const Real& a);
Real sqrt(const Real& a);
Real cos(const Real& a);
Real sin(const Real& a);
Real mul_2si(const Real& a, long e);  // a * 2^e

// cos(2 pi r) and sin(2 pi r)
Real cos_2pi(const Rational& r, mpfr_prec_t bits);
Real sin_2pi(const Rational& r, mpfr_prec_t bits);

}  // namespace eqc::mp
