#include "eqc/mp.hpp"

#include <algorithm>

namespace eqc::mp {

Real::Real(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Integer& v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& v, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, o.precision());
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::pi(mpfr_prec_t bits) {
    Real r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

namespace {

void widen(Real& a, const Real& b) {
    if (b.precision() > a.precision()) mpfr_prec_round(a.raw(), b.precision(), MPFR_RNDN);
}

}  // namespace

Real& Real::operator+=(const Real& o) {
    widen(*this, o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o) {
    widen(*this, o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o) {
    widen(*this, o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o) {
    widen(*this, o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real operator+(const Real& a, const Real& b) { Real r(a); r += b; return r; }
Real operator-(const Real& a, const Real& b) { Real r(a); r -= b; return r; }
Real operator*(const Real& a, const Real& b) { Real r(a); r *= b; return r; }
Real operator/(const Real& a, const Real& b) { Real r(a); r /= b; return r; }

Real operator-(const Real& a) {
    Real r(a);
    mpfr_neg(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }

Real abs(const Real& a) {
    Real r(a);
    mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

Real sqrt(const Real& a) {
    Real r(a);
    mpfr_sqrt(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

Real cos(const Real& a) {
    Real r(a);
    mpfr_cos(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

Real sin(const Real& a) {
    Real r(a);
    mpfr_sin(r.raw(), r.raw(), MPFR_RNDN);
    return r;
}

Real mul_2si(const Real& a, long e) {
    Real r(a);
    mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
    return r;
}

namespace {

Rational frac(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    Rational f = r - Rational(q);
    f.canonicalize();
    return f;
}

}  // namespace

Real cos_2pi(const Rational& r, mpfr_prec_t bits) {
    Real x(frac(r), bits + 16);
    x *= Real::pi(bits + 16);
    x = mul_2si(x, 1);
    Real c = cos(x);
    mpfr_prec_round(c.raw(), bits, MPFR_RNDN);
    return c;
}

Real sin_2pi(const Rational& r, mpfr_prec_t bits) {
    Real x(frac(r), bits + 16);
    x *= Real::pi(bits + 16);
    x = mul_2si(x, 1);
    Real s = sin(x);
    mpfr_prec_round(s.raw(), bits, MPFR_RNDN);
    return s;
}

}  // namespace eqc::mp
