#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqc/intpoly.hpp"
#include "eqc/numeric.hpp"

namespace eqc {

// Integer Laurent polynomial in t, stored densely from the lowest exponent.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Integer& constant);  // NOLINT: implicit constants are convenient
    LaurentPoly(long low, std::vector<Integer> coeffs);

    static LaurentPoly monomial(const Integer& c, long exponent);
    static LaurentPoly from_terms(const std::map<long, Integer>& terms);
    static LaurentPoly from_intpoly(const IntPoly& p, long shift = 0);

    bool is_zero() const { return coeffs_.empty(); }
    long min_exponent() const;
    long max_exponent() const;
    Integer coeff(long exponent) const;

    // nonzero terms, exponents increasing
    std::vector<std::pair<long, Integer>> terms() const;

    // coefficients from min_exponent upward
    const std::vector<Integer>& dense() const { return coeffs_; }

    LaurentPoly shifted(long k) const;
    LaurentPoly substitute_inverse() const;  // p(1/t)

    Rational evaluate(const Rational& x) const;
    Integer evaluate(const Integer& x) const;  // requires the result to be integral

    std::string to_string() const;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

private:
    void canonicalize();

    long low_ = 0;
    std::vector<Integer> coeffs_;
};

// Symmetric polynomial with value 1 at t = 1. Built only by normalize().
class NormalizedKnotPoly {
public:
    NormalizedKnotPoly() : p_(Integer(1)) {}

    const LaurentPoly& poly() const { return p_; }
    long half_degree() const { return p_.max_exponent(); }
    // t^half_degree * poly, an ordinary integer polynomial
    IntPoly representative() const;

    bool operator==(const NormalizedKnotPoly& o) const { return p_ == o.p_; }
    bool operator!=(const NormalizedKnotPoly& o) const { return p_ != o.p_; }

private:
    friend NormalizedKnotPoly normalize(const LaurentPoly& p);
    explicit NormalizedKnotPoly(LaurentPoly p) : p_(std::move(p)) {}
    LaurentPoly p_;
};

NormalizedKnotPoly normalize(const LaurentPoly& p);

Integer second_derivative_at_one(const NormalizedKnotPoly& d);

int levine_arf(const NormalizedKnotPoly& d);

Integer cover_h1_order(const NormalizedKnotPoly& d, long n);

NormalizedKnotPoly fox_cover_polynomial(const NormalizedKnotPoly& d, long n);

struct GaloisReport {
    Integer D_at_minus1;
    Integer d_at_minus1;
    std::optional<long> ratio_residue;  // (D(-1)/d(-1)) mod 8 when the quotient is integral
    bool nu_square = false;  // D(-1), or D(-1)/d(-1) for odd n, is a perfect square
    bool equal = false;      // D(-1) = d(-1); not implied for even n
    // n even: D(-1) = 1 mod 8 and d(-1) = 1; n odd: quotient = 1 mod 8
    bool pass = false;
};

GaloisReport galois_check(const NormalizedKnotPoly& d, long n);

}  // namespace eqc
