#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace eqc {

using Integer = mpz_class;
using Rational = mpq_class;

// Residue of a in [0, m).
long mod_floor(const Integer& a, long m);
long mod_floor(long a, long m);

long gcd_long(long a, long b);

bool fits_int64(const Integer& a);
std::int64_t to_int64(const Integer& a);

// "p/q" for non-integers, plain decimal for integers.
std::string to_string(const Integer& a);
std::string to_string(const Rational& a);

// Accepts "p", "-p" and "p/q"; throws DomainError(InvalidInput) otherwise.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

bool is_integer(const Rational& a);

// num/den in lowest terms, den != 0
Rational frac(const Integer& num, const Integer& den);

}  // namespace eqc
