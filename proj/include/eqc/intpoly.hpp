#pragma once

#include <vector>

#include "eqc/matrix.hpp"
#include "eqc/numeric.hpp"

namespace eqc {

// Dense integer polynomial, entry i is the coefficient of x^i. Trimmed
// representations have a nonzero leading entry; the zero polynomial is empty.
using IntPoly = std::vector<Integer>;

void trim(IntPoly& p);
long degree(const IntPoly& p);

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
Integer poly_eval(const IntPoly& p, const Integer& x);

// Remainder and exact quotient by a monic divisor.
IntPoly poly_rem_monic(const IntPoly& a, const IntPoly& m);
IntPoly poly_div_exact_monic(const IntPoly& a, const IntPoly& m);

// n-th cyclotomic polynomial, n >= 1.
IntPoly cyclotomic(long n);

// Fraction-free determinant.
Integer bareiss_determinant(DenseMatrix<Integer> a);

// det of multiplication by f on Z[x]/(g), g monic of positive degree.
// Equals the product of f over the roots of g.
Integer multiplication_norm(const IntPoly& f, const IntPoly& g);

}  // namespace eqc
