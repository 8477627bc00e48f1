#pragma once

#include <variant>

#include "eqc/braid.hpp"
#include "eqc/seifert.hpp"

namespace eqc {

using KnotRef = std::variant<SeifertMatrix, BraidWord>;

SeifertMatrix seifert_of(const KnotRef& k);

struct SurgerySpec {
    Integer lambdaY = 0;
    KnotRef knot;
    long n = 1;
    long q = 1;

    // gcd(n, q) = 1, q != 0, n >= 1
    void validate() const;
};

struct BrieskornTriple {
    long p = 2, q = 3, r = 5;
    void validate() const;
};

// lambda(Y + (1/q) k) = lambda(Y) + (q/2) Delta''(1)
Integer casson_surgery(const Integer& lambdaY, const NormalizedKnotPoly& delta, long q);

// (1/8) of the signature sum of the right-handed T(p,q) over r levels.
Integer casson_brieskorn(const BrieskornTriple& t);
// Same, reusing an evaluator built from the right-handed T(p,q).
Integer casson_brieskorn(const SignatureEvaluator& torus_pq, long r);

// Iterated (-1)-surgery from S^3 = Sigma(p,q,+-1); needs r = +-1 mod pq.
Integer casson_brieskorn_by_surgery(const BrieskornTriple& t);

int rohlin_from_casson(const Integer& lambda);
int rohlin_surgery(int rhoY, long q, int arf_k);

}  // namespace eqc
