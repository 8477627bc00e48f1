#pragma once

#include <optional>
#include <set>
#include <string>

#include "eqc/casson.hpp"
#include "eqc/seifert.hpp"

namespace eqc {

enum class HypothesisFlag { CoverIsZHS, CyclicallyFinite };
const char* flag_name(HypothesisFlag f);

// CoverIsZHS: cover_h1_order(delta, n) = 1.
// CyclicallyFinite: cover_h1_order(delta, d) != 0 for every d | n.
std::set<HypothesisFlag> hypothesis_flags(const NormalizedKnotPoly& delta, long n);

// n * lambda + (1/8) sum_m sign^{m/n}
Rational eq_casson_branched(long n, const Integer& lambda_quotient, const SignatureEvaluator& v);
Rational eq_casson_branched(long n, const Integer& lambda_quotient, const SeifertMatrix& v);

// n * lambda(Y) + (1/8) sum_m sign^{m/n} + (q/2) Delta''(1); the cover must be a ZHS
Integer eq_casson_free(long n, long q, const Integer& lambdaY, const SignatureEvaluator& v);
Integer eq_casson_free(long n, long q, const Integer& lambdaY, const SeifertMatrix& v);

struct BoyerNicasValue {
    Rational value;
    std::set<HypothesisFlag> flags;
};

BoyerNicasValue boyer_nicas(int w, long n, long q, const Integer& lambdaY, const SignatureEvaluator& v);
BoyerNicasValue boyer_nicas(int w, long n, long q, const Integer& lambdaY, const SeifertMatrix& v);

struct LambdaBarReport {
    Rational lambda_bar;
    Rational lambda0;
    std::optional<Rational> lambda1;  // even n only
    bool relation_holds = false;      // n * lambda_bar = lambda0 (+ lambda1)
};

LambdaBarReport lambda_bar(long n, long q, const Integer& lambdaY, const SignatureEvaluator& v);
LambdaBarReport lambda_bar(long n, long q, const Integer& lambdaY, const SeifertMatrix& v);

// (1/8) sign^{1/2}; the double branched cover must be a ZHS
Integer mu_bar(const SignatureEvaluator& v);
Integer mu_bar(const SeifertMatrix& v);

Integer floer_lefschetz(const Integer& lambda_tau);
bool seifert_lefschetz_check(long b1, long b3, long b5, long b7, const Integer& lambda_tau);
// +1 on gradings 1 mod 4, -1 on 3 mod 4, 0 on even gradings (trivial groups)
int grading_sign(long k);

struct ArfCoverReport {
    int arf_knot = 0;
    int arf_cover = 0;
    bool pass = false;
};

ArfCoverReport arf_cover_check(const SignatureEvaluator& v, long n);
ArfCoverReport arf_cover_check(const SeifertMatrix& v, long n);

struct RohlinReport {
    Integer free_value;
    Rational branched_value;
    int arf = 0;
    int lhs = 0;  // free value mod 2
    int rhs = 0;  // (branched + q arf) mod 2
    bool pass = false;
};

RohlinReport rohlin_reduction_check(long n, long q, const Integer& lambdaY, const SignatureEvaluator& v);
RohlinReport rohlin_reduction_check(long n, long q, const Integer& lambdaY, const SeifertMatrix& v);

struct EquivariantReport {
    Rational lambda_tau;
    Rational lambda0;
    std::optional<Rational> lambda1;
    std::optional<int> rho;
    std::optional<Integer> mu_bar;
    Rational lefschetz;
    std::set<HypothesisFlag> flags;
};

EquivariantReport equivariant_report(long n, long q, const Integer& lambdaY, const SignatureEvaluator& v);

}  // namespace eqc
