#include "eqc/equivariant.hpp"

#include "eqc/errors.hpp"

namespace eqc {

const char* flag_name(HypothesisFlag f) {
    return f == HypothesisFlag::CoverIsZHS ? "CoverIsZHS" : "CyclicallyFinite";
}

std::set<HypothesisFlag> hypothesis_flags(const NormalizedKnotPoly& delta, long n) {
    std::set<HypothesisFlag> flags;
    if (cover_h1_order(delta, n) == 1) flags.insert(HypothesisFlag::CoverIsZHS);
    bool finite = true;
    for (long d = 1; d <= n && finite; ++d)
        if (n % d == 0 && cover_h1_order(delta, d) == 0) finite = false;
    if (finite) flags.insert(HypothesisFlag::CyclicallyFinite);
    return flags;
}

namespace {

void check_nq(long n, long q) {
    if (n < 1) throw DomainError(ErrorCode::InvalidInput, "n must be positive");
    if (q == 0) throw DomainError(ErrorCode::InvalidInput, "q must be nonzero");
    if (gcd_long(n, q) != 1) throw DomainError(ErrorCode::NotCoprime, "gcd(n, q) != 1");
}

Rational canon(Rational r) {
    r.canonicalize();
    return r;
}

long level_sum(const SignatureEvaluator& v, long n, int parity) {
    long s = 0;
    for (long m = 0; m < n; ++m)
        if (parity < 0 || m % 2 == parity) s += v.signature(SignatureLevel(m, n));
    return s;
}

Integer delta2(const SignatureEvaluator& v) { return second_derivative_at_one(v.alexander().delta); }

}  // namespace

Rational eq_casson_branched(long n, const Integer& lambda_quotient, const SignatureEvaluator& v) {
    if (n < 1) throw DomainError(ErrorCode::InvalidInput, "n must be positive");
    return canon(Rational(Integer(n) * lambda_quotient) + frac(v.signature_sum(n), 8));
}

Rational eq_casson_branched(long n, const Integer& lambda_quotient, const SeifertMatrix& v) {
    return eq_casson_branched(n, lambda_quotient, SignatureEvaluator(v));
}

Integer eq_casson_free(long n, long q, const Integer& lambdaY, const SignatureEvaluator& v) {
    check_nq(n, q);
    if (cover_h1_order(v.alexander().delta, n) != 1)
        throw DomainError(ErrorCode::CoverNotZHS, "the " + std::to_string(n) + "-fold cover is not a homology sphere");
    Rational val = canon(Rational(Integer(n) * lambdaY) + frac(v.signature_sum(n), 8) +
                         frac(Integer(q) * delta2(v), 2));
    if (!is_integer(val)) throw DomainError(ErrorCode::NonIntegralResult, "free equivariant value " + to_string(val));
    return val.get_num();
}

Integer eq_casson_free(long n, long q, const Integer& lambdaY, const SeifertMatrix& v) {
    return eq_casson_free(n, q, lambdaY, SignatureEvaluator(v));
}

BoyerNicasValue boyer_nicas(int w, long n, long q, const Integer& lambdaY, const SignatureEvaluator& v) {
    check_nq(n, q);
    if (w != 0 && w != 1) throw DomainError(ErrorCode::InvalidInput, "w must be 0 or 1");
    if (n % 2 == 1 && w == 1) throw DomainError(ErrorCode::WOddN, "w = 1 needs even n");
    BoyerNicasValue out;
    if (n % 2 == 0) {
        out.value = canon(Rational(Integer(n / 2) * lambdaY) + frac(level_sum(v, n, w), 8) +
                          frac(Integer(q) * delta2(v), 4));
    } else {
        out.value = canon(Rational(Integer(n) * lambdaY) + frac(level_sum(v, n, -1), 8) +
                          frac(Integer(q) * delta2(v), 2));
    }
    out.flags = hypothesis_flags(v.alexander().delta, n);
    return out;
}

BoyerNicasValue boyer_nicas(int w, long n, long q, const Integer& lambdaY, const SeifertMatrix& v) {
    return boyer_nicas(w, n, q, lambdaY, SignatureEvaluator(v));
}

LambdaBarReport lambda_bar(long n, long q, const Integer& lambdaY, const SignatureEvaluator& v) {
    check_nq(n, q);
    LambdaBarReport r;
    r.lambda_bar = canon(Rational(lambdaY) + frac(v.signature_sum(n), 8 * n) +
                         frac(Integer(q) * delta2(v), 2 * n));
    r.lambda0 = boyer_nicas(0, n, q, lambdaY, v).value;
    Rational total = r.lambda0;
    if (n % 2 == 0) {
        r.lambda1 = boyer_nicas(1, n, q, lambdaY, v).value;
        total += *r.lambda1;
    }
    r.relation_holds = canon(Rational(n) * r.lambda_bar) == canon(total);
    return r;
}

LambdaBarReport lambda_bar(long n, long q, const Integer& lambdaY, const SeifertMatrix& v) {
    return lambda_bar(n, q, lambdaY, SignatureEvaluator(v));
}

Integer mu_bar(const SignatureEvaluator& v) {
    if (abs(v.alexander().delta.poly().evaluate(Integer(-1))) != 1)
        throw DomainError(ErrorCode::DoubleCoverNotZHS, "|Delta(-1)| != 1");
    const int s = v.signature(SignatureLevel(1, 2));
    if (s % 8 != 0) throw DomainError(ErrorCode::NonIntegral, "signature " + std::to_string(s) + " not divisible by 8");
    return Integer(s / 8);
}

Integer mu_bar(const SeifertMatrix& v) { return mu_bar(SignatureEvaluator(v)); }

Integer floer_lefschetz(const Integer& lambda_tau) { return 2 * lambda_tau; }

bool seifert_lefschetz_check(long b1, long b3, long b5, long b7, const Integer& lambda_tau) {
    if (b1 < 0 || b3 < 0 || b5 < 0 || b7 < 0) throw DomainError(ErrorCode::InvalidInput, "ranks must be nonnegative");
    return Integer(-b1 + b3 - b5 + b7) == floer_lefschetz(lambda_tau);
}

int grading_sign(long k) {
    const long r = mod_floor(k, 4);
    if (r == 1) return 1;
    if (r == 3) return -1;
    return 0;
}

ArfCoverReport arf_cover_check(const SignatureEvaluator& v, long n) {
    const NormalizedKnotPoly& delta = v.alexander().delta;
    ArfCoverReport r;
    r.arf_knot = levine_arf(delta);
    r.arf_cover = levine_arf(fox_cover_polynomial(delta, n));
    r.pass = r.arf_knot == r.arf_cover;
    return r;
}

ArfCoverReport arf_cover_check(const SeifertMatrix& v, long n) { return arf_cover_check(SignatureEvaluator(v), n); }

RohlinReport rohlin_reduction_check(long n, long q, const Integer& lambdaY, const SignatureEvaluator& v) {
    RohlinReport r;
    r.free_value = eq_casson_free(n, q, lambdaY, v);
    r.branched_value = eq_casson_branched(n, lambdaY, v);
    r.arf = levine_arf(v.alexander().delta);
    r.lhs = rohlin_from_casson(r.free_value);
    // the branched value is an integer whenever the cover is a ZHS
    if (!is_integer(r.branched_value))
        throw DomainError(ErrorCode::NonIntegralResult, "branched value " + to_string(r.branched_value));
    r.rhs = rohlin_surgery(rohlin_from_casson(r.branched_value.get_num()), q, r.arf);
    r.pass = r.lhs == r.rhs;
    return r;
}

RohlinReport rohlin_reduction_check(long n, long q, const Integer& lambdaY, const SeifertMatrix& v) {
    return rohlin_reduction_check(n, q, lambdaY, SignatureEvaluator(v));
}

EquivariantReport equivariant_report(long n, long q, const Integer& lambdaY, const SignatureEvaluator& v) {
    check_nq(n, q);
    EquivariantReport rep;
    rep.flags = hypothesis_flags(v.alexander().delta, n);
    rep.lambda_tau = canon(Rational(Integer(n) * lambdaY) + frac(v.signature_sum(n), 8) +
                           frac(Integer(q) * delta2(v), 2));
    rep.lambda0 = boyer_nicas(0, n, q, lambdaY, v).value;
    if (n % 2 == 0) rep.lambda1 = boyer_nicas(1, n, q, lambdaY, v).value;
    if (rep.flags.count(HypothesisFlag::CoverIsZHS) && is_integer(rep.lambda_tau))
        rep.rho = rohlin_from_casson(rep.lambda_tau.get_num());
    try {
        rep.mu_bar = mu_bar(v);
    } catch (const DomainError&) {
        // only defined when the double branched cover is a ZHS
    }
    rep.lefschetz = canon(2 * rep.lambda_tau);
    return rep;
}

}  // namespace eqc
