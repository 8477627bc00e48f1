#include "eqc/casson.hpp"

#include "eqc/errors.hpp"

namespace eqc {

SeifertMatrix seifert_of(const KnotRef& k) {
    if (const auto* v = std::get_if<SeifertMatrix>(&k)) return *v;
    return seifert_matrix_of_closure(std::get<BraidWord>(k));
}

void SurgerySpec::validate() const {
    if (n < 1) throw DomainError(ErrorCode::InvalidInput, "n must be positive");
    if (q == 0) throw DomainError(ErrorCode::InvalidInput, "q must be nonzero");
    if (gcd_long(n, q) != 1) throw DomainError(ErrorCode::NotCoprime, "gcd(n, q) != 1");
}

void BrieskornTriple::validate() const {
    if (p < 1 || q < 1 || r < 1) throw DomainError(ErrorCode::InvalidInput, "Brieskorn entries must be positive");
    if (gcd_long(p, q) != 1 || gcd_long(p, r) != 1 || gcd_long(q, r) != 1)
        throw DomainError(ErrorCode::NotCoprime, "Brieskorn entries must be pairwise coprime");
}

Integer casson_surgery(const Integer& lambdaY, const NormalizedKnotPoly& delta, long q) {
    // second derivative is even
    return lambdaY + Integer(q) * (second_derivative_at_one(delta) / 2);
}

Integer casson_brieskorn(const SignatureEvaluator& torus_pq, long r) {
    const long sum = torus_pq.signature_sum(r);
    if (sum % 8 != 0)
        throw DomainError(ErrorCode::NonIntegralResult, "signature sum " + std::to_string(sum) + " not divisible by 8");
    return Integer(sum / 8);
}

Integer casson_brieskorn(const BrieskornTriple& t) {
    t.validate();
    if (t.p == 1 || t.q == 1 || t.r == 1) return 0;  // S^3
    SignatureEvaluator ev(seifert_matrix_of_closure(torus_knot(t.p, t.q, Hand::Right)));
    return casson_brieskorn(ev, t.r);
}

Integer casson_brieskorn_by_surgery(const BrieskornTriple& t) {
    t.validate();
    if (t.p == 1 || t.q == 1 || t.r == 1) return 0;
    const long pq = t.p * t.q;
    const long res = mod_floor(t.r, pq);
    if (res != 1 && res != pq - 1)
        throw DomainError(ErrorCode::InvalidInput, "surgery path needs r = +-1 mod pq");
    const NormalizedKnotPoly delta = alexander(seifert_matrix_of_closure(torus_knot(t.p, t.q, Hand::Right)));
    long r = res == 1 ? 1 : -1;
    Integer lambda = 0;
    for (; r < t.r; r += pq) lambda = casson_surgery(lambda, delta, -1);
    return lambda;
}

int rohlin_from_casson(const Integer& lambda) { return static_cast<int>(mod_floor(lambda, 2)); }

int rohlin_surgery(int rhoY, long q, int arf_k) { return static_cast<int>(mod_floor(rhoY + q * arf_k, 2)); }

}  // namespace eqc
