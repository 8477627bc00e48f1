#include "eqc/pillowcase.hpp"

#include <algorithm>
#include <stdexcept>

#include "eqc/errors.hpp"

namespace eqc {

namespace {

Rational canon(Rational r) {
    r.canonicalize();
    return r;
}

// representative in [0, 2)
Rational mod2(const Rational& r) {
    Rational x = canon(r);
    Integer q;
    Integer twice_den = 2 * x.get_den();
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), twice_den.get_mpz_t());
    return canon(x - Rational(2 * q));
}

bool is_even_integer(const Rational& r) {
    Rational x = canon(r);
    return x.get_den() == 1 && mpz_even_p(x.get_num_mpz_t());
}

long inverse_mod(long a, long m) {
    // extended Euclid, a and m coprime
    long g = m, x = 0, x1 = 1, r = mod_floor(a, m);
    while (r != 0) {
        long t = g / r;
        std::tie(g, r) = std::make_pair(r, g - t * r);
        std::tie(x, x1) = std::make_pair(x1, x - t * x1);
    }
    return mod_floor(x, m);
}

void sort_arcs(std::vector<PCArc>& arcs) { std::sort(arcs.begin(), arcs.end()); }

}  // namespace

bool PCArc::operator<(const PCArc& o) const {
    if (lo != o.lo) return lo < o.lo;
    if (hi != o.hi) return hi < o.hi;
    if (slope != o.slope) return slope < o.slope;
    if (offset != o.offset) return offset < o.offset;
    return orientation < o.orientation;
}

PillowcaseCurve torus_knot_curve(long p, long q, Hand hand) {
    if (p < 2 || q < 2 || gcd_long(p, q) != 1)
        throw DomainError(ErrorCode::NotCoprime, "T(" + std::to_string(p) + "," + std::to_string(q) + ")");
    const long pq = p * q;
    // c q + d p = 1
    const long c = inverse_mod(q, p);
    const long d = (1 - c * q) / p;
    const long slope = hand == Hand::Right ? -pq : pq;
    PillowcaseCurve curve;
    curve.knot_tag = std::string("T(") + std::to_string(p) + "," + std::to_string(q) + "," + hand_name(hand) + ")";
    auto endpoint = [&](long k) {
        Rational x = mod2(Rational(k, pq));
        return x > 1 ? canon(2 - x) : x;
    };
    for (long a = 1; a < p; ++a)
        for (long b = 1; b < q; ++b) {
            if ((a - b) % 2 != 0) continue;
            const Rational e1 = endpoint(a * c * q + b * d * p);
            const Rational e2 = endpoint(a * c * q - b * d * p);
            PCArc arc;
            arc.slope = slope;
            arc.offset = Rational(a % 2);
            // the left curve is the reflection psi -> -psi, which reverses orientation
            arc.orientation = hand == Hand::Right ? 1 : -1;
            arc.lo = std::min(e1, e2);
            arc.hi = std::max(e1, e2);
            for (const Rational& e : {arc.lo, arc.hi})
                if (!is_even_integer(Rational(slope) * e + arc.offset))
                    throw std::logic_error("arc endpoint off the reducible circle");
            PCArc image = arc;
            image.lo = canon(2 - arc.hi);
            image.hi = canon(2 - arc.lo);
            curve.arcs.push_back(arc);
            curve.arcs.push_back(image);
        }
    sort_arcs(curve.arcs);
    return curve;
}

PillowcaseCurve apply_sigma(const PillowcaseCurve& c) {
    PillowcaseCurve out;
    out.knot_tag = c.knot_tag;
    for (const PCArc& a : c.arcs) {
        PCArc s;
        s.slope = a.slope;
        // 2 - (S (2 - x) + g) = S x + 2 - 2S - g
        s.offset = mod2(Rational(2 - 2 * a.slope) - a.offset);
        s.lo = canon(2 - a.hi);
        s.hi = canon(2 - a.lo);
        s.orientation = a.orientation;
        out.arcs.push_back(s);
    }
    sort_arcs(out.arcs);
    return out;
}

bool is_sigma_invariant(const PillowcaseCurve& c) {
    PillowcaseCurve s = apply_sigma(c);
    std::vector<PCArc> a = c.arcs;
    sort_arcs(a);
    return a == s.arcs;
}

TorusLine surgery_line(long n, long q, int w) {
    if (n < 1 || q == 0 || gcd_long(n, q) != 1) throw DomainError(ErrorCode::NotCoprime, "surgery line needs gcd(n, q) = 1");
    if (w != 0 && w != 1) throw DomainError(ErrorCode::InvalidInput, "w must be 0 or 1");
    return {Rational(0), Rational(w), -q, n};
}

TorusLine phi_circle(const Rational& phi) { return {mod2(phi), Rational(0), 0, 1}; }

TorusLine psi_pi_circle() { return {Rational(0), Rational(1), 1, 0}; }

Integer intersect(const PillowcaseCurve& c, const TorusLine& line) {
    Integer total = 0;
    for (const PCArc& arc : c.arcs) {
        // y0 + B s = S (x0 + A s) + g (mod 2)
        const long denom = arc.slope * line.a - line.b;
        const Rational base = canon(line.y0 - arc.offset - Rational(arc.slope) * line.x0);
        if (denom == 0) {
            if (is_even_integer(base)) throw DomainError(ErrorCode::DegenerateCurve, "curve runs along an arc");
            continue;
        }
        // s = (base + 2m) / denom in [0, 2)
        const long span = std::abs(denom);
        const Rational b0 = canon(base / Rational(denom));
        // smallest solution in [0, 2 / span), then step by 2 / span
        const Rational scaled = canon(b0 * Rational(span, 2));
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
        const Rational s_min = canon(b0 - Rational(2 * fl, Integer(span)));
        for (long k = 0; k < span; ++k) {
            const Rational s = canon(s_min + Rational(2 * k, span));
            const Rational phi = mod2(line.x0 + Rational(line.a) * s);
            if (phi == arc.lo || phi == arc.hi) throw DomainError(ErrorCode::EndpointHit, "curve meets an arc endpoint");
            if (arc.lo < phi && phi < arc.hi) total += arc.orientation * (line.b - arc.slope * line.a > 0 ? 1 : -1);
        }
    }
    return total;
}

Integer intersect_line(const PillowcaseCurve& c, long n, long q, int w) { return intersect(c, surgery_line(n, q, w)); }

Integer intersect_circle(const PillowcaseCurve& c, CircleKind kind, const Rational& phi) {
    return kind == CircleKind::PsiEqualsPi ? intersect(c, psi_pi_circle()) : intersect(c, phi_circle(phi));
}

std::vector<Rational> circle_union_positions(long n, int w) {
    if (n < 1) throw DomainError(ErrorCode::InvalidInput, "n must be positive");
    std::vector<Rational> out;
    for (long j = 0; j < n; ++j) out.push_back(mod2(Rational(w + 2 * j, n)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Integer intersect_circle_union(const PillowcaseCurve& c, long n, int w) {
    Integer total = 0;
    for (const Rational& x : circle_union_positions(n, w)) total += intersect(c, phi_circle(x));
    return total;
}

int calibrated_sign() {
    static const int sign = [] {
        const PillowcaseCurve t = torus_knot_curve(2, 3, Hand::Right);
        const Integer circ = intersect_circle_union(t, 5, 0);
        const Integer pi = intersect(t, psi_pi_circle());
        const Integer line = intersect_line(t, 5, 1, 0);
        // line = circ + sign * pi with q = 1
        if (pi == 0 || abs(line - circ) != abs(pi)) throw std::logic_error("pillowcase calibration failed");
        return (line - circ) == pi ? 1 : -1;
    }();
    return sign;
}

bool decomposition_check(const PillowcaseCurve& c, long n, long q, int w) {
    const Integer line = intersect_line(c, n, q, w);
    const Integer circ = intersect_circle_union(c, n, w);
    const Integer pi = intersect(c, psi_pi_circle());
    return line == circ + Integer(q) * calibrated_sign() * pi;
}

Rational pillowcase_lambda(const PillowcaseCurve& c, long n, long q, int w) {
    const Integer count = intersect_line(c, n, q, w);
    Rational r(Integer(calibrated_sign()) * count, Integer(n % 2 == 0 ? 8 : 4));
    r.canonicalize();
    return r;
}

}  // namespace eqc
