#pragma once

#include <string>
#include <vector>

#include "eqc/braid.hpp"
#include "eqc/numeric.hpp"

namespace eqc {

// Coordinates on the torus double cover of the pillowcase, in units of pi,
// both read modulo 2.
struct PCPoint {
    Rational phi;
    Rational psi;
};

// psi = slope * phi + offset on the open interval (lo, hi) of phi.
struct PCArc {
    long slope = 0;
    Rational offset;
    Rational lo, hi;
    int orientation = 1;

    bool operator==(const PCArc& o) const {
        return slope == o.slope && offset == o.offset && lo == o.lo && hi == o.hi && orientation == o.orientation;
    }
    bool operator<(const PCArc& o) const;
};

struct PillowcaseCurve {
    std::vector<PCArc> arcs;  // sorted
    std::string knot_tag;
};

PillowcaseCurve torus_knot_curve(long p, long q, Hand hand);

// Image under (phi, psi) -> (2 - phi, 2 - psi), arcs re-oriented by phi.
PillowcaseCurve apply_sigma(const PillowcaseCurve& c);
bool is_sigma_invariant(const PillowcaseCurve& c);

// Closed straight curve base + s * direction, s in [0, 2), direction primitive.
struct TorusLine {
    Rational x0, y0;
    long a = 0, b = 1;
};

TorusLine surgery_line(long n, long q, int w);   // psi = w - (n/q) phi
TorusLine phi_circle(const Rational& phi);       // phi = const
TorusLine psi_pi_circle();                       // psi = 1

// Oriented count of arc crossings; EndpointHit on an endpoint, DegenerateCurve
// when the line runs along an arc.
Integer intersect(const PillowcaseCurve& c, const TorusLine& line);

Integer intersect_line(const PillowcaseCurve& c, long n, long q, int w);

enum class CircleKind { PhiEquals, PsiEqualsPi };
Integer intersect_circle(const PillowcaseCurve& c, CircleKind kind, const Rational& phi = Rational(0));

// phi positions where the surgery line meets psi = 0
std::vector<Rational> circle_union_positions(long n, int w);
Integer intersect_circle_union(const PillowcaseCurve& c, long n, int w);

// Global sign read off the trefoil with n = 5, q = 1 and frozen thereafter.
int calibrated_sign();

// line count = circle-union count + q * sign * (psi = pi count)
bool decomposition_check(const PillowcaseCurve& c, long n, long q, int w);

// sign * count / 8 for even n, sign * count / 4 for odd n
Rational pillowcase_lambda(const PillowcaseCurve& c, long n, long q, int w);

}  // namespace eqc
