#include <doctest.h>

#include <algorithm>
#include <array>

#include "eqc/casson.hpp"
#include "eqc/errors.hpp"

using namespace eqc;

namespace {

NormalizedKnotPoly torus_delta(long p, long q) {
    return alexander(seifert_matrix_of_closure(torus_knot(p, q, Hand::Right)));
}

}  // namespace

TEST_SUITE("casson") {

TEST_CASE("Brieskorn spheres") {
    CHECK(casson_brieskorn(BrieskornTriple{2, 3, 5}) == -1);
    CHECK(casson_brieskorn(BrieskornTriple{2, 3, 7}) == -1);
    CHECK(casson_brieskorn(BrieskornTriple{2, 3, 11}) == -2);
    CHECK(casson_brieskorn(BrieskornTriple{2, 3, 1}) == 0);
    CHECK(casson_brieskorn(BrieskornTriple{2, 5, 7}) == casson_brieskorn(BrieskornTriple{7, 2, 5}));
    CHECK_THROWS_AS(casson_brieskorn(BrieskornTriple{2, 4, 5}), DomainError);
    CHECK_THROWS_AS(casson_brieskorn(BrieskornTriple{0, 3, 5}), DomainError);
}

TEST_CASE("permutation symmetry on small triples") {
    for (long p = 2; p <= 7; ++p)
        for (long q = p + 1; q <= 9; ++q)
            for (long r = q + 1; r <= 11; ++r) {
                if (gcd_long(p, q) != 1 || gcd_long(p, r) != 1 || gcd_long(q, r) != 1) continue;
                std::array<long, 3> t{p, q, r};
                const Integer base = casson_brieskorn(BrieskornTriple{p, q, r});
                CHECK(base < 0);
                while (std::next_permutation(t.begin(), t.end()))
                    CHECK(casson_brieskorn(BrieskornTriple{t[0], t[1], t[2]}) == base);
            }
}

TEST_CASE("iterated surgery path") {
    CHECK(casson_brieskorn_by_surgery({2, 3, 5}) == -1);
    CHECK(casson_brieskorn_by_surgery({2, 3, 7}) == -1);
    CHECK(casson_brieskorn_by_surgery({2, 3, 11}) == -2);
    CHECK(casson_brieskorn_by_surgery({2, 3, 13}) == -2);
    CHECK(casson_brieskorn_by_surgery({3, 4, 13}) == casson_brieskorn(BrieskornTriple{3, 4, 13}));
    CHECK_THROWS_AS(casson_brieskorn_by_surgery({2, 5, 7}), DomainError);
}

TEST_CASE("surgery formula") {
    // Delta''(1) of T(p,q) is (p^2-1)(q^2-1)/12
    CHECK(casson_surgery(0, torus_delta(2, 3), -1) == -1);
    CHECK(casson_surgery(0, torus_delta(2, 3), 1) == 1);
    CHECK(casson_surgery(5, torus_delta(3, 4), 2) == 5 + 2 * 5);
    CHECK(casson_surgery(7, NormalizedKnotPoly(), 9) == 7);
    SurgerySpec s;
    s.knot = torus_knot(2, 3, Hand::Right);
    s.n = 4;
    s.q = 2;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s.q = 0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s.q = 3;
    CHECK_NOTHROW(s.validate());
    CHECK(seifert_of(s.knot).size() == 2);
}

TEST_CASE("Rohlin bits") {
    CHECK(rohlin_from_casson(-1) == 1);
    CHECK(rohlin_from_casson(4) == 0);
    CHECK(rohlin_surgery(0, 1, 1) == 1);
    CHECK(rohlin_surgery(1, -3, 1) == 0);
    CHECK(rohlin_surgery(1, 2, 1) == 1);
    for (long q = -6; q <= 6; ++q) {
        if (q == 0) continue;
        CHECK(rohlin_from_casson(casson_surgery(0, torus_delta(2, 3), q)) == rohlin_surgery(0, q, 1));
    }
}

}  // TEST_SUITE
