#include <doctest.h>

#include <numeric>
#include <random>

#include "eqc/braid.hpp"
#include "eqc/errors.hpp"
#include "eqc/random_knots.hpp"
#include "eqc/seifert.hpp"
#include "oracles.hpp"

using namespace eqc;

namespace {

SeifertMatrix trefoil_v() { return SeifertMatrix::from_rows({{-1, 1}, {0, -1}}); }

SeifertMatrix torus_v(long p, long q, Hand h = Hand::Right) { return seifert_matrix_of_closure(torus_knot(p, q, h)); }

bool nondegenerate(const SeifertMatrix& v, long m, long n) {
    return level_is_nondegenerate(alexander_data(v).delta.representative(), SignatureLevel(m, n));
}

}  // namespace

TEST_SUITE("seifert") {

TEST_CASE("signature levels") {
    CHECK(SignatureLevel::parse("1/2").reduced().m == 1);
    CHECK(SignatureLevel::parse("6/4").reduced().m == 1);
    CHECK(SignatureLevel::parse("6/4").reduced().n == 2);
    CHECK(SignatureLevel(-1, 3).reduced().m == 2);
    CHECK(SignatureLevel::parse("0").reduced().n == 1);
    CHECK_THROWS_AS(SignatureLevel::parse("1/0"), DomainError);
    CHECK_THROWS_AS(SignatureLevel::parse("x"), DomainError);
}

TEST_CASE("trefoil") {
    const SeifertMatrix v = trefoil_v();
    CHECK(alexander(v).poly() == LaurentPoly(-1, {1, -1, 1}));
    CHECK(tl_signature(v, SignatureLevel(1, 2)) == -2);
    CHECK(tl_signature(mirror(v), SignatureLevel(1, 2)) == 2);
    CHECK(tl_signature(v, SignatureLevel(0, 1)) == 0);
    CHECK(arf(v) == 1);
    CHECK_THROWS_AS(tl_signature(v, SignatureLevel(1, 6)), DomainError);
    CHECK(averaged_signature(v, SignatureLevel(1, 6)) == Rational(-1));
    CHECK(averaged_signature(v, SignatureLevel(1, 2)) == Rational(-2));
}

TEST_CASE("right-handed torus knots have negative signature") {
    CHECK(tl_signature(torus_v(2, 3), SignatureLevel(1, 2)) == -2);
    CHECK(tl_signature(torus_v(2, 3, Hand::Left), SignatureLevel(1, 2)) == 2);
}

TEST_CASE("matrices that are not knots") {
    CHECK_THROWS_AS(alexander(SeifertMatrix::from_rows({{1, 0}, {0, 1}})), DomainError);
    CHECK_THROWS_AS(alexander(SeifertMatrix::from_rows({{1, 0}})), DomainError);
    CHECK(alexander(SeifertMatrix()) == NormalizedKnotPoly());
}

TEST_CASE("alexander agrees with polynomial elimination") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 80; ++i) {
        const SeifertMatrix v = random_seifert_matrix(rng);
        CHECK(oracle::equal_up_to_unit(oracle::alexander_det(v), alexander(v).poly()));
    }
}

TEST_CASE("mirror, transpose and sums") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 60; ++i) {
        const SeifertMatrix v = random_seifert_matrix(rng, {6, 2, 6});
        const SeifertMatrix w = random_seifert_matrix(rng, {4, 2, 6});
        CHECK(alexander(mirror(v)) == alexander(v));
        CHECK(alexander(v.transpose()) == alexander(v));
        CHECK(alexander(direct_sum(v, w)).poly() == alexander(v).poly() * alexander(w).poly());
        CHECK(arf(direct_sum(v, w)) == (arf(v) + arf(w)) % 2);
        for (long n = 2; n <= 7; ++n)
            for (long m = 1; m < n; ++m) {
                if (!nondegenerate(v, m, n) || !nondegenerate(w, m, n)) continue;
                const SignatureLevel a(m, n);
                const int s = tl_signature(v, a);
                CHECK(tl_signature(mirror(v), a) == -s);
                CHECK(tl_signature(v, SignatureLevel(n - m, n)) == s);
                CHECK(tl_signature(direct_sum(v, w), a) == s + tl_signature(w, a));
                CHECK(s % 2 == 0);
                CHECK(tl_signature(v, SignatureLevel(m + 3 * n, n)) == s);
            }
    }
}

TEST_CASE("signature agrees with the 200-bit oracle") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        const SeifertMatrix v = random_seifert_matrix(rng);
        for (long n = 2; n <= 9; ++n)
            for (long m = 1; m < n; ++m) {
                if (!nondegenerate(v, m, n)) continue;
                const auto ref = oracle::signature200(v, m, n);
                REQUIRE(ref.has_value());
                CHECK(tl_signature(v, SignatureLevel(m, n)) == *ref);
            }
    }
}

TEST_CASE("torus knot signatures match the lattice count") {
    for (long p = 2; p <= 5; ++p)
        for (long q = p + 1; q <= 7; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const SignatureEvaluator ev(torus_v(p, q));
            for (long n = 2; n <= 11; ++n)
                for (long m = 1; m < n; ++m) {
                    const auto ref = oracle::torus_signature(p, q, m, n);
                    if (!ref) continue;
                    CHECK(ev.signature(SignatureLevel(m, n)) == *ref);
                }
        }
}

TEST_CASE("evaluator caching is transparent") {
    const SeifertMatrix v = torus_v(3, 7);
    const SignatureEvaluator ev(v);
    // the roots of Delta are primitive 21st roots of unity
    for (long n : {2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L, 10L, 11L, 12L, 14L, 21L, 42L}) {
        long direct = 0;
        for (long m = 0; m < n; ++m)
            if (nondegenerate(v, m, n)) direct += tl_signature(v, SignatureLevel(m, n));
        if (n % 21 == 0) {
            CHECK_THROWS_AS(ev.signature_sum(n), DomainError);
        } else {
            CHECK(ev.signature_sum(n) == direct);
            CHECK(ev.signature_sum(n) == signature_sum(v, n));
        }
    }
}

TEST_CASE("audit sees every call") {
    int seen = 0, cached = 0;
    {
        ScopedSignatureAudit audit([&](const SignatureProbe& p) {
            ++seen;
            if (p.cached) ++cached;
        });
        const SignatureEvaluator ev(trefoil_v());
        ev.signature(SignatureLevel(1, 2));
        ev.signature(SignatureLevel(1, 2));
        ev.signature(SignatureLevel(2, 5));
        ev.signature(SignatureLevel(3, 5));
    }
    CHECK(seen == 4);
    CHECK(cached == 2);
    tl_signature(trefoil_v(), SignatureLevel(1, 2));
    CHECK(seen == 4);
}

TEST_CASE("precision floor from the environment") {
    CHECK(kernel::precision_floor() >= 100);
    const SeifertMatrix v = torus_v(5, 6, Hand::Left);
    CHECK(kernel::hermitian_signature_mp(v, Rational(1, 2), 128).signature == 16);
    CHECK(kernel::hermitian_signature(v, Rational(1, 2)).signature == 16);
}

}  // TEST_SUITE
