#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "laurent/arith.hpp"

using namespace laurent;

TEST_CASE("xgcd returns a positive gcd and an exact Bezout identity") {
    auto r = xgcd(3, 10);
    CHECK(r.g == 1);
    CHECK(r.s * 3 + r.t * 10 == 1);

    r = xgcd(10, 10);
    CHECK(r.g == 10);
    CHECK(r.s * 10 + r.t * 10 == 10);

    for (i64 m : {2, 7, 100}) {
        r = xgcd(1, m);
        CHECK(r.g == 1);
        CHECK(r.s * 1 + r.t * m == 1);
    }

    CHECK_THROWS_AS(xgcd(0, 0), std::domain_error);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        i64 u = static_cast<i64>(rng() % 2001) - 1000;
        i64 v = static_cast<i64>(rng() % 2001) - 1000;
        if (u == 0 && v == 0) continue;
        auto w = xgcd(u, v);
        CHECK(w.g > 0);
        CHECK(w.s * u + w.t * v == w.g);
        CHECK(w.g == gcd64(u < 0 ? -u : u, v < 0 ? -v : v));
    }
}

TEST_CASE("normalize_mod lands in {1,...,m}") {
    CHECK(normalize_mod(-3, 10) == 7);
    CHECK(normalize_mod(10, 10) == 10);
    CHECK(normalize_mod(-1, 15) == 14);
    CHECK(normalize_mod(0, 5) == 5);
    CHECK(normalize_mod(23, 5) == 3);
    CHECK_THROWS_AS(normalize_mod(1, 0), std::domain_error);
}

TEST_CASE("bezout_with_unit_constraint worked values") {
    auto w = bezout_with_unit_constraint(1, 3, 10);
    CHECK(w.a == 3);
    CHECK(w.b == 0);
    CHECK(w.d == 1);
    CHECK(w.holds());

    w = bezout_with_unit_constraint(7, 7, 10);
    CHECK(w.a == 1);
    CHECK(w.b == 0);
    CHECK(w.holds());

    w = bezout_with_unit_constraint(2, 4, 10);
    CHECK(w.d == 2);
    CHECK(w.holds());
    CHECK(4 == w.a * 2 + w.b * 10);
    CHECK(gcd64(w.a, 5) == 1);
}

TEST_CASE("bezout_with_unit_constraint rejects unequal gcds") {
    CHECK_THROWS_AS(bezout_with_unit_constraint(1, 2, 10), std::domain_error);
    CHECK_THROWS_AS(bezout_with_unit_constraint(5, 3, 10), std::domain_error);
}

TEST_CASE("bezout witness invariants hold on a random grid") {
    std::mt19937_64 rng(11);
    int tested = 0;
    while (tested < 400) {
        i64 m = 2 + static_cast<i64>(rng() % 199);
        i64 ell = 1 + static_cast<i64>(rng() % 200);
        i64 ellPrime = 1 + static_cast<i64>(rng() % 200);
        if (gcd64(ell, m) != gcd64(ellPrime, m)) continue;
        auto w = bezout_with_unit_constraint(ell, ellPrime, m);
        CHECK(w.holds());
        CHECK(w.a >= 0);
        if (m / w.d > 1) CHECK(w.a < m / w.d); // normalized representative
        ++tested;
    }
}

TEST_CASE("unimodular_complete worked values and tie-breaking") {
    auto u = unimodular_complete(3, 10);
    CHECK(u.alpha == -1);
    CHECK(u.beta == -3);
    CHECK(u.det() == 1);

    u = unimodular_complete(1, 7);
    CHECK(u.alpha == 0);
    CHECK(u.beta == 1);

    u = unimodular_complete(2, 5);
    CHECK(u.alpha == 1);
    CHECK(u.beta == 3);

    CHECK_THROWS_AS(unimodular_complete(4, 10), std::domain_error);
}

TEST_CASE("unimodular_complete has determinant one on random coprime pairs") {
    std::mt19937_64 rng(13);
    int tested = 0;
    while (tested < 500) {
        i64 a = static_cast<i64>(rng() % 20001) - 10000;
        i64 n = static_cast<i64>(rng() % 20001) - 10000;
        if (a == 0 && n == 0) continue;
        if (gcd64(a < 0 ? -a : a, n < 0 ? -n : n) != 1) continue;
        auto u = unimodular_complete(a, n);
        CHECK(u.det() == 1);
        // minimal |alpha| among solutions alpha0 + k*a
        if (a != 0) {
            i64 aa = a < 0 ? -a : a;
            i64 al = u.alpha < 0 ? -u.alpha : u.alpha;
            CHECK(2 * al <= aa);
        }
        ++tested;
    }
}

TEST_CASE("square_pair_solve finds the documented pairs") {
    auto p5 = square_pair_solve(5, 20);
    REQUIRE(p5.size() >= 2);
    CHECK(p5[0].a == 2);
    CHECK(p5[0].b == 13);
    CHECK(p5[0].c == 1);
    CHECK(p5[0].nontrivial);
    bool has_3_17 = false;
    for (const auto& p : p5) has_3_17 |= (p.a == 3 && p.b == 17 && p.c == 2);
    CHECK(has_3_17);

    auto p10 = square_pair_solve(10, 70);
    bool has_3_67 = false, has_7_43 = false;
    for (const auto& p : p10) {
        has_3_67 |= (p.a == 3 && p.b == 67);
        has_7_43 |= (p.a == 7 && p.b == 43);
    }
    CHECK(has_3_67);
    CHECK(has_7_43);

    auto p2 = square_pair_solve(2, 1);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0].a == 1);
    CHECK(p2[0].b == 1);
    CHECK_FALSE(p2[0].nontrivial);
}

TEST_CASE("square pairs re-verify by direct modular arithmetic") {
    for (i64 m : {2, 3, 5, 7, 10, 12}) {
        for (const auto& p : square_pair_solve(m, 150)) {
            CHECK(p.holds());
            CHECK((p.a + p.b) % m == 0);
            CHECK((p.a * p.b) % (m * m) == 1);
            CHECK(p.a * p.b == 1 + p.c * m * m);
        }
    }
    // For m = 5, a = +-1 mod 5 admits no partner: every found pair is nontrivial.
    for (const auto& p : square_pair_solve(5, 150)) CHECK(p.nontrivial);
}
