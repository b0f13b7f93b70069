#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pdg/laurent.hpp"
#include "pdg/opring.hpp"

using namespace pdg;

static LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> expd(-6, 6), coeffd(-5, 5);
    LaurentPoly r;
    int terms = 1 + rng() % 5;
    for (int i = 0; i < terms; ++i) r.add_term(expd(rng), coeffd(rng));
    return r;
}

TEST_CASE("laurent ring axioms") {
    std::mt19937 rng(42);
    for (int t = 0; t < 50; ++t) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * LaurentPoly(1) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("quantum integers") {
    CHECK(quantum_integer(0).is_zero());
    CHECK(quantum_integer(1) == LaurentPoly(1));

    LaurentPoly two;
    two.c = {{-1, 1}, {1, 1}};
    CHECK(quantum_integer(2) == two);

    LaurentPoly three;
    three.c = {{-2, 1}, {0, 1}, {2, 1}};
    CHECK(quantum_integer(3) == three);

    CHECK(quantum_integer(-4) == -quantum_integer(4));
    for (int n = 0; n <= 12; ++n)
        CHECK(quantum_integer(n) == quantum_integer(n).bar());
}

// oracle: [n]! / ([k]! [n-k]!) checked by cross-multiplication
static LaurentPoly qfactorial(int n) {
    LaurentPoly r(1);
    for (int i = 1; i <= n; ++i) r = r * quantum_integer(i);
    return r;
}

TEST_CASE("quantum binomials") {
    CHECK(quantum_binomial(2, 1) == quantum_integer(2));
    CHECK(quantum_binomial(1, 3).is_zero());
    CHECK_THROWS_WITH_AS(quantum_binomial(3, -1), "invalid-binomial",
                         std::invalid_argument);

    LaurentPoly b42;
    b42.c = {{-4, 1}, {-2, 1}, {0, 2}, {2, 1}, {4, 1}};
    CHECK(quantum_binomial(4, 2) == b42);

    for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= n; ++k) {
            LaurentPoly lhs = quantum_binomial(n, k) * qfactorial(k) * qfactorial(n - k);
            CHECK(lhs == qfactorial(n));
            CHECK(quantum_binomial(n, k) == quantum_binomial(n, k).bar());
            CHECK(quantum_binomial(n, k) == quantum_binomial(n, n - k));
        }

    // negative upper index follows the product-formula extension
    CHECK(quantum_binomial(-1, 1) == LaurentPoly(-1));
    CHECK(quantum_binomial(-2, 1) == -quantum_integer(2));
    for (int n = -5; n < 0; ++n)
        for (int k = 0; k <= 4; ++k) {
            LaurentPoly expect = quantum_binomial(k - n - 1, k);
            if (k % 2) expect = -expect;
            CHECK(quantum_binomial(n, k) == expect);
        }
}

// oracle: explicit enumeration of partitions in a j x m box
static void enumerate_boxed(int j, int m, std::vector<int>& parts, int maxpart,
                            LaurentPoly& acc, int size, int jm) {
    if (static_cast<int>(parts.size()) == j) {
        acc.add_term(2 * size - jm, 1);
        return;
    }
    for (int v = 0; v <= maxpart; ++v) {
        parts.push_back(v);
        enumerate_boxed(j, m, parts, v, acc, size + v, jm);
        parts.pop_back();
    }
}

TEST_CASE("box partition generating function") {
    LaurentPoly b11;
    b11.c = {{-1, 1}, {1, 1}};
    CHECK(box_partition_gf(1, 1) == b11);
    CHECK(box_partition_gf(0, 5) == LaurentPoly(1));
    CHECK(box_partition_gf(5, 0) == LaurentPoly(1));

    LaurentPoly b22;
    b22.c = {{-4, 1}, {-2, 1}, {0, 2}, {2, 1}, {4, 1}};
    CHECK(box_partition_gf(2, 2) == b22);

    for (int j = 0; j <= 5; ++j)
        for (int m = 0; m <= 5; ++m) {
            LaurentPoly oracle;
            std::vector<int> parts;
            enumerate_boxed(j, m, parts, m, oracle, 0, j * m);
            CHECK(box_partition_gf(j, m) == oracle);
        }

    for (int j = 0; j <= 12; ++j)
        for (int m = 0; j + m <= 12; ++m)
            CHECK(box_partition_gf(j, m) == quantum_binomial(j + m, j));
}

TEST_CASE("O_p reduction") {
    CHECK_THROWS_AS(reduce_to_Op(LaurentPoly(1), 4), std::invalid_argument);

    // [p] = 0 in O_p
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        CHECK(reduce_to_Op(quantum_integer(static_cast<int>(p)), p).is_zero());
        CHECK_FALSE(reduce_to_Op(quantum_integer(static_cast<int>(p) - 1), p).is_zero());
        CHECK(reduce_to_Op(LaurentPoly(1), p) == OpElement(p, 1));
    }

    // [2] reduces to q + q^-1 rewritten with q^-1 = -(q + q^3 + ... + q^{2p-3})
    OpElement two3 = reduce_to_Op(quantum_integer(2), 3);
    CHECK(two3 == reduce_to_Op(LaurentPoly::q_power(1) + LaurentPoly::q_power(-1), 3));
    CHECK_FALSE(two3.is_zero());

    std::mt19937 rng(99);
    for (int t = 0; t < 60; ++t) {
        uint32_t p = (t % 2) ? 3 : 5;
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        // homomorphism
        CHECK(reduce_to_Op(a + b, p) == reduce_to_Op(a, p) + reduce_to_Op(b, p));
        CHECK(reduce_to_Op(a * b, p) == reduce_to_Op(a, p) * reduce_to_Op(b, p));
        // idempotent reduction
        OpElement ra = reduce_to_Op(a, p);
        CHECK(reduce_to_Op(ra.to_laurent(), p) == ra);
        // degree bound
        CHECK(ra.to_laurent().max_exp() < 2 * static_cast<int>(p) - 2);
        CHECK(ra.to_laurent().min_exp() >= 0);
    }

    // q is a unit: q * q^{2p-1} = q^{2p} = 1
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        OpElement q = reduce_to_Op(LaurentPoly::q_power(1), p);
        OpElement qinv = reduce_to_Op(LaurentPoly::q_power(-1), p);
        CHECK(q * qinv == OpElement(p, 1));
    }

    // Pascal recursion survives reduction
    for (uint32_t p : {3u, 5u}) {
        for (int n = 1; n <= 12; ++n)
            for (int k = 1; k <= n; ++k) {
                OpElement lhs = reduce_to_Op(quantum_binomial(n, k), p);
                OpElement rhs =
                    reduce_to_Op(quantum_binomial(n - 1, k).shifted(k) +
                                     quantum_binomial(n - 1, k - 1).shifted(k - n),
                                 p);
                CHECK(lhs == rhs);
            }
    }
}
