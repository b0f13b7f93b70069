#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pdg/fpmat.hpp"

using namespace pdg;

TEST_CASE("field ops") {
    Fp F(7);
    CHECK(F.add(5, 4) == 2);
    CHECK(F.sub(2, 5) == 4);
    CHECK(F.mul(3, 5) == 1);
    CHECK(F.inv(3) == 5);
    CHECK(F.pow(3, 6) == 1);
    CHECK(F.reduce(-1) == 6);
    CHECK(F.reduce(-15) == 6);
    CHECK_THROWS_AS(Fp(6), std::invalid_argument);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
}

TEST_CASE("kernel dispatch equivalence") {
    std::mt19937 rng(12345);
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 32003u}) {
        std::uniform_int_distribution<uint32_t> d(0, p - 1);
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t n = 1 + rng() % 100;
            std::vector<uint32_t> dst(n), src(n);
            for (auto& v : dst) v = d(rng);
            for (auto& v : src) v = d(rng);
            uint32_t c = d(rng);

            std::vector<uint32_t> ref = dst;
            fp_axpy_scalar(ref.data(), src.data(), c, n, p);
            std::vector<uint32_t> got = dst;
            fp_axpy(got.data(), src.data(), c, n, p);
            CHECK(ref == got);

            ref = dst;
            fp_scale_scalar(ref.data(), c, n, p);
            got = dst;
            fp_scale(got.data(), c, n, p);
            CHECK(ref == got);
        }
    }
#if defined(__x86_64__)
    // same sweep against the AVX2 entry points directly, if the host has them
    if (std::string(fp_kernel_name()) == "avx2") {
        for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 101u, 32003u}) {
            std::uniform_int_distribution<uint32_t> d(0, p - 1);
            for (int trial = 0; trial < 20; ++trial) {
                std::size_t n = 1 + rng() % 100;
                std::vector<uint32_t> dst(n), src(n);
                for (auto& v : dst) v = d(rng);
                for (auto& v : src) v = d(rng);
                uint32_t c = d(rng);

                std::vector<uint32_t> ref = dst, got = dst;
                fp_axpy_scalar(ref.data(), src.data(), c, n, p);
                fp_axpy_avx2(got.data(), src.data(), c, n, p);
                CHECK(ref == got);

                ref = dst;
                got = dst;
                fp_scale_scalar(ref.data(), c, n, p);
                fp_scale_avx2(got.data(), c, n, p);
                CHECK(ref == got);
            }
        }
    }
#endif
}

TEST_CASE("matrix multiply and identity") {
    FpMat A(2, 3, 5);
    uint32_t av[] = {1, 2, 3, 4, 0, 1};
    std::copy(av, av + 6, A.a.begin());
    FpMat B(3, 2, 5);
    uint32_t bv[] = {1, 1, 0, 2, 3, 0};
    std::copy(bv, bv + 6, B.a.begin());
    FpMat C = fp_mul(A, B);
    CHECK(C.at(0, 0) == 0);  // 1+0+9 = 10
    CHECK(C.at(0, 1) == 0);  // 1+4+0 = 5
    CHECK(C.at(1, 0) == 2);  // 4+0+3 = 7
    CHECK(C.at(1, 1) == 4);
    FpMat I = FpMat::identity(3, 5);
    CHECK(fp_mul(A, I) == A);
    FpMat I2 = FpMat::identity(2, 5);
    CHECK(fp_mul(I2, A) == A);
}

TEST_CASE("rref rank kernel solve") {
    std::mt19937 rng(777);
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        std::uniform_int_distribution<uint32_t> d(0, p - 1);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t m = 1 + rng() % 8, n = 1 + rng() % 8;
            FpMat A(m, n, p);
            for (auto& v : A.a) v = d(rng);

            std::size_t r = fp_rank(A);
            FpMat K = fp_kernel(A);
            CHECK(r + K.cols == n);  // rank-nullity
            if (K.cols > 0) CHECK(fp_mul(A, K).is_zero());
            CHECK(fp_rank(K) == K.cols);  // kernel basis independent

            // consistent system: b = A*x0 has a solution that A maps back to b
            std::vector<uint32_t> x0(n);
            for (auto& v : x0) v = d(rng);
            FpMat X0(n, 1, p);
            std::copy(x0.begin(), x0.end(), X0.a.begin());
            FpMat Bv = fp_mul(A, X0);
            std::vector<uint32_t> b(Bv.a.begin(), Bv.a.end());
            std::vector<uint32_t> x;
            CHECK(fp_solve(A, b, x));
            FpMat X(n, 1, p);
            std::copy(x.begin(), x.end(), X.a.begin());
            CHECK(fp_mul(A, X) == Bv);
        }
    }
}

TEST_CASE("solve reports inconsistency") {
    FpMat A(2, 2, 5);
    uint32_t av[] = {1, 2, 2, 4};
    std::copy(av, av + 4, A.a.begin());
    std::vector<uint32_t> x;
    CHECK_FALSE(fp_solve(A, {1, 3}, x));
    CHECK(fp_solve(A, {1, 2}, x));
}

TEST_CASE("rank of concatenation") {
    FpMat A(3, 2, 7);
    uint32_t av[] = {1, 0, 0, 1, 0, 0};
    std::copy(av, av + 6, A.a.begin());
    FpMat B(3, 2, 7);
    uint32_t bv[] = {1, 0, 1, 0, 0, 1};
    std::copy(bv, bv + 6, B.a.begin());
    CHECK(fp_rank(A) == 2);
    CHECK(fp_rank(B) == 2);
    CHECK(fp_rank_concat(A, B) == 3);
}
