#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pdg/fcfilt.hpp"
#include "pdg/laurent.hpp"
#include "pdg/pcomplex.hpp"

using namespace pdg;

TEST_CASE("trivial filtration data pass") {
    uint32_t p = 5;
    TwistedModule M = TwistedModule::canonical(Composition{1, 1}, p);
    FcDatum<GradedModuleMap> d;
    d.items.push_back({gm_identity(M), gm_identity(M), 0});
    FcReport r = verify_fc(d, GmOps{});
    CHECK(r.pass());
    CHECK(r.shifts == std::vector<int>{0});

    MatOps ops{regular_nilpotent(3, p)};
    FcReport m =
        verify_dg_filtration(std::vector<FpMat>{FpMat::identity(3, p)}, ops);
    CHECK(m.pass());
    CHECK(m.right_triangular_ok);
}

TEST_CASE("split-merge factorization of the two-column module") {
    for (uint32_t p : {3u, 5u})
        for (int a = 1; a <= 5; ++a)
            for (int b = 1; a + b <= 6; ++b) {
                FcDatum<GradedModuleMap> d = ee_decomposition(a, b, p);
                FcReport r = verify_fc(d, GmOps{});
                CHECK(r.pass());
                LaurentPoly gf;
                for (int s : r.shifts) gf.add_term(s, 1);
                CHECK(gf == quantum_binomial(a + b, a));
            }

    CHECK(ee_decomposition(1, 1, 3).items.size() == 2);
    CHECK(ee_decomposition(2, 1, 3).items.size() == 3);
    CHECK(ee_decomposition(2, 2, 3).items.size() == 6);
}

TEST_CASE("factorization order is one-directional") {
    for (uint32_t p : {3u, 5u})
        for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 1}}) {
            FcDatum<GradedModuleMap> d = ee_decomposition(a, b, p);
            std::reverse(d.items.begin(), d.items.end());
            FcReport r = verify_fc(d, GmOps{});
            CHECK_FALSE(r.pass());
            CHECK(r.unit_ok);
            CHECK(r.orthogonal_ok);
            CHECK(r.complete_ok);
            CHECK_FALSE(r.triangular_ok);
            CHECK(r.counterexample.first >= 0);
        }

    FcDatum<GradedModuleMap> d = ee_decomposition(1, 1, 5);
    std::reverse(d.items.begin(), d.items.end());
    CHECK(verify_fc(d, GmOps{}).counterexample == std::pair<int, int>{0, 1});
}

TEST_CASE("factorization filtrations induce idempotent filtrations") {
    GmOps ops;
    for (uint32_t p : {3u, 5u})
        for (auto [a, b] :
             {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2},
              std::pair{2, 2}}) {
            FcDatum<GradedModuleMap> d = ee_decomposition(a, b, p);
            std::vector<GradedModuleMap> eps;
            for (auto& it : d.items)
                eps.push_back(ops.compose(it.u, it.v));
            FcReport r = verify_dg_filtration(eps, ops);
            CHECK(r.pass());
            CHECK(r.right_triangular_ok);
            for (auto& e : eps)
                CHECK(ops.is_zero(
                    ops.compose(ops.compose(e, ops.diff(e)), e)));
        }
}

TEST_CASE("matrix unit filtrations pass downward and fail upward") {
    for (uint32_t p : {3u, 5u})
        for (int n = 1; n <= static_cast<int>(p); ++n) {
            MatOps ops{regular_nilpotent(n, p)};
            std::vector<FpMat> down, up;
            for (int i = n - 1; i >= 0; --i)
                down.push_back(unit_idempotent(n, p, i));
            for (int i = 0; i < n; ++i)
                up.push_back(unit_idempotent(n, p, i));

            FcReport good = verify_dg_filtration(down, ops);
            CHECK(good.pass());
            CHECK(good.right_triangular_ok);
            for (auto& e : down)
                CHECK(ops.is_zero(
                    ops.compose(ops.compose(e, ops.diff(e)), e)));

            FcReport bad = verify_dg_filtration(up, ops);
            CHECK(bad.pass() == (n == 1));
            if (n > 1) {
                CHECK(bad.unit_ok);
                CHECK(bad.orthogonal_ok);
                CHECK(bad.complete_ok);
                CHECK_FALSE(bad.triangular_ok);
                CHECK_FALSE(bad.right_triangular_ok);
                CHECK(bad.counterexample == std::pair<int, int>{0, 1});
            }
        }
}

TEST_CASE("box partition series equals the gaussian binomial") {
    for (int j = 0; j <= 12; ++j)
        for (int m = 0; j + m <= 12; ++m)
            CHECK(box_partition_gf(j, m) == quantum_binomial(j + m, j));
}

TEST_CASE("reports localize the first failure") {
    uint32_t p = 5;
    FcDatum<GradedModuleMap> d = ee_decomposition(1, 1, p);
    d.items[0].u = gm_scalar(2, d.items[0].u);
    FcReport r = verify_fc(d, GmOps{});
    CHECK_FALSE(r.unit_ok);
    CHECK(r.counterexample == std::pair<int, int>{0, 0});
    CHECK_FALSE(r.detail.empty());

    FcDatum<GradedModuleMap> short_d = ee_decomposition(1, 1, p);
    short_d.items.pop_back();
    FcReport s = verify_fc(short_d, GmOps{});
    CHECK_FALSE(s.complete_ok);
    CHECK(s.unit_ok);
}
