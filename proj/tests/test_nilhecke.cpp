#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pdg/nilhecke.hpp"

using namespace pdg;

static PolyElement random_poly(int n, uint32_t p, std::mt19937& rng, int maxdeg) {
    PolyElement f(n, p);
    for (int t = 0; t < 4; ++t) {
        std::vector<int> e(static_cast<size_t>(n));
        int left = static_cast<int>(rng()) % (maxdeg + 1);
        if (left < 0) left = -left;
        for (auto& v : e) {
            v = static_cast<int>(rng() % (static_cast<uint32_t>(left) + 1));
            left -= v;
        }
        f.add_term(e, 1 + rng() % (p - 1));
    }
    return f;
}

TEST_CASE("divided difference basics") {
    uint32_t p = 5;
    PolyElement one = PolyElement::constant(2, p, 1);
    CHECK(divided_difference(one, 1).is_zero());

    PolyElement x1 = PolyElement::variable(2, p, 0);
    PolyElement x2 = PolyElement::variable(2, p, 1);
    CHECK(divided_difference(x1, 1) == one);
    CHECK(divided_difference(x1 * x1, 1) == x1 + x2);
    CHECK(divided_difference(x2, 1) ==
          PolyElement::constant(2, p, p - 1));

    // twisted Leibniz: D(fg) = D(f) g + s(f) D(g)
    std::mt19937 rng(7);
    std::vector<int> swap01{1, 0, 2};
    for (int t = 0; t < 20; ++t) {
        PolyElement f = random_poly(3, p, rng, 3), g = random_poly(3, p, rng, 3);
        PolyElement lhs = divided_difference(f * g, 1);
        PolyElement rhs =
            divided_difference(f, 1) * g + permute_vars(f, swap01) *
                                               divided_difference(g, 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("straighten assemble round trip") {
    std::mt19937 rng(13);
    for (uint32_t p : {3u, 5u}) {
        for (int n = 1; n <= 4; ++n) {
            NHContext ctx(n, p);
            CHECK(ctx.size() == [&] {
                std::size_t f = 1;
                for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
                return f;
            }());
            for (int t = 0; t < 8; ++t) {
                PolyElement g = random_poly(n, p, rng, 5);
                CHECK(ctx.assemble(ctx.straighten(g)) == g);
            }
            // symmetric polynomials straighten onto the constant basis element
            std::vector<SymElement> s =
                ctx.straighten(elementary_sym(n, p, std::min(n, 2)));
            for (std::size_t c = 0; c < ctx.size(); ++c) {
                bool isconst = ctx.basis_monomial(c) ==
                               PolyElement::constant(n, p, 1);
                CHECK(s[c].is_zero() == !isconst);
            }
        }
    }
}

TEST_CASE("nilHecke relations") {
    uint32_t p = 5;
    for (int n : {2, 3}) {
        NHContext ctx(n, p);
        NilHeckeOp id = nh_identity(ctx);
        for (int i = 1; i < n; ++i) {
            NilHeckeOp Di = nh_crossing(ctx, i);
            NilHeckeOp xi = nh_dot(ctx, i), xi1 = nh_dot(ctx, i + 1);
            CHECK(compose(Di, Di).is_zero());
            CHECK(compose(Di, xi) - compose(xi1, Di) == id);
            CHECK(compose(xi, Di) - compose(Di, xi1) == id);
        }
        if (n == 3) {
            NilHeckeOp D1 = nh_crossing(ctx, 1), D2 = nh_crossing(ctx, 2);
            CHECK(compose(D1, compose(D2, D1)) == compose(D2, compose(D1, D2)));
            CHECK_FALSE(D1 == D2);
        }
        // dots commute
        if (n >= 2)
            CHECK(compose(nh_dot(ctx, 1), nh_dot(ctx, 2)) ==
                  compose(nh_dot(ctx, 2), nh_dot(ctx, 1)));
    }
}

TEST_CASE("apply matches matrix form") {
    uint32_t p = 5;
    NHContext ctx(3, p);
    std::mt19937 rng(17);
    NilHeckeOp D1 = nh_crossing(ctx, 1);
    for (int t = 0; t < 10; ++t) {
        PolyElement g = random_poly(3, p, rng, 4);
        CHECK(apply_op(ctx, D1, g) == divided_difference(g, 1));
    }
}

TEST_CASE("longest element") {
    uint32_t p = 5;
    NHContext c1(1, p);
    CHECK(longest_element(c1) == nh_identity(c1));

    NHContext c2(2, p);
    CHECK(longest_element(c2) == nh_crossing(c2, 1));

    NHContext c3(3, p);
    NilHeckeOp D1 = nh_crossing(c3, 1), D2 = nh_crossing(c3, 2);
    NilHeckeOp w121 = compose(D1, compose(D2, D1));
    NilHeckeOp w212 = compose(D2, compose(D1, D2));
    CHECK(longest_element(c3) == w121);
    CHECK(longest_element(c3) == w212);
}

TEST_CASE("staircase differential identity") {
    for (uint32_t p : {3u, 5u, 7u})
        for (int n = 1; n <= 6; ++n) {
            PolyElement d = staircase_poly(n, p);
            CHECK(diff_pol(d) == linear_form_left(n, p) * d);
        }
}

TEST_CASE("induced differential on generators") {
    uint32_t p = 5;
    NHContext ctx(2, p);
    TwistVector tw = TwistVector::canonical(2, p);
    CHECK(tw.a == std::vector<uint32_t>{p - 1, 0});
    CHECK(tw.generator_degree() == -1);

    PolyElement x1 = PolyElement::variable(2, p, 0);
    PolyElement x2 = PolyElement::variable(2, p, 1);

    // dot -> double dot
    CHECK(induced_diff_op(ctx, nh_dot(ctx, 1), tw) == nh_mult(ctx, x1 * x1));
    CHECK(induced_diff_op(ctx, nh_dot(ctx, 2), tw) == nh_mult(ctx, x2 * x2));

    // crossing -> minus dotted crossings (dots on the strand through
    // bottom position 2 and top position 1)
    NilHeckeOp D1 = nh_crossing(ctx, 1);
    NilHeckeOp expect = nh_zero(ctx) - compose(nh_dot(ctx, 1), D1) -
                        compose(D1, nh_dot(ctx, 2));
    CHECK(induced_diff_op(ctx, D1, tw) == expect);

    CHECK(induced_diff_op(ctx, nh_identity(ctx), tw).is_zero());
}

TEST_CASE("differential of the longest element") {
    CHECK(verify_dDn(2, 5));
    CHECK(verify_dDn(3, 5));
    CHECK(verify_dDn(4, 3));
    CHECK(verify_dDn(3, 3));
    CHECK(verify_dDn(2, 3));
}

TEST_CASE("idempotents") {
    for (uint32_t p : {3u, 5u}) {
        NHContext c1(1, p);
        CHECK(epsilon(c1) == nh_identity(c1));

        NHContext c2(2, p);
        NilHeckeOp e2 = epsilon(c2);
        CHECK(e2 == compose(nh_dot(c2, 1), nh_crossing(c2, 1)));
        CHECK(compose(e2, e2) == e2);

        for (int a : {3, 4}) {
            NHContext ca(a, p);
            NilHeckeOp ea = epsilon(ca);
            CHECK(compose(ea, ea) == ea);
            // eps d(eps) eps = 0
            NilHeckeOp dea =
                induced_diff_op(ca, ea, TwistVector::canonical(a, p));
            CHECK(compose(ea, compose(dea, ea)).is_zero());
        }
    }
}

TEST_CASE("induced differential is a p-nilpotent derivation") {
    // Leibniz on compositions
    uint32_t p = 5;
    NHContext ctx(3, p);
    TwistVector tw = TwistVector::canonical(3, p);
    std::vector<NilHeckeOp> gens = {nh_dot(ctx, 1), nh_dot(ctx, 2),
                                    nh_dot(ctx, 3), nh_crossing(ctx, 1),
                                    nh_crossing(ctx, 2)};
    std::mt19937 rng(23);
    for (int t = 0; t < 12; ++t) {
        const NilHeckeOp& f = gens[rng() % gens.size()];
        const NilHeckeOp& g = gens[rng() % gens.size()];
        NilHeckeOp lhs = induced_diff_op(ctx, compose(f, g), tw);
        NilHeckeOp rhs = compose(induced_diff_op(ctx, f, tw), g) +
                         compose(f, induced_diff_op(ctx, g, tw));
        CHECK(lhs == rhs);
    }

    // p-th iterate kills the generators for n < p
    for (uint32_t q : {3u, 5u}) {
        for (int n = 2; n < static_cast<int>(q); ++n) {
            NHContext cn(n, q);
            TwistVector tq = TwistVector::canonical(n, q);
            std::vector<NilHeckeOp> gs;
            for (int i = 1; i <= n; ++i) gs.push_back(nh_dot(cn, i));
            for (int i = 1; i < n; ++i) gs.push_back(nh_crossing(cn, i));
            for (const NilHeckeOp& g0 : gs) {
                NilHeckeOp g = g0;
                for (uint32_t k = 0; k < q; ++k) g = induced_diff_op(cn, g, tq);
                CHECK(g.is_zero());
            }
        }
    }
}

TEST_CASE("twisted module differential is p-nilpotent for any twist") {
    std::mt19937 rng(31);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int n = 1; n <= 3; ++n) {
            for (int t = 0; t < 6; ++t) {
                TwistVector tw;
                tw.n = n;
                tw.p = p;
                for (int i = 0; i < n; ++i) tw.a.push_back(rng() % p);
                PolyElement f = random_poly(n, p, rng, 3);
                for (uint32_t k = 0; k < p; ++k) f = twisted_diff(f, tw);
                CHECK(f.is_zero());
            }
        }
    }
}
