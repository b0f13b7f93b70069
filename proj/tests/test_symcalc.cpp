#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pdg/sym.hpp"

using namespace pdg;

// independent oracle: divided-difference construction of Schur polynomials,
// pi_lambda = D_{w0}(x^{lambda + delta}), delta = (n-1,...,1,0)
static PolyElement divided_difference(const PolyElement& f, int i) {
    // (f - s_i f) / (x_i - x_{i+1}), computed term-by-term via
    // D(x^a y^b) = sum_{k=b}^{a-1} x^k y^{a+b-1-k} (a > b), antisymmetric
    Fp F(f.p);
    PolyElement r(f.n, f.p);
    for (auto& [e, c] : f.terms) {
        int a = e[static_cast<size_t>(i)], b = e[static_cast<size_t>(i) + 1];
        if (a == b) continue;
        std::vector<int> m = e;
        uint32_t cc = a > b ? c : F.neg(c);
        int lo = std::min(a, b), hi = std::max(a, b);
        for (int k = lo; k < hi; ++k) {
            m[static_cast<size_t>(i)] = k;
            m[static_cast<size_t>(i) + 1] = a + b - 1 - k;
            r.add_term(m, cc);
        }
    }
    return r;
}

static PolyElement schur_oracle(const Partition& lam, int n, uint32_t p) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = lam.part(i) + (n - 1 - i);
    PolyElement f(n, p);
    f.terms[e] = 1 % p;
    // w0 reduced word: (1)(2 1)(3 2 1)...
    for (int blk = 1; blk < n; ++blk)
        for (int i = blk - 1; i >= 0; --i) f = divided_difference(f, i);
    return f;
}

TEST_CASE("partition helpers") {
    Partition lam{3, 1};
    CHECK(lam.size() == 4);
    CHECK(lam.rows() == 2);
    CHECK(lam.transpose() == Partition{2, 1, 1});
    CHECK(lam.transpose().transpose() == lam);
    CHECK(Partition{}.transpose() == Partition{});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);

    CHECK(lam.contains(Partition{2, 1}));
    CHECK_FALSE(lam.contains(Partition{1, 1, 1}));

    CHECK(partitions_in_box(2, 2).size() == 6);
    CHECK(partitions_in_box(0, 3).size() == 1);

    // box complement is an involution P(a,b) <-> P(b,a)
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (const Partition& mu : partitions_in_box(a, b)) {
                Partition hat = mu.box_complement(a, b);
                CHECK(hat.fits_in(b, a));
                CHECK(hat.box_complement(b, a) == mu);
            }

    CHECK(Partition({2, 1}).box_complement(2, 3) ==
          Partition({2, 1}).box_complement(2, 3));
    // (3,1) in 2x3 box: rotated complement (2,0) -> transpose (1,1)
    CHECK(Partition{3, 1}.box_complement(2, 3) == Partition{1, 1});
}

TEST_CASE("polynomial differential") {
    uint32_t p = 5;
    PolyElement x1 = PolyElement::variable(2, p, 0);
    PolyElement x2 = PolyElement::variable(2, p, 1);
    CHECK(diff_pol(x1) == x1 * x1);
    CHECK(diff_pol(PolyElement::constant(2, p, 1)).is_zero());
    CHECK(diff_pol(x1 * x2) == x1 * x1 * x2 + x1 * x2 * x2);

    // Leibniz on random polynomials
    std::mt19937 rng(5);
    auto randpol = [&](int n) {
        PolyElement f(n, p);
        for (int t = 0; t < 4; ++t) {
            std::vector<int> e(static_cast<size_t>(n));
            for (auto& v : e) v = rng() % 3;
            f.add_term(e, 1 + rng() % (p - 1));
        }
        return f;
    };
    for (int t = 0; t < 30; ++t) {
        PolyElement f = randpol(3), g = randpol(3);
        CHECK(diff_pol(f * g) == diff_pol(f) * g + f * diff_pol(g));
    }

    // p-th iterate vanishes
    for (uint32_t q : {2u, 3u, 5u}) {
        PolyElement f = randpol(2);
        PolyElement g(2, q);
        for (auto& [e, c] : f.terms) g.add_term(e, c);
        for (uint32_t k = 0; k < q; ++k) g = diff_pol(g);
        CHECK(g.is_zero());
    }
}

TEST_CASE("linear forms") {
    for (uint32_t p : {3u, 5u}) {
        for (int n = 1; n <= 5; ++n) {
            PolyElement sum = linear_form_left(n, p) + linear_form_right(n, p);
            PolyElement e1 = elementary_sym(n, p, 1);
            CHECK(sum == Fp(p).reduce(n - 1) * e1);
        }
    }
}

TEST_CASE("schur to monomials") {
    uint32_t p = 7;
    CHECK(schur_to_monomials(Partition{1}, 2, p) == elementary_sym(2, p, 1));
    CHECK(schur_to_monomials(Partition{1, 1}, 2, p) == elementary_sym(2, p, 2));
    CHECK(schur_to_monomials(Partition{2}, 2, p) == complete_sym(2, p, 2));

    for (uint32_t q : {3u, 5u, 7u})
        for (int n = 1; n <= 4; ++n)
            for (const Partition& lam : partitions_in_box(n, 4)) {
                PolyElement viaSSYT = schur_to_monomials(lam, n, q);
                CHECK(viaSSYT == schur_oracle(lam, n, q));
                CHECK(is_symmetric(viaSSYT));
                // round trip
                SymElement back = monomials_to_schur(viaSSYT);
                CHECK(back == SymElement::schur(n, q, lam));
            }

    PolyElement asym = PolyElement::variable(2, p, 0);
    CHECK_THROWS_WITH_AS(monomials_to_schur(asym), "not-symmetric",
                         std::invalid_argument);
}

TEST_CASE("littlewood-richardson multiplication") {
    uint32_t p = 7;
    // Pieri special case
    SymElement e1sq = multiply_schur(Partition{1}, Partition{1}, 3, p);
    CHECK(e1sq == SymElement::schur(3, p, Partition{2}) +
                      SymElement::schur(3, p, Partition{1, 1}));
    // row cap drops (1,1)
    SymElement capped = multiply_schur(Partition{1}, Partition{1}, 1, p);
    CHECK(capped == SymElement::schur(1, p, Partition{2}));
    // unit
    CHECK(multiply_schur(Partition{}, Partition{2, 1}, 3, p) ==
          SymElement::schur(3, p, Partition{2, 1}));

    // classic: pi_(2,1) * pi_(2,1) has c = 2 at (3,2,1) when n >= 3
    SymElement sq = multiply_schur(Partition{2, 1}, Partition{2, 1}, 6, p);
    CHECK(sq.coeff(Partition{3, 2, 1}) == 2);
    CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
    CHECK(sq.coeff(Partition{4, 2}) == 1);
    CHECK(sq.coeff(Partition{2, 2, 1, 1}) == 1);

    // symmetry and monomial oracle
    std::mt19937 rng(11);
    std::vector<Partition> pool = partitions_in_box(3, 3);
    for (int t = 0; t < 25; ++t) {
        const Partition& a = pool[rng() % pool.size()];
        const Partition& b = pool[rng() % pool.size()];
        int n = 2 + static_cast<int>(rng() % 3);
        SymElement ab = multiply_schur(a, b, n, p);
        CHECK(ab == multiply_schur(b, a, n, p));
        if (a.rows() <= n && b.rows() <= n) {
            PolyElement prod =
                schur_to_monomials(a, n, p) * schur_to_monomials(b, n, p);
            CHECK(sym_to_monomials(ab) == prod);
        }
    }
}

TEST_CASE("schur differential examples") {
    uint32_t p = 7;
    CHECK(diff_schur(Partition{}, 3, p).is_zero());
    CHECK(diff_schur(Partition{1}, 2, p) ==
          SymElement::schur(2, p, Partition{2}) -
              SymElement::schur(2, p, Partition{1, 1}));
    CHECK(diff_schur(Partition{1, 1}, 2, p) ==
          SymElement::schur(2, p, Partition{2, 1}));

    // content of a row-1 box equals the first part
    for (const Partition& lam : partitions_in_box(3, 4)) {
        if (lam.empty()) continue;
        std::vector<int> grown = lam.parts;
        grown[0] += 1;
        SymElement d = diff_schur(lam, 4, p);
        CHECK(d.coeff(Partition(std::move(grown))) ==
              Fp(p).reduce(lam.part(0)));
    }
}

TEST_CASE("schur differential against monomial oracle") {
    for (uint32_t p : {3u, 5u, 7u})
        for (int n = 1; n <= 5; ++n)
            for (const Partition& lam : partitions_in_box(n, 6)) {
                if (lam.size() > 6) continue;
                SymElement d = diff_schur(lam, n, p);
                PolyElement lhs = sym_to_monomials(d);
                PolyElement rhs = diff_pol(schur_to_monomials(lam, n, p));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("closed forms on elementary and complete rows") {
    uint32_t p = 7;
    int n = 8;
    auto e = [&](int k) {
        if (k > n) return SymElement(n, p);
        std::vector<int> col(static_cast<size_t>(k), 1);
        return SymElement::schur(n, p, Partition(std::move(col)));
    };
    auto h = [&](int k) {
        return k == 0 ? SymElement::one(n, p)
                      : SymElement::schur(n, p, Partition{k});
    };
    for (int k = 1; k <= 5; ++k) {
        CHECK(diff_sym(e(k)) == e(1) * e(k) - Fp(p).reduce(k + 1) * e(k + 1));
        CHECK(diff_sym(h(k)) == Fp(p).reduce(k + 1) * h(k + 1) - h(1) * h(k));
    }
    // top elementary: e_n in Sym_n
    SymElement en = SymElement::schur(3, p, Partition{1, 1, 1});
    SymElement e1 = SymElement::schur(3, p, Partition{1});
    CHECK(diff_sym(en) == e1 * en);
}

TEST_CASE("p-nilpotency and Leibniz in the schur basis") {
    for (uint32_t p : {3u, 5u}) {
        for (int n = 1; n <= 4; ++n)
            for (const Partition& lam : partitions_in_box(n, 2 * static_cast<int>(p))) {
                if (lam.size() > 2 * static_cast<int>(p)) continue;
                SymElement f = SymElement::schur(n, p, lam);
                for (uint32_t k = 0; k < p; ++k) f = diff_sym(f);
                CHECK(f.is_zero());
            }
    }

    uint32_t p = 5;
    std::mt19937 rng(21);
    std::vector<Partition> pool = partitions_in_box(3, 3);
    for (int t = 0; t < 20; ++t) {
        int n = 3;
        SymElement f = SymElement::schur(n, p, pool[rng() % pool.size()],
                                         1 + rng() % (p - 1));
        SymElement g = SymElement::schur(n, p, pool[rng() % pool.size()],
                                         1 + rng() % (p - 1));
        CHECK(diff_sym(f * g) == diff_sym(f) * g + f * diff_sym(g));
    }
}
