#pragma once
// Independent reference computations shared by test binaries.

#include <map>
#include <utility>
#include <vector>

#include "pdg/grasmod.hpp"
#include "pdg/nilhecke.hpp"
#include "pdg/pcomplex.hpp"
#include "pdg/psym.hpp"

namespace pdg::oracles {

// blockwise trace the slow way: convert to monomials, multiply by the
// product of per-block staircases, and apply a full longest-element
// divided-difference word on all n variables
inline SymElement trace_by_divided_differences(const PSymElement& f) {
    int n = f.comp.total();
    PolyElement g = psym_to_monomials(f);
    std::vector<int> stair(static_cast<size_t>(n), 0);
    for (int i = 0; i < f.comp.blocks(); ++i)
        for (int r = 0; r < f.comp.part(i); ++r)
            stair[static_cast<size_t>(f.comp.offset(i) + r)] =
                f.comp.part(i) - 1 - r;
    PolyElement s(n, f.p);
    s.terms[stair] = 1;
    g = g * s;
    for (int blk = 1; blk < n; ++blk)
        for (int i = blk; i >= 1; --i) g = divided_difference(g, i);
    return monomials_to_schur(g);
}

// predicted stable blocks of Sym_n . v, d(v) = a e_1 v, restricted to
// bottom degree <= limit: the explicit spanning sets, built from scratch.
// With k = floor(n/p):
//   a = 0              -> F_p[e_p^p, ..., e_{kp}^p], zero differential
//   1 <= a <= n-kp     -> acyclic
//   otherwise          -> same polynomial ring tensored with the span of
//                         monomials e_{kp}^{i_{kp}} ... e_n^{i_n}
//                         (e_0 = 1), sum i_j = p-a, with differential
//                         m -> -sum_j (j+1) i_j m e_{j+1}/e_j, e_{n+1} = 0
inline std::map<std::pair<int, int>, std::size_t>
predicted_rank_one_blocks(int n, uint32_t a, uint32_t p, int limit) {
    std::map<std::pair<int, int>, std::size_t> out;
    int k = n / static_cast<int>(p);
    a %= p;
    if (a >= 1 && static_cast<int>(a) <= n - k * static_cast<int>(p))
        return out;

    std::map<int, std::size_t> ring;  // monomial degrees of the e_{jp}^p ring
    ring[0] = 1;
    for (int j = 1; j <= k; ++j) {
        int g = 2 * j * static_cast<int>(p) * static_cast<int>(p);
        for (int d = g; d <= limit; ++d)
            if (ring.count(d - g)) ring[d] += ring[d - g];
    }

    if (a == 0) {
        for (auto& [d, m] : ring) out[{1, d}] += m;
        return out;
    }

    // base complex on exponent vectors (i_{kp}, ..., i_n)
    int lo = k * static_cast<int>(p);
    int slots = n - lo + 1;
    std::vector<std::vector<int>> vecs;
    std::vector<int> cur(static_cast<size_t>(slots), 0);
    auto enumerate = [&](auto&& self, int pos, int rest) -> void {
        if (pos == slots - 1) {
            cur[static_cast<size_t>(pos)] = rest;
            vecs.push_back(cur);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    enumerate(enumerate, 0, static_cast<int>(p) - static_cast<int>(a));

    auto vec_degree = [&](const std::vector<int>& v) {
        int d = 0;
        for (int s = 0; s < slots; ++s)
            d += 2 * (lo + s) * v[static_cast<size_t>(s)];
        return d;
    };
    std::map<int, std::map<std::vector<int>, std::size_t>> index;
    for (auto& v : vecs) {
        auto& level = index[vec_degree(v)];
        level.emplace(v, level.size());
    }
    Fp F(p);
    PComplex C(p);
    for (auto& [d, level] : index) C.dims[d] = level.size();
    for (auto& [d, level] : index) {
        if (!index.count(d + 2)) continue;
        FpMat D(index.at(d + 2).size(), level.size(), p);
        for (auto& [v, col] : level) {
            for (int s = 0; s + 1 < slots; ++s) {
                if (!v[static_cast<size_t>(s)]) continue;
                std::vector<int> w = v;
                w[static_cast<size_t>(s)] -= 1;
                w[static_cast<size_t>(s) + 1] += 1;
                uint32_t c =
                    F.mul(F.reduce(-(lo + s + 1)),
                          F.reduce(v[static_cast<size_t>(s)]));
                if (c) D.at(index.at(d + 2).at(w), col) = F.add(
                    D.at(index.at(d + 2).at(w), col), c);
            }
        }
        C.d[d] = std::move(D);
    }
    validate_pcomplex(C);
    BlockDecomposition base = decompose(C);

    for (auto& [key, mult] : base.blocks) {
        auto [len, bot] = key;
        if (len == static_cast<int>(p)) continue;
        for (auto& [d, m] : ring)
            if (bot + d <= limit) out[{len, bot + d}] += mult * m;
    }
    return out;
}

} // namespace pdg::oracles
