#pragma once
// Filtration verifiers for p-DG module maps: orthogonal-idempotent
// filtrations with one-sided triangularity, and composable-factorization
// ("split through") filtrations that force a Grothendieck-group relation
// [M] = sum q^{shift_i} [N_i].  Both verifiers are polymorphic over the
// map algebra via an Ops object providing compose / add / diff /
// is_zero / equal / source_identity / target_identity.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pdg/fpmat.hpp"
#include "pdg/grasmod.hpp"

namespace pdg {

template <typename Map>
struct FcItem {
    Map u;  // N_i -> M
    Map v;  // M -> N_i
    int shift = 0;
};

template <typename Map>
struct FcDatum {
    std::vector<FcItem<Map>> items;  // increasing order, position 0 minimal
};

struct FcReport {
    bool unit_ok = true;        // v_i u_i = id  (or idempotency)
    bool orthogonal_ok = true;  // v_i u_j = 0 for i != j
    bool complete_ok = true;    // sum u_i v_i = id
    bool triangular_ok = true;  // d(v_i) u_j = 0 for j >= i  (or j > i)
    // equivalent right-hand condition e_i d(e_j) = 0 for i < j;
    // only meaningful for idempotent filtrations
    bool right_triangular_ok = true;
    std::pair<int, int> counterexample{-1, -1};  // first failing (i, j)
    std::string detail;
    std::vector<int> shifts;

    bool pass() const {
        return unit_ok && orthogonal_ok && complete_ok && triangular_ok;
    }
};

namespace detail {
inline void record(FcReport& r, bool& flag, int i, int j, const char* what) {
    flag = false;
    if (r.counterexample.first < 0) {
        r.counterexample = {i, j};
        r.detail = std::string(what) + " fails at (" + std::to_string(i) +
                   ", " + std::to_string(j) + ")";
    }
}
} // namespace detail

// factorization filtration: v_i u_i = id, v_i u_j = 0 for i != j,
// sum u_i v_i = id, d(v_i) u_j = 0 for j >= i
template <typename Map, typename Ops>
FcReport verify_fc(const FcDatum<Map>& d, const Ops& ops) {
    FcReport r;
    int n = static_cast<int>(d.items.size());
    for (const auto& it : d.items) r.shifts.push_back(it.shift);
    if (n == 0) return r;
    for (int i = 0; i < n; ++i) {
        const Map& u = d.items[static_cast<size_t>(i)].u;
        const Map& v = d.items[static_cast<size_t>(i)].v;
        if (!ops.equal(ops.compose(v, u), ops.source_identity(u)))
            detail::record(r, r.unit_ok, i, i, "v u = id");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (!ops.is_zero(ops.compose(d.items[static_cast<size_t>(i)].v,
                                         d.items[static_cast<size_t>(j)].u)))
                detail::record(r, r.orthogonal_ok, i, j, "v u = 0");
        }
    Map total = ops.compose(d.items[0].u, d.items[0].v);
    for (int i = 1; i < n; ++i)
        total = ops.add(total,
                        ops.compose(d.items[static_cast<size_t>(i)].u,
                                    d.items[static_cast<size_t>(i)].v));
    if (!ops.equal(total, ops.target_identity(d.items[0].u)))
        detail::record(r, r.complete_ok, -1, -1, "sum u v = id");
    for (int i = 0; i < n; ++i) {
        Map dv = ops.diff(d.items[static_cast<size_t>(i)].v);
        for (int j = i; j < n; ++j)
            if (!ops.is_zero(
                    ops.compose(dv, d.items[static_cast<size_t>(j)].u)))
                detail::record(r, r.triangular_ok, i, j, "d(v) u = 0");
    }
    return r;
}

// orthogonal-idempotent filtration: e_i e_i = e_i, e_i e_j = 0 for i != j,
// sum e_i = id, d(e_i) e_j = 0 for j > i; the equivalent right condition
// e_i d(e_j) = 0 for i < j is evaluated alongside
template <typename Map, typename Ops>
FcReport verify_dg_filtration(const std::vector<Map>& eps, const Ops& ops) {
    FcReport r;
    int n = static_cast<int>(eps.size());
    if (n == 0) return r;
    for (int i = 0; i < n; ++i) {
        const Map& e = eps[static_cast<size_t>(i)];
        if (!ops.equal(ops.compose(e, e), e))
            detail::record(r, r.unit_ok, i, i, "e e = e");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (!ops.is_zero(ops.compose(eps[static_cast<size_t>(i)],
                                         eps[static_cast<size_t>(j)])))
                detail::record(r, r.orthogonal_ok, i, j, "e e = 0");
        }
    Map total = eps[0];
    for (int i = 1; i < n; ++i)
        total = ops.add(total, eps[static_cast<size_t>(i)]);
    if (!ops.equal(total, ops.target_identity(eps[0])))
        detail::record(r, r.complete_ok, -1, -1, "sum e = id");
    for (int i = 0; i < n; ++i) {
        Map de = ops.diff(eps[static_cast<size_t>(i)]);
        for (int j = i + 1; j < n; ++j)
            if (!ops.is_zero(
                    ops.compose(de, eps[static_cast<size_t>(j)])))
                detail::record(r, r.triangular_ok, i, j, "d(e) e = 0");
    }
    for (int j = 0; j < n; ++j) {
        Map de = ops.diff(eps[static_cast<size_t>(j)]);
        for (int i = 0; i < j; ++i)
            if (!ops.is_zero(
                    ops.compose(eps[static_cast<size_t>(i)], de)))
                detail::record(r, r.right_triangular_ok, i, j, "e d(e) = 0");
    }
    return r;
}

// map algebra of graded module maps in stable bases
struct GmOps {
    GradedModuleMap compose(const GradedModuleMap& f,
                            const GradedModuleMap& g) const {
        return gm_compose(f, g);
    }
    GradedModuleMap add(const GradedModuleMap& f,
                        const GradedModuleMap& g) const {
        return gm_add(f, g);
    }
    GradedModuleMap diff(const GradedModuleMap& f) const {
        return gm_diff(f);
    }
    bool is_zero(const GradedModuleMap& f) const { return gm_is_zero(f); }
    bool equal(const GradedModuleMap& f, const GradedModuleMap& g) const {
        return gm_equal(f, g);
    }
    GradedModuleMap source_identity(const GradedModuleMap& f) const {
        return gm_identity(f.src);
    }
    GradedModuleMap target_identity(const GradedModuleMap& f) const {
        return gm_identity(f.tgt);
    }
};

// map algebra of square matrices with commutator differential [D, -]
struct MatOps {
    FpMat D;

    FpMat compose(const FpMat& a, const FpMat& b) const { return fp_mul(a, b); }
    FpMat add(const FpMat& a, const FpMat& b) const { return fp_add(a, b); }
    FpMat diff(const FpMat& x) const {
        return fp_sub(fp_mul(D, x), fp_mul(x, D));
    }
    bool is_zero(const FpMat& x) const { return x.is_zero(); }
    bool equal(const FpMat& a, const FpMat& b) const { return a == b; }
    FpMat source_identity(const FpMat& x) const {
        return FpMat::identity(x.cols, x.p);
    }
    FpMat target_identity(const FpMat& x) const {
        return FpMat::identity(x.rows, x.p);
    }
};

// regular nilpotent with ones on the superdiagonal
FpMat regular_nilpotent(int n, uint32_t p);
// matrix unit e_{ii} (0-indexed) as an n x n matrix
FpMat unit_idempotent(int n, uint32_t p, int i);

// the signed split/merge factorization of the identity of S_{a,b},
// ordered by increasing |lambda|; verification proves the product-of-
// one-column-modules decomposition and its q-binomial class
FcDatum<GradedModuleMap> ee_decomposition(int a, int b, uint32_t p);

} // namespace pdg
