#pragma once
// Finite-dimensional p-complexes over F_p: even-graded spaces with a
// degree-+2 map d satisfying d^p = 0, decomposed into Jordan blocks
// k[d]/(d^j) with degree shifts.

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "pdg/fpmat.hpp"
#include "pdg/opring.hpp"

namespace pdg {

struct PComplex {
    uint32_t p = 2;
    std::map<int, std::size_t> dims;  // even degree -> dimension (nonzero)
    std::map<int, FpMat> d;           // source degree -> matrix into degree+2

    PComplex() = default;
    explicit PComplex(uint32_t p_) : p(p_) {}

    std::size_t dim(int deg) const {
        auto it = dims.find(deg);
        return it == dims.end() ? 0 : it->second;
    }
    std::size_t total_dim() const {
        std::size_t t = 0;
        for (auto& [deg, n] : dims) t += n;
        return t;
    }
    // the component V_deg -> V_{deg+2}, materialized as a zero matrix when absent
    FpMat map_at(int deg) const {
        auto it = d.find(deg);
        if (it != d.end()) return it->second;
        return FpMat(dim(deg + 2), dim(deg), p);
    }
};

struct BlockDecomposition {
    // (length j, bottom degree) -> multiplicity
    std::map<std::pair<int, int>, std::size_t> blocks;

    std::size_t total_dim() const {
        std::size_t t = 0;
        for (auto& [key, m] : blocks) t += static_cast<std::size_t>(key.first) * m;
        return t;
    }
    bool operator==(const BlockDecomposition& o) const {
        return blocks == o.blocks;
    }
    bool operator!=(const BlockDecomposition& o) const { return !(*this == o); }
    std::string to_string() const;
};

// throws invalid_argument("not-a-p-complex") on odd degrees, shape
// mismatches, or d^p != 0
void validate_pcomplex(const PComplex& C);

// k[d]/(d^length) with generator in degree bottom_deg
PComplex single_block(uint32_t p, int length, int bottom_deg);
PComplex direct_sum(const PComplex& A, const PComplex& B);

// graded Jordan decomposition (unique block multiset)
BlockDecomposition decompose(const PComplex& C);

// every block has length exactly p
bool is_contractible(const PComplex& C);

// blocks of length < p; complete quasi-isomorphism invariant
BlockDecomposition stable_cohomology(const PComplex& C);

// sum over non-full blocks (j,s) of q^s (1 + q^2 + ... + q^{2(j-1)}) in O_p
OpElement k0_symbol(const PComplex& C);

// Mat_n(F_p) with deg(e_ij) = 2(j-i) and d(x) = [D,x], D the regular
// nilpotent; throws invalid_argument("differential-not-p-nilpotent") if n > p
PComplex matrix_pdg(int n, uint32_t p);

// position of e_ij inside the degree-2(j-i) component of matrix_pdg(n,p)
std::size_t matrix_pdg_index(int n, int i, int j);

} // namespace pdg
