#pragma once
// Partially-symmetric functions Sym_{a_1} x ... x Sym_{a_k} in the
// product Schur basis: blockwise products, the blockwise derivation,
// restriction of full Schur functions, and the divided-difference trace
// back down to Sym_n.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pdg/partition.hpp"
#include "pdg/poly.hpp"
#include "pdg/sym.hpp"

namespace pdg {

struct Composition {
    std::vector<int> parts;  // positive block sizes

    Composition() = default;
    Composition(std::initializer_list<int> v) : parts(v) { validate(); }
    explicit Composition(std::vector<int> v) : parts(std::move(v)) {
        validate();
    }

    void validate() const;  // throws invalid_argument("not a composition")

    int total() const {
        int s = 0;
        for (int v : parts) s += v;
        return s;
    }
    int blocks() const { return static_cast<int>(parts.size()); }
    int part(int i) const { return parts[static_cast<size_t>(i)]; }
    // index of the first variable of block i (prefix sum a_1 + ... + a_i)
    int offset(int i) const {
        int s = 0;
        for (int j = 0; j < i; ++j) s += parts[static_cast<size_t>(j)];
        return s;
    }

    bool operator==(const Composition& o) const { return parts == o.parts; }
    bool operator!=(const Composition& o) const { return parts != o.parts; }
    bool operator<(const Composition& o) const { return parts < o.parts; }

    std::string to_string() const;
};

// element of Sym_{a_1} x ... x Sym_{a_k}; keys are one partition per block
struct PSymElement {
    Composition comp;
    uint32_t p = 2;
    std::map<std::vector<Partition>, uint32_t> coeffs;  // coeff in [1,p)

    PSymElement() = default;
    PSymElement(Composition c, uint32_t p_) : comp(std::move(c)), p(p_) {}

    static PSymElement one(const Composition& c, uint32_t p);
    // product basis element prod_i pi_{tuple[i]}(block i); zero if some
    // tuple[i] has more than a_i rows
    static PSymElement schur_tuple(const Composition& c, uint32_t p,
                                   const std::vector<Partition>& tuple,
                                   uint32_t coeff = 1);

    bool is_zero() const { return coeffs.empty(); }
    void add_term(const std::vector<Partition>& tuple, uint32_t c);
    uint32_t coeff(const std::vector<Partition>& tuple) const {
        auto it = coeffs.find(tuple);
        return it == coeffs.end() ? 0 : it->second;
    }

    // degree of the first term (2 sum |lambda_i|); -1 for zero
    int degree() const;
    bool is_homogeneous() const;

    bool operator==(const PSymElement& o) const {
        return comp == o.comp && p == o.p && coeffs == o.coeffs;
    }
    bool operator!=(const PSymElement& o) const { return !(*this == o); }

    std::string to_string() const;
};

PSymElement operator+(const PSymElement& a, const PSymElement& b);
PSymElement operator-(const PSymElement& a, const PSymElement& b);
PSymElement operator*(uint32_t c, const PSymElement& a);
PSymElement operator*(const PSymElement& a, const PSymElement& b);

// blockwise Leibniz extension of the Schur derivation
PSymElement psym_diff(const PSymElement& f);

// multiply by e_1 of block i (0-indexed)
PSymElement psym_e1_block(const PSymElement& f, int i);

// the full Schur function pi_lam in the union of the variables of blocks
// [first_block, last_block], expanded in the product basis (iterated
// coproduct with Littlewood-Richardson coefficients)
PSymElement embed_schur_segment(const Composition& comp, uint32_t p,
                                const Partition& lam, int first_block,
                                int last_block);

// restriction Sym_n -> Sym_{a_1} x ... x Sym_{a_k} on every term
PSymElement sym_to_psym(const SymElement& f, const Composition& comp);

// expansion into monomials of Pol_n, blocks laid out consecutively
PolyElement psym_to_monomials(const PSymElement& f);

// the composite divided difference killing all partial symmetry: the
// longest coset representative for S_{a_1} x ... x S_{a_k} in S_n,
// landing in Sym_n; lowers degree by 2 sum_{i<j} a_i a_j
SymElement divided_trace(const PSymElement& f);

} // namespace pdg
