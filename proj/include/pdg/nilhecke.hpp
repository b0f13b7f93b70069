#pragma once
// The nilHecke algebra acting on Pol_n: divided differences, dots, the
// longest element, idempotents, and the commutator differential induced
// from the twisted module Pol_n . v with d(v) = (sum a_i x_i) v.
//
// Operators are stored faithfully as square matrices over Sym_n with
// respect to the monomial basis {x_1^{c_1}...x_{n-1}^{c_{n-1}}},
// 0 <= c_i <= n-i (n! elements).

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "pdg/fpmat.hpp"
#include "pdg/sym.hpp"

namespace pdg {

struct TwistVector {
    int n = 0;
    uint32_t p = 2;
    std::vector<uint32_t> a;  // entries in F_p

    // a+ = (-(n-1), ..., -1, 0)
    static TwistVector canonical(int n, uint32_t p);
    int generator_degree() const { return n * (1 - n) / 2; }
    // the linear polynomial sum a_i x_i
    PolyElement weight_poly() const;
};

// divided difference in variables i, i+1 (1-indexed): (f - s_i f)/(x_i - x_{i+1})
PolyElement divided_difference(const PolyElement& f, int i);

// staircase x_1^{n-1} x_2^{n-2} ... x_{n-1}
PolyElement staircase_poly(int n, uint32_t p);

struct NHContext {
    int n;
    uint32_t p;
    std::vector<std::vector<int>> basis;  // exponent vectors, length n each

    NHContext(int n_, uint32_t p_);

    std::size_t size() const { return basis.size(); }
    PolyElement basis_monomial(std::size_t idx) const;

    // expansion over Sym_n: g = sum_c coeffs[c] * x^basis[c]
    std::vector<SymElement> straighten(const PolyElement& g) const;
    PolyElement assemble(const std::vector<SymElement>& coeffs) const;

  private:
    struct DegreeCache {
        FpMat inverse;
        std::vector<std::pair<std::size_t, Partition>> labels;
        std::map<std::vector<int>, std::size_t> mono_index;
    };
    const DegreeCache& degree_cache(int d) const;
    mutable std::map<int, DegreeCache> cache_;
};

struct NilHeckeOp {
    int n = 0;
    uint32_t p = 2;
    std::vector<std::vector<SymElement>> mat;  // mat[row][col]

    bool operator==(const NilHeckeOp& o) const {
        return n == o.n && p == o.p && mat == o.mat;
    }
    bool operator!=(const NilHeckeOp& o) const { return !(*this == o); }
    bool is_zero() const;
};

NilHeckeOp nh_zero(const NHContext& ctx);
NilHeckeOp nh_identity(const NHContext& ctx);
// matrix of an arbitrary Sym_n-linear map given pointwise
NilHeckeOp nh_from_function(const NHContext& ctx,
                            const std::function<PolyElement(const PolyElement&)>& f);
NilHeckeOp nh_dot(const NHContext& ctx, int i);       // multiplication by x_i
NilHeckeOp nh_crossing(const NHContext& ctx, int i);  // divided difference
NilHeckeOp nh_mult(const NHContext& ctx, const PolyElement& f);

NilHeckeOp operator+(const NilHeckeOp& a, const NilHeckeOp& b);
NilHeckeOp operator-(const NilHeckeOp& a, const NilHeckeOp& b);
NilHeckeOp compose(const NilHeckeOp& a, const NilHeckeOp& b);

PolyElement apply_op(const NHContext& ctx, const NilHeckeOp& op,
                     const PolyElement& g);

// D_n from the reduced word (1)(2 1)(3 2 1)...; independent of the word
NilHeckeOp longest_element(const NHContext& ctx);

// epsilon_a = (multiplication by the staircase) composed after D_a, a = ctx.n
NilHeckeOp epsilon(const NHContext& ctx);

// commutator differential on operators from the twisted module structure
NilHeckeOp induced_diff_op(const NHContext& ctx, const NilHeckeOp& op,
                           const TwistVector& tw);

// d(f v) = diff(f) v + f (sum a_i x_i) v on module elements
PolyElement twisted_diff(const PolyElement& f, const TwistVector& tw);

// checks d(D_n) = -l_n D_n - D_n r_n with the canonical twist
bool verify_dDn(int n, uint32_t p);

} // namespace pdg
