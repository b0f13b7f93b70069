#pragma once
// Twisted modules over partially-symmetric rings: rank-one modules
// Sym_{a_1} x ... x Sym_{a_k} . v with d(v) = sum t_i e_1(block i) v,
// their finite d-stable bases over Sym_n, graded module maps in those
// bases, the duality pairing, split/merge maps, morphism-space bases,
// and degree-truncated stable cohomology of rank-one modules over Sym_n.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pdg/fpmat.hpp"
#include "pdg/pcomplex.hpp"
#include "pdg/psym.hpp"

namespace pdg {

struct TwistedModule {
    Composition comp;
    uint32_t p = 2;
    std::vector<uint32_t> twists;  // one F_p scalar per block

    TwistedModule(Composition c, uint32_t p_, const std::vector<int>& tw);

    // t_i = -(a_{i+1} + ... + a_k): the twists for which the stable basis
    // is closed under d over F_p
    static TwistedModule canonical(const Composition& c, uint32_t p);

    int generator_degree() const;  // -sum_{i<j} a_i a_j

    // d(f v) = (blockwise Leibniz of f + sum_i t_i e_1(block i) f) v
    PSymElement diff(const PSymElement& f) const;

    bool operator==(const TwistedModule& o) const {
        return comp == o.comp && p == o.p && twists == o.twists;
    }
    bool operator!=(const TwistedModule& o) const { return !(*this == o); }
};

// the finite basis over Sym_n: tuples (lambda_1, ..., lambda_{k-1}) with
// lambda_i a partition in an (a_1+...+a_i) x a_{i+1} box, realized as
// products of full Schur functions on prefix alphabets
struct StableBasis {
    std::vector<std::vector<Partition>> tuples;
    std::vector<PSymElement> elements;  // product-basis expansions
    std::vector<int> degrees;           // including the generator degree
    std::map<std::vector<Partition>, std::size_t> index;

    std::size_t size() const { return tuples.size(); }
};

const StableBasis& stable_basis(const Composition& comp, uint32_t p);

// matrix of d in the stable basis, column j = image of basis j; entries
// in F_p; throws invalid_argument("differential-leaves-stable-span") if
// some image is not an F_p-combination of basis elements
const FpMat& stable_diff_matrix(const TwistedModule& M);

enum class SpanSide { first, second };

// two-block span closure: true iff d of every basis element
// {pi_lam x 1 . v} (side first, lam in P(a,b)) respectively
// {1 x pi_lam . v} (side second, lam in P(b,a)) stays in the F_p-span
// of that family
bool finite_cell_span_check(int a, int b, int k, int l, SpanSide side,
                            uint32_t p);

// trace pairing <f,g> = divided_trace(f g) over Sym_{a+b}
SymElement grass_pairing(const PSymElement& f, const PSymElement& g);

// <pi_lam x 1, 1 x pi_{mu-hat}> = (-1)^{|mu-hat|} delta_{lam,mu} for all
// lam, mu in P(a,b)
bool verify_orthogonality(int a, int b, uint32_t p);

// d<f,g> = <df,g> + <f,dg> for f over S_{a,b}(k,l) and g over
// S_{a,b}(-b-k,-a-l), on all basis pairs
bool verify_pairing_dinvariance(int a, int b, int k, int l, uint32_t p);

// Sym_n-linear maps between twisted modules in their stable bases;
// entry (r,c) is the Sym_n-coefficient of target basis r in the image of
// source basis c, homogeneous of degree `degree` + deg src_c - deg tgt_r
struct GradedModuleMap {
    TwistedModule tgt, src;
    int degree = 0;
    std::vector<std::vector<SymElement>> mat;  // [tgt basis][src basis]
};

GradedModuleMap gm_zero(const TwistedModule& tgt, const TwistedModule& src,
                        int degree);
GradedModuleMap gm_identity(const TwistedModule& M);
GradedModuleMap gm_add(const GradedModuleMap& f, const GradedModuleMap& g);
GradedModuleMap gm_sub(const GradedModuleMap& f, const GradedModuleMap& g);
GradedModuleMap gm_scalar(uint32_t c, const GradedModuleMap& f);
// f after g
GradedModuleMap gm_compose(const GradedModuleMap& f, const GradedModuleMap& g);
// d_H(phi) = d_tgt . phi - phi . d_src
GradedModuleMap gm_diff(const GradedModuleMap& f);
bool gm_is_zero(const GradedModuleMap& f);
bool gm_equal(const GradedModuleMap& f, const GradedModuleMap& g);
// throws invalid_argument("inhomogeneous-map-entry") on a degree mismatch
void gm_validate(const GradedModuleMap& f);

// Sym_{a+b} -> S_{a,b}: w -> (pi_lam x 1) v; degree 2|lam| - ab
GradedModuleMap split_map(int a, int b, const Partition& lam, uint32_t p);
// S_{a,b} -> Sym_{a+b}: f v -> divided_trace(f (1 x pi_mu)) w; no sign;
// degree 2|mu| - ab
GradedModuleMap merge_map(int a, int b, const Partition& mu, uint32_t p);

// basis of HOM_{Sym_n}(S_bbar, S_abar) between canonical modules: one map
// per pair of (prefix-basis tuple for abar) and (dual tuple for bbar,
// mu_j in a b_j x (b_1+...+b_{j-1}) box on the suffix alphabet);
// throws invalid_argument("composition-mismatch") if totals differ
std::vector<GradedModuleMap> morphism_space_basis(const Composition& abar,
                                                  const Composition& bbar,
                                                  uint32_t p);

struct TruncatedCohomology {
    // trusted non-full blocks: (length, bottom degree) -> multiplicity,
    // bottom <= reliable_limit
    std::map<std::pair<int, int>, std::size_t> blocks;
    // graded dimensions contributed by the trusted blocks
    std::map<int, std::size_t> dims;
    int reliable_limit = 0;
    // computed non-full blocks beyond the limit (lengths untrusted)
    std::size_t undetermined = 0;
};

// stable cohomology of Sym_n . v, d(v) = a e_1 v, truncated at `cutoff`;
// blocks with bottom degree <= cutoff - 2p are exact, and a re-run at
// cutoff + 2p must agree on them; throws
// invalid_argument("cutoff-insufficient") if cutoff < 2p or cutoff is odd
TruncatedCohomology truncated_cohomology_S(int n, int a, uint32_t p,
                                           int cutoff);

} // namespace pdg
