#pragma once
// Flag-bimodule realization of the thick divided-power calculus: words in
// E^(a)/F^(b) acting between one-step symmetric rings, the twisted
// differential, diagrammatic 2-morphism generators (dots, splitters,
// crossings, cups/caps, sideways crossings, bubbles), the closed-form
// differential catalogue, and the fantastic filtration of E^(a)F^(b).

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "pdg/fcfilt.hpp"
#include "pdg/laurent.hpp"
#include "pdg/psym.hpp"

namespace pdg {

// ambient datum: flags inside C^N, Grassmannian step k, weight n = 2k - N
struct FlagContext {
    int N = 1;
    uint32_t p = 3;
    int k = 0;
    int cutoff = 0;

    FlagContext(int N_, int n, uint32_t p_, int cutoff_ = 0);
    int weight() const { return 2 * k - N; }
};

// the two smallest N compatible with parameters (a, b) at weight n:
// N = n (mod 2), step k >= b, k + a <= N
std::vector<FlagContext> default_contexts(int a, int b, int n, uint32_t p);

// word in divided powers: +a = E^(a), -b = F^(b); entry 0 is the leftmost
// letter on the page, and the rightmost letter acts on the domain first
using Word = std::vector<int>;

int word_delta(const Word& w);
// 180-degree rotation: reverse the letters and exchange E with F
Word word_rotate(const Word& w);
std::string word_name(const Word& w);

// block sizes with zeros allowed, wrapping a Composition on the positive
// blocks; pos maps each conceptual block to its squeezed index or -1
struct BlockMap {
    std::vector<int> size;
    Composition comp;
    std::vector<int> pos;

    BlockMap() = default;
    explicit BlockMap(std::vector<int> sizes);

    int blocks() const { return static_cast<int>(size.size()); }
    int total() const;
    bool operator==(const BlockMap& o) const { return size == o.size; }
};

PSymElement bm_one(const BlockMap& bm, uint32_t p);
// pi_lam placed on conceptual block i; zero when lam has too many rows
PSymElement bm_schur(const BlockMap& bm, uint32_t p, int i,
                     const Partition& lam);
// the full Schur function pi_lam in the union of the variables of the
// conceptual blocks [first, last], expanded over bm
PSymElement bm_embed_segment(const BlockMap& bm, uint32_t p,
                             const Partition& lam, int first, int last);

// divided-difference trace of pi_lam (first block, a variables) times
// pi_mu (second block, b variables) down to one block of a+b variables:
// Jacobi-Trudi straightening; sign in {-1,0,+1}
std::pair<int, Partition> two_block_trace(const Partition& lam,
                                          const Partition& mu, int a, int b);

// trace conceptual blocks i and i+1 of f into a single block, other
// blocks passing through; returns the merged map and the traced element
std::pair<BlockMap, PSymElement> trace_adjacent(const BlockMap& bm,
                                                const PSymElement& f, int i);

// one letter of a word in place: local three-block flag, e_1 twist
// coefficients of the differential, and the degree shift of its cells
struct WordFactor {
    int letter = 0;
    int kappa = 0;    // incoming Grassmannian step
    int kout = 0;     // outgoing step
    BlockMap flag;    // E^(a): (kappa, a, N-kappa-a); F^(b): (kappa-b, b, N-kappa)
    std::array<int, 3> twist{0, 0, 0};
    int shift = 0;
    int rows = 0;     // thickness: cells live in P(rows, cols)
    int cols = 0;
};

// the bimodule of a word at base step k0: free right module over the base
// ring Sym_(k0, N-k0) with basis the product of local cell partitions
struct WordModule {
    int N = 1;
    uint32_t p = 3;
    int k0 = 0;
    Word word;
    BlockMap base;
    std::vector<WordFactor> factors;              // factor j acts j-th from the right
    std::vector<std::vector<Partition>> cells;    // per factor

    int letters() const { return static_cast<int>(factors.size()); }

    // basis tuples (entry j = cell of factor j) are enumerated on first use
    std::size_t rank() const;
    const std::vector<std::vector<Partition>>& basis_list() const;
    std::size_t index_of(const std::vector<Partition>& t) const;
    int degree_of(const std::vector<Partition>& t) const;
    int degree_at(std::size_t c) const;

    // columns of the differential on basis vectors, base-ring coefficients
    const std::vector<std::map<std::size_t, PSymElement>>& diff_columns() const;

    WordModule() = default;
    WordModule(const WordModule&) = delete;
    WordModule& operator=(const WordModule&) = delete;

  private:
    void ensure_basis() const;
    mutable std::once_flag basis_once;
    mutable std::once_flag diff_once;
    mutable std::vector<std::vector<Partition>> basis_;
    mutable std::map<std::vector<Partition>, std::size_t> index_;
    mutable std::vector<int> deg_;
    mutable std::vector<std::map<std::size_t, PSymElement>> diff_cols_;
    friend const WordModule& word_module(int, uint32_t, int, const Word&);
};

// interned module; throws invalid_argument("weight-out-of-range") when a
// step leaves [0, N]
const WordModule& word_module(int N, uint32_t p, int k0, const Word& w);

// pi_lam on the middle block of factor j's flag
PSymElement local_cell(const WordModule& M, int j, const Partition& lam);
// embed an element of the incoming ring Sym_(kappa_j, N-kappa_j) into
// factor j's flag
PSymElement embed_right(const WordModule& M, int j, const PSymElement& r);

// expansion of f over factor j's flag as sum pi_mu(middle) * r_mu with
// right-ring coefficients; exact since the flag ring is free over the
// Grassmannian subring
std::vector<std::pair<Partition, PSymElement>> expand_local(
    const WordModule& M, int j, const PSymElement& f);

// graded rank over the base ring
LaurentPoly graded_rank(const WordModule& M);

// sum_c (D v)_c + d(v_c) iterated p times kills every basis vector
bool um_module_nilpotent(const WordModule& M);

// degree-homogeneous map of word modules; col[c] = image of source basis
// vector c with base-ring coefficients
struct Real2Morphism {
    const WordModule* tgt = nullptr;
    const WordModule* src = nullptr;
    int degree = 0;
    std::vector<std::map<std::size_t, PSymElement>> col;
};

Real2Morphism um_zero(const WordModule& tgt, const WordModule& src,
                      int degree);
Real2Morphism um_identity(const WordModule& M);
Real2Morphism um_add(const Real2Morphism& f, const Real2Morphism& g);
Real2Morphism um_sub(const Real2Morphism& f, const Real2Morphism& g);
Real2Morphism um_scalar(uint32_t c, const Real2Morphism& f);
// multiply every coefficient by a homogeneous base-ring element
Real2Morphism um_scale_ring(const PSymElement& r, const Real2Morphism& f);
Real2Morphism um_compose(const Real2Morphism& f, const Real2Morphism& g);
// d(f) = D_tgt f + d(coefficients) - f D_src, degree f.degree + 2
Real2Morphism um_diff(const Real2Morphism& f);
bool um_is_zero(const Real2Morphism& f);
bool um_equal(const Real2Morphism& f, const Real2Morphism& g);
// throws invalid_argument("inhomogeneous-map-entry") on a degree violation
void um_validate(const Real2Morphism& f);

// decorate factor j with pi_lam; degree 2|lam|
Real2Morphism um_decorate(const WordModule& M, int j, const Partition& lam);
// the e_1 dot
Real2Morphism um_dot(const WordModule& M, int j);
// 1_lw tensor f tensor 1_rw; base step = f's step minus word_delta(rw)
Real2Morphism um_tensor(const Word& lw, const Real2Morphism& f,
                        const Word& rw);

// E-splitters: merge [E^(c), E^(d)] => [E^(c+d)], split the other way;
// both have degree -cd
Real2Morphism merge_e(int c, int d, int kappa, int N, uint32_t p);
Real2Morphism split_e(int c, int d, int kappa, int N, uint32_t p);
// thick crossing [E^(a), E^(b)] => [E^(b), E^(a)] = split after merge
Real2Morphism crossing_ee(int a, int b, int kappa, int N, uint32_t p);
Real2Morphism crossing_ee_dotted(int a, int b, int kappa, int N, uint32_t p);

// units and counits of the biadjunction, normalized so that the zig-zag
// identities hold with coefficient +1
Real2Morphism cup_ef(int a, int k, int N, uint32_t p);   // {} => [E^(a), F^(a)]
Real2Morphism cup_fe(int a, int k, int N, uint32_t p);   // {} => [F^(a), E^(a)]
Real2Morphism cap_ef(int a, int k, int N, uint32_t p);   // [E^(a), F^(a)] => {}
Real2Morphism cap_fe(int a, int k, int N, uint32_t p);   // [F^(a), E^(a)] => {}

// coevaluation {} => w + rot(w) and evaluation rot(w) + w => {} of a word
Real2Morphism cups_of(const Word& w, int k, int N, uint32_t p);
Real2Morphism caps_of(const Word& w, int k, int N, uint32_t p);

// conjugate by cups and caps: rot(tgt) => rot(src) at the opposite end
Real2Morphism rotate180(const Real2Morphism& f);

// F-side generators, the mates of the E-side ones
Real2Morphism merge_f(int c, int d, int kappa, int N, uint32_t p);
Real2Morphism split_f(int c, int d, int kappa, int N, uint32_t p);
Real2Morphism crossing_ff(int a, int b, int kappa, int N, uint32_t p);

// sideways crossings: swap_fe is [F^(A), E^(B)] => [E^(B), F^(A)],
// swap_ef its mate going the other way
Real2Morphism swap_fe(int A, int B, int k, int N, uint32_t p);
Real2Morphism swap_fe_dotted(int A, int B, int k, int N, uint32_t p);
Real2Morphism swap_ef(int u, int v, int k, int N, uint32_t p);

// closed thin bubble with the given number of dots, as a base-ring element
PSymElement bubble_poly(bool cw, int dots, int k, int N, uint32_t p);
// degree-2j bubble: realized when the dot count j + |n| - 1 is
// nonnegative, otherwise the fake value solved from the infinite
// Grassmannian relation
PSymElement spade_bubble(bool cw, int j, int k, int N, uint32_t p);
// Giambelli determinant of thin spades for a thickness-a decorated bubble
PSymElement thick_spade(bool cw, const Partition& alpha, int a, int k, int N,
                        uint32_t p);
// realized decorated thick bubble cap . pi_alpha . cup
PSymElement thick_bubble_poly(bool cw, const Partition& alpha, int a, int k,
                              int N, uint32_t p);

// named generator for the spec-level realize entry point
struct GeneratorSpec {
    std::string kind;  // merge_e, split_e, merge_f, split_f, crossing_ee,
                       // crossing_ff, cup_ef, cup_fe, cap_ef, cap_fe,
                       // swap_fe, swap_ef, dot
    int a = 1;
    int b = 1;
    int k = -1;        // base step; -1 = context step
    Partition alpha;   // decoration for kind == "dot"
};
Real2Morphism realize(const GeneratorSpec& g, const FlagContext& ctx);

struct FormulaParams {
    int a = 1;
    int b = 1;
    int k = -1;        // base step; -1 = context step
};
std::vector<std::string> formula_catalogue();
// check one closed-form differential identity in the representation
bool verify_formula(const std::string& id, const FormulaParams& pr,
                    const FlagContext& ctx);

// one inclusion lambda^i_alpha : F^(b-i)E^(a-i) => E^(a)F^(b), carrying
// grading shift 2|alpha| - i(n+a-b-i)
struct StosicItem {
    int i = 0;
    Partition alpha;
    int shift = 0;
    Real2Morphism incl;
};
// ordered by (i, |alpha|, lex); throws invalid_argument("use-FE-side")
// when n < b - a
std::vector<StosicItem> stosic_inclusions(int a, int b, int n,
                                          const FlagContext& ctx);
// projections sigma with sigma lambda = delta and sum lambda sigma = id,
// by block-triangular linear solve; throws runtime_error
// ("decomposition-failed") when the solve degenerates
std::vector<Real2Morphism> solve_projections(
    const std::vector<StosicItem>& items, const WordModule& M);

struct StosicReport {
    FcReport fc;
    bool dif_lambda_ok = false;
    bool analog_ok = false;
    bool k0_ok = false;
    std::string k0_line;
    std::vector<int> shifts;

    bool pass() const {
        return fc.pass() && dif_lambda_ok && analog_ok && k0_ok;
    }
};
StosicReport verify_stosic_fc(int a, int b, int n, const FlagContext& ctx);

// graded-rank witness of the mirrored decomposition for n < b - a
bool verify_stosic_reflection(int a, int b, int n, const FlagContext& ctx);

// map algebra over word modules for the filtration verifiers
struct UmOps {
    Real2Morphism compose(const Real2Morphism& f,
                          const Real2Morphism& g) const {
        return um_compose(f, g);
    }
    Real2Morphism add(const Real2Morphism& f, const Real2Morphism& g) const {
        return um_add(f, g);
    }
    Real2Morphism diff(const Real2Morphism& f) const { return um_diff(f); }
    bool is_zero(const Real2Morphism& f) const { return um_is_zero(f); }
    bool equal(const Real2Morphism& f, const Real2Morphism& g) const {
        return um_equal(f, g);
    }
    Real2Morphism source_identity(const Real2Morphism& f) const {
        return um_identity(*f.src);
    }
    Real2Morphism target_identity(const Real2Morphism& f) const {
        return um_identity(*f.tgt);
    }
};

} // namespace pdg
