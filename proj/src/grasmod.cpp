#include "pdg/grasmod.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "pdg/fp.hpp"

namespace pdg {

TwistedModule::TwistedModule(Composition c, uint32_t p_,
                             const std::vector<int>& tw)
    : comp(std::move(c)), p(p_) {
    if (static_cast<int>(tw.size()) != comp.blocks())
        throw std::invalid_argument("one twist per block required");
    Fp F(p);
    for (int t : tw) twists.push_back(F.reduce(t));
}

TwistedModule TwistedModule::canonical(const Composition& c, uint32_t p) {
    std::vector<int> tw(static_cast<size_t>(c.blocks()));
    for (int i = 0; i < c.blocks(); ++i) {
        int suffix = 0;
        for (int j = i + 1; j < c.blocks(); ++j) suffix += c.part(j);
        tw[static_cast<size_t>(i)] = -suffix;
    }
    return TwistedModule(c, p, tw);
}

int TwistedModule::generator_degree() const {
    int d = 0;
    for (int i = 0; i < comp.blocks(); ++i)
        for (int j = i + 1; j < comp.blocks(); ++j)
            d -= comp.part(i) * comp.part(j);
    return d;
}

PSymElement TwistedModule::diff(const PSymElement& f) const {
    if (f.comp != comp || f.p != p)
        throw std::invalid_argument("element from a different module");
    PSymElement r = psym_diff(f);
    for (int i = 0; i < comp.blocks(); ++i) {
        uint32_t t = twists[static_cast<size_t>(i)];
        if (t) r = r + t * psym_e1_block(f, i);
    }
    return r;
}

namespace {

int sym_degree(const SymElement& f) {
    if (f.coeffs.empty()) return -1;
    return 2 * f.coeffs.begin()->first.size();
}

bool sym_homogeneous(const SymElement& f) {
    if (f.coeffs.empty()) return true;
    int d = f.coeffs.begin()->first.size();
    for (auto& [lam, c] : f.coeffs)
        if (lam.size() != d) return false;
    return true;
}

std::mutex cache_mutex;

} // namespace

const StableBasis& stable_basis(const Composition& comp, uint32_t p) {
    static std::map<std::pair<std::vector<int>, uint32_t>, StableBasis> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(comp.parts, p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    StableBasis B;
    int k = comp.blocks();
    int gen_deg = TwistedModule::canonical(comp, p).generator_degree();
    std::vector<std::vector<Partition>> boxes;
    for (int i = 0; i + 1 < k; ++i)
        boxes.push_back(partitions_in_box(comp.offset(i + 1), comp.part(i + 1)));

    std::vector<Partition> tuple(static_cast<size_t>(k > 0 ? k - 1 : 0));
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == k - 1) {
            PSymElement elt = PSymElement::one(comp, p);
            int deg = gen_deg;
            for (int i = 0; i + 1 < k; ++i) {
                elt = elt * embed_schur_segment(comp, p,
                                                tuple[static_cast<size_t>(i)],
                                                0, i);
                deg += 2 * tuple[static_cast<size_t>(i)].size();
            }
            B.index[tuple] = B.tuples.size();
            B.tuples.push_back(tuple);
            B.elements.push_back(std::move(elt));
            B.degrees.push_back(deg);
            return;
        }
        for (const Partition& lam : boxes[static_cast<size_t>(pos)]) {
            tuple[static_cast<size_t>(pos)] = lam;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return cache.emplace(key, std::move(B)).first->second;
}

const FpMat& stable_diff_matrix(const TwistedModule& M) {
    static std::map<
        std::tuple<std::vector<int>, std::vector<uint32_t>, uint32_t>, FpMat>
        cache;
    const StableBasis& B = stable_basis(M.comp, M.p);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_tuple(M.comp.parts, M.twists, M.p);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::size_t m = B.size();
    FpMat D(m, m, M.p);
    for (std::size_t j = 0; j < m; ++j) {
        PSymElement img = M.diff(B.elements[j]);
        if (img.is_zero()) continue;
        std::vector<std::size_t> cand;
        for (std::size_t i = 0; i < m; ++i)
            if (B.degrees[i] == B.degrees[j] + 2) cand.push_back(i);
        std::map<std::vector<Partition>, std::size_t> eq;
        for (auto& [tuple, c] : img.coeffs) eq.emplace(tuple, eq.size());
        for (std::size_t i : cand)
            for (auto& [tuple, c] : B.elements[i].coeffs)
                eq.emplace(tuple, eq.size());
        FpMat A(eq.size(), cand.size(), M.p);
        std::vector<uint32_t> rhs(eq.size(), 0);
        for (std::size_t ci = 0; ci < cand.size(); ++ci)
            for (auto& [tuple, c] : B.elements[cand[ci]].coeffs)
                A.at(eq.at(tuple), ci) = c;
        for (auto& [tuple, c] : img.coeffs) rhs[eq.at(tuple)] = c;
        std::vector<uint32_t> x;
        if (!fp_solve(A, rhs, x))
            throw std::invalid_argument("differential-leaves-stable-span");
        for (std::size_t ci = 0; ci < cand.size(); ++ci)
            D.at(cand[ci], j) = x[ci];
    }
    return cache.emplace(key, std::move(D)).first->second;
}

bool finite_cell_span_check(int a, int b, int k, int l, SpanSide side,
                            uint32_t p) {
    Composition comp{a, b};
    TwistedModule M(comp, p, {k, l});
    std::vector<Partition> box = (side == SpanSide::first)
                                     ? partitions_in_box(a, b)
                                     : partitions_in_box(b, a);
    std::set<std::vector<Partition>> allowed;
    for (const Partition& lam : box) {
        std::vector<Partition> t(2);
        t[side == SpanSide::first ? 0 : 1] = lam;
        allowed.insert(t);
    }
    for (auto& t : allowed) {
        PSymElement img = M.diff(PSymElement::schur_tuple(comp, p, t));
        for (auto& [tuple, c] : img.coeffs)
            if (!allowed.count(tuple)) return false;
    }
    return true;
}

SymElement grass_pairing(const PSymElement& f, const PSymElement& g) {
    return divided_trace(f * g);
}

bool verify_orthogonality(int a, int b, uint32_t p) {
    Composition comp{a, b};
    Fp F(p);
    for (const Partition& lam : partitions_in_box(a, b)) {
        PSymElement f = PSymElement::schur_tuple(comp, p, {lam, Partition()});
        for (const Partition& mu : partitions_in_box(a, b)) {
            Partition hat = mu.box_complement(a, b);
            PSymElement g =
                PSymElement::schur_tuple(comp, p, {Partition(), hat});
            SymElement expect(a + b, p);
            if (lam == mu) {
                uint32_t c = (hat.size() % 2) ? F.neg(1) : 1;
                expect = SymElement::schur(a + b, p, Partition(), c);
            }
            if (grass_pairing(f, g) != expect) return false;
        }
    }
    return true;
}

bool verify_pairing_dinvariance(int a, int b, int k, int l, uint32_t p) {
    Composition comp{a, b};
    TwistedModule M1(comp, p, {k, l});
    TwistedModule M2(comp, p, {-b - k, -a - l});
    for (const Partition& lam : partitions_in_box(a, b)) {
        PSymElement f = PSymElement::schur_tuple(comp, p, {lam, Partition()});
        PSymElement df = M1.diff(f);
        for (const Partition& rho : partitions_in_box(b, a)) {
            PSymElement g =
                PSymElement::schur_tuple(comp, p, {Partition(), rho});
            SymElement lhs = diff_sym(grass_pairing(f, g));
            SymElement rhs =
                grass_pairing(df, g) + grass_pairing(f, M2.diff(g));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

namespace {

void check_composable(const TwistedModule& tgt, const TwistedModule& src) {
    if (tgt.comp.total() != src.comp.total() || tgt.p != src.p)
        throw std::invalid_argument("composition-mismatch");
}

void check_same_shape(const GradedModuleMap& f, const GradedModuleMap& g) {
    if (f.tgt != g.tgt || f.src != g.src || f.degree != g.degree)
        throw std::invalid_argument("map-shape-mismatch");
}

} // namespace

GradedModuleMap gm_zero(const TwistedModule& tgt, const TwistedModule& src,
                        int degree) {
    check_composable(tgt, src);
    const StableBasis& Bt = stable_basis(tgt.comp, tgt.p);
    const StableBasis& Bs = stable_basis(src.comp, src.p);
    GradedModuleMap f{tgt, src, degree, {}};
    f.mat.assign(Bt.size(), std::vector<SymElement>(
                                Bs.size(), SymElement(tgt.comp.total(), tgt.p)));
    return f;
}

GradedModuleMap gm_identity(const TwistedModule& M) {
    GradedModuleMap f = gm_zero(M, M, 0);
    for (std::size_t i = 0; i < f.mat.size(); ++i)
        f.mat[i][i] = SymElement::one(M.comp.total(), M.p);
    return f;
}

GradedModuleMap gm_add(const GradedModuleMap& f, const GradedModuleMap& g) {
    check_same_shape(f, g);
    GradedModuleMap r = f;
    for (std::size_t i = 0; i < r.mat.size(); ++i)
        for (std::size_t j = 0; j < r.mat[i].size(); ++j)
            r.mat[i][j] = f.mat[i][j] + g.mat[i][j];
    return r;
}

GradedModuleMap gm_sub(const GradedModuleMap& f, const GradedModuleMap& g) {
    check_same_shape(f, g);
    GradedModuleMap r = f;
    for (std::size_t i = 0; i < r.mat.size(); ++i)
        for (std::size_t j = 0; j < r.mat[i].size(); ++j)
            r.mat[i][j] = f.mat[i][j] - g.mat[i][j];
    return r;
}

GradedModuleMap gm_scalar(uint32_t c, const GradedModuleMap& f) {
    GradedModuleMap r = f;
    for (auto& row : r.mat)
        for (auto& e : row) e = c * e;
    return r;
}

GradedModuleMap gm_compose(const GradedModuleMap& f, const GradedModuleMap& g) {
    if (f.src != g.tgt)
        throw std::invalid_argument("composition-mismatch");
    GradedModuleMap r = gm_zero(f.tgt, g.src, f.degree + g.degree);
    for (std::size_t i = 0; i < f.mat.size(); ++i)
        for (std::size_t m = 0; m < g.mat.size(); ++m) {
            if (f.mat[i][m].is_zero()) continue;
            for (std::size_t j = 0; j < g.mat[m].size(); ++j)
                r.mat[i][j] = r.mat[i][j] + f.mat[i][m] * g.mat[m][j];
        }
    return r;
}

GradedModuleMap gm_diff(const GradedModuleMap& f) {
    const FpMat& Dt = stable_diff_matrix(f.tgt);
    const FpMat& Ds = stable_diff_matrix(f.src);
    GradedModuleMap r = gm_zero(f.tgt, f.src, f.degree + 2);
    Fp F(f.tgt.p);
    for (std::size_t i = 0; i < r.mat.size(); ++i)
        for (std::size_t j = 0; j < r.mat[i].size(); ++j) {
            SymElement e = diff_sym(f.mat[i][j]);
            for (std::size_t s = 0; s < f.mat.size(); ++s)
                if (Dt.at(i, s)) e = e + Dt.at(i, s) * f.mat[s][j];
            for (std::size_t s = 0; s < f.mat[i].size(); ++s)
                if (Ds.at(s, j))
                    e = e + F.neg(Ds.at(s, j)) * f.mat[i][s];
            r.mat[i][j] = e;
        }
    return r;
}

bool gm_is_zero(const GradedModuleMap& f) {
    for (auto& row : f.mat)
        for (auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

bool gm_equal(const GradedModuleMap& f, const GradedModuleMap& g) {
    if (f.tgt != g.tgt || f.src != g.src) return false;
    for (std::size_t i = 0; i < f.mat.size(); ++i)
        for (std::size_t j = 0; j < f.mat[i].size(); ++j)
            if (f.mat[i][j] != g.mat[i][j]) return false;
    return true;
}

void gm_validate(const GradedModuleMap& f) {
    const StableBasis& Bt = stable_basis(f.tgt.comp, f.tgt.p);
    const StableBasis& Bs = stable_basis(f.src.comp, f.src.p);
    if (f.mat.size() != Bt.size())
        throw std::invalid_argument("map-shape-mismatch");
    for (std::size_t i = 0; i < f.mat.size(); ++i) {
        if (f.mat[i].size() != Bs.size())
            throw std::invalid_argument("map-shape-mismatch");
        for (std::size_t j = 0; j < f.mat[i].size(); ++j) {
            const SymElement& e = f.mat[i][j];
            if (e.is_zero()) continue;
            if (!sym_homogeneous(e) ||
                sym_degree(e) !=
                    f.degree + Bs.degrees[j] - Bt.degrees[i])
                throw std::invalid_argument("inhomogeneous-map-entry");
        }
    }
}

GradedModuleMap split_map(int a, int b, const Partition& lam, uint32_t p) {
    if (!lam.fits_in(a, b))
        throw std::invalid_argument("decoration-out-of-box");
    TwistedModule tgt = TwistedModule::canonical(Composition{a, b}, p);
    TwistedModule src = TwistedModule::canonical(Composition{a + b}, p);
    GradedModuleMap f = gm_zero(tgt, src, 2 * lam.size() - a * b);
    const StableBasis& Bt = stable_basis(tgt.comp, p);
    f.mat[Bt.index.at({lam})][0] = SymElement::one(a + b, p);
    return f;
}

GradedModuleMap merge_map(int a, int b, const Partition& mu, uint32_t p) {
    if (!mu.fits_in(b, a))
        throw std::invalid_argument("decoration-out-of-box");
    TwistedModule tgt = TwistedModule::canonical(Composition{a + b}, p);
    TwistedModule src = TwistedModule::canonical(Composition{a, b}, p);
    GradedModuleMap f = gm_zero(tgt, src, 2 * mu.size() - a * b);
    const StableBasis& Bs = stable_basis(src.comp, p);
    PSymElement dec =
        PSymElement::schur_tuple(src.comp, p, {Partition(), mu});
    for (std::size_t c = 0; c < Bs.size(); ++c)
        f.mat[0][c] = divided_trace(Bs.elements[c] * dec);
    return f;
}

std::vector<GradedModuleMap> morphism_space_basis(const Composition& abar,
                                                  const Composition& bbar,
                                                  uint32_t p) {
    if (abar.total() != bbar.total())
        throw std::invalid_argument("composition-mismatch");
    TwistedModule Ma = TwistedModule::canonical(abar, p);
    TwistedModule Mb = TwistedModule::canonical(bbar, p);
    const StableBasis& Ba = stable_basis(abar, p);
    const StableBasis& Bb = stable_basis(bbar, p);
    int l = bbar.blocks();
    int gen_sum = Ma.generator_degree() + Mb.generator_degree();

    // dual tuples: mu_j in a b_j x (b_1+...+b_{j-1}) box, realized on
    // block j alone, as in an iterated two-block merge
    std::vector<std::vector<Partition>> boxes;
    for (int j = 1; j < l; ++j)
        boxes.push_back(partitions_in_box(bbar.part(j), bbar.offset(j)));
    std::vector<std::pair<PSymElement, int>> duals;  // (product, 2|mu|)
    std::vector<Partition> mu(static_cast<size_t>(l > 0 ? l - 1 : 0));
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == l - 1) {
            PSymElement prod = PSymElement::one(bbar, p);
            int deg = 0;
            for (int j = 1; j < l; ++j) {
                prod = prod * embed_schur_segment(
                                  bbar, p, mu[static_cast<size_t>(j - 1)], j, j);
                deg += 2 * mu[static_cast<size_t>(j - 1)].size();
            }
            duals.emplace_back(std::move(prod), deg);
            return;
        }
        for (const Partition& m : boxes[static_cast<size_t>(pos)]) {
            mu[static_cast<size_t>(pos)] = m;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);

    std::vector<GradedModuleMap> out;
    for (std::size_t r = 0; r < Ba.size(); ++r) {
        int row_deg = Ba.degrees[r] - Ma.generator_degree();
        for (auto& [dual, dual_deg] : duals) {
            GradedModuleMap f =
                gm_zero(Ma, Mb, row_deg + dual_deg + gen_sum);
            for (std::size_t c = 0; c < Bb.size(); ++c)
                f.mat[r][c] = divided_trace(dual * Bb.elements[c]);
            out.push_back(std::move(f));
        }
    }
    return out;
}

namespace {

std::vector<Partition> partitions_of_weight(int m, int max_rows) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap, int rows_left) -> void {
        if (remaining == 0) {
            out.emplace_back(std::vector<int>(cur));
            return;
        }
        if (rows_left == 0) return;
        for (int v = std::min(cap, remaining); v >= 1; --v) {
            cur.push_back(v);
            self(self, remaining - v, v, rows_left - 1);
            cur.pop_back();
        }
    };
    rec(rec, m, m, max_rows);
    return out;
}

BlockDecomposition truncated_blocks(int n, uint32_t a, uint32_t p,
                                    int cutoff) {
    Fp F(p);
    PComplex C(p);
    std::vector<std::vector<Partition>> lvl;
    std::vector<std::map<Partition, std::size_t>> idx;
    int levels = cutoff / 2 + 1;
    for (int m = 0; m < levels; ++m) {
        auto parts = partitions_of_weight(m, n);
        std::map<Partition, std::size_t> mi;
        for (std::size_t i = 0; i < parts.size(); ++i) mi[parts[i]] = i;
        if (!parts.empty()) C.dims[2 * m] = parts.size();
        lvl.push_back(std::move(parts));
        idx.push_back(std::move(mi));
    }
    for (int m = 0; m + 1 < levels; ++m) {
        FpMat D(lvl[static_cast<size_t>(m) + 1].size(),
                lvl[static_cast<size_t>(m)].size(), p);
        for (std::size_t j = 0; j < lvl[static_cast<size_t>(m)].size(); ++j) {
            const Partition& lam = lvl[static_cast<size_t>(m)][j];
            for (int row = 0; row <= lam.rows() && row < n; ++row) {
                if (row > 0 && lam.part(row - 1) == lam.part(row)) continue;
                std::vector<int> parts = lam.parts;
                if (row == lam.rows()) parts.push_back(1);
                else parts[static_cast<size_t>(row)] += 1;
                uint32_t coeff = F.add(F.reduce(lam.part(row) - row), a);
                if (!coeff) continue;
                Partition nu(std::move(parts));
                D.at(idx[static_cast<size_t>(m) + 1].at(nu), j) = coeff;
            }
        }
        if (!lvl[static_cast<size_t>(m)].empty() &&
            !lvl[static_cast<size_t>(m) + 1].empty())
            C.d[2 * m] = std::move(D);
    }
    validate_pcomplex(C);
    return decompose(C);
}

} // namespace

TruncatedCohomology truncated_cohomology_S(int n, int a, uint32_t p,
                                           int cutoff) {
    if (n < 1) throw std::invalid_argument("bad module rank");
    if (cutoff < 2 * static_cast<int>(p) || cutoff % 2)
        throw std::invalid_argument("cutoff-insufficient");
    Fp F(p);
    uint32_t aa = F.reduce(a);

    TruncatedCohomology out;
    out.reliable_limit = cutoff - 2 * static_cast<int>(p);
    BlockDecomposition dec = truncated_blocks(n, aa, p, cutoff);
    for (auto& [key, mult] : dec.blocks) {
        auto [len, bottom] = key;
        if (len == static_cast<int>(p)) continue;
        if (bottom > out.reliable_limit) {
            out.undetermined += mult;
            continue;
        }
        out.blocks[key] += mult;
        for (int t = 0; t < len; ++t) out.dims[bottom + 2 * t] += mult;
    }

    BlockDecomposition wider =
        truncated_blocks(n, aa, p, cutoff + 2 * static_cast<int>(p));
    std::map<std::pair<int, int>, std::size_t> check;
    for (auto& [key, mult] : wider.blocks) {
        auto [len, bottom] = key;
        if (len == static_cast<int>(p)) continue;
        if (bottom <= out.reliable_limit) check[key] += mult;
    }
    if (check != out.blocks)
        throw std::logic_error("truncation-unstable");
    return out;
}

} // namespace pdg
