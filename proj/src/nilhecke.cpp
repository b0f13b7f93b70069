#include "pdg/nilhecke.hpp"

#include <numeric>
#include <stdexcept>

namespace pdg {

TwistVector TwistVector::canonical(int n, uint32_t p) {
    TwistVector t;
    t.n = n;
    t.p = p;
    Fp F(p);
    for (int i = 1; i <= n; ++i) t.a.push_back(F.reduce(i - n));
    return t;
}

PolyElement TwistVector::weight_poly() const {
    PolyElement w(n, p);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 1;
        w.add_term(e, a[static_cast<size_t>(i)]);
    }
    return w;
}

PolyElement divided_difference(const PolyElement& f, int i) {
    if (i < 1 || i >= f.n) throw std::invalid_argument("bad strand index");
    Fp F(f.p);
    PolyElement r(f.n, f.p);
    std::size_t u = static_cast<size_t>(i) - 1, v = static_cast<size_t>(i);
    for (auto& [e, c] : f.terms) {
        int a = e[u], b = e[v];
        if (a == b) continue;
        std::vector<int> m = e;
        uint32_t cc = a > b ? c : F.neg(c);
        int lo = std::min(a, b), hi = std::max(a, b);
        for (int k = lo; k < hi; ++k) {
            m[u] = k;
            m[v] = a + b - 1 - k;
            r.add_term(m, cc);
        }
    }
    return r;
}

PolyElement staircase_poly(int n, uint32_t p) {
    PolyElement f(n, p);
    std::vector<int> e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = n - 1 - i;
    f.terms[e] = 1 % p;
    return f;
}

static void gen_basis(int n, int pos, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (pos == n - 1) {
        std::vector<int> e = cur;
        e.push_back(0);
        out.push_back(std::move(e));
        return;
    }
    for (int c = 0; c <= n - 1 - pos; ++c) {
        cur.push_back(c);
        gen_basis(n, pos + 1, cur, out);
        cur.pop_back();
    }
}

NHContext::NHContext(int n_, uint32_t p_) : n(n_), p(p_) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<int> cur;
    gen_basis(n, 0, cur, basis);
}

PolyElement NHContext::basis_monomial(std::size_t idx) const {
    PolyElement f(n, p);
    f.terms[basis[idx]] = 1 % p;
    return f;
}

static void gen_monomials(int n, int left, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(left);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= left; ++v) {
        cur.push_back(v);
        gen_monomials(n, left - v, cur, out);
        cur.pop_back();
    }
}

const NHContext::DegreeCache& NHContext::degree_cache(int d) const {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;

    DegreeCache dc;
    std::vector<std::vector<int>> monos;
    std::vector<int> cur;
    gen_monomials(n, d, cur, monos);
    for (std::size_t k = 0; k < monos.size(); ++k) dc.mono_index[monos[k]] = k;

    // columns: basis element c and a partition of d - |c| with <= n rows
    std::vector<PolyElement> cols;
    for (std::size_t bi = 0; bi < basis.size(); ++bi) {
        int wt = std::accumulate(basis[bi].begin(), basis[bi].end(), 0);
        if (wt > d) continue;
        for (const Partition& mu : partitions_over(Partition(), d - wt, n, d - wt)) {
            PolyElement col = schur_to_monomials(mu, n, p) * basis_monomial(bi);
            dc.labels.emplace_back(bi, mu);
            cols.push_back(std::move(col));
        }
    }
    if (cols.size() != monos.size())
        throw std::logic_error("straightening basis count mismatch");
    FpMat A(monos.size(), cols.size(), p);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (auto& [e, c] : cols[j].terms) A.at(dc.mono_index.at(e), j) = c;
    dc.inverse = fp_inverse(A);
    return cache_.emplace(d, std::move(dc)).first->second;
}

std::vector<SymElement> NHContext::straighten(const PolyElement& g) const {
    if (g.n != n || g.p != p) throw std::invalid_argument("wrong ring");
    std::vector<SymElement> out(size(), SymElement(n, p));
    std::map<int, PolyElement> bydeg;
    for (auto& [e, c] : g.terms) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        auto it = bydeg.find(d);
        if (it == bydeg.end()) it = bydeg.emplace(d, PolyElement(n, p)).first;
        it->second.terms[e] = c;
    }
    for (auto& [d, gd] : bydeg) {
        const DegreeCache& dc = degree_cache(d);
        std::vector<uint32_t> vec(dc.mono_index.size(), 0);
        for (auto& [e, c] : gd.terms) vec[dc.mono_index.at(e)] = c;
        // s = inverse * vec
        Fp F(p);
        for (std::size_t r = 0; r < dc.inverse.rows; ++r) {
            uint64_t acc = 0;
            for (std::size_t j = 0; j < dc.inverse.cols; ++j)
                acc += static_cast<uint64_t>(dc.inverse.at(r, j)) * vec[j];
            uint32_t v = static_cast<uint32_t>(acc % p);
            if (v) out[dc.labels[r].first].add_term(dc.labels[r].second, v);
        }
    }
    return out;
}

PolyElement NHContext::assemble(const std::vector<SymElement>& coeffs) const {
    PolyElement out(n, p);
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
        if (coeffs[c].is_zero()) continue;
        out = out + sym_to_monomials(coeffs[c]) * basis_monomial(c);
    }
    return out;
}

bool NilHeckeOp::is_zero() const {
    for (auto& row : mat)
        for (auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

NilHeckeOp nh_zero(const NHContext& ctx) {
    NilHeckeOp op;
    op.n = ctx.n;
    op.p = ctx.p;
    op.mat.assign(ctx.size(),
                  std::vector<SymElement>(ctx.size(), SymElement(ctx.n, ctx.p)));
    return op;
}

NilHeckeOp nh_identity(const NHContext& ctx) {
    NilHeckeOp op = nh_zero(ctx);
    for (std::size_t i = 0; i < ctx.size(); ++i)
        op.mat[i][i] = SymElement::one(ctx.n, ctx.p);
    return op;
}

NilHeckeOp nh_from_function(const NHContext& ctx,
                            const std::function<PolyElement(const PolyElement&)>& f) {
    NilHeckeOp op = nh_zero(ctx);
    for (std::size_t c = 0; c < ctx.size(); ++c) {
        std::vector<SymElement> col = ctx.straighten(f(ctx.basis_monomial(c)));
        for (std::size_t r = 0; r < ctx.size(); ++r) op.mat[r][c] = col[r];
    }
    return op;
}

NilHeckeOp nh_dot(const NHContext& ctx, int i) {
    PolyElement xi = PolyElement::variable(ctx.n, ctx.p, i - 1);
    return nh_from_function(ctx, [&](const PolyElement& g) { return xi * g; });
}

NilHeckeOp nh_crossing(const NHContext& ctx, int i) {
    return nh_from_function(
        ctx, [&](const PolyElement& g) { return divided_difference(g, i); });
}

NilHeckeOp nh_mult(const NHContext& ctx, const PolyElement& f) {
    return nh_from_function(ctx, [&](const PolyElement& g) { return f * g; });
}

static void check_compatible(const NilHeckeOp& a, const NilHeckeOp& b) {
    if (a.n != b.n || a.p != b.p) throw std::invalid_argument("mixed operators");
}

NilHeckeOp operator+(const NilHeckeOp& a, const NilHeckeOp& b) {
    check_compatible(a, b);
    NilHeckeOp r = a;
    for (std::size_t i = 0; i < r.mat.size(); ++i)
        for (std::size_t j = 0; j < r.mat.size(); ++j)
            r.mat[i][j] = r.mat[i][j] + b.mat[i][j];
    return r;
}

NilHeckeOp operator-(const NilHeckeOp& a, const NilHeckeOp& b) {
    check_compatible(a, b);
    NilHeckeOp r = a;
    for (std::size_t i = 0; i < r.mat.size(); ++i)
        for (std::size_t j = 0; j < r.mat.size(); ++j)
            r.mat[i][j] = r.mat[i][j] - b.mat[i][j];
    return r;
}

NilHeckeOp compose(const NilHeckeOp& a, const NilHeckeOp& b) {
    check_compatible(a, b);
    NilHeckeOp r = a;
    std::size_t m = a.mat.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            SymElement acc(a.n, a.p);
            for (std::size_t k = 0; k < m; ++k) {
                if (a.mat[i][k].is_zero() || b.mat[k][j].is_zero()) continue;
                acc = acc + a.mat[i][k] * b.mat[k][j];
            }
            r.mat[i][j] = acc;
        }
    return r;
}

PolyElement apply_op(const NHContext& ctx, const NilHeckeOp& op,
                     const PolyElement& g) {
    std::vector<SymElement> s = ctx.straighten(g);
    std::vector<SymElement> out(ctx.size(), SymElement(ctx.n, ctx.p));
    for (std::size_t c = 0; c < ctx.size(); ++c) {
        if (s[c].is_zero()) continue;
        for (std::size_t r = 0; r < ctx.size(); ++r) {
            if (op.mat[r][c].is_zero()) continue;
            out[r] = out[r] + op.mat[r][c] * s[c];
        }
    }
    return ctx.assemble(out);
}

NilHeckeOp longest_element(const NHContext& ctx) {
    NilHeckeOp op = nh_identity(ctx);
    for (int blk = 1; blk < ctx.n; ++blk)
        for (int i = blk; i >= 1; --i) op = compose(nh_crossing(ctx, i), op);
    return op;
}

NilHeckeOp epsilon(const NHContext& ctx) {
    return compose(nh_mult(ctx, staircase_poly(ctx.n, ctx.p)),
                   longest_element(ctx));
}

PolyElement twisted_diff(const PolyElement& f, const TwistVector& tw) {
    return diff_pol(f) + tw.weight_poly() * f;
}

NilHeckeOp induced_diff_op(const NHContext& ctx, const NilHeckeOp& op,
                           const TwistVector& tw) {
    NilHeckeOp out = nh_zero(ctx);
    for (std::size_t c = 0; c < ctx.size(); ++c) {
        // op(x^c) as a polynomial
        PolyElement opc(ctx.n, ctx.p);
        for (std::size_t r = 0; r < ctx.size(); ++r) {
            if (op.mat[r][c].is_zero()) continue;
            opc = opc + sym_to_monomials(op.mat[r][c]) * ctx.basis_monomial(r);
        }
        PolyElement lhs = twisted_diff(opc, tw);
        PolyElement rhs = apply_op(ctx, op, twisted_diff(ctx.basis_monomial(c), tw));
        std::vector<SymElement> col = ctx.straighten(lhs - rhs);
        for (std::size_t r = 0; r < ctx.size(); ++r) out.mat[r][c] = col[r];
    }
    return out;
}

bool verify_dDn(int n, uint32_t p) {
    NHContext ctx(n, p);
    NilHeckeOp Dn = longest_element(ctx);
    NilHeckeOp lhs = induced_diff_op(ctx, Dn, TwistVector::canonical(n, p));
    NilHeckeOp rhs = nh_zero(ctx) -
                     compose(nh_mult(ctx, linear_form_left(n, p)), Dn) -
                     compose(Dn, nh_mult(ctx, linear_form_right(n, p)));
    return lhs == rhs;
}

} // namespace pdg
