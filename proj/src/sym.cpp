#include "pdg/sym.hpp"

#include <stdexcept>

namespace pdg {

void SymElement::add_term(const Partition& lam, uint32_t c) {
    c %= p;
    if (!c || lam.rows() > n) return;
    auto it = coeffs.find(lam);
    if (it == coeffs.end()) {
        coeffs[lam] = c;
    } else {
        it->second = (it->second + c) % p;
        if (!it->second) coeffs.erase(it);
    }
}

std::string SymElement::to_string() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (auto& [lam, c] : coeffs) {
        if (!s.empty()) s += " + ";
        if (c != 1) s += std::to_string(c) + "*";
        s += "pi" + lam.to_string();
    }
    return s;
}

static void check_compatible(const SymElement& a, const SymElement& b) {
    if (a.n != b.n || a.p != b.p)
        throw std::invalid_argument("mixed symmetric rings");
}

SymElement operator+(const SymElement& a, const SymElement& b) {
    check_compatible(a, b);
    SymElement r = a;
    for (auto& [lam, c] : b.coeffs) r.add_term(lam, c);
    return r;
}

SymElement operator-(const SymElement& a, const SymElement& b) {
    check_compatible(a, b);
    SymElement r = a;
    for (auto& [lam, c] : b.coeffs) r.add_term(lam, a.p - c);
    return r;
}

SymElement operator*(uint32_t c, const SymElement& a) {
    Fp F(a.p);
    c %= a.p;
    SymElement r(a.n, a.p);
    if (c)
        for (auto& [lam, v] : a.coeffs) r.coeffs[lam] = F.mul(c, v);
    return r;
}

// Fill the cells of nu/lam in reverse reading order (top row to bottom row,
// right to left within a row) with values 1..rows(mu), maintaining:
//   rows weakly increase left to right, columns strictly increase downward,
//   the running word stays a lattice word, value v used at most mu_v times.
namespace {
struct LRState {
    const Partition* nu;
    const Partition* lam;
    const Partition* mu;
    std::vector<std::vector<int>> fill;  // fill[i][j - lam_i] for skew cells
    std::vector<int> used;               // count of each value so far
    long long count = 0;

    void run(int row, int col) {
        if (row == nu->rows()) {
            ++count;
            return;
        }
        if (col < lam->part(row)) {
            run(row + 1, nu->part(row + 1) - 1);
            return;
        }
        int lo = 1, hi = mu->rows();
        // right neighbor (filled already) bounds from above
        if (col + 1 < nu->part(row))
            hi = std::min(hi, fill[static_cast<size_t>(row)]
                                  [static_cast<size_t>(col + 1 - lam->part(row))]);
        // cell above bounds from below
        if (row > 0 && col >= lam->part(row - 1) && col < nu->part(row - 1))
            lo = std::max(lo, fill[static_cast<size_t>(row) - 1]
                                  [static_cast<size_t>(col - lam->part(row - 1))] +
                                  1);
        for (int v = lo; v <= hi; ++v) {
            if (used[static_cast<size_t>(v)] >= mu->part(v - 1)) continue;
            // lattice: after placing v, #v <= #(v-1)
            if (v > 1 &&
                used[static_cast<size_t>(v)] + 1 > used[static_cast<size_t>(v) - 1])
                continue;
            fill[static_cast<size_t>(row)][static_cast<size_t>(col - lam->part(row))] =
                v;
            ++used[static_cast<size_t>(v)];
            if (col == lam->part(row))
                run(row + 1, nu->part(row + 1) - 1);
            else
                run(row, col - 1);
            --used[static_cast<size_t>(v)];
        }
    }
};
} // namespace

long long lr_coefficient(const Partition& nu, const Partition& lam,
                         const Partition& mu) {
    if (!nu.contains(lam) || nu.size() != lam.size() + mu.size()) return 0;
    if (mu.empty()) return 1;
    LRState st;
    st.nu = &nu;
    st.lam = &lam;
    st.mu = &mu;
    st.fill.resize(static_cast<size_t>(nu.rows()));
    for (int i = 0; i < nu.rows(); ++i)
        st.fill[static_cast<size_t>(i)].resize(
            static_cast<size_t>(nu.part(i) - lam.part(i)));
    st.used.assign(static_cast<size_t>(mu.rows()) + 1, 0);
    st.run(0, nu.part(0) - 1);
    return st.count;
}

SymElement multiply_schur(const Partition& lam, const Partition& mu, int n,
                          uint32_t p) {
    Fp F(p);
    SymElement r(n, p);
    if (lam.rows() > n || mu.rows() > n) return r;
    int total = lam.size() + mu.size();
    for (const Partition& nu :
         partitions_over(lam, total, n, lam.part(0) + mu.part(0))) {
        long long c = lr_coefficient(nu, lam, mu);
        if (c % p) r.add_term(nu, F.reduce(c));
    }
    return r;
}

SymElement operator*(const SymElement& a, const SymElement& b) {
    check_compatible(a, b);
    Fp F(a.p);
    SymElement r(a.n, a.p);
    for (auto& [lam, ca] : a.coeffs)
        for (auto& [mu, cb] : b.coeffs) {
            SymElement prod = multiply_schur(lam, mu, a.n, a.p);
            uint32_t c = F.mul(ca, cb);
            for (auto& [nu, cv] : prod.coeffs) r.add_term(nu, F.mul(c, cv));
        }
    return r;
}

SymElement diff_schur(const Partition& lam, int n, uint32_t p) {
    Fp F(p);
    SymElement r(n, p);
    for (int i = 0; i < std::min(lam.rows() + 1, n); ++i) {
        if (i > 0 && lam.part(i) >= lam.part(i - 1)) continue;  // not addable
        uint32_t c = F.reduce(lam.part(i) + 1 - (i + 1));
        if (!c) continue;
        std::vector<int> parts(lam.parts);
        if (i < lam.rows())
            parts[static_cast<size_t>(i)] += 1;
        else
            parts.push_back(1);
        r.add_term(Partition(std::move(parts)), c);
    }
    return r;
}

SymElement diff_sym(const SymElement& f) {
    Fp F(f.p);
    SymElement r(f.n, f.p);
    for (auto& [lam, c] : f.coeffs) {
        SymElement d = diff_schur(lam, f.n, f.p);
        for (auto& [mu, v] : d.coeffs) r.add_term(mu, F.mul(c, v));
    }
    return r;
}

// semistandard tableau enumeration: entries in 1..n, rows weakly increase,
// columns strictly increase
static void gen_ssyt(const Partition& lam, int n, int row, int col,
                     std::vector<std::vector<int>>& fill, std::vector<int>& content,
                     PolyElement& out) {
    if (row == lam.rows()) {
        out.add_term(content, 1);
        return;
    }
    if (col == lam.part(row)) {
        gen_ssyt(lam, n, row + 1, 0, fill, content, out);
        return;
    }
    int lo = 1, hi = n;
    if (col > 0)
        lo = std::max(lo, fill[static_cast<size_t>(row)][static_cast<size_t>(col) - 1]);
    if (row > 0 && col < lam.part(row - 1))
        lo = std::max(lo,
                      fill[static_cast<size_t>(row) - 1][static_cast<size_t>(col)] + 1);
    for (int v = lo; v <= hi; ++v) {
        fill[static_cast<size_t>(row)][static_cast<size_t>(col)] = v;
        ++content[static_cast<size_t>(v) - 1];
        gen_ssyt(lam, n, row, col + 1, fill, content, out);
        --content[static_cast<size_t>(v) - 1];
    }
}

PolyElement schur_to_monomials(const Partition& lam, int n, uint32_t p) {
    PolyElement out(n, p);
    if (lam.rows() > n) return out;
    std::vector<std::vector<int>> fill(static_cast<size_t>(lam.rows()));
    for (int i = 0; i < lam.rows(); ++i)
        fill[static_cast<size_t>(i)].resize(static_cast<size_t>(lam.part(i)));
    std::vector<int> content(static_cast<size_t>(n), 0);
    gen_ssyt(lam, n, 0, 0, fill, content, out);
    return out;
}

PolyElement sym_to_monomials(const SymElement& f) {
    PolyElement out(f.n, f.p);
    for (auto& [lam, c] : f.coeffs) {
        PolyElement m = schur_to_monomials(lam, f.n, f.p);
        out = out + c * m;
    }
    return out;
}

SymElement monomials_to_schur(const PolyElement& f) {
    if (!is_symmetric(f)) throw std::invalid_argument("not-symmetric");
    Fp F(f.p);
    SymElement out(f.n, f.p);
    PolyElement rem = f;
    while (!rem.is_zero()) {
        auto it = rem.terms.rbegin();  // lex-largest exponent is a partition
        std::vector<int> e = it->first;
        uint32_t c = it->second;
        Partition lam(std::move(e));
        out.add_term(lam, c);
        rem = rem - c * schur_to_monomials(lam, f.n, f.p);
    }
    return out;
}

} // namespace pdg
