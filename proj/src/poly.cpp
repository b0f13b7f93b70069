#include "pdg/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace pdg {

PolyElement PolyElement::variable(int n, uint32_t p, int i, int power) {
    PolyElement f(n, p);
    std::vector<int> e(static_cast<size_t>(n), 0);
    e[static_cast<size_t>(i)] = power;
    f.terms[e] = 1 % p;
    return f;
}

void PolyElement::add_term(const std::vector<int>& e, uint32_t c) {
    c %= p;
    if (!c) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms[e] = c;
    } else {
        it->second = (it->second + c) % p;
        if (!it->second) terms.erase(it);
    }
}

int PolyElement::degree() const {
    int d = -1;
    for (auto& [e, c] : terms)
        d = std::max(d, 2 * std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool PolyElement::is_homogeneous() const {
    int d = -2;
    for (auto& [e, c] : terms) {
        int t = std::accumulate(e.begin(), e.end(), 0);
        if (d == -2) d = t;
        else if (t != d) return false;
    }
    return true;
}

std::string PolyElement::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (!s.empty()) s += " + ";
        auto& [e, c] = *it;
        bool allzero = true;
        std::string mono;
        for (int i = 0; i < n; ++i) {
            int ex = e[static_cast<size_t>(i)];
            if (!ex) continue;
            allzero = false;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (ex > 1) mono += "^" + std::to_string(ex);
        }
        if (c != 1 || allzero) {
            s += std::to_string(c);
            if (!allzero) s += "*";
        }
        s += mono;
    }
    return s;
}

static void check_compatible(const PolyElement& a, const PolyElement& b) {
    if (a.n != b.n || a.p != b.p)
        throw std::invalid_argument("mixed polynomial rings");
}

PolyElement operator+(const PolyElement& a, const PolyElement& b) {
    check_compatible(a, b);
    PolyElement r = a;
    for (auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

PolyElement operator-(const PolyElement& a, const PolyElement& b) {
    check_compatible(a, b);
    PolyElement r = a;
    for (auto& [e, c] : b.terms) r.add_term(e, a.p - c);
    return r;
}

PolyElement operator*(const PolyElement& a, const PolyElement& b) {
    check_compatible(a, b);
    Fp F(a.p);
    PolyElement r(a.n, a.p);
    std::vector<int> e(static_cast<size_t>(a.n));
    for (auto& [ea, ca] : a.terms)
        for (auto& [eb, cb] : b.terms) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, F.mul(ca, cb));
        }
    return r;
}

PolyElement operator*(uint32_t c, const PolyElement& a) {
    Fp F(a.p);
    c %= a.p;
    PolyElement r(a.n, a.p);
    if (c)
        for (auto& [e, v] : a.terms) r.terms[e] = F.mul(c, v);
    return r;
}

PolyElement diff_pol(const PolyElement& f) {
    Fp F(f.p);
    PolyElement r(f.n, f.p);
    std::vector<int> e(static_cast<size_t>(f.n));
    for (auto& [ef, c] : f.terms) {
        for (int i = 0; i < f.n; ++i) {
            int ex = ef[static_cast<size_t>(i)];
            if (!ex) continue;
            uint32_t k = F.reduce(ex);
            if (!k) continue;
            e = ef;
            e[static_cast<size_t>(i)] += 1;
            r.add_term(e, F.mul(c, k));
        }
    }
    return r;
}

PolyElement permute_vars(const PolyElement& f, const std::vector<int>& perm) {
    PolyElement r(f.n, f.p);
    std::vector<int> e(static_cast<size_t>(f.n));
    for (auto& [ef, c] : f.terms) {
        for (int i = 0; i < f.n; ++i)
            e[static_cast<size_t>(perm[static_cast<size_t>(i)])] =
                ef[static_cast<size_t>(i)];
        r.add_term(e, c);
    }
    return r;
}

bool is_symmetric(const PolyElement& f) {
    std::vector<int> perm(static_cast<size_t>(f.n));
    for (int s = 0; s + 1 < f.n; ++s) {
        for (int i = 0; i < f.n; ++i) perm[static_cast<size_t>(i)] = i;
        std::swap(perm[static_cast<size_t>(s)], perm[static_cast<size_t>(s) + 1]);
        if (permute_vars(f, perm) != f) return false;
    }
    return true;
}

PolyElement elementary_sym(int n, uint32_t p, int k) {
    PolyElement r(n, p);
    if (k < 0 || k > n) return r;
    std::vector<int> idx(static_cast<size_t>(k));
    // iterate k-subsets of {0..n-1}
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        for (int i : idx) e[static_cast<size_t>(i)] = 1;
        r.add_term(e, 1);
        int j = k - 1;
        while (j >= 0 && idx[static_cast<size_t>(j)] == n - k + j) --j;
        if (j < 0) break;
        ++idx[static_cast<size_t>(j)];
        for (int t = j + 1; t < k; ++t)
            idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t) - 1] + 1;
    }
    return r;
}

static void gen_complete(int n, int k, int start, std::vector<int>& e,
                         PolyElement& r) {
    if (k == 0) {
        r.add_term(e, 1);
        return;
    }
    for (int i = start; i < n; ++i) {
        ++e[static_cast<size_t>(i)];
        gen_complete(n, k - 1, i, e, r);
        --e[static_cast<size_t>(i)];
    }
}

PolyElement complete_sym(int n, uint32_t p, int k) {
    PolyElement r(n, p);
    if (k < 0) return r;
    std::vector<int> e(static_cast<size_t>(n), 0);
    gen_complete(n, k, 0, e, r);
    return r;
}

PolyElement linear_form_left(int n, uint32_t p) {
    Fp F(p);
    PolyElement r(n, p);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i) - 1] = 1;
        r.add_term(e, F.reduce(n - i));
    }
    return r;
}

PolyElement linear_form_right(int n, uint32_t p) {
    Fp F(p);
    PolyElement r(n, p);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i) - 1] = 1;
        r.add_term(e, F.reduce(i - 1));
    }
    return r;
}

} // namespace pdg
