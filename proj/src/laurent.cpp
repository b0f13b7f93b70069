#include "pdg/laurent.hpp"

#include <vector>

namespace pdg {

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (auto& [e, v] : b.c) r.add_term(e, v);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (auto& [e, v] : b.c) r.add_term(e, -v);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (auto& [e, v] : a.c) r.c[e] = -v;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ea, va] : a.c)
        for (auto& [eb, vb] : b.c) r.add_term(ea + eb, va * vb);
    return r;
}

LaurentPoly operator*(long long k, const LaurentPoly& a) {
    LaurentPoly r;
    if (k)
        for (auto& [e, v] : a.c) r.c[e] = k * v;
    return r;
}

std::string LaurentPoly::to_string() const {
    if (c.empty()) return "0";
    std::string s;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        auto [e, v] = *it;
        if (!s.empty()) {
            s += v > 0 ? " + " : " - ";
        } else if (v < 0) {
            s += "-";
        }
        long long av = v > 0 ? v : -v;
        if (av != 1 || e == 0) s += std::to_string(av);
        if (e != 0) {
            if (av != 1) s += "*";
            s += "q";
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

LaurentPoly quantum_integer(int n) {
    if (n < 0) return -quantum_integer(-n);
    LaurentPoly r;
    for (int e = n - 1; e >= 1 - n; e -= 2) r.c[e] = 1;
    return r;
}

LaurentPoly quantum_binomial(int n, int k) {
    if (k < 0) throw std::invalid_argument("invalid-binomial");
    if (n < 0) {
        LaurentPoly r = quantum_binomial(k - n - 1, k);
        return (k % 2) ? -r : r;
    }
    if (k > n) return LaurentPoly();
    if (k == 0 || k == n) return LaurentPoly(1);
    // Pascal triangle, rows 0..n, columns clamped to 0..k
    std::vector<LaurentPoly> row(static_cast<size_t>(k) + 1);
    row[0] = LaurentPoly(1);
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j) {
            LaurentPoly v = row[j].shifted(j) + row[j - 1].shifted(j - m);
            row[static_cast<size_t>(j)] = std::move(v);
        }
    }
    return row[static_cast<size_t>(k)];
}

LaurentPoly box_partition_gf(int j, int m) {
    if (j < 0 || m < 0) throw std::invalid_argument("invalid-binomial");
    // N[r][s] = partitions of s with at most r parts, each part <= width;
    // grow width from 0 to m with
    //   N_r(width w)[s] = N_{r-1}(width w)[s] + N_r(width w-1)[s - r]
    // (second term: strip a full first column of height r).
    std::vector<std::vector<long long>> N(
        static_cast<size_t>(j) + 1,
        std::vector<long long>(static_cast<size_t>(j) * m + 1, 0));
    for (int r = 0; r <= j; ++r) N[static_cast<size_t>(r)][0] = 1;
    for (int w = 1; w <= m; ++w) {
        for (int r = 1; r <= j; ++r) {
            auto& cur = N[static_cast<size_t>(r)];
            auto& below = N[static_cast<size_t>(r) - 1];
            std::vector<long long> upd(cur.size(), 0);
            for (size_t s = 0; s < cur.size(); ++s) {
                upd[s] = below[s];
                if (s >= static_cast<size_t>(r)) upd[s] += cur[s - r];
            }
            cur = std::move(upd);
        }
    }
    LaurentPoly out;
    auto& full = N[static_cast<size_t>(j)];
    for (size_t s = 0; s < full.size(); ++s)
        if (full[s]) out.c[2 * static_cast<int>(s) - j * m] = full[s];
    return out;
}

} // namespace pdg
