#pragma once
// Exact arithmetic in Z[q,q^-1]: quantum integers, quantum binomials,
// and box-partition grading generating functions.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace pdg {

struct LaurentPoly {
    // exponent -> nonzero coefficient
    std::map<int, long long> c;

    LaurentPoly() = default;
    explicit LaurentPoly(long long constant) {
        if (constant) c[0] = constant;
    }
    static LaurentPoly q_power(int e, long long coeff = 1) {
        LaurentPoly r;
        if (coeff) r.c[e] = coeff;
        return r;
    }

    bool is_zero() const { return c.empty(); }
    long long coeff(int e) const {
        auto it = c.find(e);
        return it == c.end() ? 0 : it->second;
    }
    int min_exp() const { return c.empty() ? 0 : c.begin()->first; }
    int max_exp() const { return c.empty() ? 0 : c.rbegin()->first; }

    void set(int e, long long v) {
        if (v) c[e] = v;
        else c.erase(e);
    }
    void add_term(int e, long long v) {
        if (!v) return;
        auto it = c.find(e);
        if (it == c.end()) {
            c[e] = v;
        } else {
            it->second += v;
            if (it->second == 0) c.erase(it);
        }
    }

    bool operator==(const LaurentPoly& o) const { return c == o.c; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // q -> q^-1
    LaurentPoly bar() const {
        LaurentPoly r;
        for (auto& [e, v] : c) r.c[-e] = v;
        return r;
    }
    // multiply by q^k
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (auto& [e, v] : c) r.c[e + k] = v;
        return r;
    }

    std::string to_string() const;
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(long long k, const LaurentPoly& a);

// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [-n] = -[n].
LaurentPoly quantum_integer(int n);

// Balanced quantum binomial via the Pascal recursion
//   [n k] = q^k [n-1 k] + q^{k-n} [n-1 k-1].
// Zero for 0 <= n < k; k < 0 is an error.
LaurentPoly quantum_binomial(int n, int k);

// Sum of q^{2|alpha| - j*m} over partitions alpha inside a j x m box,
// enumerated by a size-count recursion independent of quantum_binomial.
LaurentPoly box_partition_gf(int j, int m);

} // namespace pdg
