#pragma once
// Sparse multivariate polynomials over F_p, deg x_i = 2, with the
// derivation x_i -> x_i^2.

#include <cstdint>
#include <map>
#include <vector>

#include "pdg/fp.hpp"

namespace pdg {

struct PolyElement {
    int n = 0;
    uint32_t p = 2;
    std::map<std::vector<int>, uint32_t> terms;  // exponents -> coeff in [1,p)

    PolyElement() = default;
    PolyElement(int n_, uint32_t p_) : n(n_), p(p_) {}

    static PolyElement constant(int n, uint32_t p, uint32_t c) {
        PolyElement f(n, p);
        if (c % p) f.terms[std::vector<int>(static_cast<size_t>(n), 0)] = c % p;
        return f;
    }
    static PolyElement variable(int n, uint32_t p, int i, int power = 1);

    bool is_zero() const { return terms.empty(); }
    void add_term(const std::vector<int>& e, uint32_t c);
    uint32_t coeff(const std::vector<int>& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? 0 : it->second;
    }
    // total degree with deg x_i = 2; -1 for the zero polynomial
    int degree() const;
    bool is_homogeneous() const;

    bool operator==(const PolyElement& o) const {
        return n == o.n && p == o.p && terms == o.terms;
    }
    bool operator!=(const PolyElement& o) const { return !(*this == o); }

    std::string to_string() const;
};

PolyElement operator+(const PolyElement& a, const PolyElement& b);
PolyElement operator-(const PolyElement& a, const PolyElement& b);
PolyElement operator*(const PolyElement& a, const PolyElement& b);
PolyElement operator*(uint32_t c, const PolyElement& a);

// Leibniz extension of x_i -> x_i^2
PolyElement diff_pol(const PolyElement& f);

// apply a permutation of the variables: result uses exponent perm[i] at slot i
PolyElement permute_vars(const PolyElement& f, const std::vector<int>& perm);

// invariant under all adjacent transpositions
bool is_symmetric(const PolyElement& f);

// elementary and complete homogeneous symmetric polynomials
PolyElement elementary_sym(int n, uint32_t p, int k);
PolyElement complete_sym(int n, uint32_t p, int k);

// the linear forms sum (n-i) x_i and sum (i-1) x_i, 1-indexed i
PolyElement linear_form_left(int n, uint32_t p);
PolyElement linear_form_right(int n, uint32_t p);

} // namespace pdg
