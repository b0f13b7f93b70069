#pragma once
// Schur-basis calculus in Sym_n over F_p: Littlewood-Richardson products,
// the degree-2 derivation on Schur functions, and conversion to and from
// the monomial basis.

#include <cstdint>
#include <map>

#include "pdg/partition.hpp"
#include "pdg/poly.hpp"

namespace pdg {

struct SymElement {
    int n = 0;
    uint32_t p = 2;
    std::map<Partition, uint32_t> coeffs;  // Schur basis, coeff in [1,p)

    SymElement() = default;
    SymElement(int n_, uint32_t p_) : n(n_), p(p_) {}

    static SymElement schur(int n, uint32_t p, const Partition& lam,
                            uint32_t c = 1) {
        SymElement f(n, p);
        if (lam.rows() > n) return f;
        if (c % p) f.coeffs[lam] = c % p;
        return f;
    }
    static SymElement one(int n, uint32_t p) {
        return schur(n, p, Partition());
    }

    bool is_zero() const { return coeffs.empty(); }
    void add_term(const Partition& lam, uint32_t c);
    uint32_t coeff(const Partition& lam) const {
        auto it = coeffs.find(lam);
        return it == coeffs.end() ? 0 : it->second;
    }

    bool operator==(const SymElement& o) const {
        return n == o.n && p == o.p && coeffs == o.coeffs;
    }
    bool operator!=(const SymElement& o) const { return !(*this == o); }

    std::string to_string() const;
};

SymElement operator+(const SymElement& a, const SymElement& b);
SymElement operator-(const SymElement& a, const SymElement& b);
SymElement operator*(uint32_t c, const SymElement& a);
SymElement operator*(const SymElement& a, const SymElement& b);

// integral Littlewood-Richardson coefficient c^nu_{lambda,mu} by
// lattice-word skew-tableau enumeration
long long lr_coefficient(const Partition& nu, const Partition& lam,
                         const Partition& mu);

// pi_lambda * pi_mu in Sym_n, rows beyond n dropped
SymElement multiply_schur(const Partition& lam, const Partition& mu, int n,
                          uint32_t p);

// sum over addable boxes with content coefficients lambda_i + 1 - i
SymElement diff_schur(const Partition& lam, int n, uint32_t p);
SymElement diff_sym(const SymElement& f);

// Schur polynomial as a sum of monomials (semistandard-tableau expansion)
PolyElement schur_to_monomials(const Partition& lam, int n, uint32_t p);
PolyElement sym_to_monomials(const SymElement& f);

// inverse conversion; throws "not-symmetric" on non-symmetric input
SymElement monomials_to_schur(const PolyElement& f);

} // namespace pdg
