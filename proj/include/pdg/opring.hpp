#pragma once
// The ring O_p = Z[q]/(1 + q^2 + ... + q^{2(p-1)}).
// Canonical representative: integer polynomial of degree < 2p-2.
// q^{2p} = 1 in O_p, so negative exponents clear by shifting up in
// multiples of 2p before Euclidean division by the defining relation.

#include <cstdint>
#include <vector>

#include "pdg/fp.hpp"
#include "pdg/laurent.hpp"

namespace pdg {

struct OpElement {
    uint32_t p = 2;
    std::vector<long long> rep;  // coefficient of q^i at index i, size 2p-2

    OpElement() : rep(2, 0) {}
    explicit OpElement(uint32_t p_, long long constant = 0)
        : p(p_), rep(2 * static_cast<size_t>(p_) - 2, 0) {
        rep[0] = constant;
    }

    bool is_zero() const {
        for (long long v : rep)
            if (v) return false;
        return true;
    }
    bool operator==(const OpElement& o) const {
        return p == o.p && rep == o.rep;
    }
    bool operator!=(const OpElement& o) const { return !(*this == o); }

    LaurentPoly to_laurent() const {
        LaurentPoly r;
        for (size_t i = 0; i < rep.size(); ++i)
            if (rep[i]) r.c[static_cast<int>(i)] = rep[i];
        return r;
    }
};

OpElement reduce_to_Op(const LaurentPoly& x, uint32_t p);

OpElement operator+(const OpElement& a, const OpElement& b);
OpElement operator-(const OpElement& a, const OpElement& b);
OpElement operator-(const OpElement& a);
OpElement operator*(const OpElement& a, const OpElement& b);

} // namespace pdg
