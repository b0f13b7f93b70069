#include "pdg/opring.hpp"

#include <stdexcept>

namespace pdg {

static void check_same_ring(const OpElement& a, const OpElement& b) {
    if (a.p != b.p) throw std::invalid_argument("mixed O_p rings");
}

OpElement reduce_to_Op(const LaurentPoly& x, uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    OpElement out(p);
    if (x.is_zero()) return out;

    // clear negative exponents: q^{2p} = 1
    int shift = 0;
    int lo = x.min_exp();
    if (lo < 0) shift = 2 * static_cast<int>(p) * ((-lo + 2 * static_cast<int>(p) - 1) / (2 * static_cast<int>(p)));
    std::vector<long long> dense(static_cast<size_t>(x.max_exp() + shift) + 1, 0);
    for (auto& [e, v] : x.c) dense[static_cast<size_t>(e + shift)] = v;

    // Euclidean division by 1 + q^2 + ... + q^{2(p-1)} (monic, degree 2p-2)
    size_t d = 2 * static_cast<size_t>(p) - 2;
    for (size_t i = dense.size(); i-- > d;) {
        long long lead = dense[i];
        if (!lead) continue;
        for (uint32_t k = 0; k < p; ++k)
            dense[i - d + 2 * static_cast<size_t>(k)] -= lead;
    }
    for (size_t i = 0; i < d && i < dense.size(); ++i) out.rep[i] = dense[i];
    return out;
}

OpElement operator+(const OpElement& a, const OpElement& b) {
    check_same_ring(a, b);
    OpElement r = a;
    for (size_t i = 0; i < r.rep.size(); ++i) r.rep[i] += b.rep[i];
    return r;
}

OpElement operator-(const OpElement& a, const OpElement& b) {
    check_same_ring(a, b);
    OpElement r = a;
    for (size_t i = 0; i < r.rep.size(); ++i) r.rep[i] -= b.rep[i];
    return r;
}

OpElement operator-(const OpElement& a) {
    OpElement r = a;
    for (auto& v : r.rep) v = -v;
    return r;
}

OpElement operator*(const OpElement& a, const OpElement& b) {
    check_same_ring(a, b);
    return reduce_to_Op(a.to_laurent() * b.to_laurent(), a.p);
}

} // namespace pdg
