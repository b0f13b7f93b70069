#pragma once

#include <cstdint>
#include <stdexcept>

namespace pdg {

// Arithmetic in the prime field F_p with p a small runtime prime.
// Elements are canonical residues in [0, p).

inline bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct Fp {
    uint32_t p;

    explicit Fp(uint32_t p_) : p(p_) {
        if (!is_prime(p_)) throw std::invalid_argument("p must be prime");
    }

    uint32_t reduce(int64_t x) const {
        int64_t r = x % static_cast<int64_t>(p);
        if (r < 0) r += p;
        return static_cast<uint32_t>(r);
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }

    uint32_t sub(uint32_t a, uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }

    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }

    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
    }

    uint32_t pow(uint32_t a, uint64_t e) const {
        uint64_t r = 1, x = a % p;
        while (e) {
            if (e & 1) r = (r * x) % p;
            x = (x * x) % p;
            e >>= 1;
        }
        return static_cast<uint32_t>(r);
    }

    uint32_t inv(uint32_t a) const {
        if (a % p == 0) throw std::domain_error("division by zero in F_p");
        return pow(a, p - 2);
    }
};

} // namespace pdg
