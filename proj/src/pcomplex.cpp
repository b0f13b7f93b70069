#include "pdg/pcomplex.hpp"

#include <stdexcept>

namespace pdg {

std::string BlockDecomposition::to_string() const {
    std::string s = "{";
    for (auto& [key, m] : blocks) {
        if (s.size() > 1) s += ", ";
        s += std::to_string(m) + "x(len " + std::to_string(key.first) +
             ", deg " + std::to_string(key.second) + ")";
    }
    return s + "}";
}

void validate_pcomplex(const PComplex& C) {
    if (!is_prime(C.p)) throw std::invalid_argument("p must be prime");
    for (auto& [deg, n] : C.dims)
        if (deg % 2 != 0 || n == 0) throw std::invalid_argument("not-a-p-complex");
    for (auto& [deg, M] : C.d) {
        if (M.p != C.p || M.rows != C.dim(deg + 2) || M.cols != C.dim(deg))
            throw std::invalid_argument("not-a-p-complex");
    }
    // d^p = 0, chased from every starting degree
    for (auto& [deg, n] : C.dims) {
        FpMat acc = FpMat::identity(n, C.p);
        int cur = deg;
        for (uint32_t k = 0; k < C.p; ++k) {
            if (C.dim(cur + 2) == 0) {
                acc = FpMat(0, acc.cols, C.p);
                break;
            }
            acc = fp_mul(C.map_at(cur), acc);
            cur += 2;
        }
        if (!acc.is_zero()) throw std::invalid_argument("not-a-p-complex");
    }
}

PComplex single_block(uint32_t p, int length, int bottom_deg) {
    PComplex C(p);
    for (int t = 0; t < length; ++t) C.dims[bottom_deg + 2 * t] = 1;
    for (int t = 0; t + 1 < length; ++t) {
        FpMat m(1, 1, p);
        m.at(0, 0) = 1;
        C.d[bottom_deg + 2 * t] = m;
    }
    return C;
}

PComplex direct_sum(const PComplex& A, const PComplex& B) {
    if (A.p != B.p) throw std::invalid_argument("mixed primes");
    PComplex C(A.p);
    for (auto& [deg, n] : A.dims) C.dims[deg] += n;
    for (auto& [deg, n] : B.dims) C.dims[deg] += n;
    for (auto& [deg, n] : C.dims) {
        std::size_t ra = A.dim(deg + 2), ca = A.dim(deg);
        std::size_t rb = B.dim(deg + 2), cb = B.dim(deg);
        if (ra + rb == 0) continue;
        FpMat M(ra + rb, ca + cb, C.p);
        if (ca && ra) {
            FpMat ma = A.map_at(deg);
            for (std::size_t i = 0; i < ra; ++i)
                for (std::size_t j = 0; j < ca; ++j) M.at(i, j) = ma.at(i, j);
        }
        if (cb && rb) {
            FpMat mb = B.map_at(deg);
            for (std::size_t i = 0; i < rb; ++i)
                for (std::size_t j = 0; j < cb; ++j)
                    M.at(ra + i, ca + j) = mb.at(i, j);
        }
        if (!M.is_zero()) C.d[deg] = M;
    }
    return C;
}

BlockDecomposition decompose(const PComplex& C) {
    validate_pcomplex(C);
    BlockDecomposition out;
    for (auto& [deg, n] : C.dims) {
        // kernel of d leaving this degree
        FpMat K = fp_kernel(C.map_at(deg));
        // intersect with images of d^k arriving here, k = 0,1,...,p
        std::size_t prev = K.cols;  // dim(ker ∩ im d^0) = dim ker
        FpMat img = FpMat::identity(n, C.p);
        int src = deg;
        for (uint32_t k = 1; k <= C.p; ++k) {
            src -= 2;
            std::size_t inter;
            if (C.dim(src) == 0) {
                inter = 0;
            } else {
                img = fp_mul(img, C.map_at(src));
                inter = fp_rank(K) + fp_rank(img) - fp_rank_concat(K, img);
            }
            if (prev > inter)
                out.blocks[{static_cast<int>(k),
                            deg - 2 * (static_cast<int>(k) - 1)}] += prev - inter;
            prev = inter;
            if (inter == 0) break;
        }
    }
    return out;
}

bool is_contractible(const PComplex& C) {
    BlockDecomposition B = decompose(C);
    for (auto& [key, m] : B.blocks)
        if (key.first != static_cast<int>(C.p)) return false;
    return true;
}

BlockDecomposition stable_cohomology(const PComplex& C) {
    BlockDecomposition B = decompose(C);
    BlockDecomposition out;
    for (auto& [key, m] : B.blocks)
        if (key.first < static_cast<int>(C.p)) out.blocks[key] = m;
    return out;
}

OpElement k0_symbol(const PComplex& C) {
    BlockDecomposition B = stable_cohomology(C);
    LaurentPoly total;
    for (auto& [key, m] : B.blocks) {
        auto [len, bottom] = key;
        for (int t = 0; t < len; ++t)
            total.add_term(bottom + 2 * t, static_cast<long long>(m));
    }
    return reduce_to_Op(total, C.p);
}

std::size_t matrix_pdg_index(int n, int i, int j) {
    int t = j - i;
    int imin = std::max(1, 1 - t);
    (void)n;
    return static_cast<std::size_t>(i - imin);
}

PComplex matrix_pdg(int n, uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > static_cast<int>(p))
        throw std::invalid_argument("differential-not-p-nilpotent");
    PComplex C(p);
    for (int t = -(n - 1); t <= n - 1; ++t)
        C.dims[2 * t] = static_cast<std::size_t>(n - (t < 0 ? -t : t));
    // d(e_ij) = e_{i-1,j} - e_{i,j+1}
    for (int t = -(n - 1); t <= n - 1; ++t) {
        std::size_t src = C.dims[2 * t];
        std::size_t dst = C.dim(2 * (t + 1));
        if (!dst) continue;
        FpMat M(dst, src, p);
        int imin = std::max(1, 1 - t);
        for (int i = imin; i + std::max(t, 0) <= n; ++i) {
            int j = i + t;
            std::size_t col = matrix_pdg_index(n, i, j);
            if (i - 1 >= 1 && j <= n)
                M.at(matrix_pdg_index(n, i - 1, j), col) = 1 % p;
            if (j + 1 <= n)
                M.at(matrix_pdg_index(n, i, j + 1), col) =
                    Fp(p).neg(1 % p);
        }
        if (!M.is_zero()) C.d[2 * t] = M;
    }
    validate_pcomplex(C);
    return C;
}

} // namespace pdg
