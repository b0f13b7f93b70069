#include "pdg/fpmat.hpp"

#include <algorithm>
#include <cstring>

namespace pdg {

FpMat FpMat::identity(std::size_t n, uint32_t p) {
    FpMat I(n, n, p);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1 % p;
    return I;
}

bool FpMat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](uint32_t x) { return x == 0; });
}

FpMat fp_mul(const FpMat& A, const FpMat& B) {
    FpMat C(A.rows, B.cols, A.p);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t k = 0; k < A.cols; ++k) {
            uint32_t c = A.at(i, k);
            if (c) fp_axpy(C.row(i), B.row(k), c, B.cols, A.p);
        }
    }
    return C;
}

FpMat fp_add(const FpMat& A, const FpMat& B) {
    FpMat C = A;
    fp_axpy(C.a.data(), B.a.data(), 1, C.a.size(), C.p);
    return C;
}

FpMat fp_sub(const FpMat& A, const FpMat& B) {
    FpMat C = A;
    fp_axpy(C.a.data(), B.a.data(), C.p - 1, C.a.size(), C.p);
    return C;
}

FpMat fp_scalar_mul(uint32_t c, const FpMat& A) {
    FpMat C = A;
    fp_scale(C.a.data(), c % C.p, C.a.size(), C.p);
    return C;
}

std::vector<std::size_t> fp_rref(FpMat& A) {
    Fp F(A.p);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
        std::size_t piv = r;
        while (piv < A.rows && A.at(piv, c) == 0) ++piv;
        if (piv == A.rows) continue;
        if (piv != r)
            std::swap_ranges(A.row(piv), A.row(piv) + A.cols, A.row(r));
        uint32_t inv = F.inv(A.at(r, c));
        if (inv != 1) fp_scale(A.row(r), inv, A.cols, A.p);
        for (std::size_t i = 0; i < A.rows; ++i) {
            if (i == r) continue;
            uint32_t v = A.at(i, c);
            if (v) fp_axpy(A.row(i), A.row(r), A.p - v, A.cols, A.p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t fp_rank(FpMat A) { return fp_rref(A).size(); }

FpMat fp_kernel(FpMat A) {
    std::vector<std::size_t> pivots = fp_rref(A);
    std::vector<bool> is_pivot(A.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::size_t nullity = A.cols - pivots.size();
    FpMat K(A.cols, nullity, A.p);
    std::size_t kcol = 0;
    for (std::size_t c = 0; c < A.cols; ++c) {
        if (is_pivot[c]) continue;
        K.at(c, kcol) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            uint32_t v = A.at(r, c);
            if (v) K.at(pivots[r], kcol) = A.p - v;
        }
        ++kcol;
    }
    return K;
}

bool fp_solve(FpMat A, std::vector<uint32_t> b, std::vector<uint32_t>& x) {
    FpMat aug(A.rows, A.cols + 1, A.p);
    for (std::size_t i = 0; i < A.rows; ++i) {
        std::memcpy(aug.row(i), A.row(i), A.cols * sizeof(uint32_t));
        aug.at(i, A.cols) = b[i];
    }
    std::vector<std::size_t> pivots = fp_rref(aug);
    if (!pivots.empty() && pivots.back() == A.cols) return false;
    x.assign(A.cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(r, A.cols);
    return true;
}

FpMat fp_inverse(const FpMat& A) {
    if (A.rows != A.cols) throw std::invalid_argument("not square");
    std::size_t n = A.rows;
    FpMat aug(n, 2 * n, A.p);
    for (std::size_t i = 0; i < n; ++i) {
        std::memcpy(aug.row(i), A.row(i), n * sizeof(uint32_t));
        aug.at(i, n + i) = 1 % A.p;
    }
    std::vector<std::size_t> pivots = fp_rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw std::invalid_argument("singular matrix");
    FpMat inv(n, n, A.p);
    for (std::size_t i = 0; i < n; ++i)
        std::memcpy(inv.row(i), aug.row(i) + n, n * sizeof(uint32_t));
    return inv;
}

std::size_t fp_rank_concat(const FpMat& A, const FpMat& B) {
    FpMat C(A.rows, A.cols + B.cols, A.p);
    for (std::size_t i = 0; i < A.rows; ++i) {
        std::memcpy(C.row(i), A.row(i), A.cols * sizeof(uint32_t));
        std::memcpy(C.row(i) + A.cols, B.row(i), B.cols * sizeof(uint32_t));
    }
    return fp_rank(std::move(C));
}

} // namespace pdg
