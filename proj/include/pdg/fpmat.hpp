#pragma once

#include "pdg/fp.hpp"
#include "pdg/fpvec.hpp"

#include <cstdint>
#include <vector>

namespace pdg {

// Dense row-major matrix over F_p with canonical residues.
struct FpMat {
    std::size_t rows = 0, cols = 0;
    uint32_t p = 2;
    std::vector<uint32_t> a;

    FpMat() = default;
    FpMat(std::size_t r, std::size_t c, uint32_t p_)
        : rows(r), cols(c), p(p_), a(r * c, 0) {}

    uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    uint32_t* row(std::size_t i) { return a.data() + i * cols; }
    const uint32_t* row(std::size_t i) const { return a.data() + i * cols; }

    static FpMat identity(std::size_t n, uint32_t p);
    bool is_zero() const;
    bool operator==(const FpMat& o) const = default;
};

FpMat fp_mul(const FpMat& A, const FpMat& B);
FpMat fp_add(const FpMat& A, const FpMat& B);
FpMat fp_sub(const FpMat& A, const FpMat& B);
FpMat fp_scalar_mul(uint32_t c, const FpMat& A);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> fp_rref(FpMat& A);

std::size_t fp_rank(FpMat A);

// Basis of the right kernel {x : Ax = 0}, as columns collected in a matrix
// with one column per basis vector (cols = nullity).
FpMat fp_kernel(FpMat A);

// Solve Ax = b for one solution; returns false if inconsistent.
bool fp_solve(FpMat A, std::vector<uint32_t> b, std::vector<uint32_t>& x);

// dim of the span of the columns of [A | B].
std::size_t fp_rank_concat(const FpMat& A, const FpMat& B);

// Inverse of a square matrix; throws std::invalid_argument if singular.
FpMat fp_inverse(const FpMat& A);

} // namespace pdg
