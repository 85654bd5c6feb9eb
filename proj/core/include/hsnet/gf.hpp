#pragma once

#include <cstdint>
#include <vector>

#include "hsnet/common.hpp"

namespace hsnet {

/// Dense matrix over the prime field Z_b with byte entries.
class GfMatrix {
public:
    GfMatrix() = default;
    GfMatrix(unsigned base, std::size_t rows, std::size_t cols);
    static GfMatrix identity(unsigned base, std::size_t n);

    unsigned base() const { return base_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint8_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint8_t v);

    const std::uint8_t* row(std::size_t r) const { return data_.data() + r * cols_; }

    friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

private:
    unsigned base_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> data_;
};

GfMatrix gf_multiply(const GfMatrix& a, const GfMatrix& b);

/// y = A x over Z_b; x and y are digit vectors.
void gf_apply(const GfMatrix& a, const std::uint8_t* x, std::uint8_t* y);

/// Rank over Z_b by Gaussian elimination (copies the input rows).
std::size_t gf_rank(const GfMatrix& a);

/// Rank of a row list gathered from several matrices: rows[i] points at a
/// row of length cols. Used by the t-value search, which stacks row prefixes
/// of the generator matrices.
std::size_t gf_rank_of_rows(const std::vector<const std::uint8_t*>& rows, std::size_t cols,
                            unsigned base);

/// Multiplicative inverse in Z_b (b prime, v != 0).
unsigned gf_inverse(unsigned v, unsigned base);

/// Upper-triangular Pascal matrix P[r][c] = binomial(c, r) mod b.
GfMatrix pascal_matrix(unsigned base, std::size_t n);

/// A^power over Z_b.
GfMatrix gf_power(const GfMatrix& a, unsigned power);

}  // namespace hsnet
