#include "hsnet/gf.hpp"

#include <stdexcept>

namespace hsnet {

GfMatrix::GfMatrix(unsigned base, std::size_t rows, std::size_t cols)
    : base_(base), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    require_prime_base(base);
}

GfMatrix GfMatrix::identity(unsigned base, std::size_t n) {
    GfMatrix m(base, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void GfMatrix::set(std::size_t r, std::size_t c, std::uint8_t v) {
    if (v >= base_) throw std::invalid_argument("GfMatrix entry out of range");
    data_[r * cols_ + c] = v;
}

GfMatrix gf_multiply(const GfMatrix& a, const GfMatrix& b) {
    if (a.base() != b.base() || a.cols() != b.rows())
        throw std::invalid_argument("gf_multiply: incompatible operands");
    const unsigned p = a.base();
    GfMatrix out(p, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const unsigned av = a.at(i, k);
            if (av == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                unsigned v = out.at(i, j) + av * b.at(k, j);
                out.set(i, j, static_cast<std::uint8_t>(v % p));
            }
        }
    }
    return out;
}

void gf_apply(const GfMatrix& a, const std::uint8_t* x, std::uint8_t* y) {
    const unsigned p = a.base();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        unsigned acc = 0;
        const std::uint8_t* row = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) acc += row[j] * x[j];
        y[i] = static_cast<std::uint8_t>(acc % p);
    }
}

unsigned gf_inverse(unsigned v, unsigned base) {
    v %= base;
    if (v == 0) throw std::invalid_argument("gf_inverse of zero");
    // b is tiny here; a scan beats extended Euclid for clarity.
    for (unsigned w = 1; w < base; ++w)
        if ((v * w) % base == 1) return w;
    throw std::logic_error("gf_inverse: base not prime?");
}

std::size_t gf_rank_of_rows(const std::vector<const std::uint8_t*>& rows, std::size_t cols,
                            unsigned base) {
    std::vector<std::vector<std::uint8_t>> work;
    work.reserve(rows.size());
    for (const std::uint8_t* r : rows) work.emplace_back(r, r + cols);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < work.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < work.size() && work[pivot][col] == 0) ++pivot;
        if (pivot == work.size()) continue;
        std::swap(work[pivot], work[rank]);
        const unsigned inv = gf_inverse(work[rank][col], base);
        for (std::size_t j = col; j < cols; ++j)
            work[rank][j] = static_cast<std::uint8_t>((work[rank][j] * inv) % base);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == rank || work[i][col] == 0) continue;
            const unsigned f = work[i][col];
            for (std::size_t j = col; j < cols; ++j)
                work[i][j] =
                    static_cast<std::uint8_t>((work[i][j] + (base - f) * work[rank][j]) % base);
        }
        ++rank;
    }
    return rank;
}

std::size_t gf_rank(const GfMatrix& a) {
    std::vector<const std::uint8_t*> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
    return gf_rank_of_rows(rows, a.cols(), a.base());
}

GfMatrix pascal_matrix(unsigned base, std::size_t n) {
    GfMatrix m(base, n, n);
    // binomial(c, r) mod b by the additive recurrence, reduced each step.
    std::vector<std::vector<unsigned>> binom(n, std::vector<unsigned>(n, 0));
    for (std::size_t c = 0; c < n; ++c) {
        binom[0][c] = 1;
        for (std::size_t r = 1; r <= c; ++r)
            binom[r][c] = (binom[r - 1][c - 1] + (r <= c - 1 ? binom[r][c - 1] : 0)) % base;
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m.set(r, c, static_cast<std::uint8_t>(binom[r][c] % base));
    return m;
}

GfMatrix gf_power(const GfMatrix& a, unsigned power) {
    if (a.rows() != a.cols()) throw std::invalid_argument("gf_power: square matrix required");
    GfMatrix result = GfMatrix::identity(a.base(), a.rows());
    GfMatrix base = a;
    while (power > 0) {
        if (power & 1u) result = gf_multiply(result, base);
        base = gf_multiply(base, base);
        power >>= 1u;
    }
    return result;
}

}  // namespace hsnet
