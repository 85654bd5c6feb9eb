#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsnet/digits.hpp"
#include "hsnet/gf.hpp"

namespace hsnet {

/// Parameters tying a digital net, its interlacing factor and its quality
/// parameter together: N = base^m points in dimension s, interlacing factor
/// d (1 = classical), quality parameter t.
struct NetSpec {
    unsigned base = 2;
    unsigned m = 0;
    unsigned s = 1;
    unsigned interlace = 1;  // d
    unsigned t = 0;

    void validate() const;
    std::uint64_t point_count() const { return pow_u64(base, m); }
};

/// s generator matrices over Z_b sharing dimensions (rows x m).
struct GeneratorMatrixSet {
    unsigned base = 2;
    std::vector<GfMatrix> matrices;

    std::size_t dimension() const { return matrices.size(); }
    std::size_t row_count() const { return matrices.empty() ? 0 : matrices[0].rows(); }
    std::size_t col_count() const { return matrices.empty() ? 0 : matrices[0].cols(); }

    void validate() const;
};

/// A fully materialized digital net: base^m points, each a vector of
/// DigitPoint coordinates.
struct DigitalNet {
    NetSpec spec;
    std::string construction;
    std::vector<std::vector<DigitPoint>> points;

    std::size_t dimension() const { return points.empty() ? 0 : points[0].size(); }
};

/// Coordinates of the n-th net point: coordinate i is C_i applied over Z_b
/// to the base-b digit vector of n; precision equals the matrix row count.
std::vector<DigitPoint> generate_point(const GeneratorMatrixSet& g, std::uint64_t n);

/// All base^m points in natural n order (the first point is the origin).
DigitalNet generate_net(const GeneratorMatrixSet& g, const NetSpec& spec);

/// Classical constructions. "sobol" requires base 2 and s within the bundled
/// direction-number table; "faure" requires a prime base >= s;
/// "van_der_corput" (or "vdc") is the 1-D identity matrix.
GeneratorMatrixSet builtin_matrices(const std::string& name, unsigned base, unsigned s,
                                    unsigned m);

/// Exact quality parameter: the smallest t such that for every composition
/// (d_1,...,d_s) of m-t the stacked first d_i rows of the C_i are linearly
/// independent over Z_b. Throws guard_error when the exhaustive search would
/// exceed its work limit.
unsigned t_value(const GeneratorMatrixSet& g);

struct ElementaryIntervalViolation {
    std::vector<unsigned> shape;     // d_1..d_s
    std::vector<std::uint64_t> box;  // a_1..a_s
    std::uint64_t count = 0;
    std::uint64_t expected = 0;
};

struct VerifyResult {
    bool pass = false;
    std::optional<ElementaryIntervalViolation> violation;
};

/// Exhaustive elementary-interval counting check of the (t,m,s)-net property,
/// done on exact digit prefixes. Throws guard_error if too large.
VerifyResult verify_net(const DigitalNet& net, unsigned t);

/// Row-interleaves each group of d matrices (over ds coordinates) into one
/// matrix with d*rows rows, so that generating with the result equals digit
/// interlacing of generated points. Row count is capped at the base's digit
/// budget; a note is emitted if rows are dropped.
GeneratorMatrixSet interlace_matrices(const GeneratorMatrixSet& g, unsigned d);

/// Bundled Sobol direction numbers ("d s a m_1 ... m_s" rows, Joe-Kuo
/// layout). The HSNET_SOBOL_FILE environment variable overrides the bundled
/// table with an external file at first use.
unsigned sobol_max_dimension();

/// Enumerate compositions of `total` into `parts` nonnegative entries.
/// Returns false when the sequence is exhausted; start from {total,0,...,0}.
bool next_composition(std::vector<unsigned>& c);

}  // namespace hsnet
