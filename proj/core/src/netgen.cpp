#include "hsnet/netgen.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace hsnet {

namespace detail {
extern const char* const kSobolDirectionTable;
}

void NetSpec::validate() const {
    require_prime_base(base);
    if (s < 1) throw std::invalid_argument("NetSpec: s must be >= 1");
    if (interlace < 1) throw std::invalid_argument("NetSpec: interlacing factor must be >= 1");
    if (t > m) throw std::invalid_argument("NetSpec: t must not exceed m");
    if (m > 62) throw std::invalid_argument("NetSpec: m too large");
}

void GeneratorMatrixSet::validate() const {
    require_prime_base(base);
    if (matrices.empty()) throw std::invalid_argument("GeneratorMatrixSet: no matrices");
    for (const GfMatrix& c : matrices) {
        if (c.base() != base) throw std::invalid_argument("GeneratorMatrixSet: base mismatch");
        if (c.rows() != row_count() || c.cols() != col_count())
            throw std::invalid_argument("GeneratorMatrixSet: matrices must share dimensions");
    }
}

namespace {

struct SobolRow {
    unsigned degree = 0;
    unsigned poly = 0;  // inner coefficients a_1..a_{s-1}, a_1 in the MSB
    std::vector<std::uint32_t> initial;
};

std::vector<SobolRow> parse_direction_table(std::istream& in) {
    std::vector<SobolRow> rows;  // rows[j] describes dimension j+2
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!std::isdigit(static_cast<unsigned char>(first[0]))) continue;  // header
        SobolRow row;
        unsigned dim = static_cast<unsigned>(std::stoul(first));
        if (!(ls >> row.degree >> row.poly))
            throw std::runtime_error("direction table: malformed row");
        std::uint32_t v;
        while (ls >> v) row.initial.push_back(v);
        if (row.initial.size() != row.degree)
            throw std::runtime_error("direction table: expected " + std::to_string(row.degree) +
                                     " initial values for dimension " + std::to_string(dim));
        if (dim != rows.size() + 2)
            throw std::runtime_error("direction table: dimensions must be contiguous from 2");
        rows.push_back(std::move(row));
    }
    return rows;
}

const std::vector<SobolRow>& sobol_table() {
    static const std::vector<SobolRow> table = [] {
        if (const char* path = std::getenv("HSNET_SOBOL_FILE")) {
            std::ifstream f(path);
            if (!f) throw std::runtime_error(std::string("cannot open HSNET_SOBOL_FILE: ") + path);
            return parse_direction_table(f);
        }
        std::istringstream s(detail::kSobolDirectionTable);
        return parse_direction_table(s);
    }();
    return table;
}

GfMatrix sobol_matrix(unsigned dim, unsigned m) {
    if (dim == 1) return GfMatrix::identity(2, m);
    const SobolRow& row = sobol_table().at(dim - 2);

    // Direction integers v_k = m_k 2^(m-k); past the polynomial degree the
    // m_k follow the classical recurrence driven by the primitive polynomial.
    std::vector<std::uint64_t> mk(m + 1, 0);
    const unsigned deg = row.degree;
    for (unsigned k = 1; k <= m && k <= deg; ++k) mk[k] = row.initial[k - 1];
    for (unsigned k = deg + 1; k <= m; ++k) {
        std::uint64_t v = mk[k - deg] ^ (mk[k - deg] << deg);
        for (unsigned i = 1; i < deg; ++i)
            if ((row.poly >> (deg - 1 - i)) & 1u) v ^= mk[k - i] << i;
        mk[k] = v;
    }

    GfMatrix c(2, m, m);
    for (unsigned k = 1; k <= m; ++k) {
        const std::uint64_t vk = mk[k] << (m - k);
        for (unsigned r = 0; r < m; ++r)
            c.set(r, k - 1, static_cast<std::uint8_t>((vk >> (m - 1 - r)) & 1u));
    }
    return c;
}

std::string normalize_construction(std::string name) {
    for (char& ch : name) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (name == "vdc") return "van_der_corput";
    return name;
}

}  // namespace

unsigned sobol_max_dimension() { return static_cast<unsigned>(sobol_table().size() + 1); }

GeneratorMatrixSet builtin_matrices(const std::string& name, unsigned base, unsigned s,
                                    unsigned m) {
    require_prime_base(base);
    if (s < 1 || m < 1) throw std::invalid_argument("builtin_matrices: s and m must be >= 1");
    if (m > 52) throw std::invalid_argument("builtin_matrices: m exceeds supported range");
    const std::string kind = normalize_construction(name);

    GeneratorMatrixSet g;
    g.base = base;
    if (kind == "van_der_corput") {
        if (s != 1)
            throw std::invalid_argument("van_der_corput is one-dimensional (s must be 1)");
        g.matrices.push_back(GfMatrix::identity(base, m));
    } else if (kind == "sobol") {
        if (base != 2) throw std::invalid_argument("sobol construction requires base 2");
        if (s > sobol_max_dimension())
            throw std::invalid_argument("sobol: bundled direction numbers cover only " +
                                        std::to_string(sobol_max_dimension()) + " dimensions");
        for (unsigned i = 1; i <= s; ++i) g.matrices.push_back(sobol_matrix(i, m));
    } else if (kind == "faure") {
        if (base < s)
            throw std::invalid_argument("faure construction requires prime base >= s");
        const GfMatrix pascal = pascal_matrix(base, m);
        for (unsigned i = 0; i < s; ++i) g.matrices.push_back(gf_power(pascal, i));
    } else {
        throw std::invalid_argument("unknown construction: " + name);
    }
    g.validate();
    return g;
}

std::vector<DigitPoint> generate_point(const GeneratorMatrixSet& g, std::uint64_t n) {
    g.validate();
    const unsigned b = g.base;
    const std::size_t m = g.col_count();
    if (n >= pow_u64(b, static_cast<unsigned>(m)))
        throw std::domain_error("generate_point: n out of range");

    std::vector<std::uint8_t> nd(m);
    std::uint64_t v = n;
    for (std::size_t i = 0; i < m; ++i) {
        nd[i] = static_cast<std::uint8_t>(v % b);
        v /= b;
    }
    std::vector<DigitPoint> out;
    out.reserve(g.dimension());
    std::vector<std::uint8_t> y(g.row_count());
    for (const GfMatrix& c : g.matrices) {
        gf_apply(c, nd.data(), y.data());
        out.emplace_back(b, y);
    }
    return out;
}

DigitalNet generate_net(const GeneratorMatrixSet& g, const NetSpec& spec) {
    spec.validate();
    g.validate();
    if (spec.base != g.base) throw std::invalid_argument("generate_net: base mismatch");
    if (spec.s != g.dimension())
        throw std::invalid_argument("generate_net: spec.s must match the matrix count");
    if (spec.m != g.col_count())
        throw std::invalid_argument("generate_net: spec.m must match the matrix columns");

    DigitalNet net;
    net.spec = spec;
    const std::uint64_t n_points = spec.point_count();
    net.points.reserve(n_points);
    for (std::uint64_t n = 0; n < n_points; ++n) net.points.push_back(generate_point(g, n));
    return net;
}

bool next_composition(std::vector<unsigned>& c) {
    const std::size_t s = c.size();
    if (s <= 1) return false;
    std::size_t i = 0;
    while (i < s && c[i] == 0) ++i;
    if (i >= s - 1) return false;
    const unsigned v = c[i];
    c[i] = 0;
    c[i + 1] += 1;
    c[0] = v - 1;
    return true;
}

unsigned t_value(const GeneratorMatrixSet& g) {
    g.validate();
    const std::size_t s = g.dimension();
    const std::size_t m = g.col_count();
    const std::size_t rows_available = g.row_count();

    constexpr std::uint64_t kGuard = 10'000'000;
    std::uint64_t examined = 0;

    unsigned best = 0;  // largest k with every composition independent
    std::vector<const std::uint8_t*> rows;
    for (unsigned k = 1; k <= m; ++k) {
        std::vector<unsigned> comp(s, 0);
        comp[0] = k;
        bool all_independent = true;
        do {
            if (++examined > kGuard)
                throw guard_error("t_value: too large for exact computation");
            bool feasible = true;
            rows.clear();
            for (std::size_t i = 0; i < s && feasible; ++i) {
                if (comp[i] > rows_available) {
                    feasible = false;  // rows past the matrix are zero rows
                    break;
                }
                for (unsigned r = 0; r < comp[i]; ++r) rows.push_back(g.matrices[i].row(r));
            }
            if (!feasible || gf_rank_of_rows(rows, m, g.base) < k) {
                all_independent = false;
                break;
            }
        } while (next_composition(comp));
        if (!all_independent) break;
        best = k;
    }
    return static_cast<unsigned>(m) - best;
}

VerifyResult verify_net(const DigitalNet& net, unsigned t) {
    const NetSpec& spec = net.spec;
    const unsigned b = spec.base;
    const std::size_t s = net.dimension();
    if (s == 0) throw std::invalid_argument("verify_net: empty net");
    if (t > spec.m) throw std::invalid_argument("verify_net: t exceeds m");
    const unsigned k = spec.m - t;  // digits of resolution to check
    const std::uint64_t n_points = spec.point_count();
    if (net.points.size() != n_points)
        throw std::invalid_argument("verify_net: point count does not match spec");
    for (const auto& coord : net.points.front())
        if (coord.precision() < k)
            throw std::invalid_argument("verify_net: point precision below m-t digits");

    // Work guard: (number of shapes) * N.
    {
        long double shapes = 1.0L;
        for (unsigned i = 1; i < s; ++i)
            shapes = shapes * (k + i) / i;  // binomial(k+s-1, s-1)
        if (shapes * static_cast<long double>(n_points) > 2e8L)
            throw guard_error("verify_net: too large for exhaustive counting");
    }

    const std::uint64_t boxes = pow_u64(b, k);
    const std::uint64_t expected = pow_u64(b, t);
    std::vector<std::uint32_t> counts(boxes);

    std::vector<unsigned> shape(s, 0);
    shape[0] = k;
    do {
        std::fill(counts.begin(), counts.end(), 0);
        for (const auto& point : net.points) {
            std::uint64_t key = 0;
            for (std::size_t i = 0; i < s; ++i) {
                const auto& coord = point[i];
                for (unsigned digit = 0; digit < shape[i]; ++digit)
                    key = key * b + coord.digit(digit);
            }
            ++counts[key];
        }
        for (std::uint64_t key = 0; key < boxes; ++key) {
            if (counts[key] == expected) continue;
            ElementaryIntervalViolation v;
            v.shape = shape;
            v.count = counts[key];
            v.expected = expected;
            v.box.assign(s, 0);
            std::uint64_t rem = key;
            for (std::size_t i = s; i-- > 0;) {
                const std::uint64_t scale = pow_u64(b, shape[i]);
                v.box[i] = rem % scale;
                rem /= scale;
            }
            return VerifyResult{false, std::move(v)};
        }
    } while (next_composition(shape));
    return VerifyResult{true, std::nullopt};
}

GeneratorMatrixSet interlace_matrices(const GeneratorMatrixSet& g, unsigned d) {
    g.validate();
    if (d < 1) throw std::invalid_argument("interlace_matrices: d must be >= 1");
    if (g.dimension() % d != 0)
        throw std::invalid_argument("interlace_matrices: dimension not divisible by d");
    if (d == 1) return g;

    const std::size_t s_out = g.dimension() / d;
    const std::size_t rows_in = g.row_count();
    const std::size_t m = g.col_count();
    std::size_t rows_out = rows_in * d;
    const std::size_t budget = digit_budget(g.base);
    if (rows_out > budget) {
        std::cerr << "hsnet: interlace_matrices dropping " << (rows_out - budget)
                  << " rows past the base-" << g.base << " digit budget of " << budget << "\n";
        rows_out = budget;
    }

    GeneratorMatrixSet out;
    out.base = g.base;
    for (std::size_t grp = 0; grp < s_out; ++grp) {
        GfMatrix c(g.base, rows_out, m);
        for (std::size_t q = 0; q < rows_out; ++q) {
            const GfMatrix& src = g.matrices[grp * d + q % d];
            const std::size_t a = q / d;
            for (std::size_t j = 0; j < m; ++j) c.set(q, j, src.at(a, j));
        }
        out.matrices.push_back(std::move(c));
    }
    return out;
}

}  // namespace hsnet
