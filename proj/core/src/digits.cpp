#include "hsnet/digits.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsnet {

namespace {

void check_base(unsigned base) { require_prime_base(base); }

}  // namespace

DigitPoint::DigitPoint(unsigned base, std::size_t precision)
    : base_(base), digits_(precision, 0) {
    check_base(base);
    if (precision == 0) throw std::invalid_argument("precision must be >= 1");
}

DigitPoint::DigitPoint(unsigned base, std::vector<std::uint8_t> digits)
    : base_(base), digits_(std::move(digits)) {
    check_base(base);
    if (digits_.empty()) throw std::invalid_argument("precision must be >= 1");
    for (std::uint8_t d : digits_)
        if (d >= base_) throw std::invalid_argument("digit out of range for base");
}

double DigitPoint::value() const { return from_digits(*this); }

DigitPoint DigitPoint::extended(std::size_t precision) const {
    if (precision < digits_.size())
        throw std::invalid_argument("extended() cannot reduce precision");
    std::vector<std::uint8_t> d(digits_);
    d.resize(precision, 0);
    return DigitPoint(base_, std::move(d));
}

DigitPoint to_digits(double x, unsigned base, std::size_t precision) {
    check_base(base);
    if (precision == 0) throw std::invalid_argument("precision must be >= 1");
    if (!(x >= 0.0) || x >= 1.0)
        throw std::domain_error("to_digits: x must lie in [0,1)");
    {
        // Exactness below relies on b^precision < 2^67 (generous compared to
        // the double round-trip budget, 52 digits at b = 2).
        long double pw = 1.0L;
        for (std::size_t i = 0; i < precision; ++i) pw *= base;
        if (pw >= std::ldexp(1.0L, 67))
            throw std::invalid_argument("to_digits: precision exceeds supported range");
    }

    std::vector<std::uint8_t> digits(precision, 0);
    if (x == 0.0) return DigitPoint(base, std::move(digits));

    // Write x = mant / 2^e with mant integral (exact decomposition of the
    // double), then extract digits by exact long division in 128-bit
    // arithmetic: no floating-point rounding can leak in.
    int exp2 = 0;
    double mant_d = std::frexp(x, &exp2);  // x = mant_d * 2^exp2, mant_d in [0.5, 1)
    const auto mant =
        static_cast<std::uint64_t>(std::ldexp(mant_d, 53));  // integral, < 2^53
    const int e = 53 - exp2;                                 // >= 53 since x < 1

    // x < 2^(53-e); with e > 120 that is below b^-precision for every
    // supported precision, so every requested digit is zero.
    if (e > 120) return DigitPoint(base, std::move(digits));

    unsigned __int128 r = mant;  // invariant: remainder value = r / 2^e, r < 2^e
    for (std::size_t i = 0; i < precision && r != 0; ++i) {
        r *= base;  // < 2^e * b <= 2^123
        digits[i] = static_cast<std::uint8_t>(r >> e);
        r -= static_cast<unsigned __int128>(digits[i]) << e;
    }
    return DigitPoint(base, std::move(digits));
}

double from_digits(const DigitPoint& p) {
    const unsigned b = p.base();
    // Accumulate the scaled integer in blocks that fit exactly in a double,
    // then divide once per block: one rounding for points inside the digit
    // budget, graceful degradation beyond it.
    const unsigned budget = digit_budget(b);
    const auto digits = p.digits();
    double result = 0.0;
    std::size_t pos = digits.size();
    while (pos > 0) {
        std::size_t block = std::min<std::size_t>(budget, pos);
        std::uint64_t acc = 0;
        std::uint64_t scale = 1;
        for (std::size_t i = pos - block; i < pos; ++i) {
            acc = acc * b + digits[i];
            scale *= b;
        }
        result = (result + static_cast<double>(acc)) / static_cast<double>(scale);
        pos -= block;
    }
    return result;
}

namespace {

void check_compatible(const DigitPoint& x, const DigitPoint& y) {
    if (x.base() != y.base())
        throw std::invalid_argument("digitwise ops require equal bases");
    if (x.precision() != y.precision())
        throw std::invalid_argument("digitwise ops require equal precisions");
}

}  // namespace

DigitPoint digit_add(const DigitPoint& x, const DigitPoint& y) {
    check_compatible(x, y);
    const unsigned b = x.base();
    std::vector<std::uint8_t> out(x.precision());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>((x.digit(i) + y.digit(i)) % b);
    return DigitPoint(b, std::move(out));
}

DigitPoint digit_sub(const DigitPoint& x, const DigitPoint& y) {
    check_compatible(x, y);
    const unsigned b = x.base();
    std::vector<std::uint8_t> out(x.precision());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>((x.digit(i) + b - y.digit(i)) % b);
    return DigitPoint(b, std::move(out));
}

WalshIndex::WalshIndex(std::uint64_t k, unsigned base) : k_(k), base_(base) {
    check_base(base);
}

unsigned WalshIndex::digit(unsigned a) const {
    std::uint64_t v = k_;
    for (unsigned i = 0; i < a; ++i) v /= base_;
    return static_cast<unsigned>(v % base_);
}

unsigned WalshIndex::num_digits() const {
    unsigned n = 0;
    std::uint64_t v = k_;
    while (v != 0) {
        v /= base_;
        ++n;
    }
    return n;
}

std::uint64_t digit_add_integer(std::uint64_t k, std::uint64_t l, unsigned base) {
    check_base(base);
    std::uint64_t out = 0, scale = 1;
    while (k != 0 || l != 0) {
        out += scale * ((k % base + l % base) % base);
        k /= base;
        l /= base;
        scale *= base;
    }
    return out;
}

std::uint64_t digit_sub_integer(std::uint64_t k, std::uint64_t l, unsigned base) {
    check_base(base);
    std::uint64_t out = 0, scale = 1;
    while (k != 0 || l != 0) {
        out += scale * ((k % base + base - l % base) % base);
        k /= base;
        l /= base;
        scale *= base;
    }
    return out;
}

unsigned walsh_exponent(const WalshIndex& k, const DigitPoint& x) {
    if (k.base() != x.base())
        throw std::invalid_argument("walsh: index and point bases differ");
    const unsigned b = x.base();
    std::uint64_t v = k.value();
    unsigned e = 0;
    std::size_t j = 0;
    while (v != 0) {
        if (j >= x.precision())
            throw std::invalid_argument("walsh: point has fewer digits than the index reads");
        e += static_cast<unsigned>(v % b) * x.digit(j);
        v /= b;
        ++j;
    }
    return e % b;
}

std::complex<double> unit_root_power(unsigned base, unsigned exponent) {
    exponent %= base;
    if (exponent == 0) return {1.0, 0.0};
    if (base == 2) return {-1.0, 0.0};
    const double theta = 2.0 * std::numbers::pi * exponent / base;
    return {std::cos(theta), std::sin(theta)};
}

std::complex<double> walsh(const WalshIndex& k, const DigitPoint& x) {
    return unit_root_power(x.base(), walsh_exponent(k, x));
}

unsigned walsh_multi_exponent(std::span<const WalshIndex> k, std::span<const DigitPoint> x) {
    if (k.size() != x.size())
        throw std::invalid_argument("walsh_multi: dimension mismatch");
    if (k.empty()) return 0;
    const unsigned b = x[0].base();
    unsigned e = 0;
    for (std::size_t j = 0; j < k.size(); ++j) e += walsh_exponent(k[j], x[j]);
    return e % b;
}

std::complex<double> walsh_multi(std::span<const WalshIndex> k, std::span<const DigitPoint> x) {
    if (k.empty()) return {1.0, 0.0};
    return unit_root_power(x[0].base(), walsh_multi_exponent(k, x));
}

namespace {

// In-place size-b DFT (conjugated kernel) along every base-b digit axis of
// an array of length b^level, then a digit-reversal to account for the
// pairing in wal_k: digit j of the cell index (weight b^j) meets digit
// level-1-j of k.
void digit_reverse_permute_complex(std::vector<std::complex<double>>& a, unsigned base, unsigned level) {
    const std::size_t n = a.size();
    std::vector<std::size_t> rev(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = 0, v = c;
        for (unsigned j = 0; j < level; ++j) {
            r = r * base + v % base;
            v /= base;
        }
        rev[c] = r;
    }
    std::vector<std::complex<double>> tmp(n);
    for (std::size_t c = 0; c < n; ++c) tmp[rev[c]] = a[c];
    a.swap(tmp);
}

}  // namespace

std::vector<std::complex<double>> walsh_sums(std::span<const std::complex<double>> values,
                                             unsigned base, unsigned level) {
    require_prime_base(base);
    const std::size_t n = pow_u64(base, level);
    if (values.size() != n)
        throw std::invalid_argument("walsh_sums: values.size() must be base^level");
    std::vector<std::complex<double>> a(values.begin(), values.end());

    std::vector<std::complex<double>> omega(base);
    for (unsigned t = 0; t < base; ++t) omega[t] = unit_root_power(base, t);

    std::vector<std::complex<double>> bucket(base);
    for (unsigned axis = 0; axis < level; ++axis) {
        const std::size_t stride = pow_u64(base, axis);
        const std::size_t block = stride * base;
        for (std::size_t start = 0; start < n; start += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (unsigned t = 0; t < base; ++t) {
                    std::complex<double> acc = 0.0;
                    for (unsigned r = 0; r < base; ++r) {
                        // conj(omega^{t r}) = omega^{(base - t r mod base)}
                        unsigned e = (base - (t * r) % base) % base;
                        acc += a[start + off + r * stride] * omega[e];
                    }
                    bucket[t] = acc;
                }
                for (unsigned t = 0; t < base; ++t) a[start + off + t * stride] = bucket[t];
            }
        }
    }
    digit_reverse_permute_complex(a, base, level);
    return a;
}

std::vector<double> walsh_sums_b2(std::vector<double> values, unsigned level) {
    const std::size_t n = std::size_t{1} << level;
    if (values.size() != n)
        throw std::invalid_argument("walsh_sums_b2: values.size() must be 2^level");
    for (unsigned axis = 0; axis < level; ++axis) {
        const std::size_t stride = std::size_t{1} << axis;
        const std::size_t block = stride << 1;
        for (std::size_t start = 0; start < n; start += block) {
            for (std::size_t off = start; off < start + stride; ++off) {
                const double u = values[off];
                const double v = values[off + stride];
                values[off] = u + v;
                values[off + stride] = u - v;
            }
        }
    }
    // Bit-reversed pairing between cell digits and index digits.
    std::vector<double> out(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t r = 0, v = c;
        for (unsigned j = 0; j < level; ++j) {
            r = (r << 1) | (v & 1);
            v >>= 1;
        }
        out[r] = values[c];
    }
    return out;
}

}  // namespace hsnet
