#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "hsnet/common.hpp"

namespace hsnet {

/// A point coordinate in [0,1) held as its exact base-b digit expansion:
/// digit i (0-indexed) is the coefficient of b^-(i+1), so value() equals
/// sum digits[i] * b^-(i+1). b-adic rationals always carry the finite
/// expansion (trailing zeros, never a trailing run of b-1 digits).
///
/// This is the common currency between net generation, scrambling and
/// interlacing; all of those operate on digits only and touch doubles just
/// at the boundary.
class DigitPoint {
public:
    DigitPoint(unsigned base, std::size_t precision);
    DigitPoint(unsigned base, std::vector<std::uint8_t> digits);

    unsigned base() const { return base_; }
    std::size_t precision() const { return digits_.size(); }
    std::uint8_t digit(std::size_t i) const { return digits_[i]; }
    std::span<const std::uint8_t> digits() const { return digits_; }
    std::uint8_t* data() { return digits_.data(); }

    double value() const;

    /// Same point with precision grown to `precision` by appending zeros.
    DigitPoint extended(std::size_t precision) const;

    friend bool operator==(const DigitPoint&, const DigitPoint&) = default;

private:
    unsigned base_;
    std::vector<std::uint8_t> digits_;
};

/// First W digits of the finite-expansion base-b representation of x,
/// truncating (toward zero) beyond W. Exact: x is decomposed via its binary
/// mantissa, never via repeated inexact multiplication.
DigitPoint to_digits(double x, unsigned base, std::size_t precision);

/// sum digits[i] * b^-(i+1); correctly rounded (exact whenever the value is
/// representable, in particular always for b = 2 within the digit budget).
double from_digits(const DigitPoint& p);

/// Digitwise addition modulo b (no carries). Base or precision mismatch is an error.
DigitPoint digit_add(const DigitPoint& x, const DigitPoint& y);
/// Digitwise subtraction modulo b.
DigitPoint digit_sub(const DigitPoint& x, const DigitPoint& y);

/// A Walsh-function index: a nonnegative integer read through its base-b
/// digits kappa_a, k = kappa_0 + kappa_1 b + ...
class WalshIndex {
public:
    WalshIndex(std::uint64_t k, unsigned base);

    std::uint64_t value() const { return k_; }
    unsigned base() const { return base_; }
    /// kappa_a
    unsigned digit(unsigned a) const;
    /// Number of base-b digits (0 for k = 0).
    unsigned num_digits() const;

    friend bool operator==(const WalshIndex&, const WalshIndex&) = default;

private:
    std::uint64_t k_;
    unsigned base_;
};

/// Digitwise addition of nonnegative integers modulo b (carry-free).
std::uint64_t digit_add_integer(std::uint64_t k, std::uint64_t l, unsigned base);
std::uint64_t digit_sub_integer(std::uint64_t k, std::uint64_t l, unsigned base);

/// Exponent e in {0..b-1} such that wal_k(x) = omega_b^e with
/// e = x_1 kappa_0 + x_2 kappa_1 + ... (mod b). Requires that every digit k
/// reads exists: k < b^precision(x).
unsigned walsh_exponent(const WalshIndex& k, const DigitPoint& x);

/// omega_b^e as a complex number.
std::complex<double> unit_root_power(unsigned base, unsigned exponent);

/// wal_k(x) as a complex unit.
std::complex<double> walsh(const WalshIndex& k, const DigitPoint& x);

/// Exponent of the multi-dimensional Walsh function prod_j wal_{k_j}(x_j).
unsigned walsh_multi_exponent(std::span<const WalshIndex> k, std::span<const DigitPoint> x);
std::complex<double> walsh_multi(std::span<const WalshIndex> k, std::span<const DigitPoint> x);

/// Walsh analysis on the full base-b grid of b^level cells.
///
/// Input: values[c] associated with the cell [c b^-level, (c+1) b^-level),
/// c in natural order. Output: T[k] = sum_c values[c] * conj(wal_k(c b^-level))
/// for all 0 <= k < b^level. Dividing by b^level gives Walsh coefficients of
/// the piecewise-constant function with those cell values (exact, since wal_k
/// is constant on the cells for k < b^level).
std::vector<std::complex<double>> walsh_sums(std::span<const std::complex<double>> values,
                                             unsigned base, unsigned level);

/// Base-2 specialization (wal_k is +-1, everything stays real).
std::vector<double> walsh_sums_b2(std::vector<double> values, unsigned level);

}  // namespace hsnet
