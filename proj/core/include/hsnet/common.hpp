#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hsnet {

/// Thrown when an exact computation would exceed its enumeration guard.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline void require_prime_base(unsigned b) {
    if (!is_prime(b))
        throw std::invalid_argument("base must be a prime number, got " + std::to_string(b));
}

/// Largest W such that b^W <= 2^52, i.e. the number of base-b digits that
/// survive a round trip through an IEEE double in [0,1).
inline unsigned digit_budget(unsigned b) {
    unsigned w = 0;
    unsigned long long pw = 1;
    const unsigned long long limit = 1ULL << 52;
    while (pw <= limit / b) {
        pw *= b;
        ++w;
    }
    return w;
}

inline std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

// SplitMix64. The sole pseudorandom primitive used for scrambling keys;
// fully deterministic integer arithmetic, identical on every platform.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_u64(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ (0x9e3779b97f4a7c15ULL + b));
}

/// Compensated accumulator. The estimator means must stay accurate to a few
/// ulps even at N = 2^14, where the d=3 RMSE signal is within two decades of
/// the double-precision noise floor.
class KahanSum {
public:
    void add(double v) {
        double y = v - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

}  // namespace hsnet
