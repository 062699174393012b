#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rta {

// Arbitrary-precision unsigned integer. Little-endian 64-bit limbs, no
// leading zero limb, empty vector encodes zero. Only what tiling counts
// need: add, multiply-accumulate, compare, decimal/scientific printing.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v) {
        if (v != 0) limbs_.push_back(v);
    }

    bool is_zero() const { return limbs_.empty(); }

    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t as_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

    // Approximate value; saturates to inf far beyond double range.
    double as_double() const;

    BigUint& operator+=(const BigUint& other);

    // *this += a * b. Hot path of the transfer-matrix product: both
    // operands single-limb almost always, so the 128-bit product is added
    // in place without allocating temporaries.
    void add_product(const BigUint& a, const BigUint& b);

    friend BigUint operator+(BigUint a, const BigUint& b) {
        a += b;
        return a;
    }
    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        BigUint r;
        r.add_product(a, b);
        return r;
    }

    friend bool operator==(const BigUint&, const BigUint&) = default;
    std::strong_ordering operator<=>(const BigUint& other) const;

    std::string to_decimal() const;

    // Round to `sig_digits` significant decimal digits (half-up) and format
    // as d.dd...e+k, e.g. 1193600 -> "1.19e+06" with sig_digits = 3.
    std::string to_scientific(int sig_digits) const;

    std::size_t limb_count() const { return limbs_.size(); }

private:
    void trim();
    void add_shifted(std::uint64_t lo, std::uint64_t hi, std::size_t at);

    std::vector<std::uint64_t> limbs_;
};

}  // namespace rta
