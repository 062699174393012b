#include "rta/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace rta {

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

double BigUint::as_double() const {
    double v = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 0x1.0p64 + static_cast<double>(limbs_[i]);
    return v;
}

BigUint& BigUint::operator+=(const BigUint& other) {
    if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 s = carry + limbs_[i];
        if (i < other.limbs_.size()) s += other.limbs_[i];
        limbs_[i] = static_cast<std::uint64_t>(s);
        carry = s >> 64;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
    return *this;
}

void BigUint::add_shifted(std::uint64_t lo, std::uint64_t hi, std::size_t at) {
    if (lo == 0 && hi == 0) return;
    if (limbs_.size() < at + 2) limbs_.resize(at + 2, 0);
    unsigned __int128 s = static_cast<unsigned __int128>(limbs_[at]) + lo;
    limbs_[at] = static_cast<std::uint64_t>(s);
    std::uint64_t carry = static_cast<std::uint64_t>(s >> 64);
    std::size_t i = at + 1;
    unsigned __int128 s2 = static_cast<unsigned __int128>(limbs_[i]) + hi + carry;
    limbs_[i] = static_cast<std::uint64_t>(s2);
    carry = static_cast<std::uint64_t>(s2 >> 64);
    while (carry != 0) {
        ++i;
        if (i == limbs_.size()) {
            limbs_.push_back(carry);
            break;
        }
        unsigned __int128 s3 = static_cast<unsigned __int128>(limbs_[i]) + carry;
        limbs_[i] = static_cast<std::uint64_t>(s3);
        carry = static_cast<std::uint64_t>(s3 >> 64);
    }
    trim();
}

void BigUint::add_product(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (a.limbs_.size() == 1 && b.limbs_.size() == 1) {
        unsigned __int128 p = static_cast<unsigned __int128>(a.limbs_[0]) * b.limbs_[0];
        add_shifted(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(p >> 64), 0);
        return;
    }
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        if (a.limbs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            if (b.limbs_[j] == 0) continue;
            unsigned __int128 p = static_cast<unsigned __int128>(a.limbs_[i]) * b.limbs_[j];
            add_shifted(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(p >> 64), i + j);
        }
    }
}

std::strong_ordering BigUint::operator<=>(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size()) return limbs_.size() <=> other.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] <=> other.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::string BigUint::to_decimal() const {
    if (is_zero()) return "0";
    // Repeated division by 10^19 (largest power of ten in a u64).
    constexpr std::uint64_t kChunk = 10000000000000000000ull;
    std::vector<std::uint64_t> work = limbs_;
    std::string out;
    while (!work.empty()) {
        unsigned __int128 rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | work[i];
            work[i] = static_cast<std::uint64_t>(cur / kChunk);
            rem = cur % kChunk;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        std::uint64_t digits = static_cast<std::uint64_t>(rem);
        for (int d = 0; d < 19; ++d) {
            out.push_back(static_cast<char>('0' + digits % 10));
            digits /= 10;
            if (work.empty() && digits == 0) break;
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string BigUint::to_scientific(int sig_digits) const {
    if (sig_digits < 1) throw std::invalid_argument("to_scientific: sig_digits must be >= 1");
    std::string dec = to_decimal();
    if (dec == "0") return "0";
    int exponent = static_cast<int>(dec.size()) - 1;
    std::string digits = dec.substr(0, static_cast<std::size_t>(sig_digits) + 1);
    while (static_cast<int>(digits.size()) < sig_digits + 1) digits.push_back('0');
    // Half-up rounding on the digit after the kept ones.
    bool round_up = digits.back() >= '5';
    digits.pop_back();
    if (round_up) {
        int i = static_cast<int>(digits.size()) - 1;
        while (i >= 0) {
            if (digits[i] != '9') {
                ++digits[i];
                break;
            }
            digits[i] = '0';
            --i;
        }
        if (i < 0) {
            digits.insert(digits.begin(), '1');
            digits.pop_back();
            ++exponent;
        }
    }
    std::string out;
    out.push_back(digits[0]);
    if (sig_digits > 1) {
        out.push_back('.');
        out.append(digits.begin() + 1, digits.end());
    }
    char buf[16];
    std::snprintf(buf, sizeof(buf), "e+%02d", exponent);
    out += buf;
    return out;
}

}  // namespace rta
