#pragma once

#include <cstdint>
#include <vector>

#include "rta/bigint.hpp"

namespace rta {

// Dense square matrix of exact non-negative integers, dimension a power
// of two. Backs the transfer-matrix count of order-R L-tromino tilings.
class TransferMatrix {
public:
    explicit TransferMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}

    int dim() const { return dim_; }

    BigUint& at(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const BigUint& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

    static TransferMatrix identity(int dim);

    friend TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b);

    // a^e by binary exponentiation.
    static TransferMatrix power(const TransferMatrix& a, std::uint64_t e);

    friend bool operator==(const TransferMatrix&, const TransferMatrix&) = default;

private:
    int dim_;
    std::vector<BigUint> a_;
};

// Recursive block construction of the row-profile transfer matrix
// G_mhat (dimension 2^mhat), together with its companions S and H:
//   G_m = [S_{m-1}  H_{m-1}]    S_m = [Z  G_{m-1}]   H_m = [G_{m-1}  2*S_{m-1}]
//         [G_{m-1}  S_{m-1}]          [Z  Z      ]         [Z        G_{m-1} ]
// with scalar bases G_0 = 1, S_0 = 0, H_0 = 0.
// Valid for 1 <= mhat <= 20 (size guard); throws std::invalid_argument outside.
TransferMatrix build_transfer_matrix(int mhat);

// Number of exact tilings of an mhat x nhat rectangle by unit L-trominoes
// (equivalently, of (mhat*l) x (nhat*l) by order-R trominoes of side l):
// entry (1, 2^mhat) of G_mhat^(nhat-1), exact integer arithmetic.
BigUint count_tilings_formula(int mhat, int nhat);

}  // namespace rta
