#include "rta/cardinality.hpp"

#include <stdexcept>

namespace rta {

TransferMatrix TransferMatrix::identity(int dim) {
    TransferMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = BigUint(1);
    return m;
}

TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("TransferMatrix: dimension mismatch");
    const int n = a.dim_;
    TransferMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const BigUint& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            const BigUint* brow = &b.a_[static_cast<std::size_t>(k) * n];
            BigUint* crow = &c.a_[static_cast<std::size_t>(i) * n];
            for (int j = 0; j < n; ++j) {
                if (!brow[j].is_zero()) crow[j].add_product(aik, brow[j]);
            }
        }
    }
    return c;
}

TransferMatrix TransferMatrix::power(const TransferMatrix& a, std::uint64_t e) {
    TransferMatrix result = identity(a.dim());
    TransferMatrix base = a;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

namespace {

struct Blocks {
    TransferMatrix g, s, h;
};

// One recursion level: assemble the 2d x 2d matrices from the d x d ones.
Blocks lift(const Blocks& prev) {
    const int d = prev.g.dim();
    const int n = 2 * d;
    Blocks out{TransferMatrix(n), TransferMatrix(n), TransferMatrix(n)};
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const BigUint& g = prev.g.at(i, j);
            const BigUint& s = prev.s.at(i, j);
            const BigUint& h = prev.h.at(i, j);
            out.g.at(i, j) = s;
            out.g.at(i, j + d) = h;
            out.g.at(i + d, j) = g;
            out.g.at(i + d, j + d) = s;
            out.s.at(i, j + d) = g;
            out.h.at(i, j) = g;
            out.h.at(i + d, j + d) = g;
            out.h.at(i, j + d) = s + s;
        }
    }
    return out;
}

}  // namespace

TransferMatrix build_transfer_matrix(int mhat) {
    if (mhat < 1 || mhat > 20) throw std::invalid_argument("build_transfer_matrix: mhat must be in [1, 20]");
    Blocks b{TransferMatrix(1), TransferMatrix(1), TransferMatrix(1)};
    b.g.at(0, 0) = BigUint(1);
    for (int level = 0; level < mhat; ++level) b = lift(b);
    return b.g;
}

BigUint count_tilings_formula(int mhat, int nhat) {
    if (nhat < 1) throw std::invalid_argument("count_tilings_formula: nhat must be >= 1");
    TransferMatrix g = build_transfer_matrix(mhat);
    TransferMatrix p = TransferMatrix::power(g, static_cast<std::uint64_t>(nhat) - 1);
    return p.at(0, p.dim() - 1);
}

}  // namespace rta
