#include "banach/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace banach {

SquareMatrix::SquareMatrix(DescriptorPtr entry_desc, int size)
    : desc_(std::move(entry_desc)), size_(size) {
    if (size_ < 1) throw std::invalid_argument("matrix size must be positive");
    entries_.assign(static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_), zero(desc_));
}

SquareMatrix SquareMatrix::identity(DescriptorPtr entry_desc, int size) {
    SquareMatrix m(std::move(entry_desc), size);
    for (int i = 0; i < size; ++i) m.set(i, i, one(m.entry_descriptor()));
    return m;
}

std::size_t SquareMatrix::index(int r, int c) const {
    if (r < 0 || r >= size_ || c < 0 || c >= size_) throw std::out_of_range("matrix index");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(c);
}

void SquareMatrix::set(int r, int c, Value v) {
    require_same_descriptor(v.descriptor(), desc_, "SquareMatrix::set");
    entries_[index(r, c)] = std::move(v);
}

std::vector<Value> berkowitz_charpoly(const SquareMatrix& m) {
    const int k = m.size();
    const DescriptorPtr& d = m.entry_descriptor();

    // charpoly of the leading principal 1x1 block.
    std::vector<Value> c = {one(d), neg(m.at(0, 0))};

    for (int r = 2; r <= k; ++r) {
        // Principal block M_{r-1}, border row R = M[r-1][0..r-2],
        // border column S = M[0..r-2][r-1], corner a = M[r-1][r-1].
        // Toeplitz column: t_0 = 1, t_1 = -a, t_j = -R M_{r-1}^{j-2} S.
        std::vector<Value> t(static_cast<std::size_t>(r) + 1, zero(d));
        t[0] = one(d);
        t[1] = neg(m.at(r - 1, r - 1));
        std::vector<Value> v(static_cast<std::size_t>(r - 1), zero(d));
        for (int i = 0; i < r - 1; ++i) v[static_cast<std::size_t>(i)] = m.at(i, r - 1);
        for (int j = 2; j <= r; ++j) {
            Value dot = zero(d);
            for (int i = 0; i < r - 1; ++i) {
                dot = add(dot, mul(m.at(r - 1, i), v[static_cast<std::size_t>(i)]));
            }
            t[static_cast<std::size_t>(j)] = neg(dot);
            if (j < r) {
                std::vector<Value> nv(static_cast<std::size_t>(r - 1), zero(d));
                for (int i = 0; i < r - 1; ++i) {
                    Value acc = zero(d);
                    for (int l = 0; l < r - 1; ++l) {
                        acc = add(acc, mul(m.at(i, l), v[static_cast<std::size_t>(l)]));
                    }
                    nv[static_cast<std::size_t>(i)] = std::move(acc);
                }
                v = std::move(nv);
            }
        }
        // c_new = T_r * c (lower-triangular Toeplitz product).
        std::vector<Value> cn(static_cast<std::size_t>(r) + 1, zero(d));
        for (int i = 0; i <= r; ++i) {
            const int jlo = std::max(0, i - (r - 1));
            for (int j = jlo; j <= i && j <= r; ++j) {
                cn[static_cast<std::size_t>(i)] =
                    add(cn[static_cast<std::size_t>(i)],
                        mul(t[static_cast<std::size_t>(j)], c[static_cast<std::size_t>(i - j)]));
            }
        }
        c = std::move(cn);
    }
    return c;
}

Value berkowitz_det(const SquareMatrix& m) {
    // det(lambda*I - M) at lambda = 0 is (-1)^k det(M).
    const std::vector<Value> c = berkowitz_charpoly(m);
    Value tail = c.back();
    return (m.size() % 2 == 0) ? tail : neg(tail);
}

AdjugateSolve adjugate_solve_e0(const SquareMatrix& m) {
    const int k = m.size();
    const DescriptorPtr& d = m.entry_descriptor();
    const std::vector<Value> c = berkowitz_charpoly(m);

    // Horner on q(M) e0 with q(x) = sum_{j<k} c_j x^{k-1-j}; Cayley-Hamilton
    // gives M q(M) = -c_k I.
    std::vector<Value> w(static_cast<std::size_t>(k), zero(d));
    w[0] = c[0];  // c_0 = 1
    for (int j = 1; j < k; ++j) {
        std::vector<Value> mw(static_cast<std::size_t>(k), zero(d));
        for (int i = 0; i < k; ++i) {
            Value acc = zero(d);
            for (int l = 0; l < k; ++l) acc = add(acc, mul(m.at(i, l), w[static_cast<std::size_t>(l)]));
            mw[static_cast<std::size_t>(i)] = std::move(acc);
        }
        w = std::move(mw);
        w[0] = add(w[0], c[static_cast<std::size_t>(j)]);
    }
    return {std::move(w), neg(c.back())};
}

}  // namespace banach
