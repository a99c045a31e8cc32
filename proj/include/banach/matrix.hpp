#pragma once

#include "banach/algebra.hpp"

namespace banach {

// Dense square matrix with entries in a commutative algebra.
class SquareMatrix {
public:
    SquareMatrix(DescriptorPtr entry_desc, int size);
    static SquareMatrix identity(DescriptorPtr entry_desc, int size);

    int size() const { return size_; }
    const DescriptorPtr& entry_descriptor() const { return desc_; }
    const Value& at(int r, int c) const { return entries_[index(r, c)]; }
    void set(int r, int c, Value v);

private:
    std::size_t index(int r, int c) const;

    DescriptorPtr desc_;
    int size_;
    std::vector<Value> entries_;
};

// Coefficients c_0..c_k of det(lambda*I - M) (c_0 = 1), computed by the
// Samuelson-Berkowitz recursion: only ring additions and multiplications,
// O(k^4) of them, so it is sound over algebras with zero divisors.
std::vector<Value> berkowitz_charpoly(const SquareMatrix& m);

Value berkowitz_det(const SquareMatrix& m);

// Division-free adjugate action on the first basis vector: numerator and
// scale with M * numerator == scale * e0 (Cayley-Hamilton), where
// scale = -c_k is a unit multiple of det(M). If scale is invertible in the
// entry algebra, numerator / scale solves M y = e0.
struct AdjugateSolve {
    std::vector<Value> numerator;
    Value scale;
};
AdjugateSolve adjugate_solve_e0(const SquareMatrix& m);

}  // namespace banach
