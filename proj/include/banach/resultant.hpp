#pragma once

#include "banach/matrix.hpp"
#include "banach/poly.hpp"

namespace banach {

// The (2n-1) x (2n-1) coefficient matrix of a monic modulus alpha (degree n)
// against beta of formal degree n-1: n-1 rows carry alpha's coefficients
// highest-first, then n rows carry beta's, each shifted one column per row.
// Rejects deg(beta) >= n; callers reduce mod alpha first. For n = 1 the
// matrix is the single entry b_0.
SquareMatrix sylvester_matrix(const MonicPoly& alpha, const Poly& beta);

// Determinant of the matrix above, computed division-free.
Value resultant(const MonicPoly& alpha, const Poly& beta);

// Multiplication-by-beta on the quotient module basis 1, x, ..., x^(n-1).
SquareMatrix multiplication_matrix(const MonicPoly& alpha, const Poly& beta);

// Determinant of the multiplication matrix; a cross-check route for the
// resultant (equal up to a sign depending only on n, established in tests).
Value resultant_via_multiplication_matrix(const MonicPoly& alpha, const Poly& beta);

// The resultant of alpha against c + b_1 x + ... + b_{n-1} x^{n-1} as a monic
// degree-n polynomial in the constant slot c: P(c) = p_0 + ... + p_{n-1} c^{n-1} + c^n.
class ResultantPolynomial {
public:
    ResultantPolynomial(DescriptorPtr desc, std::vector<Value> tail);

    int degree() const { return static_cast<int>(tail_.size()); }
    const DescriptorPtr& descriptor() const { return desc_; }
    std::span<const Value> tail() const { return tail_; }
    Value eval(const Value& c) const;

private:
    DescriptorPtr desc_;
    std::vector<Value> tail_;  // p_0..p_{n-1}; the c^n coefficient is the unit
};

// Extracts P by evaluating the resultant at n+1 scaled roots of unity and
// inverting the node transform exactly (a discrete Fourier inversion, so the
// interpolation is perfectly conditioned).
ResultantPolynomial resultant_poly_in_c(const MonicPoly& alpha, std::span<const Value> b_tail);

// Evaluable polynomial map on the algebra with explicit coefficients.
struct PolyMap {
    std::vector<Value> coeffs;  // low degree first, all coefficients explicit
    Value eval(const Value& c) const;
};

// The maps P^(0), ..., P^(n-1), where
// P^(k)(c) = sum_{j>=k} j!/(j-k)! p_j c^(j-k) with p_n = 1.
std::vector<PolyMap> formal_derivatives(const ResultantPolynomial& p);

}  // namespace banach
