#pragma once

#include <optional>
#include <utility>

#include "banach/algebra.hpp"

namespace banach {

// Polynomial over a coefficient algebra, low degree first. Trailing exact-zero
// coefficients are trimmed, so the zero polynomial stores no coefficients and
// reports no degree.
class Poly {
public:
    Poly(DescriptorPtr desc, std::vector<Value> coeffs);
    static Poly zero(DescriptorPtr desc);
    static Poly constant(Value c);
    static Poly monomial(Value c, int degree);

    const DescriptorPtr& descriptor() const { return desc_; }
    std::optional<int> degree() const;
    // Coefficient of x^j; zero beyond the stored degree.
    Value coeff(int j) const;
    std::span<const Value> coeffs() const { return coeffs_; }

    Value eval(const Value& at) const;  // Horner
    Poly scaled(Complex lambda) const;

private:
    DescriptorPtr desc_;
    std::vector<Value> coeffs_;
};

Poly add(const Poly& f, const Poly& g);
Poly sub(const Poly& f, const Poly& g);
Poly mul(const Poly& f, const Poly& g);
bool exactly_equal(const Poly& f, const Poly& g);

// Monic polynomial of degree n >= 1; the leading coefficient must equal the
// algebra unit exactly.
class MonicPoly {
public:
    explicit MonicPoly(Poly p);
    // x^n + tail, where tail holds a_0..a_{n-1} (short tails are zero-padded).
    static MonicPoly from_tail(DescriptorPtr desc, std::vector<Value> tail, int degree_n = -1);
    // x^n.
    static MonicPoly power(DescriptorPtr desc, int n);

    int degree() const { return degree_; }
    const DescriptorPtr& descriptor() const { return poly_.descriptor(); }
    const Poly& poly() const { return poly_; }
    // a_0..a_{n-1}.
    std::span<const Value> tail() const { return poly_.coeffs().subspan(0, static_cast<std::size_t>(degree_)); }

private:
    Poly poly_;
    int degree_;
};

// f = quotient * alpha + remainder with deg(remainder) < deg(alpha); the long
// division uses no divisions in the algebra because alpha is monic.
std::pair<Poly, Poly> divide_by_monic(const Poly& f, const MonicPoly& alpha);

}  // namespace banach
