#pragma once

#include <optional>

#include "banach/poly.hpp"

namespace banach {

inline constexpr double kNormParameterFloor = 1.0;
inline constexpr double kNormParameterSafety = 1.25;

// Smallest t >= kNormParameterFloor with t^n >= sum_j ||a_j|| t^j; this is the
// classical sufficient condition for the weighted-coefficient norm on the
// quotient to be submultiplicative.
double minimal_norm_parameter(const MonicPoly& alpha);

// Quotient of base[x] by the monic modulus alpha, normed by
// ||sum b_j X^j|| = sum ||b_j|| t^j on degree-<n representatives. When t is
// absent the minimal admissible value times kNormParameterSafety is used;
// a supplied t is validated against the submultiplicativity condition.
DescriptorPtr make_extension(const DescriptorPtr& base, const MonicPoly& alpha,
                             std::optional<double> t = std::nullopt);

// Left fold of make_extension with auto-selected norm parameters; step i must
// be monic over the extension built from the previous steps.
DescriptorPtr tower(DescriptorPtr base, std::span<const MonicPoly> steps);

int extension_degree(const DescriptorPtr& ah);
double norm_parameter(const DescriptorPtr& ah);
// The modulus alpha reconstructed over the base algebra.
MonicPoly extension_modulus(const DescriptorPtr& ah);

// Isometric embedding of a base element as a degree-0 representative.
Value embed(const Value& base_value, const DescriptorPtr& ah);
// The coset of x, the adjoined root of the modulus.
Value coset_x(const DescriptorPtr& ah);
// Coset of an arbitrary polynomial: reduces mod the modulus first.
Value element_from_poly(const DescriptorPtr& ah, const Poly& p);
// Canonical representative (degree < n) as a polynomial over the base.
Poly representative(const Value& u);

// Linear dimension over the scalars, where finite (points for a finite-space
// base, n times the base dimension for extensions).
long flattened_dimension(const DescriptorPtr& desc);

}  // namespace banach
