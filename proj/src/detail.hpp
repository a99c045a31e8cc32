#pragma once

// Internal cross-module hooks. try_invert dispatches on the descriptor kind;
// the weighted-Laurent and extension cases live with their modules.

#include "banach/algebra.hpp"

namespace banach::detail {

InvertOutcome beurling_try_invert(const Value& x, double tolerance);
InvertOutcome extension_try_invert(const Value& u, double tolerance);

// Product of two canonical representatives reduced mod the extension modulus;
// returns exactly n coefficients over the base.
std::vector<Value> extension_mul_rep(const DescriptorPtr& ah, std::span<const Value> a,
                                     std::span<const Value> b);

}  // namespace banach::detail
