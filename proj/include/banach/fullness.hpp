#pragma once

#include "banach/algebra.hpp"

namespace banach {

enum class FullnessKind {
    full_consistent,         // ambient inverse is representable in the sampled span
    non_fullness_witness,    // invertible upstairs, inverse missing from the sample
    ambient_not_invertible,  // no fullness information from this element
};

struct FullnessVerdict {
    FullnessKind kind = FullnessKind::ambient_not_invertible;
    double span_residual = 0.0;  // algebra-norm distance from the inverse to the sampled span
    std::optional<Value> ambient_inverse;
};

// Refutation-style fullness probe: inverts x in the ambient algebra and
// least-squares fits the inverse against the sampled subalgebra elements.
// A residual above the tolerance witnesses that the sample does not contain
// the inverse (and so cannot demonstrate fullness).
FullnessVerdict is_full_subalgebra_witness(std::span<const Value> sub_sample, const Value& x,
                                           double tolerance = 1e-6);

}  // namespace banach
