#pragma once

#include <nlohmann/json_fwd.hpp>

#include "banach/algebra.hpp"
#include "banach/perturb.hpp"

// JSON schemas used by the command-line tools.
//
// descriptor:
//   {"kind": "finite-space", "points": N}
//   {"kind": "beurling", "weight": <weight>}
//   {"kind": "matrix-over", "base": <descriptor>, "size": K}
//   {"kind": "arens-hoffman-over", "base": <descriptor>,
//    "alpha": [<value>...], "t": number|null}
//     alpha lists all n+1 coefficients low degree first; the last must be the
//     unit. t = null selects the minimal admissible norm parameter.
//
// weight:
//   {"kind": "constant"}
//   {"kind": "geometric", "r": number}
//   {"kind": "one_sided", "r": number}
//   {"kind": "table", "window": {"lo": int, "values": [..]},
//    "extension": "geometric", "r_pos": number, "r_neg": number}
//
// value (shape depends on the descriptor):
//   finite-space:      [[re, im], ...]          one pair per coordinate
//   beurling:          {"lo": int, "coeffs": [[re, im], ...]}
//   arens-hoffman:     {"rep": [<base value>, ...]}   up to n entries

namespace banach {

nlohmann::json weight_to_json(const WeightSequence& w);
WeightSequence weight_from_json(const nlohmann::json& j);

nlohmann::json descriptor_to_json(const DescriptorPtr& d);
DescriptorPtr descriptor_from_json(const nlohmann::json& j);

nlohmann::json value_to_json(const Value& v);
Value value_from_json(const DescriptorPtr& desc, const nlohmann::json& j);

nlohmann::json trace_to_json(const PerturbTrace& trace);

}  // namespace banach
