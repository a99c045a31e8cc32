#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace banach {

// Batch experiment runner. Kinds:
//   resultant-oracle   determinant route vs product over numerically computed
//                      roots, scalar algebra
//   ah-invert-oracle   extension invertibility verdict vs the coordinatewise
//                      scalar criterion (half the instances have a planted
//                      common root)
//   thm21-density      chain perturbation success statistics
//   prop24-powers      power approximants and their log-log convergence slope
//   matrix-remark      permutation-entry perturbation of singular matrices
//   beurling-dichotomy invertible-density probes (degenerate annulus) or
//                      winding-stability probes (fat annulus)
//   disc-closure       zero-set closure verdicts for scalar polynomials
//   example-1-2        non-fullness witness on sampled circle rationals
struct ExperimentConfig {
    std::string kind;
    std::uint64_t seed = 0;
    int trials = 0;                 // 0 selects the kind's default
    std::vector<double> epsilons;   // empty selects the kind's default
    std::string out_prefix = "experiment";
    nlohmann::json algebra;         // optional descriptor JSON
    nlohmann::json extra;           // kind-specific settings
    nlohmann::json thresholds;      // overrides for the kind's pass criteria

    static ExperimentConfig from_json(const nlohmann::json& j);
};

struct TrialRow {
    long trial = 0;
    std::uint64_t seed = 0;
    double epsilon = 0.0;
    bool success = false;
    double achieved_distance = 0.0;
    long stage_samples_total = 0;
    double certificate_residual = 0.0;
};

struct ExperimentReport {
    std::vector<TrialRow> rows;
    nlohmann::json summary;
    bool thresholds_met = false;
    std::string csv_path;
    std::string json_path;
};

// Deterministic given the config; writes <out_prefix>.csv and
// <out_prefix>.json (also on threshold failure).
ExperimentReport run_experiment(const ExperimentConfig& cfg);

}  // namespace banach
