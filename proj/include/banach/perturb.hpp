#pragma once

#include <cstdint>

#include "banach/matrix.hpp"
#include "banach/poly.hpp"
#include "banach/resultant.hpp"
#include "banach/rng.hpp"

namespace banach {

struct PerturbConfig {
    double epsilon = 1e-2;
    int max_samples_per_stage = 200;
    std::uint64_t rng_seed = 0;
    double shrink_factor = 0.5;  // radius decay applied every 25 failed draws
};

// A stage ran out of sample budget: the base algebra may lack dense
// invertibles, or the budget is too small. Reported, never retried silently.
struct StageExhaustedError : std::runtime_error {
    explicit StageExhaustedError(int stage_index)
        : std::runtime_error("perturbation stage " + std::to_string(stage_index) +
                             " exhausted its sample budget"),
          stage(stage_index) {}
    int stage;
};

struct ExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StageRecord {
    int k = 0;  // 1..n; stage n is the final constant-slot draw
    Value chosen;
    int samples_used = 0;
    double displacement = 0.0;
};

struct PerturbTrace {
    std::vector<StageRecord> stages;
    Value final_b0;
    double achieved_distance = 0.0;
    InvertOutcome resultant_certificate;
    int total_samples() const;
};

struct PerturbResult {
    Value element;  // differs from the input only in the degree-0 coefficient
    PerturbTrace trace;
};

// Chain perturbation: walks the formal derivatives of the resultant-in-c
// polynomial from the top down, moving at most epsilon/n per stage, and lands
// on a constant coefficient whose resultant is invertible.
PerturbResult perturb_to_invertible(const Value& u, const PerturbConfig& cfg);

// A fresh sample in the open ball around the center: componentwise disc draws
// for finite-space values, coefficientwise on the support window for weighted
// Laurent values, and coefficient-budgeted recursion for extension elements.
Value sample_in_ball(const Value& center, double radius, Rng& rng);

struct BaseSearchResult {
    Value value;
    int samples_used = 0;
    InvertOutcome certificate;
};

// Randomized search for an invertible element within epsilon of a; the radius
// shrinks geometrically every 25 failures. Throws ExhaustedError when the
// budget runs out (the invertibles may fail to be dense).
BaseSearchResult perturb_in_base(const Value& a, double epsilon, Rng& rng,
                                 int max_samples = 200, double shrink_factor = 0.5);

struct MatrixPerturbResult {
    SquareMatrix matrix;
    Complex shift;  // the single scalar added along the permutation entries
    int samples_used = 0;
    InvertOutcome det_certificate;
};

// Perturbs only the entries (m, sigma(m)) of a square matrix, all by one
// shared scalar of modulus < epsilon / size, until the division-free
// determinant is invertible in the entry algebra. det(B + s P_sigma) is a
// degree-k polynomial in s with unit leading coefficient, so admissible s
// exist on every small circle.
MatrixPerturbResult matrix_perturb(const SquareMatrix& b, double epsilon,
                                   std::span<const int> sigma, Rng& rng,
                                   int max_samples = 200, double shrink_factor = 0.5);

// Invertible base values obtained by perturbing the degree-0 embedding of a
// inside the extension by alpha and applying the resultant; they approach
// a^n as the epsilons shrink.
std::vector<Value> nth_power_approximants(const Value& a, const MonicPoly& alpha,
                                          std::span<const double> epsilons,
                                          std::uint64_t seed,
                                          int max_samples_per_stage = 200);

}  // namespace banach
