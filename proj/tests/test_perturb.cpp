#include <doctest.h>

#include <cmath>

#include "banach/arens_hoffman.hpp"
#include "banach/beurling.hpp"
#include "banach/perturb.hpp"
#include "helpers.hpp"

using namespace banach;
using testutil::fv;
using testutil::scalar;

namespace {

const DescriptorPtr c1 = Descriptor::finite_space(1);
const DescriptorPtr c2 = Descriptor::finite_space(2);
const DescriptorPtr c3 = Descriptor::finite_space(3);

MonicPoly sqrt_modulus(const DescriptorPtr& d, const Value& a0) {
    return MonicPoly::from_tail(d, {neg(a0), zero(d)});
}

void check_success_contract(const Value& u, const PerturbResult& r, double epsilon) {
    CHECK(r.trace.achieved_distance < epsilon);
    CHECK(distance(r.element, u) == r.trace.achieved_distance);
    // Only the degree-0 coefficient moved.
    for (std::size_t j = 1; j < u.rep().size(); ++j) {
        CHECK(exactly_equal(u.rep()[j], r.element.rep()[j]));
    }
    CHECK(exactly_equal(r.element.rep()[0], r.trace.final_b0));
    // Certified resultant, recomputed from scratch.
    const MonicPoly alpha = extension_modulus(u.descriptor());
    CHECK(try_invert(resultant(alpha, representative(r.element))).ok());
    CHECK(r.trace.resultant_certificate.ok());
    // Stage budget: each displacement under epsilon/n.
    const double step = epsilon / static_cast<double>(alpha.degree());
    for (const auto& s : r.trace.stages) CHECK(s.displacement < step);
}

}  // namespace

TEST_CASE("perturbing the zero element of a square-power extension") {
    const DescriptorPtr ext = make_extension(c1, MonicPoly::power(c1, 2));
    const Value u = zero(ext);
    PerturbConfig cfg;
    cfg.epsilon = 0.1;
    cfg.rng_seed = 421;
    const PerturbResult r = perturb_to_invertible(u, cfg);
    check_success_contract(u, r, cfg.epsilon);
    // The chosen constant is nonzero and small; its square is the resultant.
    const Complex c = r.trace.final_b0.finite_data()[0];
    CHECK(std::abs(c) > 0.0);
    CHECK(std::abs(c) < 0.1);
}

TEST_CASE("already invertible elements stay within budget") {
    const DescriptorPtr ext = make_extension(c1, sqrt_modulus(c1, scalar(c1, {1.0, 0.0})));
    const Value u = embed(scalar(c1, {5.0, 0.0}), ext);  // resultant 25
    PerturbConfig cfg;
    cfg.epsilon = 1e-3;
    cfg.rng_seed = 7;
    const PerturbResult r = perturb_to_invertible(u, cfg);
    check_success_contract(u, r, cfg.epsilon);
}

TEST_CASE("planted non-invertible element over C^2") {
    const Value a0 = fv(c2, {{1, 0}, {1, 0}});
    const DescriptorPtr ext = make_extension(c2, sqrt_modulus(c2, a0));
    const Value u = add(one(ext), coset_x(ext));  // resultant (0,0)
    REQUIRE_FALSE(try_invert(u).ok());

    PerturbConfig cfg;
    cfg.epsilon = 0.05;
    cfg.rng_seed = 99;
    const PerturbResult r = perturb_to_invertible(u, cfg);
    check_success_contract(u, r, cfg.epsilon);
    for (Complex c : r.trace.final_b0.finite_data()) {
        CHECK(std::abs(c - Complex(1.0, 0.0)) < cfg.epsilon);
        CHECK(std::abs(c * c - Complex(1.0, 0.0)) > 0.0);
    }
}

TEST_CASE("degree-1 extensions degenerate to a single stage") {
    const DescriptorPtr ext = make_extension(c1, MonicPoly::from_tail(c1, {scalar(c1, {2.0, 0.0})}));
    const Value u = zero(ext);
    PerturbConfig cfg;
    cfg.epsilon = 0.01;
    cfg.rng_seed = 3;
    const PerturbResult r = perturb_to_invertible(u, cfg);
    CHECK(r.trace.stages.size() == 1);
    check_success_contract(u, r, cfg.epsilon);
}

TEST_CASE("seeded success rate over random small extensions") {
    Rng rng(20240);
    int successes = 0;
    const int trials = 200;
    for (int trial = 0; trial < trials; ++trial) {
        const int m = rng.uniform_int(1, 3);
        const int n = rng.uniform_int(1, 4);
        const DescriptorPtr d = Descriptor::finite_space(m);
        const DescriptorPtr ext = make_extension(d, testutil::random_monic(d, n, rng, 1.5));
        std::vector<Value> rep;
        for (int j = 0; j < n; ++j) rep.push_back(testutil::random_finite(d, rng, 1.5));
        const Value u = Value::extension(ext, std::move(rep));
        PerturbConfig cfg;
        cfg.epsilon = 1e-2;
        cfg.rng_seed = rng.next_u64();
        try {
            const PerturbResult r = perturb_to_invertible(u, cfg);
            check_success_contract(u, r, cfg.epsilon);
            ++successes;
        } catch (const StageExhaustedError&) {
        }
    }
    CHECK(successes == trials);
}

TEST_CASE("invalid perturbation configs are rejected") {
    const DescriptorPtr ext = make_extension(c1, MonicPoly::power(c1, 2));
    PerturbConfig bad;
    bad.epsilon = 0.0;
    CHECK_THROWS_AS(perturb_to_invertible(zero(ext), bad), std::invalid_argument);
    bad.epsilon = 0.1;
    bad.max_samples_per_stage = 0;
    CHECK_THROWS_AS(perturb_to_invertible(zero(ext), bad), std::invalid_argument);
    Rng rng(1);
    CHECK_THROWS_AS(perturb_in_base(one(c1), -1.0, rng), std::invalid_argument);
}

TEST_CASE("base perturbation examples") {
    Rng rng(5);
    // Scalar zero moves to a small invertible value.
    const BaseSearchResult r1 = perturb_in_base(zero(c1), 0.1, rng);
    CHECK(std::abs(r1.value.finite_data()[0]) > 0.0);
    CHECK(std::abs(r1.value.finite_data()[0]) < 0.1);

    // A zero slot must become nonzero; distance stays under budget.
    const Value a = fv(c3, {{1, 0}, {0, 0}, {2, 0}});
    const BaseSearchResult r2 = perturb_in_base(a, 0.05, rng);
    CHECK(distance(a, r2.value) < 0.05);
    CHECK(try_invert(r2.value).ok());
    CHECK(std::abs(r2.value.finite_data()[1]) > 0.0);

    // Flat-weight Laurent element with a circle root: the root moves off.
    const DescriptorPtr l1 = Descriptor::beurling(WeightSequence::constant());
    const Value x = sub(unit_delta(l1, 1), one(l1));
    const BaseSearchResult r3 = perturb_in_base(x, 0.1, rng);
    CHECK(distance(x, r3.value) < 0.1);
    CHECK(try_invert(r3.value).ok());
}

TEST_CASE("base perturbation surfaces exhaustion on an obstructed element") {
    const DescriptorPtr d = Descriptor::beurling(WeightSequence::one_sided(2.0));
    const Value x = sub(unit_delta(d, 1), unit_delta(d, 0, {1.5, 0.0}));
    Rng rng(8);
    CHECK_THROWS_AS(perturb_in_base(x, 0.01, rng, 60), ExhaustedError);

    // The same obstruction propagates through a degree-1 extension as a
    // stage failure.
    const DescriptorPtr ext = make_extension(d, MonicPoly::from_tail(d, {one(d)}));
    PerturbConfig cfg;
    cfg.epsilon = 0.01;
    cfg.max_samples_per_stage = 60;
    cfg.rng_seed = 17;
    const Value u = embed(x, ext);  // constant slot carries the obstruction
    CHECK_THROWS_AS(perturb_to_invertible(u, cfg), StageExhaustedError);
}

TEST_CASE("perturbation over a tower base") {
    // Base adjoining sqrt(2) to the scalars; the sampler recurses through the
    // extension coefficients when drawing in the ball.
    const DescriptorPtr lvl1 =
        make_extension(c1, MonicPoly::from_tail(c1, {scalar(c1, {-2.0, 0.0}), zero(c1)}));
    const DescriptorPtr lvl2 = make_extension(lvl1, sqrt_modulus(lvl1, coset_x(lvl1)));

    Rng rng(2025);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Value> rep;
        for (int j = 0; j < 2; ++j) {
            rep.push_back(Value::extension(
                lvl1, {testutil::random_finite(c1, rng), testutil::random_finite(c1, rng)}));
        }
        const Value u = Value::extension(lvl2, std::move(rep));
        PerturbConfig cfg;
        cfg.epsilon = 0.05;
        cfg.rng_seed = rng.next_u64();
        const PerturbResult r = perturb_to_invertible(u, cfg);
        check_success_contract(u, r, cfg.epsilon);
    }
}

TEST_CASE("matrix perturbation examples") {
    Rng rng(12);

    // Zero matrix with the identity permutation: s*I works for any s != 0.
    SquareMatrix z(c1, 2);
    const std::vector<int> id2 = {0, 1};
    const MatrixPerturbResult r1 = matrix_perturb(z, 0.1, id2, rng);
    CHECK(r1.det_certificate.ok());
    CHECK(std::abs(r1.shift) <= 0.05);

    // Rank-one: det(B + sI) = (1+s)s.
    SquareMatrix b(c1, 2);
    b.set(0, 0, one(c1));
    const MatrixPerturbResult r2 = matrix_perturb(b, 0.1, id2, rng);
    CHECK(r2.det_certificate.ok());
    CHECK(exactly_equal(r2.matrix.at(0, 1), zero(c1)));
    CHECK(exactly_equal(r2.matrix.at(1, 0), zero(c1)));

    // Componentwise over C^2 with planted singular coordinates.
    SquareMatrix m(c2, 2);
    m.set(0, 0, fv(c2, {{1, 0}, {0, 0}}));
    m.set(1, 1, fv(c2, {{0, 0}, {0, 1}}));
    const MatrixPerturbResult r3 = matrix_perturb(m, 0.2, id2, rng);
    CHECK(r3.det_certificate.ok());
    CHECK(std::abs(r3.shift) <= 0.1);

    const std::vector<int> not_perm = {0, 0};
    CHECK_THROWS(matrix_perturb(z, 0.1, not_perm, rng));
}

TEST_CASE("matrix perturbation leaves off-permutation entries bitwise intact") {
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = 3;
        SquareMatrix b(c2, k);
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < k; ++c) b.set(r, c, testutil::random_finite(c2, rng));
        }
        // Make it singular: last row = sum of the others.
        for (int c = 0; c < k; ++c) b.set(k - 1, c, add(b.at(0, c), b.at(1, c)));
        std::vector<int> sigma = {1, 2, 0};
        const double eps = 0.05;
        const MatrixPerturbResult r = matrix_perturb(b, eps, sigma, rng);
        CHECK(r.det_certificate.ok());
        CHECK(std::abs(r.shift) <= eps / k);
        for (int rr = 0; rr < k; ++rr) {
            for (int cc = 0; cc < k; ++cc) {
                if (cc == sigma[static_cast<std::size_t>(rr)]) {
                    CHECK(distance(r.matrix.at(rr, cc), b.at(rr, cc)) == doctest::Approx(std::abs(r.shift)));
                } else {
                    CHECK(exactly_equal(r.matrix.at(rr, cc), b.at(rr, cc)));
                }
            }
        }
    }
}

TEST_CASE("power approximants converge to the power") {
    std::vector<double> eps;
    for (int k = 3; k <= 10; ++k) eps.push_back(std::pow(2.0, -k));

    const Value a = scalar(c1, {2.0, 0.0});
    const MonicPoly alpha = MonicPoly::power(c1, 2);
    const auto approx = nth_power_approximants(a, alpha, eps, 31337);
    REQUIRE(approx.size() == eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) {
        CHECK(try_invert(approx[i]).ok());
        const double dist = std::abs(approx[i].finite_data()[0] - Complex(4.0, 0.0));
        CHECK(dist > 0.0);
        CHECK(dist < 16.0 * eps[i]);
    }

    // Zero base point: approximants tend to zero like eps^n.
    const auto around_zero = nth_power_approximants(zero(c1), alpha, eps, 8);
    for (std::size_t i = 0; i < eps.size(); ++i) {
        CHECK(std::abs(around_zero[i].finite_data()[0]) < eps[i] * eps[i]);
        CHECK(try_invert(around_zero[i]).ok());
    }
}
