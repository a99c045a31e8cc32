#include <doctest.h>

#include <cmath>

#include "banach/beurling.hpp"
#include "banach/perturb.hpp"
#include "banach/rng.hpp"
#include "helpers.hpp"

using namespace banach;

namespace {

const DescriptorPtr l1_flat = Descriptor::beurling(WeightSequence::constant());
const DescriptorPtr l1_fat = Descriptor::beurling(WeightSequence::one_sided(2.0));

}  // namespace

TEST_CASE("weight radii in closed form") {
    CHECK(WeightSequence::constant().radii() == AnnulusSpectrum{1.0, 1.0});
    CHECK(WeightSequence::geometric(2.0).radii() == AnnulusSpectrum{0.5, 2.0});
    CHECK(WeightSequence::one_sided(2.0).radii() == AnnulusSpectrum{1.0, 2.0});

    const WeightSequence table = WeightSequence::table(-1, {2.0, 1.0, 2.0}, 2.0, 2.0);
    CHECK(table.radii() == AnnulusSpectrum{0.5, 2.0});
    CHECK(table.at(0) == 1.0);
    CHECK(table.at(2) == doctest::Approx(4.0));
    CHECK(table.at(-2) == doctest::Approx(4.0));
}

TEST_CASE("invalid weights are rejected") {
    CHECK_THROWS(WeightSequence::geometric(0.5));
    CHECK_THROWS(WeightSequence::one_sided(0.9));
    // w(0) != 1.
    CHECK_THROWS(WeightSequence::table(0, {2.0}, 2.0, 2.0));
    // Dip below 1 in the middle breaks submultiplicativity against the tails.
    CHECK_THROWS(WeightSequence::table(-1, {1.0, 1.0, 0.2}, 2.0, 2.0));
}

TEST_CASE("gelfand roots and the invertibility verdict") {
    const Value d1 = unit_delta(l1_flat, 1);
    CHECK(gelfand_roots(d1).empty());
    CHECK(try_invert(d1).ok());

    const Value x = sub(unit_delta(l1_flat, 1), one(l1_flat));
    const auto roots = gelfand_roots(x);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0].location - Complex(1.0, 0.0)) < 1e-12);

    // Root at 1.5 sits inside the fat annulus [1, 2].
    const Value y = sub(unit_delta(l1_fat, 1), unit_delta(l1_fat, 0, {1.5, 0.0}));
    const auto yroots = gelfand_roots(y);
    REQUIRE(yroots.size() == 1);
    CHECK(yroots[0].modulus == doctest::Approx(1.5));
    CHECK_FALSE(try_invert(y).ok());

    CHECK_THROWS(gelfand_roots(zero(l1_flat)));
}

TEST_CASE("winding pairs by root counting") {
    const AnnulusSpectrum fat{1.0, 2.0};
    for (long k = -5; k <= 5; ++k) {
        const WindingPair w = winding_pair(unit_delta(l1_fat, k), fat);
        CHECK(w.inner == k);
        CHECK(w.outer == k);
    }

    const Value gap = sub(unit_delta(l1_fat, 1), unit_delta(l1_fat, 0, {1.5, 0.0}));
    CHECK(winding_pair(gap, fat) == WindingPair{0, 1});

    const Value outside = sub(unit_delta(l1_fat, 1), unit_delta(l1_fat, 0, {3.0, 0.0}));
    CHECK(winding_pair(outside, fat) == WindingPair{0, 0});

    // A boundary zero leaves the winding undefined.
    const Value on_circle = sub(unit_delta(l1_flat, 1), one(l1_flat));
    CHECK_THROWS_AS(winding_pair(on_circle, AnnulusSpectrum{1.0, 1.0}), BoundaryVanishError);
}

TEST_CASE("winding numbers add under multiplication") {
    Rng rng(61);
    const AnnulusSpectrum fat{1.0, 2.0};
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        const Value x = testutil::random_laurent(l1_fat, rng, 3);
        const Value y = testutil::random_laurent(l1_fat, rng, 3);
        if (x.is_zero() || y.is_zero()) continue;
        WindingPair wx, wy, wxy;
        try {
            wx = winding_pair(x, fat);
            wy = winding_pair(y, fat);
            wxy = winding_pair(mul(x, y), fat);
        } catch (const BoundaryVanishError&) {
            continue;
        }
        ++checked;
        CHECK(wxy.inner == wx.inner + wy.inner);
        CHECK(wxy.outer == wx.outer + wy.outer);
    }
    CHECK(checked > 200);
}

TEST_CASE("try_invert matches the root-in-annulus verdict") {
    Rng rng(67);
    for (const auto& d : {l1_flat, l1_fat}) {
        const AnnulusSpectrum s = d->beurling_data().weight.radii();
        for (int i = 0; i < 250; ++i) {
            const Value x = testutil::random_laurent(d, rng, 3);
            if (x.is_zero()) continue;
            bool clear = true;
            for (const auto& r : gelfand_roots(x)) {
                if (r.modulus >= s.rho_minus * (1.0 - kAnnulusTolerance) &&
                    r.modulus <= s.rho_plus * (1.0 + kAnnulusTolerance)) {
                    clear = false;
                    break;
                }
            }
            const InvertOutcome out = try_invert(x);
            REQUIRE(out.status != InvertStatus::certification_failure);
            CHECK(out.ok() == clear);
            if (out.ok()) {
                CHECK(distance(mul(x, *out.inverse), one(d)) < kInvertTolerance);
            }
        }
    }
}

TEST_CASE("reciprocals outside the truncation budget are refused, not faked") {
    // Root at 1 + 1e-6: off the annulus band, but the reciprocal's series
    // decays too slowly for the window cap.
    const Value x = sub(unit_delta(l1_flat, 1), unit_delta(l1_flat, 0, {1.0 + 1e-6, 0.0}));
    const InvertOutcome out = try_invert(x);
    CHECK(out.status == InvertStatus::certification_failure);
    CHECK_FALSE(out.note.empty());

    // The zero element reports an annulus witness (the transform vanishes
    // everywhere).
    const InvertOutcome z = try_invert(zero(l1_flat));
    CHECK(z.status == InvertStatus::not_invertible);
    CHECK(z.annulus_root.has_value());
}

TEST_CASE("degenerate annulus: random elements perturb to invertible") {
    Rng rng(71);
    int successes = 0;
    const int trials = 500;
    for (int i = 0; i < trials; ++i) {
        Value x = testutil::random_laurent(l1_flat, rng, 4);
        if (x.is_zero()) x = one(l1_flat);
        try {
            const BaseSearchResult r = perturb_in_base(x, 0.05, rng);
            CHECK(distance(x, r.value) < 0.05);
            ++successes;
        } catch (const ExhaustedError&) {
        }
    }
    CHECK(successes == trials);
}

TEST_CASE("fat annulus: winding gaps are stable within the certified radius") {
    Rng rng(73);
    const AnnulusSpectrum s = l1_fat->beurling_data().weight.radii();
    for (int i = 0; i < 20; ++i) {
        const double gap = rng.uniform(1.1, 1.9);
        const long shift = rng.uniform_int(-2, 2);
        const Value x = sub(unit_delta(l1_fat, shift + 1), unit_delta(l1_fat, shift, {gap, 0.0}));

        const ObstructionReport report = obstruction_verdict(x, s);
        CHECK(report.verdict == ObstructionVerdict::obstructed);
        REQUIRE(report.stability_radius > 0.0);

        for (int probe = 0; probe < 100; ++probe) {
            const Value y = sample_in_ball(x, report.stability_radius * 0.95, rng);
            CHECK(winding_pair(y, s) == report.windings);
        }
        CHECK_THROWS_AS(perturb_in_base(x, 0.25 * report.stability_radius, rng, 60), ExhaustedError);
    }

    // Monomials and degenerate annuli never obstruct.
    CHECK(obstruction_verdict(unit_delta(l1_fat, 2), s).verdict == ObstructionVerdict::unobstructed);
    const Value z = add(unit_delta(l1_flat, 1, {0.2, 0.0}), one(l1_flat));
    CHECK(obstruction_verdict(z, AnnulusSpectrum{1.0, 1.0}).verdict == ObstructionVerdict::unobstructed);
}

TEST_CASE("disc closure verdicts from zero sets") {
    using V = DiscClosureVerdict;
    // z - 2, z - 1, z.
    CHECK(disc_closure_membership(std::vector<Complex>{{-2, 0}, {1, 0}}) == V::in_closure);
    CHECK(disc_closure_membership(std::vector<Complex>{{-1, 0}, {1, 0}}) == V::in_closure);
    CHECK(disc_closure_membership(std::vector<Complex>{{0, 0}, {1, 0}}) == V::not_in_closure);

    CHECK(disc_closure_membership(std::vector<Complex>{}) == V::is_zero);
    CHECK(disc_closure_membership(std::vector<Complex>{{0, 0}, {0, 0}}) == V::is_zero);
    CHECK(disc_closure_membership(std::vector<Complex>{{3, 1}}) == V::in_closure);
    // (z - 1/2)(z - 3) has an interior zero.
    CHECK(disc_closure_membership(std::vector<Complex>{{1.5, 0}, {-3.5, 0}, {1, 0}}) == V::not_in_closure);
}
