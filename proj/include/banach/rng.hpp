#pragma once

#include <complex>
#include <cstdint>

namespace banach {

// Counter-based deterministic random stream built on the SplitMix64
// finalizer. A stream is (key, counter); child streams derive from
// (key, id) so trials and stages draw independently of evaluation order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(mix(seed ^ 0x7f4a7c15u)), counter_(0) {}

    // Independent child stream. Deriving with the same id twice yields the
    // same stream; distinct ids decorrelate.
    Rng derive(std::uint64_t id) const {
        return Rng(mix(key_ + 0x9e3779b97f4a7c15ull * (id + 1)), 0);
    }

    std::uint64_t next_u64() {
        counter_ += 0x9e3779b97f4a7c15ull;
        return mix(key_ ^ counter_);
    }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Inclusive bounds.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Area-uniform in the open disc of the given radius.
    std::complex<double> disc(double radius) {
        const double r = radius * std::sqrt(uniform());
        const double theta = 6.283185307179586476925286766559 * uniform();
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    // Uniform on the circle of the given radius.
    std::complex<double> circle(double radius) {
        const double theta = 6.283185307179586476925286766559 * uniform();
        return {radius * std::cos(theta), radius * std::sin(theta)};
    }

private:
    Rng(std::uint64_t key, std::uint64_t counter) : key_(key), counter_(counter) {}

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_;
};

}  // namespace banach
