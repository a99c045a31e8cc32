#include "banach/weight.hpp"

#include <cmath>
#include <string>

namespace banach {

WeightSequence WeightSequence::constant() {
    WeightSequence w;
    w.kind_ = Kind::constant;
    return w;
}

WeightSequence WeightSequence::geometric(double r) {
    if (!(r >= 1.0)) {
        throw std::invalid_argument("geometric weight requires r >= 1 (otherwise not submultiplicative)");
    }
    WeightSequence w;
    w.kind_ = Kind::geometric;
    w.r_ = r;
    w.r_pos_ = r;
    w.r_neg_ = r;
    w.validate();
    return w;
}

WeightSequence WeightSequence::one_sided(double r) {
    if (!(r >= 1.0)) {
        throw std::invalid_argument("one-sided weight requires r >= 1");
    }
    WeightSequence w;
    w.kind_ = Kind::one_sided;
    w.r_ = r;
    w.r_pos_ = r;
    w.r_neg_ = 1.0;
    w.validate();
    return w;
}

WeightSequence WeightSequence::table(long lo, std::vector<double> values, double r_pos, double r_neg) {
    if (values.empty()) throw std::invalid_argument("weight table must be non-empty");
    if (lo > 0 || lo + static_cast<long>(values.size()) <= 0) {
        throw std::invalid_argument("weight table window must contain 0");
    }
    if (!(r_pos >= 1.0) || !(r_neg >= 1.0)) {
        throw std::invalid_argument("table extension ratios must be >= 1");
    }
    for (double v : values) {
        if (!(v > 0.0)) throw std::invalid_argument("weight values must be positive");
    }
    WeightSequence w;
    w.kind_ = Kind::table;
    w.table_lo_ = lo;
    w.table_ = std::move(values);
    w.r_pos_ = r_pos;
    w.r_neg_ = r_neg;
    w.validate();
    return w;
}

double WeightSequence::at(long k) const {
    switch (kind_) {
        case Kind::constant:
            return 1.0;
        case Kind::geometric:
            return std::pow(r_, static_cast<double>(k < 0 ? -k : k));
        case Kind::one_sided:
            return k >= 0 ? std::pow(r_, static_cast<double>(k)) : 1.0;
        case Kind::table: {
            const long hi = table_lo_ + static_cast<long>(table_.size()) - 1;
            if (k < table_lo_) return table_.front() * std::pow(r_neg_, static_cast<double>(table_lo_ - k));
            if (k > hi) return table_.back() * std::pow(r_pos_, static_cast<double>(k - hi));
            return table_[static_cast<std::size_t>(k - table_lo_)];
        }
    }
    return 1.0;
}

AnnulusSpectrum WeightSequence::radii() const {
    switch (kind_) {
        case Kind::constant:
            return {1.0, 1.0};
        case Kind::geometric:
            return {1.0 / r_, r_};
        case Kind::one_sided:
            return {1.0, r_};
        case Kind::table:
            // The geometric tails dominate the limits.
            return {1.0 / r_neg_, r_pos_};
    }
    return {1.0, 1.0};
}

void WeightSequence::validate() const {
    if (std::abs(at(0) - 1.0) > 1e-12) {
        throw std::invalid_argument("weight must satisfy w(0) = 1");
    }
    // Submultiplicativity spot-check on a lattice window.
    const long window = 12;
    for (long m = -window; m <= window; ++m) {
        for (long n = -window; n <= window; ++n) {
            if (at(m + n) > at(m) * at(n) * (1.0 + 1e-12)) {
                throw std::invalid_argument("weight is not submultiplicative at (" + std::to_string(m) +
                                            ", " + std::to_string(n) + ")");
            }
        }
    }
    const AnnulusSpectrum s = radii();
    if (!(s.rho_minus > 0.0) || !(s.rho_minus <= s.rho_plus)) {
        throw std::invalid_argument("weight radii must satisfy 0 < rho_minus <= rho_plus");
    }
}

}  // namespace banach
