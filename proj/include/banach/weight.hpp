#pragma once

#include <stdexcept>
#include <vector>

namespace banach {

// Spectral radii of a weight: the Gelfand space of the associated weighted
// convolution algebra is the annulus rho_minus <= |w| <= rho_plus.
struct AnnulusSpectrum {
    double rho_minus = 1.0;
    double rho_plus = 1.0;

    bool degenerate() const { return rho_minus == rho_plus; }
    bool operator==(const AnnulusSpectrum&) const = default;
};

// Submultiplicative weight on the integers, held as a closed-form generator
// so the radii rho_minus = lim w(-n)^(-1/n) and rho_plus = lim w(n)^(1/n)
// are exact. A finite table must declare a geometric extension rule.
class WeightSequence {
public:
    enum class Kind { constant, geometric, one_sided, table };

    static WeightSequence constant();
    // w(k) = r^|k|, r >= 1.
    static WeightSequence geometric(double r);
    // w(k) = r^k for k >= 0 and 1 for k < 0, r >= 1.
    static WeightSequence one_sided(double r);
    // Explicit values on [lo, lo + values.size()), extended geometrically
    // with ratio r_pos above the window and r_neg below it.
    static WeightSequence table(long lo, std::vector<double> values, double r_pos, double r_neg);

    Kind kind() const { return kind_; }
    double at(long k) const;
    AnnulusSpectrum radii() const;

    double ratio() const { return r_; }
    double ratio_pos() const { return r_pos_; }
    double ratio_neg() const { return r_neg_; }
    long table_lo() const { return table_lo_; }
    const std::vector<double>& table_values() const { return table_; }

    bool operator==(const WeightSequence&) const = default;

private:
    WeightSequence() = default;
    void validate() const;

    Kind kind_ = Kind::constant;
    double r_ = 1.0;
    double r_pos_ = 1.0;
    double r_neg_ = 1.0;
    long table_lo_ = 0;
    std::vector<double> table_;
};

}  // namespace banach
