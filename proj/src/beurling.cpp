#include "banach/beurling.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "detail.hpp"

namespace banach {

std::vector<Complex> companion_roots(std::span<const Complex> coeffs) {
    std::size_t hi = coeffs.size();
    while (hi > 0 && coeffs[hi - 1] == Complex(0.0, 0.0)) --hi;
    if (hi == 0) throw std::invalid_argument("companion_roots: zero polynomial");
    const std::size_t deg = hi - 1;
    if (deg == 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(deg),
                                                        static_cast<Eigen::Index>(deg));
    const Complex lead = coeffs[deg];
    for (std::size_t i = 0; i + 1 < deg; ++i) {
        companion(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
    }
    for (std::size_t i = 0; i < deg; ++i) {
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) = -coeffs[i] / lead;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<Complex> roots;
    roots.reserve(deg);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) roots.push_back(solver.eigenvalues()(i));
    return roots;
}

namespace {

const Value::Laurent& laurent_of(const Value& x, const char* where) {
    if (x.kind() != Descriptor::Kind::beurling) {
        throw std::invalid_argument(std::string(where) + ": element is not in a weighted Laurent algebra");
    }
    return x.laurent_data();
}

bool in_annulus_band(double modulus, const AnnulusSpectrum& s) {
    return modulus >= s.rho_minus * (1.0 - kAnnulusTolerance) &&
           modulus <= s.rho_plus * (1.0 + kAnnulusTolerance);
}

bool on_circle_band(double modulus, double rho) {
    return std::abs(modulus - rho) <= rho * kAnnulusTolerance;
}

}  // namespace

std::vector<GelfandRoot> gelfand_roots(const Value& x) {
    const auto& data = laurent_of(x, "gelfand_roots");
    if (data.coeffs.empty()) throw std::invalid_argument("gelfand_roots: zero element");
    std::vector<GelfandRoot> out;
    for (Complex r : companion_roots(data.coeffs)) {
        out.push_back({r, std::abs(r)});
    }
    std::sort(out.begin(), out.end(), [](const GelfandRoot& a, const GelfandRoot& b) {
        return a.modulus < b.modulus;
    });
    return out;
}

AnnulusSpectrum annulus_of(const Value& x) {
    if (x.kind() != Descriptor::Kind::beurling) {
        throw std::invalid_argument("annulus_of: element is not in a weighted Laurent algebra");
    }
    return x.descriptor()->beurling_data().weight.radii();
}

WindingPair winding_pair(const Value& x, const AnnulusSpectrum& s) {
    const auto& data = laurent_of(x, "winding_pair");
    if (data.coeffs.empty()) throw BoundaryVanishError("winding undefined: zero element");
    const auto roots = gelfand_roots(x);
    for (const auto& r : roots) {
        if (on_circle_band(r.modulus, s.rho_minus) || on_circle_band(r.modulus, s.rho_plus)) {
            throw BoundaryVanishError("winding undefined: transform vanishes on a boundary circle");
        }
    }
    WindingPair w;
    w.inner = data.lo;
    w.outer = data.lo;
    for (const auto& r : roots) {
        if (r.modulus < s.rho_minus) ++w.inner;
        if (r.modulus < s.rho_plus) ++w.outer;
    }
    return w;
}

double boundary_min_modulus(const Value& x, double rho) {
    const auto& data = laurent_of(x, "boundary_min_modulus");
    if (data.coeffs.empty()) return 0.0;

    // Derivative bound on the circle: |d/dtheta transform| <= sum |c_k| |k| rho^k.
    double lipschitz = 0.0;
    for (std::size_t i = 0; i < data.coeffs.size(); ++i) {
        const long k = data.lo + static_cast<long>(i);
        lipschitz += std::abs(data.coeffs[i]) * std::abs(static_cast<double>(k)) *
                     std::pow(rho, static_cast<double>(k));
    }

    const int samples = 4096;
    double min_abs = std::numeric_limits<double>::infinity();
    for (int j = 0; j < samples; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / samples;
        const Complex w = Complex(rho * std::cos(theta), rho * std::sin(theta));
        Complex acc(0.0, 0.0);
        // Horner in w, then shift by the lowest power.
        for (std::size_t i = data.coeffs.size(); i-- > 0;) acc = acc * w + data.coeffs[i];
        acc *= std::pow(Complex(w), static_cast<double>(data.lo));
        min_abs = std::min(min_abs, std::abs(acc));
    }
    const double mesh = std::numbers::pi / samples;
    return std::max(0.0, min_abs - lipschitz * mesh);
}

ObstructionReport obstruction_verdict(const Value& x, const AnnulusSpectrum& s) {
    ObstructionReport report;
    report.windings = winding_pair(x, s);
    report.verdict = (report.windings.inner != report.windings.outer) ? ObstructionVerdict::obstructed
                                                                      : ObstructionVerdict::unobstructed;
    report.stability_radius =
        std::min(boundary_min_modulus(x, s.rho_minus), boundary_min_modulus(x, s.rho_plus));
    return report;
}

DiscClosureVerdict disc_closure_membership(std::span<const Complex> coeffs) {
    std::size_t hi = coeffs.size();
    while (hi > 0 && coeffs[hi - 1] == Complex(0.0, 0.0)) --hi;
    if (hi == 0) return DiscClosureVerdict::is_zero;
    if (hi == 1) return DiscClosureVerdict::in_closure;  // nonzero constant
    for (Complex r : companion_roots(coeffs.first(hi))) {
        if (std::abs(r) < 1.0 - kAnnulusTolerance) return DiscClosureVerdict::not_in_closure;
    }
    return DiscClosureVerdict::in_closure;
}

namespace detail {

namespace {

// Divide a truncated two-sided series by (w - root) within [wlo, whi].
// For |root| below the annulus the quotient expands in negative powers and is
// produced by the downward recurrence h_k = root*h_{k+1} + f_{k+1}; above the
// annulus it expands in nonnegative powers via h_k = (h_{k-1} - f_k)/root.
void divide_linear_inside(std::vector<Complex>& f, Complex root) {
    std::vector<Complex> h(f.size(), Complex(0.0, 0.0));
    for (std::size_t k = f.size() - 1; k-- > 0;) {
        h[k] = root * h[k + 1] + f[k + 1];
    }
    f = std::move(h);
}

void divide_linear_outside(std::vector<Complex>& f, Complex root) {
    std::vector<Complex> h(f.size(), Complex(0.0, 0.0));
    Complex prev(0.0, 0.0);
    for (std::size_t k = 0; k < f.size(); ++k) {
        prev = (prev - f[k]) / root;
        h[k] = prev;
    }
    f = std::move(h);
}

}  // namespace

InvertOutcome beurling_try_invert(const Value& x, double tolerance) {
    const auto& data = x.laurent_data();
    const AnnulusSpectrum s = annulus_of(x);
    InvertOutcome out;

    if (data.coeffs.empty()) {
        out.status = InvertStatus::not_invertible;
        out.annulus_root = Complex(s.rho_minus, 0.0);  // transform vanishes everywhere
        return out;
    }

    const auto roots = gelfand_roots(x);
    for (const auto& r : roots) {
        if (in_annulus_band(r.modulus, s)) {
            out.status = InvertStatus::not_invertible;
            out.annulus_root = r.location;
            return out;
        }
    }

    // Invertible: build a truncated two-sided expansion of the reciprocal by
    // dividing out the linear factors of the transform, enlarging the window
    // until the product certifies within tolerance.
    const Complex lead = data.coeffs.back();
    for (long margin = 64; margin <= kTruncationBudget; margin *= 2) {
        const long deg = static_cast<long>(data.coeffs.size()) - 1;
        const long wlo = -data.lo - deg - margin;
        const long whi = -data.lo + margin;
        std::vector<Complex> series(static_cast<std::size_t>(whi - wlo + 1), Complex(0.0, 0.0));
        series[static_cast<std::size_t>(-data.lo - wlo)] = Complex(1.0, 0.0) / lead;
        for (const auto& r : roots) {
            if (r.modulus < s.rho_minus) {
                divide_linear_inside(series, r.location);
            } else {
                divide_linear_outside(series, r.location);
            }
        }
        Value candidate = Value::laurent(x.descriptor(), wlo, std::move(series));
        const double residual = distance(mul(x, candidate), one(x.descriptor()));
        if (residual < tolerance) {
            out.status = InvertStatus::invertible;
            out.inverse = std::move(candidate);
            out.residual = residual;
            return out;
        }
    }
    out.status = InvertStatus::certification_failure;
    out.note = "truncation budget exhausted while certifying the reciprocal";
    return out;
}

}  // namespace detail

}  // namespace banach
