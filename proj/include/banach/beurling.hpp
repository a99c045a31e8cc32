#pragma once

#include "banach/algebra.hpp"

namespace banach {

// Roots of a scalar polynomial (low degree first) via companion-matrix
// eigenvalues. Exact-zero leading/trailing coefficients are handled by the
// caller's conventions; the polynomial must not be identically zero.
std::vector<Complex> companion_roots(std::span<const Complex> coeffs);

struct GelfandRoot {
    Complex location;
    double modulus;
};

// Zeros of w |-> sum c_k w^k for a finitely supported element: the roots of
// the ordinary polynomial obtained by factoring out the lowest power.
// Requires x != 0.
std::vector<GelfandRoot> gelfand_roots(const Value& x);

// The annulus spectrum of the element's own algebra.
AnnulusSpectrum annulus_of(const Value& x);

struct BoundaryVanishError : std::domain_error {
    using std::domain_error::domain_error;
};

struct WindingPair {
    long inner = 0;
    long outer = 0;
    bool operator==(const WindingPair&) const = default;
};

// Winding numbers of the transform on the two boundary circles, computed by
// exact root counting (argument principle): winding(rho) = #{roots inside}
// plus the lowest exponent. Throws BoundaryVanishError when a root sits on a
// boundary circle (within the relative annulus tolerance).
WindingPair winding_pair(const Value& x, const AnnulusSpectrum& s);

enum class ObstructionVerdict { obstructed, unobstructed };

struct ObstructionReport {
    ObstructionVerdict verdict = ObstructionVerdict::unobstructed;
    WindingPair windings;
    // Certified lower bound for the transform's modulus on both boundary
    // circles; perturbations smaller than this cannot change either winding.
    double stability_radius = 0.0;
};

ObstructionReport obstruction_verdict(const Value& x, const AnnulusSpectrum& s);

// Certified lower bound for min over the circle |w| = rho of |transform(w)|:
// a dense sample minus a derivative-based mesh correction, clamped at 0.
double boundary_min_modulus(const Value& x, double rho);

enum class DiscClosureVerdict { in_closure, not_in_closure, is_zero };

// Zero-set test behind the closure-of-invertibles description for functions
// holomorphic on the disc: a polynomial lies in the closure exactly when it
// has no zero strictly inside the unit circle.
DiscClosureVerdict disc_closure_membership(std::span<const Complex> coeffs);

}  // namespace banach
