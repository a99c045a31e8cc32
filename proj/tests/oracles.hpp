#pragma once

// Test-side oracles, kept independent of the library's numeric paths:
// root finding here is Durand-Kerner iteration (the library uses companion
// eigenvalues), and resultants are evaluated as products over roots (the
// library computes determinants).

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

inline Complex eval_poly(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

inline std::vector<Complex> mul_poly(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<Complex> out(a.size() + b.size() - 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Simultaneous root iteration; coeffs lowest-degree first, degree >= 1.
inline std::vector<Complex> durand_kerner(std::vector<Complex> coeffs) {
    while (!coeffs.empty() && coeffs.back() == Complex(0.0, 0.0)) coeffs.pop_back();
    if (coeffs.size() < 2) throw std::invalid_argument("durand_kerner: degree must be >= 1");
    const std::size_t deg = coeffs.size() - 1;
    const Complex lead = coeffs.back();
    for (Complex& c : coeffs) c /= lead;

    double radius = 1.0;
    for (std::size_t i = 0; i < deg; ++i) radius = std::max(radius, 2.0 * std::abs(coeffs[i]));
    std::vector<Complex> z(deg);
    const Complex seed(0.4, 0.9);
    Complex p = Complex(1.0, 0.0);
    for (std::size_t i = 0; i < deg; ++i) {
        p *= seed;
        z[i] = p * radius;
    }

    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < deg; ++i) {
            Complex denom(1.0, 0.0);
            for (std::size_t j = 0; j < deg; ++j) {
                if (j != i) denom *= (z[i] - z[j]);
            }
            const Complex step = eval_poly(coeffs, z[i]) / denom;
            z[i] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-14 * radius) break;
    }
    return z;
}

// Product of beta over the roots of the monic alpha (both lowest-first;
// alpha's leading coefficient need not be 1, it is normalized away since the
// caller always passes monic data).
inline Complex resultant_product(const std::vector<Complex>& alpha, const std::vector<Complex>& beta) {
    Complex out(1.0, 0.0);
    for (Complex r : durand_kerner(alpha)) out *= eval_poly(beta, r);
    return out;
}

// Scalar long division f = q * alpha + r by a monic alpha.
inline std::pair<std::vector<Complex>, std::vector<Complex>> divide_monic(std::vector<Complex> f,
                                                                          const std::vector<Complex>& alpha) {
    const std::size_t n = alpha.size() - 1;
    if (f.size() <= n) return {{}, f};
    std::vector<Complex> q(f.size() - n, Complex(0.0, 0.0));
    for (std::size_t m = f.size() - 1; m + 1 > n; --m) {
        const Complex lead = f[m];
        q[m - n] = lead;
        for (std::size_t j = 0; j <= n; ++j) f[m - n + j] -= lead * alpha[j];
    }
    f.resize(n);
    return {q, f};
}

}  // namespace oracle
