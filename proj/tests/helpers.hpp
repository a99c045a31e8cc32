#pragma once

#include <vector>

#include "banach/algebra.hpp"
#include "banach/poly.hpp"
#include "banach/rng.hpp"

namespace testutil {

using banach::Complex;
using banach::DescriptorPtr;
using banach::Value;

inline Value fv(const DescriptorPtr& d, std::vector<Complex> data) {
    return Value::finite(d, std::move(data));
}

inline Value scalar(const DescriptorPtr& c1, Complex z) { return Value::finite(c1, {z}); }

inline Value random_finite(const DescriptorPtr& d, banach::Rng& rng, double radius = 2.0) {
    std::vector<Complex> data(static_cast<std::size_t>(d->finite().points));
    for (Complex& c : data) c = rng.disc(radius);
    return Value::finite(d, std::move(data));
}

inline banach::MonicPoly random_monic(const DescriptorPtr& d, int degree, banach::Rng& rng,
                                      double radius = 2.0) {
    std::vector<Value> tail;
    for (int j = 0; j < degree; ++j) tail.push_back(random_finite(d, rng, radius));
    return banach::MonicPoly::from_tail(d, std::move(tail));
}

inline banach::Poly random_poly(const DescriptorPtr& d, int degree, banach::Rng& rng,
                                double radius = 2.0) {
    std::vector<Value> coeffs;
    for (int j = 0; j <= degree; ++j) coeffs.push_back(random_finite(d, rng, radius));
    return banach::Poly(d, std::move(coeffs));
}

inline Value random_laurent(const DescriptorPtr& d, banach::Rng& rng, long max_span = 4,
                            double radius = 1.0) {
    const long lo = rng.uniform_int(static_cast<int>(-max_span), 0);
    const long hi = rng.uniform_int(0, static_cast<int>(max_span));
    std::vector<Complex> coeffs(static_cast<std::size_t>(hi - lo + 1));
    for (Complex& c : coeffs) c = rng.disc(radius);
    return Value::laurent(d, lo, std::move(coeffs));
}

}  // namespace testutil
