#include "banach/poly.hpp"

#include <stdexcept>

namespace banach {

Poly::Poly(DescriptorPtr desc, std::vector<Value> coeffs) : desc_(std::move(desc)), coeffs_(std::move(coeffs)) {
    for (const Value& c : coeffs_) {
        if (!same_descriptor(c.descriptor(), desc_)) {
            throw DescriptorMismatchError("polynomial coefficients must share one algebra");
        }
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::zero(DescriptorPtr desc) { return Poly(std::move(desc), {}); }

Poly Poly::constant(Value c) {
    auto desc = c.descriptor();
    return Poly(desc, {std::move(c)});
}

Poly Poly::monomial(Value c, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    auto desc = c.descriptor();
    std::vector<Value> coeffs(static_cast<std::size_t>(degree), banach::zero(desc));
    coeffs.push_back(std::move(c));
    return Poly(desc, std::move(coeffs));
}

std::optional<int> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

Value Poly::coeff(int j) const {
    if (j < 0) throw std::out_of_range("negative coefficient index");
    if (j >= static_cast<int>(coeffs_.size())) return banach::zero(desc_);
    return coeffs_[static_cast<std::size_t>(j)];
}

Value Poly::eval(const Value& at) const {
    require_same_descriptor(at.descriptor(), desc_, "Poly::eval");
    Value acc = banach::zero(desc_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = add(mul(acc, at), *it);
    return acc;
}

Poly Poly::scaled(Complex lambda) const {
    std::vector<Value> out;
    out.reserve(coeffs_.size());
    for (const Value& c : coeffs_) out.push_back(scale(c, lambda));
    return Poly(desc_, std::move(out));
}

Poly add(const Poly& f, const Poly& g) {
    require_same_descriptor(f.descriptor(), g.descriptor(), "poly add");
    const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
    std::vector<Value> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.push_back(add(f.coeff(static_cast<int>(j)), g.coeff(static_cast<int>(j))));
    }
    return Poly(f.descriptor(), std::move(out));
}

Poly sub(const Poly& f, const Poly& g) { return add(f, g.scaled(Complex(-1.0, 0.0))); }

Poly mul(const Poly& f, const Poly& g) {
    require_same_descriptor(f.descriptor(), g.descriptor(), "poly mul");
    if (f.coeffs().empty() || g.coeffs().empty()) return Poly::zero(f.descriptor());
    std::vector<Value> out(f.coeffs().size() + g.coeffs().size() - 1, zero(f.descriptor()));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
            out[i + j] = add(out[i + j], mul(f.coeffs()[i], g.coeffs()[j]));
        }
    }
    return Poly(f.descriptor(), std::move(out));
}

bool exactly_equal(const Poly& f, const Poly& g) {
    if (!same_descriptor(f.descriptor(), g.descriptor())) return false;
    if (f.coeffs().size() != g.coeffs().size()) return false;
    for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
        if (!exactly_equal(f.coeffs()[j], g.coeffs()[j])) return false;
    }
    return true;
}

MonicPoly::MonicPoly(Poly p) : poly_(std::move(p)), degree_(0) {
    const auto d = poly_.degree();
    if (!d || *d < 1) throw std::invalid_argument("monic polynomial must have degree >= 1");
    if (!exactly_equal(poly_.coeffs().back(), one(poly_.descriptor()))) {
        throw std::invalid_argument("leading coefficient must equal the algebra unit exactly");
    }
    degree_ = *d;
}

MonicPoly MonicPoly::from_tail(DescriptorPtr desc, std::vector<Value> tail, int degree_n) {
    if (degree_n < 0) degree_n = static_cast<int>(tail.size());
    if (degree_n < 1) throw std::invalid_argument("monic polynomial must have degree >= 1");
    if (static_cast<int>(tail.size()) > degree_n) {
        throw std::invalid_argument("tail longer than the requested degree");
    }
    while (static_cast<int>(tail.size()) < degree_n) tail.push_back(zero(desc));
    tail.push_back(one(desc));
    return MonicPoly(Poly(std::move(desc), std::move(tail)));
}

MonicPoly MonicPoly::power(DescriptorPtr desc, int n) { return from_tail(desc, {}, n); }

std::pair<Poly, Poly> divide_by_monic(const Poly& f, const MonicPoly& alpha) {
    require_same_descriptor(f.descriptor(), alpha.descriptor(), "divide_by_monic");
    const int n = alpha.degree();
    std::vector<Value> rem(f.coeffs().begin(), f.coeffs().end());
    const int fdeg = f.degree().value_or(-1);
    if (fdeg < n) return {Poly::zero(f.descriptor()), f};
    std::vector<Value> quot(static_cast<std::size_t>(fdeg - n + 1), zero(f.descriptor()));
    for (int m = fdeg; m >= n; --m) {
        Value lead = rem[static_cast<std::size_t>(m)];
        if (lead.is_zero()) continue;
        quot[static_cast<std::size_t>(m - n)] = lead;
        // Subtract lead * x^(m-n) * alpha; the x^m terms cancel exactly.
        rem[static_cast<std::size_t>(m)] = zero(f.descriptor());
        for (int j = 0; j < n; ++j) {
            auto& slot = rem[static_cast<std::size_t>(m - n + j)];
            slot = sub(slot, mul(lead, alpha.tail()[static_cast<std::size_t>(j)]));
        }
    }
    return {Poly(f.descriptor(), std::move(quot)), Poly(f.descriptor(), std::move(rem))};
}

}  // namespace banach
