#include "banach/arens_hoffman.hpp"

#include <cmath>
#include <stdexcept>

#include "banach/resultant.hpp"
#include "detail.hpp"

namespace banach {

namespace {

double norm_condition_slack(const MonicPoly& alpha, double t) {
    // g(t) = t^n - sum ||a_j|| t^j; admissible iff g(t) >= 0.
    double g = std::pow(t, alpha.degree());
    double tj = 1.0;
    for (const Value& a : alpha.tail()) {
        g -= norm(a) * tj;
        tj *= t;
    }
    return g;
}

const Descriptor::ArensHoffman& ah_of(const DescriptorPtr& d, const char* where) {
    if (!d || d->kind() != Descriptor::Kind::arens_hoffman) {
        throw std::invalid_argument(std::string(where) + ": descriptor is not an extension algebra");
    }
    return d->ah_data();
}

}  // namespace

double minimal_norm_parameter(const MonicPoly& alpha) {
    double lo = kNormParameterFloor;
    if (norm_condition_slack(alpha, lo) >= 0.0) return lo;
    // g is eventually positive; bracket then bisect.
    double hi = 2.0 * lo;
    while (norm_condition_slack(alpha, hi) < 0.0) hi *= 2.0;
    for (int i = 0; i < 200 && (hi - lo) > 1e-13 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (norm_condition_slack(alpha, mid) >= 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

DescriptorPtr make_extension(const DescriptorPtr& base, const MonicPoly& alpha, std::optional<double> t) {
    require_same_descriptor(alpha.descriptor(), base, "make_extension");
    double chosen;
    if (t) {
        chosen = *t;
        if (!(chosen > 0.0) || norm_condition_slack(alpha, chosen) < 0.0) {
            throw std::invalid_argument("norm parameter violates t^n >= sum ||a_j|| t^j");
        }
    } else {
        chosen = kNormParameterSafety * minimal_norm_parameter(alpha);
    }
    std::vector<Value> tail(alpha.tail().begin(), alpha.tail().end());
    return Descriptor::arens_hoffman(base, std::move(tail), chosen);
}

DescriptorPtr tower(DescriptorPtr base, std::span<const MonicPoly> steps) {
    DescriptorPtr current = std::move(base);
    for (const MonicPoly& alpha : steps) {
        current = make_extension(current, alpha);
    }
    return current;
}

int extension_degree(const DescriptorPtr& ah) {
    return static_cast<int>(ah_of(ah, "extension_degree").alpha_tail.size());
}

double norm_parameter(const DescriptorPtr& ah) { return ah_of(ah, "norm_parameter").t; }

MonicPoly extension_modulus(const DescriptorPtr& ah) {
    const auto& data = ah_of(ah, "extension_modulus");
    std::vector<Value> tail = data.alpha_tail;
    return MonicPoly::from_tail(data.base, std::move(tail));
}

Value embed(const Value& base_value, const DescriptorPtr& ah) {
    const auto& data = ah_of(ah, "embed");
    require_same_descriptor(base_value.descriptor(), data.base, "embed");
    return Value::extension(ah, {base_value});
}

Value coset_x(const DescriptorPtr& ah) {
    const auto& data = ah_of(ah, "coset_x");
    if (data.alpha_tail.size() == 1) {
        // Degree-1 modulus: x = -a_0 in the quotient.
        return Value::extension(ah, {neg(data.alpha_tail[0])});
    }
    return Value::extension(ah, {zero(data.base), one(data.base)});
}

Value element_from_poly(const DescriptorPtr& ah, const Poly& p) {
    const auto& data = ah_of(ah, "element_from_poly");
    require_same_descriptor(p.descriptor(), data.base, "element_from_poly");
    const int n = static_cast<int>(data.alpha_tail.size());
    const Poly reduced =
        (p.degree().value_or(-1) < n) ? p : divide_by_monic(p, extension_modulus(ah)).second;
    std::vector<Value> rep;
    rep.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) rep.push_back(reduced.coeff(j));
    return Value::extension(ah, std::move(rep));
}

Poly representative(const Value& u) {
    if (u.kind() != Descriptor::Kind::arens_hoffman) {
        throw std::invalid_argument("representative: not an extension element");
    }
    return Poly(u.descriptor()->ah_data().base, std::vector<Value>(u.rep().begin(), u.rep().end()));
}

long flattened_dimension(const DescriptorPtr& desc) {
    switch (desc->kind()) {
        case Descriptor::Kind::finite_space:
            return desc->finite().points;
        case Descriptor::Kind::arens_hoffman:
            return static_cast<long>(desc->ah_data().alpha_tail.size()) * flattened_dimension(desc->ah_data().base);
        default:
            throw std::invalid_argument("flattened_dimension: not a finite-dimensional algebra");
    }
}

namespace detail {

std::vector<Value> extension_mul_rep(const DescriptorPtr& ah, std::span<const Value> a,
                                     std::span<const Value> b) {
    const auto& data = ah->ah_data();
    const DescriptorPtr& base = data.base;
    const std::size_t n = data.alpha_tail.size();

    std::vector<Value> prod(2 * n - 1, zero(base));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            prod[i + j] = add(prod[i + j], mul(a[i], b[j]));
        }
    }
    const Poly remainder = divide_by_monic(Poly(base, std::move(prod)),
                                           MonicPoly::from_tail(base, data.alpha_tail)).second;
    std::vector<Value> out;
    out.reserve(n);
    for (std::size_t j = 0; j < n; ++j) out.push_back(remainder.coeff(static_cast<int>(j)));
    return out;
}

InvertOutcome extension_try_invert(const Value& u, double tolerance) {
    const DescriptorPtr& d = u.descriptor();
    const MonicPoly alpha = extension_modulus(d);
    const Poly rep = representative(u);

    const Value res = resultant(alpha, rep);
    InvertOutcome base_inverse = try_invert(res, tolerance);
    if (base_inverse.status == InvertStatus::not_invertible) {
        InvertOutcome out;
        out.status = InvertStatus::not_invertible;
        out.resultant_witness = std::make_shared<Value>(res);
        out.note = "resultant is not invertible in the base algebra";
        return out;
    }
    if (base_inverse.status == InvertStatus::certification_failure) {
        InvertOutcome out;
        out.status = InvertStatus::certification_failure;
        out.note = "base inversion of the resultant failed: " + base_inverse.note;
        return out;
    }

    // Invertibility is settled; construct the inverse division-free from the
    // multiplication matrix and one certified base inversion of its
    // determinant (a unit multiple of the resultant).
    AdjugateSolve adj = adjugate_solve_e0(multiplication_matrix(alpha, rep));
    InvertOutcome scale_inverse = try_invert(adj.scale, tolerance);
    if (!scale_inverse.ok()) {
        InvertOutcome out;
        out.status = InvertStatus::certification_failure;
        out.note = "multiplication-matrix determinant could not be inverted in the base";
        return out;
    }
    std::vector<Value> coeffs;
    coeffs.reserve(adj.numerator.size());
    for (const Value& v : adj.numerator) coeffs.push_back(mul(v, *scale_inverse.inverse));
    Value y = Value::extension(d, std::move(coeffs));

    InvertOutcome out;
    out.residual = distance(mul(u, y), one(d));
    if (out.residual >= tolerance) {
        out.status = InvertStatus::certification_failure;
        out.note = "inverse residual above tolerance (conditioning)";
        return out;
    }
    out.status = InvertStatus::invertible;
    out.inverse = std::move(y);
    return out;
}

}  // namespace detail

}  // namespace banach
