#include "banach/fullness.hpp"

#include <Eigen/Dense>

namespace banach {

namespace {

void flatten_into(const Value& v, std::vector<Complex>& out) {
    switch (v.kind()) {
        case Descriptor::Kind::finite_space:
            out.insert(out.end(), v.finite_data().begin(), v.finite_data().end());
            return;
        case Descriptor::Kind::arens_hoffman:
            for (const Value& c : v.rep()) flatten_into(c, out);
            return;
        default:
            throw std::invalid_argument("fullness probe requires a finite-dimensional algebra");
    }
}

std::vector<Complex> flatten(const Value& v) {
    std::vector<Complex> out;
    flatten_into(v, out);
    return out;
}

}  // namespace

FullnessVerdict is_full_subalgebra_witness(std::span<const Value> sub_sample, const Value& x,
                                           double tolerance) {
    if (sub_sample.empty()) throw std::invalid_argument("fullness probe needs a non-empty sample");
    for (const Value& s : sub_sample) {
        require_same_descriptor(s.descriptor(), x.descriptor(), "is_full_subalgebra_witness");
    }

    FullnessVerdict verdict;
    InvertOutcome inv = try_invert(x);
    if (!inv.ok()) {
        verdict.kind = FullnessKind::ambient_not_invertible;
        return verdict;
    }
    verdict.ambient_inverse = inv.inverse;

    const std::vector<Complex> target = flatten(*inv.inverse);
    const Eigen::Index dim = static_cast<Eigen::Index>(target.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(sub_sample.size());
    Eigen::MatrixXcd basis(dim, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        const std::vector<Complex> col = flatten(sub_sample[static_cast<std::size_t>(j)]);
        for (Eigen::Index i = 0; i < dim; ++i) basis(i, j) = col[static_cast<std::size_t>(i)];
    }
    Eigen::VectorXcd rhs(dim);
    for (Eigen::Index i = 0; i < dim; ++i) rhs(i) = target[static_cast<std::size_t>(i)];

    const Eigen::VectorXcd coeffs = basis.colPivHouseholderQr().solve(rhs);

    // Residual in the algebra norm, not the least-squares norm.
    Value fit = zero(x.descriptor());
    for (Eigen::Index j = 0; j < cols; ++j) {
        fit = add(fit, scale(sub_sample[static_cast<std::size_t>(j)], coeffs(j)));
    }
    verdict.span_residual = distance(*inv.inverse, fit);
    verdict.kind = (verdict.span_residual < tolerance) ? FullnessKind::full_consistent
                                                       : FullnessKind::non_fullness_witness;
    return verdict;
}

}  // namespace banach
