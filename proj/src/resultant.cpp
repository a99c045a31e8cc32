#include "banach/resultant.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace banach {

namespace {

void check_inputs(const MonicPoly& alpha, const Poly& beta) {
    require_same_descriptor(alpha.descriptor(), beta.descriptor(), "resultant");
    const int n = alpha.degree();
    if (beta.degree().value_or(-1) > n - 1) {
        throw std::invalid_argument("resultant requires deg(beta) <= n-1; reduce mod alpha first");
    }
}

}  // namespace

SquareMatrix sylvester_matrix(const MonicPoly& alpha, const Poly& beta) {
    check_inputs(alpha, beta);
    const int n = alpha.degree();
    const DescriptorPtr& d = alpha.descriptor();
    if (n == 1) {
        SquareMatrix m(d, 1);
        m.set(0, 0, beta.coeff(0));
        return m;
    }
    SquareMatrix m(d, 2 * n - 1);
    // alpha highest-first: 1, a_{n-1}, ..., a_0.
    for (int row = 0; row < n - 1; ++row) {
        m.set(row, row, one(d));
        for (int j = 0; j < n; ++j) {
            m.set(row, row + 1 + j, alpha.tail()[static_cast<std::size_t>(n - 1 - j)]);
        }
    }
    // beta highest-first: b_{n-1}, ..., b_0.
    for (int row = 0; row < n; ++row) {
        for (int j = 0; j < n; ++j) {
            m.set(n - 1 + row, row + j, beta.coeff(n - 1 - j));
        }
    }
    return m;
}

Value resultant(const MonicPoly& alpha, const Poly& beta) {
    if (alpha.degree() == 1) {
        check_inputs(alpha, beta);
        return beta.coeff(0);
    }
    return berkowitz_det(sylvester_matrix(alpha, beta));
}

SquareMatrix multiplication_matrix(const MonicPoly& alpha, const Poly& beta) {
    check_inputs(alpha, beta);
    const int n = alpha.degree();
    const DescriptorPtr& d = alpha.descriptor();
    SquareMatrix m(d, n);
    // Column j holds beta * x^j reduced mod alpha; advance by one x-shift and
    // one reduction step per column.
    std::vector<Value> col(static_cast<std::size_t>(n), zero(d));
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = beta.coeff(i);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m.set(i, j, col[static_cast<std::size_t>(i)]);
        if (j + 1 < n) {
            Value top = col[static_cast<std::size_t>(n - 1)];
            for (int i = n - 1; i >= 1; --i) {
                col[static_cast<std::size_t>(i)] = col[static_cast<std::size_t>(i - 1)];
            }
            col[0] = zero(d);
            if (!top.is_zero()) {
                for (int i = 0; i < n; ++i) {
                    col[static_cast<std::size_t>(i)] =
                        sub(col[static_cast<std::size_t>(i)], mul(top, alpha.tail()[static_cast<std::size_t>(i)]));
                }
            }
        }
    }
    return m;
}

Value resultant_via_multiplication_matrix(const MonicPoly& alpha, const Poly& beta) {
    return berkowitz_det(multiplication_matrix(alpha, beta));
}

ResultantPolynomial::ResultantPolynomial(DescriptorPtr desc, std::vector<Value> tail)
    : desc_(std::move(desc)), tail_(std::move(tail)) {
    if (tail_.empty()) throw std::invalid_argument("resultant polynomial needs degree >= 1");
    for (const Value& p : tail_) {
        if (!same_descriptor(p.descriptor(), desc_)) {
            throw DescriptorMismatchError("resultant polynomial coefficients must share one algebra");
        }
    }
}

Value ResultantPolynomial::eval(const Value& c) const {
    require_same_descriptor(c.descriptor(), desc_, "ResultantPolynomial::eval");
    Value acc = one(desc_);  // implicit leading coefficient
    for (auto it = tail_.rbegin(); it != tail_.rend(); ++it) acc = add(mul(acc, c), *it);
    return acc;
}

ResultantPolynomial resultant_poly_in_c(const MonicPoly& alpha, std::span<const Value> b_tail) {
    const int n = alpha.degree();
    const DescriptorPtr& d = alpha.descriptor();
    if (static_cast<int>(b_tail.size()) > n - 1) {
        throw std::invalid_argument("b tail must have at most n-1 entries");
    }
    for (const Value& b : b_tail) {
        if (!same_descriptor(b.descriptor(), d)) {
            throw DescriptorMismatchError("b tail coefficients must live in the coefficient algebra");
        }
    }

    // Node scale keeps the evaluation circle near the data's magnitude.
    double scale_est = 1.0;
    for (const Value& a : alpha.tail()) scale_est = std::max(scale_est, norm(a));
    for (const Value& b : b_tail) scale_est = std::max(scale_est, norm(b));
    const double s = 1.0 + scale_est;

    const int nodes = n + 1;
    std::vector<Value> evals;
    evals.reserve(static_cast<std::size_t>(nodes));
    for (int i = 0; i < nodes; ++i) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(nodes);
        const Complex node = Complex(s * std::cos(theta), s * std::sin(theta));
        std::vector<Value> coeffs;
        coeffs.reserve(static_cast<std::size_t>(n));
        coeffs.push_back(scale(one(d), node));
        for (const Value& b : b_tail) coeffs.push_back(b);
        evals.push_back(resultant(alpha, Poly(d, std::move(coeffs))));
    }

    // q_j = s^(-j) / (n+1) * sum_i evals_i conj(omega)^(ij).
    std::vector<Value> q;
    q.reserve(static_cast<std::size_t>(nodes));
    double s_pow = 1.0;
    for (int j = 0; j < nodes; ++j) {
        Value acc = zero(d);
        for (int i = 0; i < nodes; ++i) {
            const double theta = -2.0 * std::numbers::pi * static_cast<double>(i) * static_cast<double>(j) /
                                 static_cast<double>(nodes);
            acc = add(acc, scale(evals[static_cast<std::size_t>(i)], Complex(std::cos(theta), std::sin(theta))));
        }
        q.push_back(scale(acc, Complex(1.0 / (static_cast<double>(nodes) * s_pow), 0.0)));
        s_pow *= s;
    }
    q.pop_back();  // leading coefficient is the unit by construction
    return ResultantPolynomial(d, std::move(q));
}

Value PolyMap::eval(const Value& c) const {
    if (coeffs.empty()) throw std::logic_error("empty polynomial map");
    Value acc = zero(c.descriptor());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = add(mul(acc, c), *it);
    return acc;
}

std::vector<PolyMap> formal_derivatives(const ResultantPolynomial& p) {
    const int n = p.degree();
    const DescriptorPtr& d = p.descriptor();
    std::vector<Value> full(p.tail().begin(), p.tail().end());
    full.push_back(one(d));

    std::vector<PolyMap> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        PolyMap map;
        map.coeffs.reserve(static_cast<std::size_t>(n - k + 1));
        for (int j = k; j <= n; ++j) {
            double factor = 1.0;
            for (int i = 0; i < k; ++i) factor *= static_cast<double>(j - i);
            map.coeffs.push_back(scale(full[static_cast<std::size_t>(j)], Complex(factor, 0.0)));
        }
        out.push_back(std::move(map));
    }
    return out;
}

}  // namespace banach
