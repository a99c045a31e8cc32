#include "banach/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detail.hpp"

namespace banach {

namespace {

Value::Laurent trim_laurent(long lo, std::vector<Complex> coeffs) {
    std::size_t begin = 0;
    std::size_t end = coeffs.size();
    while (begin < end && coeffs[begin] == Complex(0.0, 0.0)) ++begin;
    while (end > begin && coeffs[end - 1] == Complex(0.0, 0.0)) --end;
    if (begin == end) return {0, {}};
    return {lo + static_cast<long>(begin),
            std::vector<Complex>(coeffs.begin() + static_cast<long>(begin),
                                 coeffs.begin() + static_cast<long>(end))};
}

[[noreturn]] void bad_kind(const char* op) {
    throw std::invalid_argument(std::string(op) + ": unsupported algebra kind (matrix elements are handled by the matrix routines)");
}

}  // namespace

// --- Descriptor ---

DescriptorPtr Descriptor::finite_space(int points) {
    if (points < 1) throw std::invalid_argument("finite-space algebra needs at least one point");
    return DescriptorPtr(new Descriptor(FiniteSpace{points}));
}

DescriptorPtr Descriptor::beurling(WeightSequence weight) {
    return DescriptorPtr(new Descriptor(Beurling{std::move(weight)}));
}

DescriptorPtr Descriptor::matrix_over(DescriptorPtr base, int size) {
    if (!base) throw std::invalid_argument("matrix descriptor needs a base");
    if (size < 1) throw std::invalid_argument("matrix size must be positive");
    return DescriptorPtr(new Descriptor(MatrixOver{std::move(base), size}));
}

DescriptorPtr Descriptor::arens_hoffman(DescriptorPtr base, std::vector<Value> alpha_tail, double t) {
    if (!base) throw std::invalid_argument("extension descriptor needs a base");
    if (alpha_tail.empty()) throw std::invalid_argument("extension modulus must have degree >= 1");
    for (const Value& a : alpha_tail) {
        if (!same_descriptor(a.descriptor(), base)) {
            throw DescriptorMismatchError("extension modulus coefficients must live in the base algebra");
        }
    }
    if (!(t > 0.0)) throw std::invalid_argument("norm parameter must be positive");
    // Submultiplicativity of the weighted-coefficient norm needs
    // t^n >= sum ||a_j|| t^j.
    double slack = std::pow(t, static_cast<double>(alpha_tail.size()));
    double tj = 1.0;
    for (const Value& a : alpha_tail) {
        slack -= norm(a) * tj;
        tj *= t;
    }
    if (slack < 0.0) {
        throw std::invalid_argument("norm parameter violates t^n >= sum ||a_j|| t^j");
    }
    return DescriptorPtr(new Descriptor(ArensHoffman{std::move(base), std::move(alpha_tail), t}));
}

Descriptor::Kind Descriptor::kind() const {
    switch (data_.index()) {
        case 0: return Kind::finite_space;
        case 1: return Kind::beurling;
        case 2: return Kind::matrix_over;
        default: return Kind::arens_hoffman;
    }
}

std::string Descriptor::describe() const {
    switch (kind()) {
        case Kind::finite_space:
            return "C^" + std::to_string(finite().points);
        case Kind::beurling:
            return "l1(Z,w)";
        case Kind::matrix_over:
            return "M_" + std::to_string(matrix_data().size) + "(" + matrix_data().base->describe() + ")";
        case Kind::arens_hoffman:
            return ah_data().base->describe() + "[x]/(deg " + std::to_string(ah_data().alpha_tail.size()) + ")";
    }
    return {};
}

bool same_descriptor(const DescriptorPtr& a, const DescriptorPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->kind() != b->kind()) return false;
    switch (a->kind()) {
        case Descriptor::Kind::finite_space:
            return a->finite().points == b->finite().points;
        case Descriptor::Kind::beurling:
            return a->beurling_data().weight == b->beurling_data().weight;
        case Descriptor::Kind::matrix_over:
            return a->matrix_data().size == b->matrix_data().size &&
                   same_descriptor(a->matrix_data().base, b->matrix_data().base);
        case Descriptor::Kind::arens_hoffman: {
            const auto& da = a->ah_data();
            const auto& db = b->ah_data();
            if (da.t != db.t || da.alpha_tail.size() != db.alpha_tail.size()) return false;
            if (!same_descriptor(da.base, db.base)) return false;
            for (std::size_t j = 0; j < da.alpha_tail.size(); ++j) {
                if (!exactly_equal(da.alpha_tail[j], db.alpha_tail[j])) return false;
            }
            return true;
        }
    }
    return false;
}

void require_same_descriptor(const DescriptorPtr& a, const DescriptorPtr& b, const char* where) {
    if (!same_descriptor(a, b)) {
        throw DescriptorMismatchError(std::string(where) + ": elements belong to different algebras");
    }
}

// --- Value construction ---

Value Value::finite(DescriptorPtr desc, std::vector<Complex> data) {
    if (desc->kind() != Descriptor::Kind::finite_space) bad_kind("Value::finite");
    if (static_cast<int>(data.size()) != desc->finite().points) {
        throw std::invalid_argument("finite-space value has wrong number of coordinates");
    }
    return Value(std::move(desc), std::move(data));
}

Value Value::laurent(DescriptorPtr desc, long lo, std::vector<Complex> coeffs) {
    if (desc->kind() != Descriptor::Kind::beurling) bad_kind("Value::laurent");
    return Value(std::move(desc), trim_laurent(lo, std::move(coeffs)));
}

Value Value::extension(DescriptorPtr desc, std::vector<Value> rep_coeffs) {
    if (desc->kind() != Descriptor::Kind::arens_hoffman) bad_kind("Value::extension");
    const auto& ah = desc->ah_data();
    const std::size_t n = ah.alpha_tail.size();
    if (rep_coeffs.size() > n) {
        throw std::invalid_argument("canonical representative must have degree < n (reduce first)");
    }
    for (const Value& c : rep_coeffs) {
        if (!same_descriptor(c.descriptor(), ah.base)) {
            throw DescriptorMismatchError("representative coefficients must live in the base algebra");
        }
    }
    while (rep_coeffs.size() < n) rep_coeffs.push_back(zero(ah.base));
    return Value(std::move(desc), Rep{std::move(rep_coeffs)});
}

Descriptor::Kind Value::kind() const { return desc_->kind(); }

bool Value::is_zero() const {
    switch (kind()) {
        case Descriptor::Kind::finite_space:
            return std::all_of(finite_data().begin(), finite_data().end(),
                               [](Complex c) { return c == Complex(0.0, 0.0); });
        case Descriptor::Kind::beurling:
            return laurent_data().coeffs.empty();
        case Descriptor::Kind::arens_hoffman:
            return std::all_of(rep().begin(), rep().end(), [](const Value& v) { return v.is_zero(); });
        default:
            bad_kind("is_zero");
    }
}

// --- constants ---

Value zero(const DescriptorPtr& desc) {
    switch (desc->kind()) {
        case Descriptor::Kind::finite_space:
            return Value::finite(desc, std::vector<Complex>(desc->finite().points, Complex(0.0, 0.0)));
        case Descriptor::Kind::beurling:
            return Value::laurent(desc, 0, {});
        case Descriptor::Kind::arens_hoffman:
            return Value::extension(desc, {});
        default:
            bad_kind("zero");
    }
}

Value one(const DescriptorPtr& desc) {
    switch (desc->kind()) {
        case Descriptor::Kind::finite_space:
            return Value::finite(desc, std::vector<Complex>(desc->finite().points, Complex(1.0, 0.0)));
        case Descriptor::Kind::beurling:
            return Value::laurent(desc, 0, {Complex(1.0, 0.0)});
        case Descriptor::Kind::arens_hoffman:
            return Value::extension(desc, {one(desc->ah_data().base)});
        default:
            bad_kind("one");
    }
}

Value unit_delta(const DescriptorPtr& desc, long k, Complex c) {
    if (desc->kind() != Descriptor::Kind::beurling) bad_kind("unit_delta");
    return Value::laurent(desc, k, {c});
}

// --- arithmetic ---

Value add(const Value& x, const Value& y) {
    require_same_descriptor(x.descriptor(), y.descriptor(), "add");
    switch (x.kind()) {
        case Descriptor::Kind::finite_space: {
            std::vector<Complex> out = x.finite_data();
            const auto& yd = y.finite_data();
            for (std::size_t i = 0; i < out.size(); ++i) out[i] += yd[i];
            return Value::finite(x.descriptor(), std::move(out));
        }
        case Descriptor::Kind::beurling: {
            const auto& a = x.laurent_data();
            const auto& b = y.laurent_data();
            if (a.coeffs.empty()) return y;
            if (b.coeffs.empty()) return x;
            const long lo = std::min(a.lo, b.lo);
            const long hi = std::max(a.hi(), b.hi());
            std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1), Complex(0.0, 0.0));
            for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[static_cast<std::size_t>(a.lo - lo) + i] += a.coeffs[i];
            for (std::size_t i = 0; i < b.coeffs.size(); ++i) out[static_cast<std::size_t>(b.lo - lo) + i] += b.coeffs[i];
            return Value::laurent(x.descriptor(), lo, std::move(out));
        }
        case Descriptor::Kind::arens_hoffman: {
            std::vector<Value> out;
            out.reserve(x.rep().size());
            for (std::size_t j = 0; j < x.rep().size(); ++j) out.push_back(add(x.rep()[j], y.rep()[j]));
            return Value::extension(x.descriptor(), std::move(out));
        }
        default:
            bad_kind("add");
    }
}

Value neg(const Value& x) { return scale(x, Complex(-1.0, 0.0)); }

Value sub(const Value& x, const Value& y) { return add(x, neg(y)); }

Value scale(const Value& x, Complex lambda) {
    switch (x.kind()) {
        case Descriptor::Kind::finite_space: {
            std::vector<Complex> out = x.finite_data();
            for (Complex& c : out) c *= lambda;
            return Value::finite(x.descriptor(), std::move(out));
        }
        case Descriptor::Kind::beurling: {
            const auto& a = x.laurent_data();
            std::vector<Complex> out = a.coeffs;
            for (Complex& c : out) c *= lambda;
            return Value::laurent(x.descriptor(), a.lo, std::move(out));
        }
        case Descriptor::Kind::arens_hoffman: {
            std::vector<Value> out;
            out.reserve(x.rep().size());
            for (const Value& c : x.rep()) out.push_back(scale(c, lambda));
            return Value::extension(x.descriptor(), std::move(out));
        }
        default:
            bad_kind("scale");
    }
}

Value mul(const Value& x, const Value& y) {
    require_same_descriptor(x.descriptor(), y.descriptor(), "mul");
    switch (x.kind()) {
        case Descriptor::Kind::finite_space: {
            std::vector<Complex> out = x.finite_data();
            const auto& yd = y.finite_data();
            for (std::size_t i = 0; i < out.size(); ++i) out[i] *= yd[i];
            return Value::finite(x.descriptor(), std::move(out));
        }
        case Descriptor::Kind::beurling: {
            const auto& a = x.laurent_data();
            const auto& b = y.laurent_data();
            if (a.coeffs.empty() || b.coeffs.empty()) return zero(x.descriptor());
            std::vector<Complex> out(a.coeffs.size() + b.coeffs.size() - 1, Complex(0.0, 0.0));
            for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
                for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
            }
            return Value::laurent(x.descriptor(), a.lo + b.lo, std::move(out));
        }
        case Descriptor::Kind::arens_hoffman:
            return Value::extension(x.descriptor(),
                                    detail::extension_mul_rep(x.descriptor(), x.rep(), y.rep()));
        default:
            bad_kind("mul");
    }
}

double norm(const Value& x) {
    switch (x.kind()) {
        case Descriptor::Kind::finite_space: {
            double m = 0.0;
            for (Complex c : x.finite_data()) m = std::max(m, std::abs(c));
            return m;
        }
        case Descriptor::Kind::beurling: {
            const auto& a = x.laurent_data();
            const auto& w = x.descriptor()->beurling_data().weight;
            double s = 0.0;
            for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
                s += std::abs(a.coeffs[i]) * w.at(a.lo + static_cast<long>(i));
            }
            return s;
        }
        case Descriptor::Kind::arens_hoffman: {
            const double t = x.descriptor()->ah_data().t;
            double s = 0.0;
            double tj = 1.0;
            for (const Value& c : x.rep()) {
                s += norm(c) * tj;
                tj *= t;
            }
            return s;
        }
        default:
            bad_kind("norm");
    }
}

double distance(const Value& x, const Value& y) {
    require_same_descriptor(x.descriptor(), y.descriptor(), "distance");
    return norm(sub(x, y));
}

bool exactly_equal(const Value& x, const Value& y) {
    if (!same_descriptor(x.descriptor(), y.descriptor())) return false;
    switch (x.kind()) {
        case Descriptor::Kind::finite_space:
            return x.finite_data() == y.finite_data();
        case Descriptor::Kind::beurling:
            return x.laurent_data() == y.laurent_data();
        case Descriptor::Kind::arens_hoffman: {
            for (std::size_t j = 0; j < x.rep().size(); ++j) {
                if (!exactly_equal(x.rep()[j], y.rep()[j])) return false;
            }
            return true;
        }
        default:
            bad_kind("exactly_equal");
    }
}

std::string to_string(const Value& x) {
    std::ostringstream os;
    os.precision(12);
    auto put_complex = [&os](Complex c) {
        os << c.real();
        if (c.imag() != 0.0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
    };
    switch (x.kind()) {
        case Descriptor::Kind::finite_space: {
            os << "(";
            const auto& d = x.finite_data();
            for (std::size_t i = 0; i < d.size(); ++i) {
                if (i) os << ", ";
                put_complex(d[i]);
            }
            os << ")";
            break;
        }
        case Descriptor::Kind::beurling: {
            const auto& a = x.laurent_data();
            if (a.coeffs.empty()) {
                os << "0";
                break;
            }
            for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
                if (a.coeffs[i] == Complex(0.0, 0.0)) continue;
                if (os.tellp() > 0) os << " + ";
                os << "(";
                put_complex(a.coeffs[i]);
                os << ")d[" << a.lo + static_cast<long>(i) << "]";
            }
            break;
        }
        case Descriptor::Kind::arens_hoffman: {
            for (std::size_t j = 0; j < x.rep().size(); ++j) {
                if (j) os << " + ";
                os << to_string(x.rep()[j]);
                if (j >= 1) os << "*X" << (j > 1 ? "^" + std::to_string(j) : "");
            }
            break;
        }
        default:
            os << "<matrix element>";
    }
    return os.str();
}

// --- invertibility ---

namespace {

InvertOutcome finite_try_invert(const Value& x, double tolerance) {
    const auto& d = x.finite_data();
    const double cut = kSingularThreshold * norm(x);
    int worst = 0;
    double worst_abs = std::abs(d[0]);
    for (std::size_t i = 1; i < d.size(); ++i) {
        const double a = std::abs(d[i]);
        if (a < worst_abs) {
            worst_abs = a;
            worst = static_cast<int>(i);
        }
    }
    if (worst_abs <= cut) {
        InvertOutcome out;
        out.status = InvertStatus::not_invertible;
        out.coordinate = worst;
        return out;
    }
    std::vector<Complex> inv(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) inv[i] = Complex(1.0, 0.0) / d[i];
    Value y = Value::finite(x.descriptor(), std::move(inv));
    InvertOutcome out;
    out.residual = distance(mul(x, y), one(x.descriptor()));
    if (out.residual >= tolerance) {
        out.status = InvertStatus::certification_failure;
        out.note = "componentwise inverse residual above tolerance";
        return out;
    }
    out.status = InvertStatus::invertible;
    out.inverse = std::move(y);
    return out;
}

}  // namespace

InvertOutcome try_invert(const Value& x, double tolerance) {
    switch (x.kind()) {
        case Descriptor::Kind::finite_space:
            return finite_try_invert(x, tolerance);
        case Descriptor::Kind::beurling:
            return detail::beurling_try_invert(x, tolerance);
        case Descriptor::Kind::arens_hoffman:
            return detail::extension_try_invert(x, tolerance);
        default:
            bad_kind("try_invert");
    }
}

}  // namespace banach
