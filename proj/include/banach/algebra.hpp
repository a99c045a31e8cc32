#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "banach/weight.hpp"

namespace banach {

using Complex = std::complex<double>;

class Value;
class Descriptor;
using DescriptorPtr = std::shared_ptr<const Descriptor>;

struct DescriptorMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Default residual bound for inverse certificates.
inline constexpr double kInvertTolerance = 1e-9;
// Coordinate cut for finite-space invertibility, relative to the sup norm.
inline constexpr double kSingularThreshold = 1e-12;
// Relative band around the annulus boundary inside which a Gelfand root is
// treated as on-spectrum.
inline constexpr double kAnnulusTolerance = 1e-9;
// Truncation window cap when certifying inverses of weighted Laurent elements.
inline constexpr long kTruncationBudget = 1l << 15;

// A concrete commutative unital algebra. Descriptors are immutable, shared,
// and compared structurally: elements interoperate exactly when their
// descriptors compare equal.
class Descriptor : public std::enable_shared_from_this<Descriptor> {
public:
    enum class Kind { finite_space, beurling, matrix_over, arens_hoffman };

    struct FiniteSpace {
        int points = 1;
    };
    struct Beurling {
        WeightSequence weight;
    };
    struct MatrixOver {
        DescriptorPtr base;
        int size = 1;
    };
    struct ArensHoffman {
        DescriptorPtr base;
        std::vector<Value> alpha_tail;  // a_0..a_{n-1}; the x^n coefficient is the unit
        double t = 1.0;                 // norm parameter
    };

    static DescriptorPtr finite_space(int points);
    static DescriptorPtr beurling(WeightSequence weight);
    static DescriptorPtr matrix_over(DescriptorPtr base, int size);
    // Callers normally go through make_extension, which selects/validates t.
    static DescriptorPtr arens_hoffman(DescriptorPtr base, std::vector<Value> alpha_tail, double t);

    Kind kind() const;
    const FiniteSpace& finite() const { return std::get<FiniteSpace>(data_); }
    const Beurling& beurling_data() const { return std::get<Beurling>(data_); }
    const MatrixOver& matrix_data() const { return std::get<MatrixOver>(data_); }
    const ArensHoffman& ah_data() const { return std::get<ArensHoffman>(data_); }

    std::string describe() const;

private:
    explicit Descriptor(std::variant<FiniteSpace, Beurling, MatrixOver, ArensHoffman> data)
        : data_(std::move(data)) {}

    std::variant<FiniteSpace, Beurling, MatrixOver, ArensHoffman> data_;
};

bool same_descriptor(const DescriptorPtr& a, const DescriptorPtr& b);
void require_same_descriptor(const DescriptorPtr& a, const DescriptorPtr& b, const char* where);

// An element of a concrete algebra: the descriptor plus a coefficient
// representation. Values are immutable; every operation returns a fresh one.
class Value {
public:
    // Finitely supported two-sided coefficient sequence; canonical form has
    // nonzero first/last coefficients (zero element: empty coeffs, lo = 0).
    struct Laurent {
        long lo = 0;
        std::vector<Complex> coeffs;
        long hi() const { return lo + static_cast<long>(coeffs.size()) - 1; }
        bool operator==(const Laurent&) const = default;
    };
    // Canonical representative of degree < n over the base algebra;
    // exactly n entries, low degree first.
    struct Rep {
        std::vector<Value> coeffs;
    };

    static Value finite(DescriptorPtr desc, std::vector<Complex> data);
    static Value laurent(DescriptorPtr desc, long lo, std::vector<Complex> coeffs);
    // rep must already have degree < n; use element_from_poly to reduce.
    static Value extension(DescriptorPtr desc, std::vector<Value> rep);

    const DescriptorPtr& descriptor() const { return desc_; }
    Descriptor::Kind kind() const;

    const std::vector<Complex>& finite_data() const { return std::get<std::vector<Complex>>(data_); }
    const Laurent& laurent_data() const { return std::get<Laurent>(data_); }
    std::span<const Value> rep() const { return std::get<Rep>(data_).coeffs; }

    bool is_zero() const;  // exact coefficient test

private:
    Value(DescriptorPtr desc, std::variant<std::vector<Complex>, Laurent, Rep> data)
        : desc_(std::move(desc)), data_(std::move(data)) {}

    DescriptorPtr desc_;
    std::variant<std::vector<Complex>, Laurent, Rep> data_;
};

Value zero(const DescriptorPtr& desc);
Value one(const DescriptorPtr& desc);
// c * delta_k in a weighted convolution algebra.
Value unit_delta(const DescriptorPtr& desc, long k, Complex c = Complex(1.0, 0.0));

Value add(const Value& x, const Value& y);
Value sub(const Value& x, const Value& y);
Value neg(const Value& x);
Value scale(const Value& x, Complex lambda);
Value mul(const Value& x, const Value& y);
double norm(const Value& x);
double distance(const Value& x, const Value& y);
bool exactly_equal(const Value& x, const Value& y);

inline Value operator+(const Value& x, const Value& y) { return add(x, y); }
inline Value operator-(const Value& x, const Value& y) { return sub(x, y); }
inline Value operator-(const Value& x) { return neg(x); }
inline Value operator*(const Value& x, const Value& y) { return mul(x, y); }
inline Value operator*(Complex lambda, const Value& x) { return scale(x, lambda); }

std::string to_string(const Value& x);

enum class InvertStatus { invertible, not_invertible, certification_failure };

// Outcome of an invertibility query. On success carries the inverse and the
// certified residual ||x * inverse - 1||. On refusal carries a witness:
// the offending coordinate (finite-space), a Gelfand zero in the annulus
// (weighted Laurent), or the non-invertible resultant (extensions).
// certification_failure means the verdict machinery could not certify a
// mathematically invertible element (truncation budget, conditioning).
struct InvertOutcome {
    InvertStatus status = InvertStatus::not_invertible;
    std::optional<Value> inverse;
    double residual = 0.0;
    int coordinate = -1;
    std::optional<Complex> annulus_root;
    std::shared_ptr<const Value> resultant_witness;
    std::string note;

    bool ok() const { return status == InvertStatus::invertible; }
};

InvertOutcome try_invert(const Value& x, double tolerance = kInvertTolerance);

}  // namespace banach
