#include "banach/perturb.hpp"

#include <cmath>
#include <functional>

#include "banach/arens_hoffman.hpp"

namespace banach {

int PerturbTrace::total_samples() const {
    int total = 0;
    for (const auto& s : stages) total += s.samples_used;
    return total;
}

Value sample_in_ball(const Value& center, double radius, Rng& rng) {
    switch (center.kind()) {
        case Descriptor::Kind::finite_space: {
            std::vector<Complex> out = center.finite_data();
            for (Complex& c : out) c += rng.disc(radius);
            return Value::finite(center.descriptor(), std::move(out));
        }
        case Descriptor::Kind::beurling: {
            const auto& data = center.laurent_data();
            const auto& w = center.descriptor()->beurling_data().weight;
            const long lo = data.coeffs.empty() ? 0 : data.lo;
            const std::size_t count = data.coeffs.empty() ? 1 : data.coeffs.size();
            std::vector<Complex> out(data.coeffs);
            out.resize(count, Complex(0.0, 0.0));
            // Split the norm budget evenly over the support window.
            for (std::size_t i = 0; i < count; ++i) {
                const double per = radius / (static_cast<double>(count) * w.at(lo + static_cast<long>(i)));
                out[i] += rng.disc(per);
            }
            return Value::laurent(center.descriptor(), lo, std::move(out));
        }
        case Descriptor::Kind::arens_hoffman: {
            const double t = center.descriptor()->ah_data().t;
            const std::size_t n = center.rep().size();
            std::vector<Value> out;
            out.reserve(n);
            double tj = 1.0;
            for (const Value& c : center.rep()) {
                out.push_back(sample_in_ball(c, radius / (static_cast<double>(n) * tj), rng));
                tj *= t;
            }
            return Value::extension(center.descriptor(), std::move(out));
        }
        default:
            throw std::invalid_argument("sample_in_ball: unsupported algebra kind");
    }
}

namespace {

struct BallSearch {
    Value chosen;
    InvertOutcome certificate;
    int samples_used = 0;
};

// Rejection sampling against an invertibility predicate, shrinking the radius
// every 25 misses while staying inside the original ball.
std::optional<BallSearch> search_ball(const Value& center, double radius, Rng& rng,
                                      int max_samples, double shrink_factor,
                                      const std::function<InvertOutcome(const Value&)>& probe) {
    double current = radius;
    for (int i = 0; i < max_samples; ++i) {
        if (i > 0 && i % 25 == 0) current *= shrink_factor;
        Value candidate = sample_in_ball(center, current, rng);
        InvertOutcome outcome = probe(candidate);
        if (outcome.ok()) {
            return BallSearch{std::move(candidate), std::move(outcome), i + 1};
        }
    }
    return std::nullopt;
}

}  // namespace

BaseSearchResult perturb_in_base(const Value& a, double epsilon, Rng& rng, int max_samples,
                                 double shrink_factor) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("perturb_in_base: epsilon must be positive");
    auto found = search_ball(a, epsilon, rng, max_samples, shrink_factor,
                             [](const Value& v) { return try_invert(v); });
    if (!found) {
        throw ExhaustedError("no invertible element found within the sample budget");
    }
    return {std::move(found->chosen), found->samples_used, std::move(found->certificate)};
}

PerturbResult perturb_to_invertible(const Value& u, const PerturbConfig& cfg) {
    if (u.kind() != Descriptor::Kind::arens_hoffman) {
        throw std::invalid_argument("perturb_to_invertible: input must be an extension element");
    }
    if (!(cfg.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (cfg.max_samples_per_stage < 1) throw std::invalid_argument("sample budget must be >= 1");
    if (!(cfg.shrink_factor > 0.0 && cfg.shrink_factor < 1.0)) {
        throw std::invalid_argument("shrink factor must lie in (0, 1)");
    }

    const DescriptorPtr& d = u.descriptor();
    const MonicPoly alpha = extension_modulus(d);
    const int n = alpha.degree();
    const double step = cfg.epsilon / static_cast<double>(n);
    Rng root_rng(cfg.rng_seed);

    std::vector<Value> b_tail(u.rep().begin() + 1, u.rep().end());
    const ResultantPolynomial p = resultant_poly_in_c(alpha, b_tail);
    const std::vector<PolyMap> derivatives = formal_derivatives(p);

    PerturbTrace trace{.stages = {}, .final_b0 = u.rep()[0], .achieved_distance = 0.0,
                       .resultant_certificate = {}};

    // Chain of anchors: the derivative of order n-k must become invertible at
    // the k-th anchor before the next step down.
    Value anchor = u.rep()[0];
    for (int k = 1; k <= n - 1; ++k) {
        const PolyMap& map = derivatives[static_cast<std::size_t>(n - k)];
        Rng stage_rng = root_rng.derive(static_cast<std::uint64_t>(k));
        auto found = search_ball(anchor, step, stage_rng, cfg.max_samples_per_stage, cfg.shrink_factor,
                                 [&map](const Value& c) { return try_invert(map.eval(c)); });
        if (!found) throw StageExhaustedError(k);
        trace.stages.push_back({k, found->chosen, found->samples_used, distance(found->chosen, anchor)});
        anchor = std::move(found->chosen);
    }

    // Final draw: accept on the certified resultant of the full representative.
    std::vector<Value> rep(u.rep().begin(), u.rep().end());
    Rng final_rng = root_rng.derive(static_cast<std::uint64_t>(n));
    auto probe = [&](const Value& c) {
        rep[0] = c;
        return try_invert(resultant(alpha, Poly(d->ah_data().base, rep)));
    };
    auto found = search_ball(anchor, step, final_rng, cfg.max_samples_per_stage, cfg.shrink_factor, probe);
    if (!found) throw StageExhaustedError(n);

    trace.stages.push_back({n, found->chosen, found->samples_used, distance(found->chosen, anchor)});
    trace.final_b0 = found->chosen;
    trace.resultant_certificate = std::move(found->certificate);

    rep[0] = trace.final_b0;
    Value result = Value::extension(d, std::move(rep));
    trace.achieved_distance = distance(result, u);
    return {std::move(result), std::move(trace)};
}

MatrixPerturbResult matrix_perturb(const SquareMatrix& b, double epsilon, std::span<const int> sigma,
                                   Rng& rng, int max_samples, double shrink_factor) {
    const int k = b.size();
    if (!(epsilon > 0.0)) throw std::invalid_argument("matrix_perturb: epsilon must be positive");
    if (static_cast<int>(sigma.size()) != k) {
        throw std::invalid_argument("matrix_perturb: sigma must have one entry per row");
    }
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int v : sigma) {
        if (v < 0 || v >= k || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("matrix_perturb: sigma is not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }

    const Value unit = one(b.entry_descriptor());
    double radius = epsilon / static_cast<double>(k);
    for (int attempt = 0; attempt < max_samples; ++attempt) {
        if (attempt > 0 && attempt % 25 == 0) radius *= shrink_factor;
        const Complex s = rng.circle(radius * (1.0 - 1e-12));
        SquareMatrix candidate = b;
        for (int m = 0; m < k; ++m) {
            candidate.set(m, sigma[static_cast<std::size_t>(m)],
                          add(b.at(m, sigma[static_cast<std::size_t>(m)]), scale(unit, s)));
        }
        InvertOutcome det_outcome = try_invert(berkowitz_det(candidate));
        if (det_outcome.ok()) {
            return {std::move(candidate), s, attempt + 1, std::move(det_outcome)};
        }
    }
    throw ExhaustedError("matrix_perturb: sample budget exhausted");
}

std::vector<Value> nth_power_approximants(const Value& a, const MonicPoly& alpha,
                                          std::span<const double> epsilons, std::uint64_t seed,
                                          int max_samples_per_stage) {
    require_same_descriptor(a.descriptor(), alpha.descriptor(), "nth_power_approximants");
    const DescriptorPtr ext = make_extension(a.descriptor(), alpha);
    const Value u = embed(a, ext);
    Rng rng(seed);
    std::vector<Value> out;
    out.reserve(epsilons.size());
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        PerturbConfig cfg;
        cfg.epsilon = epsilons[i];
        cfg.max_samples_per_stage = max_samples_per_stage;
        cfg.rng_seed = rng.derive(i).next_u64();
        PerturbResult r = perturb_to_invertible(u, cfg);
        out.push_back(resultant(alpha, representative(r.element)));
    }
    return out;
}

}  // namespace banach
