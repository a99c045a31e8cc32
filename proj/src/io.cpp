#include "banach/io.hpp"

#include <nlohmann/json.hpp>

#include "banach/arens_hoffman.hpp"

namespace banach {

using nlohmann::json;

json weight_to_json(const WeightSequence& w) {
    switch (w.kind()) {
        case WeightSequence::Kind::constant:
            return {{"kind", "constant"}};
        case WeightSequence::Kind::geometric:
            return {{"kind", "geometric"}, {"r", w.ratio()}};
        case WeightSequence::Kind::one_sided:
            return {{"kind", "one_sided"}, {"r", w.ratio()}};
        case WeightSequence::Kind::table:
            return {{"kind", "table"},
                    {"window", {{"lo", w.table_lo()}, {"values", w.table_values()}}},
                    {"extension", "geometric"},
                    {"r_pos", w.ratio_pos()},
                    {"r_neg", w.ratio_neg()}};
    }
    throw std::logic_error("unreachable weight kind");
}

WeightSequence weight_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") return WeightSequence::constant();
    if (kind == "geometric") return WeightSequence::geometric(j.at("r").get<double>());
    if (kind == "one_sided") return WeightSequence::one_sided(j.at("r").get<double>());
    if (kind == "table") {
        if (j.value("extension", "geometric") != "geometric") {
            throw std::invalid_argument("weight table extension rule must be \"geometric\"");
        }
        const auto& window = j.at("window");
        const double r_default = j.value("r", 1.0);
        return WeightSequence::table(window.at("lo").get<long>(),
                                     window.at("values").get<std::vector<double>>(),
                                     j.value("r_pos", r_default), j.value("r_neg", r_default));
    }
    throw std::invalid_argument("unknown weight kind: " + kind);
}

namespace {

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex values are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json value_to_json(const Value& v) {
    switch (v.kind()) {
        case Descriptor::Kind::finite_space: {
            json out = json::array();
            for (Complex c : v.finite_data()) out.push_back(complex_to_json(c));
            return out;
        }
        case Descriptor::Kind::beurling: {
            json coeffs = json::array();
            for (Complex c : v.laurent_data().coeffs) coeffs.push_back(complex_to_json(c));
            return {{"lo", v.laurent_data().lo}, {"coeffs", coeffs}};
        }
        case Descriptor::Kind::arens_hoffman: {
            json rep = json::array();
            for (const Value& c : v.rep()) rep.push_back(value_to_json(c));
            return {{"rep", rep}};
        }
        default:
            throw std::invalid_argument("matrix elements are not serialized as values");
    }
}

Value value_from_json(const DescriptorPtr& desc, const json& j) {
    switch (desc->kind()) {
        case Descriptor::Kind::finite_space: {
            std::vector<Complex> data;
            for (const auto& e : j) data.push_back(complex_from_json(e));
            return Value::finite(desc, std::move(data));
        }
        case Descriptor::Kind::beurling: {
            std::vector<Complex> coeffs;
            for (const auto& e : j.at("coeffs")) coeffs.push_back(complex_from_json(e));
            return Value::laurent(desc, j.at("lo").get<long>(), std::move(coeffs));
        }
        case Descriptor::Kind::arens_hoffman: {
            std::vector<Value> rep;
            const DescriptorPtr& base = desc->ah_data().base;
            for (const auto& e : j.at("rep")) rep.push_back(value_from_json(base, e));
            return Value::extension(desc, std::move(rep));
        }
        default:
            throw std::invalid_argument("matrix elements are not deserialized as values");
    }
}

json descriptor_to_json(const DescriptorPtr& d) {
    switch (d->kind()) {
        case Descriptor::Kind::finite_space:
            return {{"kind", "finite-space"}, {"points", d->finite().points}};
        case Descriptor::Kind::beurling:
            return {{"kind", "beurling"}, {"weight", weight_to_json(d->beurling_data().weight)}};
        case Descriptor::Kind::matrix_over:
            return {{"kind", "matrix-over"},
                    {"base", descriptor_to_json(d->matrix_data().base)},
                    {"size", d->matrix_data().size}};
        case Descriptor::Kind::arens_hoffman: {
            const auto& ah = d->ah_data();
            json alpha = json::array();
            for (const Value& a : ah.alpha_tail) alpha.push_back(value_to_json(a));
            alpha.push_back(value_to_json(one(ah.base)));
            return {{"kind", "arens-hoffman-over"},
                    {"base", descriptor_to_json(ah.base)},
                    {"alpha", alpha},
                    {"t", ah.t}};
        }
    }
    throw std::logic_error("unreachable descriptor kind");
}

DescriptorPtr descriptor_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite-space") return Descriptor::finite_space(j.at("points").get<int>());
    if (kind == "beurling") return Descriptor::beurling(weight_from_json(j.at("weight")));
    if (kind == "matrix-over") {
        return Descriptor::matrix_over(descriptor_from_json(j.at("base")), j.at("size").get<int>());
    }
    if (kind == "arens-hoffman-over") {
        const DescriptorPtr base = descriptor_from_json(j.at("base"));
        const auto& alpha_json = j.at("alpha");
        if (!alpha_json.is_array() || alpha_json.size() < 2) {
            throw std::invalid_argument("alpha must list at least two coefficients");
        }
        std::vector<Value> coeffs;
        for (const auto& e : alpha_json) coeffs.push_back(value_from_json(base, e));
        MonicPoly alpha{Poly(base, std::move(coeffs))};
        std::optional<double> t;
        if (j.contains("t") && !j.at("t").is_null()) t = j.at("t").get<double>();
        return make_extension(base, alpha, t);
    }
    throw std::invalid_argument("unknown descriptor kind: " + kind);
}

json trace_to_json(const PerturbTrace& trace) {
    json stages = json::array();
    for (const auto& s : trace.stages) {
        stages.push_back({{"k", s.k}, {"samples_used", s.samples_used}, {"displacement", s.displacement}});
    }
    return {{"stages", stages},
            {"achieved_distance", trace.achieved_distance},
            {"resultant_residual", trace.resultant_certificate.residual}};
}

}  // namespace banach
