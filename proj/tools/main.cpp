// banachlab: desk workbench for the algebra library. Subcommands operate on
// JSON-described algebras, elements, and experiment configs; `demo` prints
// worked examples with intermediate values.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <numbers>
#include <sstream>

#include "banach/arens_hoffman.hpp"
#include "banach/beurling.hpp"
#include "banach/experiments.hpp"
#include "banach/fullness.hpp"
#include "banach/io.hpp"
#include "banach/perturb.hpp"
#include "banach/resultant.hpp"

using namespace banach;
using nlohmann::json;

namespace {

json parse_json_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw CLI::ValidationError("cannot read " + arg.substr(1));
        return json::parse(in);
    }
    return json::parse(arg);
}

Poly poly_from_json(const DescriptorPtr& d, const json& j) {
    std::vector<Value> coeffs;
    for (const auto& e : j) coeffs.push_back(value_from_json(d, e));
    return Poly(d, std::move(coeffs));
}

DescriptorPtr algebra_arg(const std::string& arg) {
    return descriptor_from_json(parse_json_arg(arg));
}

DescriptorPtr extension_from_args(const std::string& algebra, const std::string& alpha,
                                  double t_flag) {
    const DescriptorPtr base = algebra_arg(algebra);
    const MonicPoly modulus{poly_from_json(base, parse_json_arg(alpha))};
    std::optional<double> t;
    if (t_flag > 0.0) t = t_flag;
    return make_extension(base, modulus, t);
}

void print_value(const char* label, const Value& v) {
    std::cout << label << ": " << to_string(v) << "\n";
}

int report_invert(const InvertOutcome& out) {
    switch (out.status) {
        case InvertStatus::invertible:
            std::cout << "invertible\n";
            print_value("inverse", *out.inverse);
            std::cout << "residual: " << out.residual << "\n";
            return 0;
        case InvertStatus::not_invertible:
            std::cout << "not invertible\n";
            if (out.coordinate >= 0) std::cout << "witness coordinate: " << out.coordinate << "\n";
            if (out.annulus_root) {
                std::cout << "witness annulus root: " << out.annulus_root->real() << "+"
                          << out.annulus_root->imag() << "i (|.| = " << std::abs(*out.annulus_root)
                          << ")\n";
            }
            if (out.resultant_witness) print_value("witness resultant", *out.resultant_witness);
            return 0;
        case InvertStatus::certification_failure:
            std::cout << "certification failure: " << out.note << "\n";
            return 3;
    }
    return 3;
}

// --- demos ---

void demo_square_root_resultant(std::uint64_t seed) {
    std::cout << "Square-root modulus identity check: res(x^2 - a0, b0 + b1 x) = b0^2 - a0 b1^2\n\n";
    Rng rng(seed);
    const DescriptorPtr c1 = Descriptor::finite_space(1);
    for (int round = 0; round < 3; ++round) {
        const Value a0 = Value::finite(c1, {rng.disc(2.0)});
        const Value b0 = Value::finite(c1, {rng.disc(2.0)});
        const Value b1 = Value::finite(c1, {rng.disc(2.0)});
        const MonicPoly alpha = MonicPoly::from_tail(c1, {neg(a0), zero(c1)});
        const Poly beta(c1, {b0, b1});
        const SquareMatrix m = sylvester_matrix(alpha, beta);
        std::cout << "a0 = " << to_string(a0) << ", b0 = " << to_string(b0)
                  << ", b1 = " << to_string(b1) << "\n";
        std::cout << "coefficient matrix (3x3):\n";
        for (int r = 0; r < m.size(); ++r) {
            std::cout << "  [";
            for (int c = 0; c < m.size(); ++c) {
                std::cout << (c ? ", " : " ") << to_string(m.at(r, c));
            }
            std::cout << " ]\n";
        }
        const Value det = resultant(alpha, beta);
        const Value closed = sub(mul(b0, b0), mul(a0, mul(b1, b1)));
        print_value("determinant", det);
        print_value("closed form", closed);
        std::cout << "difference: " << distance(det, closed) << "\n\n";
    }
    const DescriptorPtr c3 = Descriptor::finite_space(3);
    std::cout << "Over C^3 the identity holds coordinatewise:\n";
    Rng rng3(seed + 1);
    std::vector<Complex> av, bv, cv;
    for (int i = 0; i < 3; ++i) {
        av.push_back(rng3.disc(2.0));
        bv.push_back(rng3.disc(2.0));
        cv.push_back(rng3.disc(2.0));
    }
    const Value a0 = Value::finite(c3, av), b0 = Value::finite(c3, bv), b1 = Value::finite(c3, cv);
    const MonicPoly alpha = MonicPoly::from_tail(c3, {neg(a0), zero(c3)});
    const Value det = resultant(alpha, Poly(c3, {b0, b1}));
    print_value("determinant ", det);
    print_value("closed form ", sub(mul(b0, b0), mul(a0, mul(b1, b1))));
}

void demo_example_1_2() {
    std::cout << "Circle rationals with poles off the circle and off 2, sampled on 64 points.\n"
              << "z - 2 is invertible in the ambient algebra, but its inverse is not in the\n"
              << "sampled span: a non-fullness witness.\n\n";
    const int points = 64;
    const DescriptorPtr d = Descriptor::finite_space(points);
    auto circle_fn = [&](auto&& f) {
        std::vector<Complex> data(static_cast<std::size_t>(points));
        for (int j = 0; j < points; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / points;
            data[static_cast<std::size_t>(j)] = f(Complex(std::cos(theta), std::sin(theta)));
        }
        return Value::finite(d, std::move(data));
    };
    std::vector<Value> sample;
    for (int k = 0; k <= 9; ++k) sample.push_back(circle_fn([k](Complex z) { return std::pow(z, k); }));
    for (int k = 1; k <= 9; ++k) sample.push_back(circle_fn([k](Complex z) { return std::pow(z, -k); }));
    sample.push_back(circle_fn([](Complex z) { return 1.0 / (z - 3.0); }));
    const Value x = circle_fn([](Complex z) { return z - 2.0; });

    const FullnessVerdict verdict = is_full_subalgebra_witness(sample, x);
    std::cout << "sampled basis size: " << sample.size() << "\n";
    std::cout << "ambient inverse exists: " << (verdict.ambient_inverse ? "yes" : "no") << "\n";
    std::cout << "inverse-to-span residual (sup norm): " << verdict.span_residual << "\n";
    std::cout << "verdict: "
              << (verdict.kind == FullnessKind::non_fullness_witness ? "non-fullness witness"
                                                                     : "consistent with fullness")
              << "\n";
}

void demo_x_bar_inverse() {
    std::cout << "In C[x]/(x^2 - 1), the coset of x squares to 1 and is its own inverse.\n\n";
    const DescriptorPtr c1 = Descriptor::finite_space(1);
    const MonicPoly alpha = MonicPoly::from_tail(c1, {scale(one(c1), {-1.0, 0.0}), zero(c1)});
    const DescriptorPtr ext = make_extension(c1, alpha);
    std::cout << "norm parameter t = " << norm_parameter(ext) << "\n";
    const Value xbar = coset_x(ext);
    print_value("x squared", mul(xbar, xbar));
    print_value("resultant of x", resultant(alpha, representative(xbar)));
    const InvertOutcome inv = try_invert(xbar);
    print_value("inverse", *inv.inverse);
    std::cout << "residual: " << inv.residual << "\n\n";

    const Value stuck = add(one(ext), xbar);
    print_value("1 + x", stuck);
    print_value("its resultant", resultant(alpha, representative(stuck)));
    std::cout << "1 + x invertible: " << (try_invert(stuck).ok() ? "yes" : "no")
              << " (zero divisor: (1+x)(1-x) = " << to_string(mul(stuck, sub(one(ext), xbar)))
              << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for dense-invertible-group experiments in commutative Banach algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    double tol = kInvertTolerance;
    std::string out;
    app.add_option("--seed", seed, "global random seed");
    app.add_option("--tol", tol, "inverse certificate tolerance");
    app.add_option("--out", out, "output path prefix (experiment reports)");

    std::string algebra_json = R"({"kind":"finite-space","points":1})";
    std::string alpha_json, beta_json, element_json, weight_json, poly_json, entries_json, sigma_csv;
    double epsilon = 1e-2;
    double t_flag = 0.0;
    int samples = 200;
    int size = 3;

    auto* resultant_cmd = app.add_subcommand("resultant", "resultant of a monic modulus against a polynomial");
    resultant_cmd->add_option("--algebra", algebra_json, "coefficient algebra descriptor JSON (or @file)");
    resultant_cmd->add_option("--alpha", alpha_json, "monic modulus coefficients, low degree first")->required();
    resultant_cmd->add_option("--beta", beta_json, "polynomial coefficients, low degree first")->required();

    auto* ah_cmd = app.add_subcommand("ah-invert", "invertibility in the extension by a monic modulus");
    ah_cmd->add_option("--algebra", algebra_json, "base algebra descriptor JSON");
    ah_cmd->add_option("--alpha", alpha_json, "monic modulus coefficients")->required();
    ah_cmd->add_option("--t", t_flag, "norm parameter (omit to auto-select)");
    ah_cmd->add_option("--element", element_json, "representative coefficients, degree < n")->required();

    auto* perturb_cmd = app.add_subcommand("perturb", "perturb an extension element to an invertible one");
    perturb_cmd->add_option("--algebra", algebra_json, "base algebra descriptor JSON");
    perturb_cmd->add_option("--alpha", alpha_json, "monic modulus coefficients")->required();
    perturb_cmd->add_option("--t", t_flag, "norm parameter (omit to auto-select)");
    perturb_cmd->add_option("--element", element_json, "representative coefficients")->required();
    perturb_cmd->add_option("--epsilon", epsilon, "perturbation budget");
    perturb_cmd->add_option("--samples", samples, "max samples per stage");

    auto* matrix_cmd = app.add_subcommand("matrix-perturb", "perturb permutation entries of a square matrix");
    matrix_cmd->add_option("--algebra", algebra_json, "entry algebra descriptor JSON");
    matrix_cmd->add_option("--size", size, "matrix dimension");
    matrix_cmd->add_option("--entries", entries_json, "row-major k*k entry values")->required();
    matrix_cmd->add_option("--sigma", sigma_csv, "permutation, comma separated (default identity)");
    matrix_cmd->add_option("--epsilon", epsilon, "perturbation budget");

    auto* beurling_cmd = app.add_subcommand("beurling", "spectrum, winding, and obstruction report");
    beurling_cmd->add_option("--weight", weight_json, "weight JSON")->required();
    beurling_cmd->add_option("--element", element_json, "Laurent element {lo, coeffs}")->required();

    auto* disc_cmd = app.add_subcommand("disc-closure", "closure-of-invertibles verdict for a polynomial");
    disc_cmd->add_option("--poly", poly_json, "scalar coefficients [[re,im],...], low degree first")->required();

    auto* demo_cmd = app.add_subcommand("demo", "print a worked example");
    std::string demo_name;
    demo_cmd->add_option("name", demo_name, "square-root-resultant | example-1-2 | x-bar-inverse")->required();

    auto* exp_cmd = app.add_subcommand("experiment", "batch experiment harness");
    auto* run_cmd = exp_cmd->add_subcommand("run", "run a config and write CSV + JSON reports");
    std::string config_path;
    run_cmd->add_option("config", config_path, "experiment config JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*resultant_cmd) {
            const DescriptorPtr d = algebra_arg(algebra_json);
            const MonicPoly alpha{poly_from_json(d, parse_json_arg(alpha_json))};
            const Poly beta = poly_from_json(d, parse_json_arg(beta_json));
            const Value r = resultant(alpha, beta);
            print_value("resultant", r);
            print_value("via multiplication matrix", resultant_via_multiplication_matrix(alpha, beta));
            std::cout << "resultant invertibility in the coefficient algebra:\n";
            return report_invert(try_invert(r, tol));
        }
        if (*ah_cmd) {
            const DescriptorPtr ext = extension_from_args(algebra_json, alpha_json, t_flag);
            std::cout << "norm parameter t = " << norm_parameter(ext) << "\n";
            const Value u = element_from_poly(
                ext, poly_from_json(ext->ah_data().base, parse_json_arg(element_json)));
            return report_invert(try_invert(u, tol));
        }
        if (*perturb_cmd) {
            const DescriptorPtr ext = extension_from_args(algebra_json, alpha_json, t_flag);
            const Value u = element_from_poly(
                ext, poly_from_json(ext->ah_data().base, parse_json_arg(element_json)));
            PerturbConfig cfg;
            cfg.epsilon = epsilon;
            cfg.rng_seed = seed;
            cfg.max_samples_per_stage = samples;
            const PerturbResult r = perturb_to_invertible(u, cfg);
            print_value("perturbed element", r.element);
            std::cout << "trace: " << trace_to_json(r.trace).dump(2) << "\n";
            return 0;
        }
        if (*matrix_cmd) {
            const DescriptorPtr d = algebra_arg(algebra_json);
            const json entries = parse_json_arg(entries_json);
            if (static_cast<int>(entries.size()) != size * size) {
                throw std::invalid_argument("expected size*size entries");
            }
            SquareMatrix b(d, size);
            for (int r = 0; r < size; ++r) {
                for (int c = 0; c < size; ++c) {
                    b.set(r, c, value_from_json(d, entries[static_cast<std::size_t>(r * size + c)]));
                }
            }
            std::vector<int> sigma;
            if (sigma_csv.empty()) {
                for (int i = 0; i < size; ++i) sigma.push_back(i);
            } else {
                std::stringstream ss(sigma_csv);
                std::string tok;
                while (std::getline(ss, tok, ',')) sigma.push_back(std::stoi(tok));
            }
            Rng rng(seed);
            const MatrixPerturbResult r = matrix_perturb(b, epsilon, sigma, rng);
            std::cout << "shift s = " << r.shift.real() << "+" << r.shift.imag() << "i (|s| = "
                      << std::abs(r.shift) << "), samples = " << r.samples_used << "\n";
            std::cout << "determinant of the perturbed matrix:\n";
            return report_invert(r.det_certificate);
        }
        if (*beurling_cmd) {
            const DescriptorPtr d = Descriptor::beurling(weight_from_json(parse_json_arg(weight_json)));
            const Value x = value_from_json(d, parse_json_arg(element_json));
            const AnnulusSpectrum s = annulus_of(x);
            std::cout << "annulus: [" << s.rho_minus << ", " << s.rho_plus << "]\n";
            for (const auto& r : gelfand_roots(x)) {
                std::cout << "root " << r.location.real() << "+" << r.location.imag()
                          << "i  |.| = " << r.modulus << "\n";
            }
            const int rc = report_invert(try_invert(x, tol));
            try {
                const ObstructionReport rep = obstruction_verdict(x, s);
                std::cout << "winding pair: (" << rep.windings.inner << ", " << rep.windings.outer
                          << ")\n";
                std::cout << "verdict: "
                          << (rep.verdict == ObstructionVerdict::obstructed ? "obstructed"
                                                                            : "unobstructed")
                          << ", stability radius >= " << rep.stability_radius << "\n";
            } catch (const BoundaryVanishError& e) {
                std::cout << "winding undefined: " << e.what() << "\n";
            }
            return rc;
        }
        if (*disc_cmd) {
            std::vector<Complex> coeffs;
            for (const auto& e : parse_json_arg(poly_json)) {
                coeffs.push_back({e[0].get<double>(), e[1].get<double>()});
            }
            switch (disc_closure_membership(coeffs)) {
                case DiscClosureVerdict::in_closure:
                    std::cout << "in closure of the invertibles\n";
                    break;
                case DiscClosureVerdict::not_in_closure:
                    std::cout << "not in closure (zero strictly inside the circle)\n";
                    break;
                case DiscClosureVerdict::is_zero:
                    std::cout << "zero polynomial (zero set is the whole disc)\n";
                    break;
            }
            return 0;
        }
        if (*demo_cmd) {
            if (demo_name == "square-root-resultant") {
                demo_square_root_resultant(seed ? seed : 2);
            } else if (demo_name == "example-1-2") {
                demo_example_1_2();
            } else if (demo_name == "x-bar-inverse") {
                demo_x_bar_inverse();
            } else {
                std::cerr << "unknown demo: " << demo_name
                          << " (try square-root-resultant, example-1-2, x-bar-inverse)\n";
                return 2;
            }
            return 0;
        }
        if (*run_cmd) {
            std::ifstream in(config_path);
            if (!in) {
                std::cerr << "cannot read " << config_path << "\n";
                return 2;
            }
            json cfg_json = json::parse(in);
            if (!out.empty()) cfg_json["out"] = out;
            if (seed != 0) cfg_json["seed"] = seed;
            const ExperimentReport rep = run_experiment(ExperimentConfig::from_json(cfg_json));
            std::cout << rep.summary.dump(2) << "\n";
            std::cout << "wrote " << rep.csv_path << " and " << rep.json_path << "\n";
            return rep.thresholds_met ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
