// Command-line front end: read tuple files, run transforms, radius and
// spectral estimates, and the verification suite; emit JSON reports and CSV
// convergence traces.
//
// Exit codes: 0 ok, 1 property failure, 2 input error, 3 numerical breakdown,
// 4 shape/method mismatch, 5 commutativity required.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "aluthge/aluthge.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNumericalBreakdown = 3;
constexpr int kExitShapeMismatch = 4;
constexpr int kExitCommutingRequired = 5;

void emit(const aluthge::json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        aluthge::write_json_atomic(out_path, j);
}

struct ShapeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int cmd_transform(const std::string& input, int iters, double conv_tol, const std::string& out,
                  bool csv) {
    if (iters < 1) {
        std::cerr << "transform: --iters must be >= 1\n";
        return kExitInputError;
    }
    const aluthge::TupleFile tf = aluthge::read_tuple_file(input);
    const aluthge::AluthgeIteration it = aluthge::iterate_aluthge(tf.tuple, iters, conv_tol);
    aluthge::json j = aluthge::iteration_to_json(it);
    emit(j, out);
    if (csv) {
        const std::string csv_path = out.empty() ? "transform_trace.csv" : out + ".csv";
        aluthge::write_text_atomic(csv_path, aluthge::iteration_trace_csv(it));
    }
    return it.stop_reason == aluthge::StopReason::numerical_breakdown ? kExitNumericalBreakdown
                                                                      : kExitOk;
}

int cmd_radius(const std::string& input, const std::string& method, std::uint64_t seed,
               const std::string& out) {
    const aluthge::TupleFile tf = aluthge::read_tuple_file(input);
    aluthge::RadiusEstimate est;
    if (method == "joint") {
        aluthge::JointRadiusOptions opts;
        opts.seed = seed;
        est = aluthge::joint_numerical_radius(tf.tuple, opts);
    } else if (method == "single") {
        if (tf.tuple.d() != 1)
            throw ShapeMismatch("radius: method 'single' requires d = 1, got d = " +
                                std::to_string(tf.tuple.d()));
        est = aluthge::numerical_radius(tf.tuple[0]);
    } else {
        std::cerr << "radius: unknown method '" << method << "'\n";
        return kExitInputError;
    }
    emit(aluthge::radius_estimate_to_json(est), out);
    return kExitOk;
}

int cmd_spectral(const std::string& input, const std::string& method, int n_max, int max_iter,
                 double conv_tol, std::uint64_t seed, const std::string& out) {
    const aluthge::TupleFile tf = aluthge::read_tuple_file(input);
    aluthge::RadiusEstimate est;
    if (method == "gelfand") {
        est = aluthge::joint_spectral_radius_gelfand(tf.tuple, n_max);
    } else if (method == "aluthge") {
        est = aluthge::joint_spectral_radius_aluthge(tf.tuple, max_iter, conv_tol);
        if (est.params.count("breakdown") && est.params.at("breakdown") > 0.0) {
            emit(aluthge::radius_estimate_to_json(est), out);
            return kExitNumericalBreakdown;
        }
    } else if (method == "oracle") {
        est = aluthge::joint_spectral_radius_oracle(tf.tuple, seed);
    } else {
        std::cerr << "spectral: unknown method '" << method << "'\n";
        return kExitInputError;
    }
    emit(aluthge::radius_estimate_to_json(est), out);
    return kExitOk;
}

struct VerifyFlags {
    int count = -1;           // -1: keep per-property defaults
    double slack = -1.0;      // <0: keep per-property defaults
    std::string family;       // empty: keep per-property defaults
    int d_min = 0, d_max = 0, n_min = 0, n_max = 0;
    std::uint64_t seed = 42;
};

int cmd_verify(const VerifyFlags& flags, const std::string& out) {
    if (flags.count == 0) {
        std::cerr << "verify: --count must be >= 1\n";
        return kExitInputError;
    }
    std::vector<aluthge::PropertySpec> suite = aluthge::default_property_suite();
    for (auto& spec : suite) {
        if (flags.count > 0) spec.count = flags.count;
        if (flags.slack >= 0.0) spec.slack = flags.slack;
        if (!flags.family.empty()) spec.family = aluthge::family_from_string(flags.family);
        if (flags.d_min > 0) spec.d_min = flags.d_min;
        if (flags.d_max > 0) spec.d_max = std::max(flags.d_max, spec.d_min);
        if (flags.n_min > 0) spec.n_min = flags.n_min;
        if (flags.n_max > 0) spec.n_max = std::max(flags.n_max, spec.n_min);
    }
    const aluthge::VerificationReport report = aluthge::run_property_suite(suite, flags.seed);
    emit(aluthge::verification_report_to_json(report), out);
    if (report.all_passed()) return kExitOk;
    for (const auto& r : report.results) {
        if (r.fail_count == 0) continue;
        aluthge::write_text_atomic("witness-" + r.id + ".json", r.witness + "\n");
        std::cerr << "verify: property '" << r.id << "' failed " << r.fail_count
                  << " time(s); witness written to witness-" << r.id << ".json\n";
    }
    return kExitPropertyFailure;
}

int cmd_example(std::size_t samples, const std::string& out) {
    const aluthge::WorkedExampleReport rep = aluthge::reproduce_worked_example(samples);
    emit(aluthge::worked_example_report_to_json(rep), out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("ALUTHGE_LAB_THREADS")) {
        const int t = std::atoi(threads);
        if (t > 0) Eigen::setNbThreads(t);
    }

    CLI::App app{"Spherical Aluthge transform laboratory for matrix tuples"};
    app.require_subcommand(1);

    std::string input, out, method;
    int iters = 10, n_max = 64, max_iter = 200;
    double conv_tol = 1e-12;
    std::uint64_t seed = 42;
    bool csv = false;
    std::size_t samples = 1000000;
    VerifyFlags vflags;

    auto* transform = app.add_subcommand("transform", "Iterate the spherical Aluthge transform");
    transform->add_option("--input", input, "tuple JSON file")->required();
    transform->add_option("--out", out, "output JSON path (stdout if omitted)");
    transform->add_option("--iters", iters, "number of iterations");
    transform->add_option("--conv-tol", conv_tol, "norm-trace decrement convergence threshold");
    transform->add_flag("--csv", csv, "also write a (step,value,rank) CSV trace");

    auto* radius = app.add_subcommand("radius", "Numerical radius estimates");
    radius->add_option("--input", input, "tuple JSON file")->required();
    radius->add_option("--method", method, "joint | single")->default_val("joint");
    radius->add_option("--seed", seed, "multi-start seed");
    radius->add_option("--out", out, "output JSON path");

    auto* spectral = app.add_subcommand("spectral", "Joint spectral radius of a commuting tuple");
    spectral->add_option("--input", input, "tuple JSON file")->required();
    spectral->add_option("--method", method, "gelfand | aluthge | oracle")->default_val("gelfand");
    spectral->add_option("--n-max", n_max, "Gelfand power count");
    spectral->add_option("--max-iter", max_iter, "Aluthge iteration cap");
    spectral->add_option("--conv-tol", conv_tol, "Aluthge convergence threshold");
    spectral->add_option("--seed", seed, "oracle triangularization seed");
    spectral->add_option("--out", out, "output JSON path");

    auto* verify = app.add_subcommand("verify", "Run the property-verification suite");
    verify->add_option("--count", vflags.count, "samples per property (overrides defaults)");
    verify->add_option("--slack", vflags.slack, "slack override for every property");
    verify->add_option("--family", vflags.family,
                       "tuple family override (dense, commuting, normal-commuting, nilpotent, single)");
    verify->add_option("--d-min", vflags.d_min, "minimum tuple length");
    verify->add_option("--d-max", vflags.d_max, "maximum tuple length");
    verify->add_option("--n-min", vflags.n_min, "minimum matrix dimension");
    verify->add_option("--n-max", vflags.n_max, "maximum matrix dimension");
    verify->add_option("--seed", vflags.seed, "suite seed");
    verify->add_option("--out", out, "output JSON path");

    auto* example = app.add_subcommand("example", "Reproduce the 2x2 worked example");
    example->add_option("--samples", samples, "brute-force sample count");
    example->add_option("--out", out, "output JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (transform->parsed()) return cmd_transform(input, iters, conv_tol, out, csv);
        if (radius->parsed()) return cmd_radius(input, method, seed, out);
        if (spectral->parsed()) return cmd_spectral(input, method, n_max, max_iter, conv_tol, seed, out);
        if (verify->parsed()) return cmd_verify(vflags, out);
        if (example->parsed()) return cmd_example(samples, out);
    } catch (const aluthge::tuple_file_error& e) {
        std::cerr << e.what() << '\n';
        return kExitInputError;
    } catch (const aluthge::not_commuting_error& e) {
        std::cerr << e.what() << '\n';
        return kExitCommutingRequired;
    } catch (const ShapeMismatch& e) {
        std::cerr << e.what() << '\n';
        return kExitShapeMismatch;
    } catch (const aluthge::oracle_unavailable_error& e) {
        std::cerr << e.what() << '\n';
        return kExitNumericalBreakdown;
    } catch (const aluthge::numerical_error& e) {
        std::cerr << e.what() << '\n';
        return kExitNumericalBreakdown;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}
