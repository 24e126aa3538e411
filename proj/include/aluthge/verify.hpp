#ifndef ALUTHGE_VERIFY_HPP
#define ALUTHGE_VERIFY_HPP

// Seeded property-verification harness: every inequality the library claims
// to realize is checked over generated tuple families, with failing tuples
// serialized as replayable witnesses.

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aluthge/io.hpp"
#include "aluthge/radii.hpp"

namespace aluthge {

enum class TupleFamily { dense, commuting, normal_commuting, nilpotent, single };

inline const char* to_string(TupleFamily f) {
    switch (f) {
        case TupleFamily::dense: return "dense";
        case TupleFamily::commuting: return "commuting";
        case TupleFamily::normal_commuting: return "normal-commuting";
        case TupleFamily::nilpotent: return "nilpotent";
        case TupleFamily::single: return "single";
    }
    return "unknown";
}

inline TupleFamily family_from_string(const std::string& s) {
    if (s == "dense") return TupleFamily::dense;
    if (s == "commuting") return TupleFamily::commuting;
    if (s == "normal-commuting") return TupleFamily::normal_commuting;
    if (s == "nilpotent") return TupleFamily::nilpotent;
    if (s == "single") return TupleFamily::single;
    throw std::invalid_argument("unknown tuple family '" + s + "'");
}

namespace gen {

// Polynomials in one matrix commute; degree capped so norms stay desk-scale.
inline OperatorTuple polynomials_in(const ComplexMatrix& a, int d, std::mt19937_64& rng) {
    const Eigen::Index n = a.rows();
    const int deg = static_cast<int>(std::min<Eigen::Index>(n - 1, 3));
    std::vector<ComplexMatrix> powers{ComplexMatrix::Identity(n, n)};
    for (int p = 1; p <= deg; ++p) powers.push_back(powers.back() * a);
    std::vector<ComplexMatrix> out;
    out.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        ComplexMatrix m = ComplexMatrix::Zero(n, n);
        for (const auto& pw : powers) m += standard_complex_normal(rng) * pw;
        out.push_back(std::move(m));
    }
    return OperatorTuple(std::move(out));
}

// Commuting and simultaneously upper triangular: polynomials in one
// nonderogatory upper-triangular matrix.  The strictly upper part is damped so
// the eigenvector basis stays well conditioned; otherwise the transient in
// ||T^n||^{1/n} dominates far past desk-scale n and every finite-n estimate of
// the spectral radius is useless.
inline OperatorTuple commuting_upper_triangular(int d, Eigen::Index n, std::mt19937_64& rng) {
    ComplexMatrix a = random_dense(n, rng).triangularView<Eigen::Upper>();
    a.triangularView<Eigen::StrictlyUpper>() *= 0.1;
    return polynomials_in(a, d, rng);
}

inline OperatorTuple random_tuple(TupleFamily family, int d, Eigen::Index n,
                                  std::mt19937_64& rng) {
    switch (family) {
        case TupleFamily::dense: {
            std::vector<ComplexMatrix> out;
            for (int k = 0; k < d; ++k) out.push_back(random_dense(n, rng));
            return OperatorTuple(std::move(out));
        }
        case TupleFamily::commuting: {
            // Alternate the two constructions so normal tuples are not the
            // only commuting cases exercised.
            if (rng() % 2 == 0) return polynomials_in(random_dense(n, rng), d, rng);
            OperatorTuple tri = commuting_upper_triangular(d, n, rng);
            const ComplexMatrix u = random_unitary(n, rng);
            std::vector<ComplexMatrix> out;
            for (const auto& m : tri.entries) out.push_back(u * m * u.adjoint());
            return OperatorTuple(std::move(out));
        }
        case TupleFamily::normal_commuting: {
            const ComplexMatrix u = random_unitary(n, rng);
            std::vector<ComplexMatrix> out;
            for (int k = 0; k < d; ++k) {
                ComplexVector diag(n);
                for (Eigen::Index i = 0; i < n; ++i) diag(i) = standard_complex_normal(rng);
                out.push_back(u * diag.asDiagonal() * u.adjoint());
            }
            return OperatorTuple(std::move(out));
        }
        case TupleFamily::nilpotent: {
            std::vector<ComplexMatrix> out;
            for (int k = 0; k < d; ++k) {
                ComplexMatrix m = random_dense(n, rng).triangularView<Eigen::StrictlyUpper>();
                out.push_back(std::move(m));
            }
            return OperatorTuple(std::move(out));
        }
        case TupleFamily::single: {
            return OperatorTuple({random_dense(n, rng)});
        }
    }
    throw std::invalid_argument("random_tuple: unknown family");
}

}  // namespace gen

struct PropertySpec {
    std::string id;
    TupleFamily family = TupleFamily::dense;
    int count = 20;
    int d_min = 1, d_max = 3;
    int n_min = 2, n_max = 4;
    double slack = 1e-4;
};

struct PropertyResult {
    std::string id;
    int pass_count = 0;
    int fail_count = 0;
    double worst_slack = -std::numeric_limits<double>::infinity();
    std::string witness;  // serialized TupleFile, present iff fail_count > 0
};

struct VerificationReport {
    std::uint64_t seed = 0;
    std::vector<PropertyResult> results;
    double wall_time = 0.0;

    bool all_passed() const {
        for (const auto& r : results)
            if (r.fail_count > 0) return false;
        return true;
    }
};

namespace detail {

// slack_observed is the largest (lhs - rhs) over the checks of one sample;
// the sample passes when it stays <= the spec's slack.
struct PropertyEval {
    std::optional<TupleFamily> required_family;
    int d_min = 1;  // structural floor (e.g. commutator checks need d >= 2)
    std::function<double(const OperatorTuple&, std::mt19937_64&, const ToleranceConfig&)> observe;
};

inline double omega(const OperatorTuple& t, std::uint64_t seed) {
    JointRadiusOptions opts;
    opts.seed = seed;
    return joint_numerical_radius(t, opts).value;
}

// Independent route to the joint norm: random sampling of the sup definition
// plus plain power iteration on x -> Sum_k T_k^*(T_k x); no eigensolver.
inline double joint_norm_sampling_oracle(const OperatorTuple& t, std::mt19937_64& rng) {
    const Eigen::Index n = t.dim();
    auto f2 = [&](const ComplexVector& x) {
        double s = 0.0;
        for (const auto& m : t.entries) s += (m * x).squaredNorm();
        return s;
    };
    ComplexVector best = random_unit_vector(n, rng);
    double best_val = f2(best);
    for (int i = 0; i < 1000; ++i) {
        ComplexVector x = random_unit_vector(n, rng);
        const double v = f2(x);
        if (v > best_val) {
            best_val = v;
            best = x;
        }
    }
    ComplexVector x = best;
    for (int i = 0; i < 300; ++i) {
        ComplexVector y = ComplexVector::Zero(n);
        for (const auto& m : t.entries) y += m.adjoint() * (m * x);
        const double nrm = y.norm();
        if (nrm == 0.0) break;
        x = y / nrm;
    }
    return std::sqrt(std::max(best_val, f2(x)));
}

inline double single_spectral_radius(const ComplexMatrix& m) {
    return m.eigenvalues().cwiseAbs().maxCoeff();
}

inline std::optional<double> oracle_radius(const OperatorTuple& t, std::mt19937_64& rng) {
    try {
        return max_point_norm(joint_eigenvalues(t, rng()));
    } catch (const oracle_unavailable_error&) {
        return std::nullopt;
    }
}

inline const std::map<std::string, PropertyEval>& property_registry() {
    static const std::map<std::string, PropertyEval> registry = [] {
        std::map<std::string, PropertyEval> reg;

        reg["norm-decreasing"] = {std::nullopt, 1,
            [](const OperatorTuple& t, std::mt19937_64&, const ToleranceConfig& tol) {
                return joint_norm(spherical_aluthge(t, tol)) - joint_norm(t);
            }};

        reg["joint-norm-gram"] = {std::nullopt, 1,
            [](const OperatorTuple& t, std::mt19937_64& rng, const ToleranceConfig&) {
                return std::abs(joint_norm_sampling_oracle(t, rng) - joint_norm(t));
            }};

        reg["half-half-dual"] = {std::nullopt, 1,
            [](const OperatorTuple& t, std::mt19937_64& rng, const ToleranceConfig& tol) {
                const std::uint64_t s = rng();
                const double lhs = omega(spherical_aluthge(t, tol), s);
                const double rhs =
                    0.5 * omega(t, s + 1) + 0.5 * omega(dual_tuple(t, tol), s + 2);
                return lhs - rhs;
            }};

        reg["omega-decreasing-commuting"] = {TupleFamily::commuting, 1,
            [](const OperatorTuple& t, std::mt19937_64& rng, const ToleranceConfig& tol) {
                const std::uint64_t s = rng();
                return omega(spherical_aluthge(t, tol), s) - omega(t, s + 1);
            }};

        reg["three-one-bound"] = {std::nullopt, 1,
            [](const OperatorTuple& t, std::mt19937_64& rng, const ToleranceConfig& tol) {
                const std::uint64_t s = rng();
                return omega(t, s) -
                       (0.5 * joint_norm(t) + 0.5 * omega(spherical_aluthge(t, tol), s + 1));
            }};

        reg["single-sandwich"] = {TupleFamily::single, 1,
            [](const OperatorTuple& t, std::mt19937_64& rng, const ToleranceConfig&) {
                const double w = omega(t, rng());
                const double nrm = joint_norm(t);
                const double r = single_spectral_radius(t[0]);
                double worst = nrm / 2.0 - w;
                worst = std::max(worst, std::max(r, nrm / 2.0) - w);
                worst = std::max(worst, w - nrm);
                return worst;
            }};

        reg["tuple-sandwich"] = {std::nullopt, 1,
            [](const OperatorTuple& t, std::mt19937_64& rng, const ToleranceConfig&) {
                const double w = omega(t, rng());
                const double nrm = joint_norm(t);
                return std::max(nrm / (2.0 * std::sqrt(double(t.d()))) - w, w - nrm);
            }};

        reg["polar-commutation-lemma"] = {TupleFamily::commuting, 1,
            [](const OperatorTuple& t, std::mt19937_64& rng, const ToleranceConfig& tol) {
                // Forward: commuting tuple -> V_j P V_k symmetric.
                const double jn = joint_norm(t);
                double worst = commutation_witness(spherical_polar(t, tol)) -
                               1e-8 * (1.0 + jn * jn);
                // Reverse, quantitatively: the commutator norm is bounded by
                // witness * ||P||, so a visibly non-commuting tuple must
                // carry a visible witness.
                if (t.d() >= 2) {
                    OperatorTuple dense = gen::random_tuple(TupleFamily::dense, t.d(), t.dim(), rng);
                    const SphericalPolarDecomposition dec = spherical_polar(dense, tol);
                    const double comm = is_commuting(dense).witness;
                    const double w = commutation_witness(dec);
                    const double pnorm = spectral_norm(dec.P);
                    if (pnorm > 0) worst = std::max(worst, comm / pnorm - w - 1e-8);
                }
                return worst;
            }};

        reg["aluthge-commuting-preserved"] = {TupleFamily::commuting, 1,
            [](const OperatorTuple& t, std::mt19937_64&, const ToleranceConfig& tol) {
                const OperatorTuple th = spherical_aluthge(t, tol);
                const double jn = joint_norm(th);
                return is_commuting(th).witness - 1e-8 * (1.0 + jn * jn);
            }};

        reg["norm-trace-monotone"] = {TupleFamily::commuting, 1,
            [](const OperatorTuple& t, std::mt19937_64& rng, const ToleranceConfig& tol) {
                const AluthgeIteration it = iterate_aluthge(t, 30, 1e-14, tol);
                double worst = -std::numeric_limits<double>::infinity();
                for (std::size_t i = 1; i < it.norm_trace.size(); ++i)
                    worst = std::max(worst, it.norm_trace[i] - it.norm_trace[i - 1] - 1e-9);
                if (auto r = oracle_radius(t, rng))
                    for (double v : it.norm_trace) worst = std::max(worst, *r - v - 1e-8);
                return worst;
            }};

        reg["power-norm-decreasing"] = {std::nullopt, 1,
            [](const OperatorTuple& t, std::mt19937_64&, const ToleranceConfig& tol) {
                const OperatorTuple th = spherical_aluthge(t, tol);
                double worst = -std::numeric_limits<double>::infinity();
                for (int k = 1; k <= 6; ++k)
                    worst = std::max(worst, tuple_power_norm(th, k) - tuple_power_norm(t, k));
                return worst;
            }};

        reg["power-interpolation"] = {std::nullopt, 1,
            [](const OperatorTuple& t, std::mt19937_64&, const ToleranceConfig& tol) {
                const OperatorTuple th = spherical_aluthge(t, tol);
                double worst = -std::numeric_limits<double>::infinity();
                for (int k = 1; k <= 6; ++k) {
                    const double rhs = std::sqrt(tuple_power_norm(t, k + 1)) *
                                       std::sqrt(tuple_power_norm(t, k - 1));
                    worst = std::max(worst, tuple_power_norm(th, k) - rhs);
                }
                return worst;
            }};

        reg["power-submultiplicative"] = {std::nullopt, 1,
            [](const OperatorTuple& t, std::mt19937_64&, const ToleranceConfig&) {
                const double base = tuple_power_norm(t, 1);
                double worst = -std::numeric_limits<double>::infinity();
                for (int k = 1; k <= 6; ++k)
                    worst = std::max(worst,
                                     tuple_power_norm(t, k + 1) - tuple_power_norm(t, k) * base);
                return worst;
            }};

        reg["power-trace-limit"] = {TupleFamily::commuting, 1,
            [](const OperatorTuple& t, std::mt19937_64& rng, const ToleranceConfig& tol) {
                // Desk-scale form of the iterated power-norm limit: along the
                // iteration, ||T_n^k|| decreases in n and stays above r^k.
                const AluthgeIteration it = iterate_aluthge(t, 30, 1e-14, tol);
                const auto r = oracle_radius(t, rng);
                double worst = -std::numeric_limits<double>::infinity();
                for (int k = 1; k <= 3; ++k) {
                    double prev = std::numeric_limits<double>::infinity();
                    for (const auto& tn : it.tuples) {
                        const double v = tuple_power_norm(tn, k);
                        worst = std::max(worst, v - prev - 1e-8);
                        if (r) worst = std::max(worst, std::pow(*r, k) - v - 1e-6);
                        prev = v;
                    }
                }
                return worst;
            }};

        reg["gelfand-lower-bound"] = {TupleFamily::commuting, 1,
            [](const OperatorTuple& t, std::mt19937_64& rng, const ToleranceConfig&) {
                const auto r = oracle_radius(t, rng);
                if (!r) return 0.0;
                const RadiusEstimate est = joint_spectral_radius_gelfand(t, 48);
                double worst = -std::numeric_limits<double>::infinity();
                for (const auto& [n, v] : est.trace) worst = std::max(worst, *r - v - 1e-9);
                return worst;
            }};

        reg["aluthge-limit"] = {TupleFamily::commuting, 1,
            [](const OperatorTuple& t, std::mt19937_64& rng, const ToleranceConfig& tol) {
                const auto r = oracle_radius(t, rng);
                if (!r) return 0.0;
                const RadiusEstimate est = joint_spectral_radius_aluthge(t, 200, 1e-13, 1e-10, tol);
                double worst = *r - est.value - 1e-8;          // never below r
                worst = std::max(worst, est.value - *r - 5e-2);  // close after 200 steps
                return worst;
            }};

        return reg;
    }();
    return registry;
}

}  // namespace detail

// Default suite: one spec per inequality the library realizes. Slacks on
// omega-dependent properties budget two optimizer gaps.
inline std::vector<PropertySpec> default_property_suite() {
    const double opt = ToleranceConfig{}.opt_slack;
    return {
        {"norm-decreasing", TupleFamily::dense, 40, 1, 3, 2, 4, 1e-9},
        {"joint-norm-gram", TupleFamily::dense, 40, 1, 3, 2, 4, opt},
        {"half-half-dual", TupleFamily::dense, 20, 1, 3, 2, 4, 3 * opt},
        {"omega-decreasing-commuting", TupleFamily::commuting, 20, 1, 3, 2, 4, 2 * opt},
        {"three-one-bound", TupleFamily::dense, 20, 1, 3, 2, 4, 2 * opt},
        {"single-sandwich", TupleFamily::single, 40, 1, 1, 2, 4, opt},
        {"tuple-sandwich", TupleFamily::dense, 20, 1, 3, 2, 4, 2 * opt},
        {"polar-commutation-lemma", TupleFamily::commuting, 40, 1, 3, 2, 4, 0.0},
        {"aluthge-commuting-preserved", TupleFamily::commuting, 40, 1, 3, 2, 4, 0.0},
        {"norm-trace-monotone", TupleFamily::commuting, 20, 1, 3, 2, 4, 0.0},
        {"power-norm-decreasing", TupleFamily::dense, 40, 1, 3, 2, 4, 1e-8},
        {"power-interpolation", TupleFamily::dense, 40, 1, 3, 2, 4, 1e-8},
        {"power-submultiplicative", TupleFamily::dense, 40, 1, 3, 2, 4, 1e-8},
        {"power-trace-limit", TupleFamily::commuting, 10, 1, 3, 2, 4, 0.0},
        {"gelfand-lower-bound", TupleFamily::commuting, 20, 1, 3, 2, 4, 0.0},
        {"aluthge-limit", TupleFamily::commuting, 5, 1, 2, 2, 3, 0.0},
    };
}

inline VerificationReport run_property_suite(const std::vector<PropertySpec>& specs,
                                             std::uint64_t seed,
                                             const ToleranceConfig& tol = {}) {
    if (specs.empty()) throw std::invalid_argument("run_property_suite: specs must be non-empty");
    const auto& registry = detail::property_registry();
    const auto start = std::chrono::steady_clock::now();

    VerificationReport report;
    report.seed = seed;
    for (const auto& spec : specs) {
        if (spec.count < 1)
            throw std::invalid_argument("run_property_suite: count must be >= 1 for '" + spec.id +
                                        "'");
        if (!(spec.slack >= 0.0))
            throw std::invalid_argument("run_property_suite: slack must be >= 0 for '" + spec.id +
                                        "'");
        auto it = registry.find(spec.id);
        if (it == registry.end())
            throw std::invalid_argument("run_property_suite: unknown property '" + spec.id + "'");
        const detail::PropertyEval& eval = it->second;

        // Independent substream per (seed, id): parallel evaluation order
        // cannot change results.
        std::seed_seq seq(spec.id.begin(), spec.id.end());
        std::vector<std::uint32_t> words(4);
        seq.generate(words.begin(), words.end());
        std::mt19937_64 rng(seed ^ (std::uint64_t(words[0]) << 32 | words[1]));

        // Commuting-only properties constrain the generator regardless of the
        // requested family.
        const TupleFamily family = eval.required_family.value_or(spec.family);

        PropertyResult result;
        result.id = spec.id;
        for (int i = 0; i < spec.count; ++i) {
            const int d = std::max(eval.d_min,
                                   spec.d_min + static_cast<int>(rng() % (spec.d_max - spec.d_min + 1)));
            const int n = spec.n_min + static_cast<int>(rng() % (spec.n_max - spec.n_min + 1));
            const OperatorTuple t = gen::random_tuple(family, d, n, rng);
            const double observed = eval.observe(t, rng, tol);
            result.worst_slack = std::max(result.worst_slack, observed);
            if (observed <= spec.slack) {
                ++result.pass_count;
            } else {
                ++result.fail_count;
                if (result.witness.empty()) result.witness = tuple_to_json(t).dump();
            }
        }
        report.results.push_back(std::move(result));
    }
    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline json verification_report_to_json(const VerificationReport& report) {
    json out;
    out["seed"] = report.seed;
    json results = json::array();
    for (const auto& r : report.results) {
        json rj;
        rj["id"] = r.id;
        rj["pass"] = r.pass_count;
        rj["fail"] = r.fail_count;
        rj["worst_slack"] = r.worst_slack;
        rj["witness"] = r.witness.empty() ? json(nullptr) : json::parse(r.witness);
        results.push_back(std::move(rj));
    }
    out["results"] = std::move(results);
    out["wall_time"] = report.wall_time;
    return out;
}

// ---------------------------------------------------------------------------
// Exact reproduction of the 2x2 worked example, with the contested dual-tuple
// value adjudicated by cross-route agreement rather than the printed constant.

struct WorkedExampleReport {
    OperatorTuple tuple;             // (T_1, T_2)
    SphericalPolarDecomposition polar;
    double p_error = 0.0;            // vs diag(1, sqrt 2)
    double v_error = 0.0;            // vs the closed-form V_1, V_2
    double witness = 0.0;            // commutation witness (tuple is non-commuting)
    double omega_sq_dash = 0.0;      // omega^2(T) by route (a)
    double omega_sq_lambda = 0.0;    // omega^2(T) by route (b)
    double omega_sq_brute = 0.0;     // omega^2(T) by unit-vector sampling
    double dual_dash = 0.0;          // omega(PV_1, PV_2) by route (a)
    double dual_lambda = 0.0;        // omega(PV_1, PV_2) by route (b)
    double dual_brute = 0.0;         // omega(PV_1, PV_2) by sampling
    double claimed_omega_sq = 1.25;                 // published omega^2(T)
    double claimed_dual = 5.0 * std::numbers::sqrt2 / 4.0;  // published omega(PV_1, PV_2)
};

namespace detail {

// Sampling oracle over unit vectors, with shrinking local resampling around
// the incumbent. Uses only the sup definition; independent of the optimizer.
inline double brute_force_joint_radius(const OperatorTuple& t, std::size_t samples,
                                       std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Eigen::Index n = t.dim();
    ComplexVector best = random_unit_vector(n, rng);
    double best_val = dash_value(t, best);
    for (std::size_t i = 1; i < samples; ++i) {
        const ComplexVector x = random_unit_vector(n, rng);
        const double v = dash_value(t, x);
        if (v > best_val) {
            best_val = v;
            best = x;
        }
    }
    double radius = 0.3;
    for (int round = 0; round < 12; ++round) {
        for (int i = 0; i < 2000; ++i) {
            ComplexVector x = best + radius * random_unit_vector(n, rng);
            x /= x.norm();
            const double v = dash_value(t, x);
            if (v > best_val) {
                best_val = v;
                best = x;
            }
        }
        radius *= 0.35;
    }
    return best_val;
}

}  // namespace detail

inline WorkedExampleReport reproduce_worked_example(std::size_t brute_samples = 1000000,
                                             const ToleranceConfig& tol = {}) {
    ComplexMatrix t1(2, 2), t2(2, 2);
    t1 << 0, 1, 0, 0;
    t2 << 0, -1, 1, 0;

    WorkedExampleReport rep;
    rep.tuple = OperatorTuple({t1, t2});
    rep.polar = spherical_polar(rep.tuple, tol);

    const double s2 = std::numbers::sqrt2;
    ComplexMatrix p_exact(2, 2), v1_exact(2, 2), v2_exact(2, 2);
    p_exact << 1, 0, 0, s2;
    v1_exact << 0, s2 / 2, 0, 0;
    v2_exact << 0, -s2 / 2, 1, 0;
    rep.p_error = (rep.polar.P - p_exact).cwiseAbs().maxCoeff();
    rep.v_error = std::max((rep.polar.V[0] - v1_exact).cwiseAbs().maxCoeff(),
                           (rep.polar.V[1] - v2_exact).cwiseAbs().maxCoeff());
    rep.witness = commutation_witness(rep.polar);

    const JointRadiusRoutes routes = joint_numerical_radius_routes(rep.tuple);
    rep.omega_sq_dash = routes.dash_direct * routes.dash_direct;
    rep.omega_sq_lambda = routes.lambda_sphere * routes.lambda_sphere;
    const double brute = detail::brute_force_joint_radius(rep.tuple, brute_samples, 271828);
    rep.omega_sq_brute = brute * brute;

    const OperatorTuple dual = dual_tuple(rep.tuple, tol);
    const JointRadiusRoutes dual_routes = joint_numerical_radius_routes(dual);
    rep.dual_dash = dual_routes.dash_direct;
    rep.dual_lambda = dual_routes.lambda_sphere;
    rep.dual_brute = detail::brute_force_joint_radius(dual, brute_samples, 314159);
    return rep;
}

inline json worked_example_report_to_json(const WorkedExampleReport& rep) {
    json out;
    out["tuple"] = tuple_to_json(rep.tuple);
    out["P"] = matrix_to_json(rep.polar.P);
    out["V"] = json::array({matrix_to_json(rep.polar.V[0]), matrix_to_json(rep.polar.V[1])});
    out["p_error"] = rep.p_error;
    out["v_error"] = rep.v_error;
    out["commutation_witness"] = rep.witness;
    out["omega_squared"] = {{"dash_direct", rep.omega_sq_dash},
                            {"lambda_sphere", rep.omega_sq_lambda},
                            {"brute_force", rep.omega_sq_brute},
                            {"published", rep.claimed_omega_sq}};
    out["dual_omega"] = {{"dash_direct", rep.dual_dash},
                         {"lambda_sphere", rep.dual_lambda},
                         {"brute_force", rep.dual_brute},
                         {"published", rep.claimed_dual}};
    out["dual_matches_published"] =
        std::abs(rep.dual_brute - rep.claimed_dual) < 1e-3;
    return out;
}

}  // namespace aluthge

#endif  // ALUTHGE_VERIFY_HPP
