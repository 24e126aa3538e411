#ifndef ALUTHGE_RADII_HPP
#define ALUTHGE_RADII_HPP

// Radius estimators: numerical radius of a single matrix (theta grid with
// local refinement), joint numerical radius by two alternating-ascent routes,
// joint spectral radius via the Gelfand-type limit and via iterated Aluthge,
// and a joint-eigenvalue oracle for commuting tuples.

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aluthge/transform.hpp"

namespace aluthge {

struct not_commuting_error : std::invalid_argument {
    double witness;
    explicit not_commuting_error(double w)
        : std::invalid_argument("operation requires a commuting tuple (commutator witness " +
                                std::to_string(w) + ")"),
          witness(w) {}
};

struct oracle_unavailable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RadiusEstimate {
    double value = 0.0;
    std::string method;  // theta_grid | dash_direct | lambda_sphere | gelfand | aluthge_limit | joint_eig_oracle
    bool is_lower_bound = false;
    std::vector<std::pair<int, double>> trace;
    std::map<std::string, double> params;
};

namespace detail {

inline ComplexMatrix real_part_rotated(const ComplexMatrix& m, double theta) {
    const Complex phase(std::cos(theta), std::sin(theta));
    const ComplexMatrix r = phase * m;
    return 0.5 * (r + r.adjoint());
}

struct TopEigenPair {
    double value;
    ComplexVector vector;
};

inline TopEigenPair top_eigenpair(const ComplexMatrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian);
    if (es.info() != Eigen::Success)
        throw numerical_error("top_eigenpair: eigensolver did not converge");
    const Eigen::Index last = hermitian.rows() - 1;
    return {es.eigenvalues()(last), es.eigenvectors().col(last)};
}

struct NumericalRadiusPoint {
    double value = 0.0;
    double theta = 0.0;
    ComplexVector x;
};

// g(theta) = lambda_max(Re(e^{i theta} M)) scanned on a uniform grid, then
// the bracket around the best grid point is re-gridded until it is narrower
// than refine_tol. g is Lipschitz with constant ||M||, so the pre-refinement
// error is bounded by ||M|| * spacing / 2.
inline NumericalRadiusPoint numerical_radius_search(const ComplexMatrix& m, int grid,
                                                    double refine_tol) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    NumericalRadiusPoint best;
    best.value = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        const double theta = two_pi * i / grid;
        const double g = top_eigenpair(real_part_rotated(m, theta)).value;
        if (g > best.value) {
            best.value = g;
            best.theta = theta;
        }
    }
    double lo = best.theta - two_pi / grid;
    double hi = best.theta + two_pi / grid;
    constexpr int refine_points = 12;
    while (hi - lo > refine_tol) {
        const double step = (hi - lo) / refine_points;
        for (int i = 0; i <= refine_points; ++i) {
            const double theta = lo + step * i;
            const double g = top_eigenpair(real_part_rotated(m, theta)).value;
            if (g > best.value) {
                best.value = g;
                best.theta = theta;
            }
        }
        lo = best.theta - step;
        hi = best.theta + step;
    }
    auto pair = top_eigenpair(real_part_rotated(m, best.theta));
    best.value = std::max(best.value, pair.value);
    best.x = pair.vector;
    return best;
}

}  // namespace detail

// omega(M) = sup_theta ||Re(e^{i theta} M)||; every evaluation is a feasible
// point, so the estimate is a certified lower bound.
inline RadiusEstimate numerical_radius(const ComplexMatrix& m, int grid = 720,
                                       double refine_tol = 1e-10) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("numerical_radius: input matrix is not square");
    if (grid < 8) throw std::invalid_argument("numerical_radius: grid must be >= 8");
    auto point = detail::numerical_radius_search(m, grid, refine_tol);
    RadiusEstimate est;
    est.value = point.value;
    est.method = "theta_grid";
    est.is_lower_bound = true;
    est.trace = {{0, point.value}};
    est.params = {{"grid", static_cast<double>(grid)}, {"refine_tol", refine_tol}};
    return est;
}

struct JointRadiusOptions {
    int restarts = 32;
    int max_iters = 100;
    int theta_grid = 720;
    double refine_tol = 1e-8;
    double stall_tol = 1e-13;
    std::uint64_t seed = 20240817;
};

namespace detail {

inline ComplexVector random_unit_vector(Eigen::Index n, std::mt19937_64& rng) {
    ComplexVector x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = standard_complex_normal(rng);
    const double nrm = x.norm();
    return nrm > 0 ? ComplexVector(x / nrm) : ComplexVector(ComplexVector::Unit(n, 0));
}

inline double dash_value(const OperatorTuple& t, const ComplexVector& x) {
    double s = 0.0;
    for (const auto& m : t.entries) s += std::norm(x.dot(m * x));
    return std::sqrt(s);
}

// One sweep of the alternating ascent for f(x) = ||(<T_k x, x>)_k||_2:
// lambda is the normalized conjugate coefficient vector of x, and x is then
// improved by the top eigenvector of Re(e^{i theta} Sum lambda_k T_k) at the
// phase that makes <A x, x> real positive. Each sweep is non-decreasing in f.
inline double alternating_ascent(const OperatorTuple& t, ComplexVector x, int max_iters,
                                 double stall_tol, std::mt19937_64& rng) {
    const Eigen::Index n = t.dim();
    double best = dash_value(t, x);
    for (int it = 0; it < max_iters; ++it) {
        ComplexVector c(t.d());
        for (int k = 0; k < t.d(); ++k) c(k) = x.dot(t[k] * x);
        double cn = c.norm();
        ComplexVector lambda;
        if (cn > 0) {
            lambda = c.conjugate() / cn;
        } else {
            lambda = random_unit_vector(t.d(), rng);
        }
        ComplexMatrix a = ComplexMatrix::Zero(n, n);
        for (int k = 0; k < t.d(); ++k) a += lambda(k) * t[k];
        const Complex mu = x.dot(a * x);
        const double theta = std::abs(mu) > 0 ? -std::arg(mu) : 0.0;
        x = top_eigenpair(real_part_rotated(a, theta)).vector;
        const double f = dash_value(t, x);
        if (f <= best + stall_tol) {
            best = std::max(best, f);
            break;
        }
        best = f;
    }
    return best;
}

}  // namespace detail

// Joint numerical radius by two independent multi-start routes; returns the
// larger certified lower bound and records which route won.
inline RadiusEstimate joint_numerical_radius(const OperatorTuple& t,
                                             const JointRadiusOptions& opts = {}) {
    const Eigen::Index n = t.dim();
    std::mt19937_64 rng(opts.seed);

    // Route (a): seed from random unit vectors x.
    double best_a = 0.0;
    std::vector<std::pair<int, double>> trace_a;
    for (int r = 0; r < opts.restarts; ++r) {
        ComplexVector x0 = detail::random_unit_vector(n, rng);
        const double f = detail::alternating_ascent(t, x0, opts.max_iters, opts.stall_tol, rng);
        if (f > best_a) best_a = f;
        trace_a.emplace_back(r, best_a);
    }

    // Route (b): seed from random unit lambda, recover x from the
    // single-operator problem for lambda . T, then run the same alternation.
    double best_b = 0.0;
    ComplexVector best_lambda = ComplexVector::Unit(t.d(), 0);
    std::vector<std::pair<int, double>> trace_b;
    for (int r = 0; r < opts.restarts; ++r) {
        ComplexVector lambda = detail::random_unit_vector(t.d(), rng);
        ComplexMatrix a = ComplexMatrix::Zero(n, n);
        for (int k = 0; k < t.d(); ++k) a += lambda(k) * t[k];
        ComplexVector x0 = detail::top_eigenpair(detail::real_part_rotated(a, 0.0)).vector;
        const double f = detail::alternating_ascent(t, x0, opts.max_iters, opts.stall_tol, rng);
        if (f > best_b) {
            best_b = f;
            best_lambda = lambda;
        }
        trace_b.emplace_back(r, best_b);
    }
    // Polish route (b) with the full single-operator estimator at the best
    // lambda; omega(lambda . T) <= omega(T) for unit lambda, so this stays a
    // lower bound.
    {
        ComplexMatrix a = ComplexMatrix::Zero(n, n);
        for (int k = 0; k < t.d(); ++k) a += best_lambda(k) * t[k];
        const double polished =
            detail::numerical_radius_search(a, opts.theta_grid, opts.refine_tol).value;
        best_b = std::max(best_b, polished);
    }

    RadiusEstimate est;
    est.is_lower_bound = true;
    est.params = {{"restarts", static_cast<double>(opts.restarts)},
                  {"max_iters", static_cast<double>(opts.max_iters)},
                  {"theta_grid", static_cast<double>(opts.theta_grid)},
                  {"seed", static_cast<double>(opts.seed)}};
    if (best_a >= best_b) {
        est.value = best_a;
        est.method = "dash_direct";
        est.trace = std::move(trace_a);
    } else {
        est.value = best_b;
        est.method = "lambda_sphere";
        est.trace = std::move(trace_b);
    }
    return est;
}

// Values of both routes side by side (route-agreement checks).
struct JointRadiusRoutes {
    double dash_direct;
    double lambda_sphere;
};

inline JointRadiusRoutes joint_numerical_radius_routes(const OperatorTuple& t,
                                                       JointRadiusOptions opts = {}) {
    // Run each route in isolation by disabling the other's restarts.
    std::mt19937_64 rng_a(opts.seed);
    double best_a = 0.0;
    for (int r = 0; r < opts.restarts; ++r) {
        ComplexVector x0 = detail::random_unit_vector(t.dim(), rng_a);
        best_a = std::max(best_a,
                          detail::alternating_ascent(t, x0, opts.max_iters, opts.stall_tol, rng_a));
    }
    std::mt19937_64 rng_b(opts.seed + 1);
    double best_b = 0.0;
    ComplexVector best_lambda = ComplexVector::Unit(t.d(), 0);
    for (int r = 0; r < opts.restarts; ++r) {
        ComplexVector lambda = detail::random_unit_vector(t.d(), rng_b);
        ComplexMatrix a = ComplexMatrix::Zero(t.dim(), t.dim());
        for (int k = 0; k < t.d(); ++k) a += lambda(k) * t[k];
        ComplexVector x0 = detail::top_eigenpair(detail::real_part_rotated(a, 0.0)).vector;
        const double f = detail::alternating_ascent(t, x0, opts.max_iters, opts.stall_tol, rng_b);
        if (f > best_b) {
            best_b = f;
            best_lambda = lambda;
        }
    }
    ComplexMatrix a = ComplexMatrix::Zero(t.dim(), t.dim());
    for (int k = 0; k < t.d(); ++k) a += best_lambda(k) * t[k];
    best_b = std::max(best_b,
                      detail::numerical_radius_search(a, opts.theta_grid, opts.refine_tol).value);
    return {best_a, best_b};
}

namespace detail {

inline void require_commuting(const OperatorTuple& t, double tol = 1e-10) {
    const CommutationCheck check = is_commuting(t, tol);
    if (!check.commuting) throw not_commuting_error(check.witness);
}

}  // namespace detail

// Gelfand-type estimate r(T) = lim ||T^n||^{1/n}, reported raw at n_max with
// the full trace attached. Stated for commuting tuples only.
inline RadiusEstimate joint_spectral_radius_gelfand(const OperatorTuple& t, int n_max,
                                                    double comm_tol = 1e-10) {
    if (n_max < 1) throw std::invalid_argument("joint_spectral_radius_gelfand: n_max must be >= 1");
    detail::require_commuting(t, comm_tol);

    RadiusEstimate est;
    est.method = "gelfand";
    est.is_lower_bound = false;
    est.params = {{"n_max", static_cast<double>(n_max)}};

    ComplexMatrix q = ComplexMatrix::Identity(t.dim(), t.dim());
    double log_scale = 0.0;
    bool dead = false;
    for (int k = 1; k <= n_max; ++k) {
        double value = 0.0;
        if (!dead) {
            ComplexMatrix next = ComplexMatrix::Zero(t.dim(), t.dim());
            for (const auto& m : t.entries) next += m.adjoint() * q * m;
            q = 0.5 * (next + next.adjoint());
            const double s = spectral_norm(q);
            if (s == 0.0) {
                dead = true;
            } else {
                q /= s;
                log_scale += std::log(s);
                value = std::exp(0.5 * log_scale / k);
            }
        }
        est.trace.emplace_back(k, value);
        est.value = value;
    }
    return est;
}

// r(T) via the limit of joint norms of iterated spherical Aluthge transforms.
inline RadiusEstimate joint_spectral_radius_aluthge(const OperatorTuple& t, int max_iter,
                                                    double conv_tol, double comm_tol = 1e-10,
                                                    const ToleranceConfig& tol = {}) {
    detail::require_commuting(t, comm_tol);
    const AluthgeIteration it = iterate_aluthge(t, max_iter, conv_tol, tol);
    RadiusEstimate est;
    est.method = "aluthge_limit";
    est.is_lower_bound = false;
    est.value = it.norm_trace.back();
    for (std::size_t i = 0; i < it.norm_trace.size(); ++i)
        est.trace.emplace_back(static_cast<int>(i), it.norm_trace[i]);
    est.params = {{"max_iter", static_cast<double>(max_iter)},
                  {"conv_tol", conv_tol},
                  {"breakdown", it.stop_reason == StopReason::numerical_breakdown ? 1.0 : 0.0}};
    return est;
}

// Joint eigenvalues of a commuting tuple, via a unitary triangularization of
// a random unit combination applied to every component. Stand-in for the
// joint spectrum at finite dimension.
struct JointEigenvalues {
    std::vector<std::vector<Complex>> points;  // one d-tuple per dimension index
    double conditioning = 0.0;                 // worst off-triangular residual seen
};

inline JointEigenvalues joint_eigenvalues(const OperatorTuple& t, std::uint64_t seed = 7,
                                          double comm_tol = 1e-10) {
    detail::require_commuting(t, comm_tol);
    const Eigen::Index n = t.dim();
    std::mt19937_64 rng(seed);
    double scale = 1.0;
    for (const auto& m : t.entries) scale = std::max(scale, 1.0 + m.norm());

    for (int attempt = 0; attempt < 5; ++attempt) {
        ComplexVector mu = detail::random_unit_vector(t.d(), rng);
        ComplexMatrix a = ComplexMatrix::Zero(n, n);
        for (int k = 0; k < t.d(); ++k) a += mu(k) * t[k];
        Eigen::ComplexSchur<ComplexMatrix> schur(a, true);
        if (schur.info() != Eigen::Success) continue;
        const ComplexMatrix& u = schur.matrixU();

        std::vector<ComplexMatrix> tri;
        tri.reserve(t.entries.size());
        double resid = 0.0;
        for (const auto& m : t.entries) {
            ComplexMatrix b = u.adjoint() * m * u;
            double lower = 0.0;
            for (Eigen::Index i = 1; i < n; ++i)
                for (Eigen::Index j = 0; j < i; ++j) lower += std::norm(b(i, j));
            resid = std::max(resid, std::sqrt(lower));
            tri.push_back(std::move(b));
        }
        if (resid > 1e-8 * scale) continue;

        JointEigenvalues out;
        out.conditioning = resid;
        out.points.reserve(static_cast<std::size_t>(n));
        for (Eigen::Index i = 0; i < n; ++i) {
            std::vector<Complex> p;
            p.reserve(t.entries.size());
            for (const auto& b : tri) p.push_back(b(i, i));
            out.points.push_back(std::move(p));
        }
        return out;
    }
    throw oracle_unavailable_error(
        "joint_eigenvalues: simultaneous triangularization failed after 5 attempts");
}

inline double max_point_norm(const JointEigenvalues& je) {
    double best = 0.0;
    for (const auto& p : je.points) {
        double s = 0.0;
        for (const auto& z : p) s += std::norm(z);
        best = std::max(best, std::sqrt(s));
    }
    return best;
}

inline RadiusEstimate joint_spectral_radius_oracle(const OperatorTuple& t, std::uint64_t seed = 7,
                                                   double comm_tol = 1e-10) {
    const JointEigenvalues je = joint_eigenvalues(t, seed, comm_tol);
    RadiusEstimate est;
    est.method = "joint_eig_oracle";
    est.is_lower_bound = false;
    est.value = max_point_norm(je);
    est.params = {{"seed", static_cast<double>(seed)}, {"conditioning", je.conditioning}};
    return est;
}

}  // namespace aluthge

#endif  // ALUTHGE_RADII_HPP
