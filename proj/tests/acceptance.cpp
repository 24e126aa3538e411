// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <unistd.h>

#include "aluthge/aluthge.hpp"

namespace fs = std::filesystem;
using namespace aluthge;

namespace {

int g_failures = 0;
int g_checks = 0;
std::string g_detail;

void expect(bool ok, const std::string& what) {
    ++g_checks;
    if (!ok) {
        ++g_failures;
        g_detail += "    FAILED: " + what + "\n";
    }
}

struct Criterion {
    explicit Criterion(std::string name) : name_(std::move(name)) {
        start_failures_ = g_failures;
        g_detail.clear();
        t0_ = std::chrono::steady_clock::now();
    }
    ~Criterion() {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
        const bool pass = g_failures == start_failures_;
        std::printf("%s  %-60s (%.1f s)\n", pass ? "PASS" : "FAIL", name_.c_str(), secs);
        if (!pass) std::fputs(g_detail.c_str(), stdout);
        std::fflush(stdout);
    }
    std::string name_;
    int start_failures_;
    std::chrono::steady_clock::time_point t0_;
};

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

OperatorTuple worked_example() {
    return OperatorTuple({mat2(0, 1, 0, 0), mat2(0, -1, 1, 0)});
}

ComplexMatrix classical_aluthge_svd(const ComplexMatrix& t) {
    Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd sigma = svd.singularValues();
    const double cutoff = 1e-12 * (sigma.size() > 0 ? sigma(0) : 0.0);
    Eigen::VectorXd sqrt_sigma(sigma.size()), mask(sigma.size());
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        sqrt_sigma(i) = std::sqrt(std::max(sigma(i), 0.0));
        mask(i) = sigma(i) > cutoff ? 1.0 : 0.0;
    }
    const ComplexMatrix abs_sqrt =
        svd.matrixV() * sqrt_sigma.asDiagonal() * svd.matrixV().adjoint();
    const ComplexMatrix iso = svd.matrixU() * mask.asDiagonal() * svd.matrixV().adjoint();
    return abs_sqrt * iso * abs_sqrt;
}

double omega(const OperatorTuple& t, std::uint64_t seed) {
    JointRadiusOptions opts;
    opts.seed = seed;
    return joint_numerical_radius(t, opts).value;
}

void criterion_1() {
    Criterion c("1: worked-example reproduction (P, V, omega^2, witness)");
    const OperatorTuple t = worked_example();
    const auto dec = spherical_polar(t);
    const double s2 = std::sqrt(2.0);
    expect((dec.P - mat2(1, 0, 0, s2)).cwiseAbs().maxCoeff() < 1e-12, "P = diag(1, sqrt2)");
    expect((dec.V[0] - mat2(0, s2 / 2, 0, 0)).cwiseAbs().maxCoeff() < 1e-12, "V1 closed form");
    expect((dec.V[1] - mat2(0, -s2 / 2, 1, 0)).cwiseAbs().maxCoeff() < 1e-12, "V2 closed form");
    const double w = omega(t, 1);
    expect(std::abs(w * w - 1.25) < 1e-6, "omega^2 = 1.25");
    expect(commutation_witness(dec) > 0.1, "commutation witness > 0.1");
}

void criterion_2() {
    Criterion c("2: worked-example dual-tuple adjudication (3 routes)");
    const OperatorTuple dual = dual_tuple(worked_example());
    const JointRadiusRoutes routes = joint_numerical_radius_routes(dual);
    const double brute = detail::brute_force_joint_radius(dual, 1000000, 314159);
    expect(std::abs(routes.dash_direct - routes.lambda_sphere) < 1e-4,
           "dash_direct vs lambda_sphere");
    expect(std::abs(routes.dash_direct - brute) < 1e-4, "dash_direct vs brute force");
    expect(std::abs(routes.lambda_sphere - brute) < 1e-4, "lambda_sphere vs brute force");
    const double claimed = 5.0 * std::sqrt(2.0) / 4.0;
    const double omega_t = omega(worked_example(), 5);
    std::printf("      omega(PV1,PV2): routes %.6f / %.6f / brute %.6f;"
                " published %.6f; omega(T1,T2) %.6f\n",
                routes.dash_direct, routes.lambda_sphere, brute, claimed, omega_t);
}

void criterion_3() {
    Criterion c("3: inequality suite, 200 dense + 200 commuting tuples");
    std::mt19937_64 rng(33001);
    const double slack = 2e-4;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 1 + trial % 3;
        const int n = 2 + (trial / 3) % 3;
        const OperatorTuple t = gen::random_tuple(TupleFamily::dense, d, n, rng);
        const OperatorTuple th = spherical_aluthge(t);
        const double nt = joint_norm(t);

        expect(joint_norm(th) <= nt + 1e-9, "norm decreasing");

        const std::uint64_t s = rng();
        const double wt = omega(t, s);
        const double wth = omega(th, s + 1);
        const double wd = omega(dual_tuple(t), s + 2);
        expect(wt <= 0.5 * nt + 0.5 * wth + slack, "omega(T) <= ||T||/2 + omega(That)/2");
        expect(wth <= 0.5 * wt + 0.5 * wd + 3e-4, "omega(That) <= omega(T)/2 + omega(T1)/2");
        expect(nt / (2.0 * std::sqrt(double(d))) <= wt + slack, "lower sandwich (1.5)");
        expect(wt <= nt + slack, "upper sandwich");
        if (d == 1) {
            const double r = t[0].eigenvalues().cwiseAbs().maxCoeff();
            expect(std::max(r, nt / 2.0) <= wt + slack, "single-operator sandwich (1.1)");
        }
        for (int k = 1; k <= 6; ++k) {
            const double pk = tuple_power_norm(t, k);
            expect(tuple_power_norm(th, k) <= pk + 1e-8, "power norm decreasing (4.4)");
            expect(tuple_power_norm(th, k) <= std::sqrt(tuple_power_norm(t, k + 1)) *
                                                      std::sqrt(tuple_power_norm(t, k - 1)) +
                                                  1e-8,
                   "power interpolation (4.5)");
            expect(tuple_power_norm(t, k + 1) <= pk * nt + 1e-8, "submultiplicativity (4.6)");
        }
    }
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 1 + trial % 3;
        const int n = 2 + (trial / 3) % 3;
        const OperatorTuple t = gen::random_tuple(TupleFamily::commuting, d, n, rng);
        const OperatorTuple th = spherical_aluthge(t);
        const std::uint64_t s = rng();
        expect(omega(th, s) <= omega(t, s + 1) + slack, "commuting omega decreasing");
        expect(is_commuting(th).witness < 1e-8, "transform preserves commutativity");
    }
}

void criterion_4() {
    Criterion c("4: spectral-radius convergence on commuting tuples");
    std::mt19937_64 rng(44001);
    for (int trial = 0; trial < 50; ++trial) {
        const OperatorTuple t = gen::commuting_upper_triangular(2, 3, rng);
        const double r = max_point_norm(joint_eigenvalues(t, 1000 + trial));
        const AluthgeIteration it = iterate_aluthge(t, 200, 1e-15);
        for (std::size_t i = 1; i < it.norm_trace.size(); ++i)
            expect(it.norm_trace[i] <= it.norm_trace[i - 1] + 1e-9, "trace non-increasing");
        for (double v : it.norm_trace) expect(v >= r - 1e-8, "trace bounded below by r");
        expect(std::abs(it.norm_trace.back() - r) < 5e-2, "trace within 5e-2 of r after 200");
        const RadiusEstimate gel = joint_spectral_radius_gelfand(t, 64);
        expect(std::abs(gel.value - r) < 1e-2, "gelfand(64) within 1e-2 of r");
    }
    for (int trial = 0; trial < 50; ++trial) {
        const OperatorTuple t = gen::random_tuple(TupleFamily::normal_commuting, 2, 3, rng);
        const double r = max_point_norm(joint_eigenvalues(t, 2000 + trial));
        expect(std::abs(joint_norm(t) - r) < 1e-8, "normal tuple: trace equals r at step 0");
    }
}

void criterion_5() {
    Criterion c("5: d = 1 reduction to the classical Aluthge transform");
    std::mt19937_64 rng(55001);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 4;
        const ComplexMatrix a = random_dense(n, rng);
        const OperatorTuple t({a});
        const OperatorTuple th = spherical_aluthge(t);
        expect(spectral_norm(th[0] - classical_aluthge_svd(a)) < 1e-9,
               "matches SVD-based classical transform");
        const std::uint64_t s = rng();
        expect(omega(th, s) <= omega(t, s + 1) + 2e-4, "omega decreasing at d = 1");
        const double r_before = a.eigenvalues().cwiseAbs().maxCoeff();
        const double r_after = th[0].eigenvalues().cwiseAbs().maxCoeff();
        expect(std::abs(r_before - r_after) < 1e-8, "spectral radius preserved");
    }
}

void criterion_6() {
    Criterion c("6: oracle consistency (power norms, spectral mapping)");
    std::mt19937_64 rng(66001);
    for (int d = 1; d <= 3; ++d)
        for (int n = 2; n <= 4; ++n) {
            const OperatorTuple t = gen::random_tuple(TupleFamily::dense, d, n, rng);
            OperatorTuple power = t;
            for (int k = 1; k <= 3; ++k) {
                expect(std::abs(tuple_power_norm(t, k) - joint_norm(power)) < 1e-10,
                       "gram recursion vs explicit product");
                if (k < 3) power = tuple_product(t, power);
            }
        }
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = random_dense(4, rng);
        const JointEigenvalues je = joint_eigenvalues(OperatorTuple({a, ComplexMatrix(a * a)}),
                                                      3000 + trial);
        for (const auto& p : je.points)
            expect(std::abs(p[1] - p[0] * p[0]) < 1e-8 * (1.0 + std::norm(p[0])),
                   "spectral mapping on (A, A^2)");
    }
}

void criterion_7() {
    Criterion c("7: cmd_verify determinism across runs and thread settings");
    const fs::path dir = fs::temp_directory_path() /
                         ("aluthge_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto run_verify = [&](const std::string& out, int threads) {
        const std::string cmd = "cd '" + dir.string() + "' && ALUTHGE_LAB_THREADS=" +
                                std::to_string(threads) + " " + ALUTHGE_CLI_PATH +
                                " verify --count 2 --seed 42 --out " + out + " >/dev/null 2>&1";
        return WEXITSTATUS(std::system(cmd.c_str()));
    };
    auto canonical = [&](const std::string& name) {
        std::ifstream in(dir / name);
        json j;
        in >> j;
        j.erase("wall_time");
        return j.dump();
    };
    expect(run_verify("a.json", 1) == 0, "verify run 1 exits 0");
    expect(run_verify("b.json", 1) == 0, "verify run 2 exits 0");
    expect(run_verify("c.json", 4) == 0, "verify run with 4 threads exits 0");
    const std::string a = canonical("a.json");
    expect(a == canonical("b.json"), "identical JSON across runs");
    expect(a == canonical("c.json"), "identical JSON across thread settings");
    std::error_code ec;
    fs::remove_all(dir, ec);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    std::printf("%d checks, %d failures\n", g_checks, g_failures);
    return g_failures == 0 ? 0 : 1;
}
