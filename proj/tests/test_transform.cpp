#include <doctest.h>

#include "aluthge/transform.hpp"
#include "aluthge/verify.hpp"

using namespace aluthge;

namespace {

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

OperatorTuple worked_example() {
    return OperatorTuple({mat2(0, 1, 0, 0), mat2(0, -1, 1, 0)});
}

// Test-only classical Aluthge transform |T|^{1/2} U |T|^{1/2} built from an
// SVD-based polar decomposition; independent of the spherical machinery.
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
    const ComplexMatrix partial_isometry =
        svd.matrixU() * mask.asDiagonal() * svd.matrixV().adjoint();
    return abs_sqrt * partial_isometry * abs_sqrt;
}

}  // namespace

TEST_CASE("normal matrices are fixed points of the transform") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        ComplexMatrix nmat = random_matrix(4, MatrixKind::normal, 100 + seed);
        OperatorTuple t({nmat});
        OperatorTuple th = spherical_aluthge(t);
        CHECK(spectral_norm(th[0] - nmat) < 1e-10 * (1.0 + spectral_norm(nmat)));
    }
}

TEST_CASE("worked example transform uses the closed-form P and V") {
    OperatorTuple t = worked_example();
    auto dec = spherical_polar(t);
    const ComplexMatrix sqrt_p = psd_sqrt(dec.P);
    OperatorTuple th = spherical_aluthge(t);
    for (int k = 0; k < 2; ++k)
        CHECK(spectral_norm(th[k] - sqrt_p * dec.V[k] * sqrt_p) < 1e-12);
}

TEST_CASE("d = 1 spherical transform is the classical Aluthge transform") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        ComplexMatrix a = random_matrix(3 + seed % 3, MatrixKind::dense, 200 + seed);
        OperatorTuple th = spherical_aluthge(OperatorTuple({a}));
        CHECK(spectral_norm(th[0] - classical_aluthge_svd(a)) <
              1e-10 * (1.0 + spectral_norm(a)));
    }
}

TEST_CASE("dual tuple closed forms on the worked example") {
    OperatorTuple dual = dual_tuple(worked_example());
    const double s2 = std::sqrt(2.0);
    CHECK((dual[0] - mat2(0, s2 / 2, 0, 0)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((dual[1] - mat2(0, -s2 / 2, s2, 0)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dual tuple of identity and of normal operators") {
    OperatorTuple dual = dual_tuple(identity_tuple(3));
    CHECK(spectral_norm(dual[0] - ComplexMatrix::Identity(3, 3)) < 1e-12);

    ComplexMatrix nmat = random_matrix(4, MatrixKind::normal, 300);
    OperatorTuple t({nmat});
    CHECK(spectral_norm(dual_tuple(t)[0] - nmat) < 1e-10 * (1.0 + spectral_norm(nmat)));
    CHECK(spectral_norm(dual_tuple(t)[0] - spherical_aluthge(t)[0]) <
          1e-10 * (1.0 + spectral_norm(nmat)));
}

TEST_CASE("norm never increases under the transform") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        OperatorTuple t =
            gen::random_tuple(TupleFamily::dense, 1 + trial % 3, 2 + trial % 3, rng);
        CHECK(joint_norm(spherical_aluthge(t)) <= joint_norm(t) + 1e-9);
    }
}

TEST_CASE("commuting tuples stay commuting") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        OperatorTuple t =
            gen::random_tuple(TupleFamily::commuting, 2 + trial % 2, 2 + trial % 3, rng);
        OperatorTuple th = spherical_aluthge(t);
        const double jn = joint_norm(th);
        CHECK(is_commuting(th, 1e-8).witness <= 1e-8 * (1.0 + jn * jn));
    }
}

TEST_CASE("power norm inequalities for the transform") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        OperatorTuple t =
            gen::random_tuple(TupleFamily::dense, 1 + trial % 3, 2 + trial % 3, rng);
        OperatorTuple th = spherical_aluthge(t);
        for (int k = 1; k <= 6; ++k) {
            CHECK(tuple_power_norm(th, k) <= tuple_power_norm(t, k) + 1e-8);
            CHECK(tuple_power_norm(th, k) <= std::sqrt(tuple_power_norm(t, k + 1)) *
                                                     std::sqrt(tuple_power_norm(t, k - 1)) +
                                                 1e-8);
        }
    }
}

TEST_CASE("iteration on a jointly diagonalizable commuting normal tuple is constant") {
    std::mt19937_64 rng(45);
    OperatorTuple t = gen::random_tuple(TupleFamily::normal_commuting, 2, 3, rng);
    AluthgeIteration it = iterate_aluthge(t, 10, 1e-13);
    // Joint norm equals the max joint-eigenvalue l2 norm from step 0 onward.
    const double expected = max_point_norm(joint_eigenvalues(t));
    for (double v : it.norm_trace) CHECK(v == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("iteration drives the nilpotent Jordan cell to zero") {
    OperatorTuple t({mat2(0, 1, 0, 0)});
    AluthgeIteration it = iterate_aluthge(t, 200, 1e-14);
    CHECK(it.norm_trace.front() == doctest::Approx(1.0));
    CHECK(it.norm_trace.back() < 1e-2);
    for (std::size_t i = 1; i < it.norm_trace.size(); ++i)
        CHECK(it.norm_trace[i] <= it.norm_trace[i - 1] + 1e-9);
}

TEST_CASE("iteration rejects bad arguments") {
    CHECK_THROWS_AS(iterate_aluthge(identity_tuple(2), 0, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(iterate_aluthge(identity_tuple(2), 5, 0.0), std::invalid_argument);
}

TEST_CASE("iteration records the consecutive transform relation") {
    std::mt19937_64 rng(46);
    OperatorTuple t = gen::random_tuple(TupleFamily::dense, 2, 3, rng);
    AluthgeIteration it = iterate_aluthge(t, 5, 1e-14);
    for (std::size_t i = 0; i + 1 < it.tuples.size(); ++i) {
        OperatorTuple direct = spherical_aluthge(it.tuples[i]);
        for (int k = 0; k < t.d(); ++k)
            CHECK(spectral_norm(direct[k] - it.tuples[i + 1][k]) < 1e-12);
    }
    CHECK(it.ranks.size() == it.tuples.size() - 1);
}
