#include <doctest.h>

#include "aluthge/polar.hpp"
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

}  // namespace

TEST_CASE("spherical_polar of the single identity") {
    auto dec = spherical_polar(identity_tuple(2));
    CHECK(spectral_norm(dec.P - ComplexMatrix::Identity(2, 2)) < 1e-14);
    CHECK(spectral_norm(dec.V[0] - ComplexMatrix::Identity(2, 2)) < 1e-14);
    CHECK(spectral_norm(dec.R - ComplexMatrix::Identity(2, 2)) < 1e-14);
    CHECK(dec.rank == 2);
}

TEST_CASE("spherical_polar matches the worked example closed forms") {
    auto dec = spherical_polar(worked_example());
    const double s2 = std::sqrt(2.0);
    CHECK((dec.P - mat2(1, 0, 0, s2)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((dec.V[0] - mat2(0, s2 / 2, 0, 0)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((dec.V[1] - mat2(0, -s2 / 2, 1, 0)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(dec.rank == 2);
}

TEST_CASE("spherical_polar of the zero tuple") {
    OperatorTuple zero({ComplexMatrix::Zero(3, 3), ComplexMatrix::Zero(3, 3)});
    auto dec = spherical_polar(zero);
    CHECK(spectral_norm(dec.P) == 0.0);
    CHECK(spectral_norm(dec.V[0]) == 0.0);
    CHECK(spectral_norm(dec.V[1]) == 0.0);
    CHECK(spectral_norm(dec.R) == 0.0);
    CHECK(dec.rank == 0);
}

TEST_CASE("polar invariants on random tuples") {
    ToleranceConfig tol;
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 1 + trial % 3;
        const Eigen::Index n = 2 + trial % 3;
        OperatorTuple t = gen::random_tuple(TupleFamily::dense, d, n, rng);
        auto dec = spherical_polar(t, tol);

        // ||T|| = ||P||.
        CHECK(std::abs(joint_norm(t) - spectral_norm(dec.P)) < 1e-10);
        // R acts as the identity on range(P).
        CHECK(spectral_norm(dec.R * dec.P - dec.P) < tol.recon_tol * (1.0 + joint_norm(t)));
        CHECK(spectral_norm(dec.P * dec.R - dec.P) < tol.recon_tol * (1.0 + joint_norm(t)));
        // R is a projection of norm at most 1.
        CHECK(spectral_norm(dec.R) <= 1.0 + tol.recon_tol);
        CHECK(spectral_norm(dec.R * dec.R - dec.R) < tol.recon_tol);
        CHECK(hermitian_defect(dec.R) < tol.recon_tol);
        // Reconstruction.
        for (int k = 0; k < d; ++k)
            CHECK(spectral_norm(dec.V[k] * dec.P - t[k]) <
                  tol.recon_tol * (1.0 + joint_norm(t)));
    }
}

TEST_CASE("partial isometry factors vanish on the kernel of P") {
    ToleranceConfig tol;
    // Rank-deficient tuple: every component kills the second basis vector.
    ComplexMatrix a = mat2(1, 0, 2, 0);
    ComplexMatrix b = mat2(Complex(0, 1), 0, 1, 0);
    OperatorTuple t({a, b});
    auto dec = spherical_polar(t, tol);
    CHECK(dec.rank == 1);
    // Kernel projection of P.
    auto eig = hermitian_eig(tuple_gram(t), tol);
    ComplexMatrix kernel = ComplexMatrix::Identity(2, 2) - dec.R;
    for (int k = 0; k < 2; ++k)
        CHECK(spectral_norm(dec.V[k] * kernel) < tol.recon_tol);
}

TEST_CASE("commutation witness separates commuting from non-commuting") {
    ToleranceConfig tol;

    // Commuting (A, A^2): witness must vanish numerically.
    ComplexMatrix a = random_matrix(4, MatrixKind::dense, 19);
    auto dec = spherical_polar(OperatorTuple({a, ComplexMatrix(a * a)}), tol);
    CHECK(commutation_witness(dec) < 1e-10 * (1.0 + joint_norm(dec.V) * spectral_norm(dec.P)));

    // Worked example: clearly non-commuting.
    CHECK(commutation_witness(spherical_polar(worked_example())) > 0.1);

    // d = 1: only j = k, witness is exactly zero.
    CHECK(commutation_witness(spherical_polar(OperatorTuple({a}))) == 0.0);
}

TEST_CASE("commutation lemma equivalence at desk scale") {
    ToleranceConfig tol;
    std::mt19937_64 rng(1234);
    int commuting_seen = 0, noncommuting_seen = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + trial % 2;
        const Eigen::Index n = 2 + trial % 3;

        OperatorTuple tc = gen::random_tuple(TupleFamily::commuting, d, n, rng);
        auto dc = spherical_polar(tc, tol);
        const double jn_c = joint_norm(tc);
        CHECK(commutation_witness(dc) <= 1e-8 * (1.0 + jn_c * jn_c));
        ++commuting_seen;

        OperatorTuple td = gen::random_tuple(TupleFamily::dense, d, n, rng);
        auto check = is_commuting(td);
        if (!check.commuting) {
            // ||[T_j, T_k]|| <= witness * ||P||, so the witness is bounded
            // below by the commutator scale.
            auto dd = spherical_polar(td, tol);
            CHECK(commutation_witness(dd) >= check.witness / spectral_norm(dd.P) - 1e-8);
            ++noncommuting_seen;
        }
    }
    CHECK(commuting_seen == 200);
    CHECK(noncommuting_seen == 200);
}
