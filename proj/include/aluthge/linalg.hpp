#ifndef ALUTHGE_LINALG_HPP
#define ALUTHGE_LINALG_HPP

// Dense complex-matrix primitives with an explicit tolerance policy.
// Everything downstream (polar decompositions, Aluthge iterates, radius
// estimators) funnels its eigen/rank decisions through this file so that
// kernel cutoffs stay consistent across a whole computation.

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace aluthge {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

struct ToleranceConfig {
    double rank_rel_tol = 1e-10;  // eigenvalues <= rank_rel_tol * lambda_max are exact zeros
    double recon_tol = 1e-9;      // reconstruction / Hermiticity residual budget
    double opt_slack = 1e-4;      // optimizer gap absorbed by inequality tests

    void validate() const {
        if (!(rank_rel_tol > 0.0) || !(recon_tol > 0.0) || !(opt_slack > 0.0))
            throw std::invalid_argument("ToleranceConfig: all tolerances must be positive");
        if (!(rank_rel_tol < 1.0))
            throw std::invalid_argument("ToleranceConfig: rank_rel_tol must be < 1");
    }
};

// Thrown when a computed factorization fails its own consistency checks.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool all_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

// Largest singular value.
inline double spectral_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    return svd.singularValues()(0);
}

struct HermitianEig {
    Eigen::VectorXd eigenvalues;  // ascending
    ComplexMatrix unitary;        // columns are eigenvectors
};

inline double hermitian_defect(const ComplexMatrix& m) {
    return spectral_norm(m - m.adjoint());
}

// Eigendecomposition of a Hermitian matrix. The input must be square and
// Hermitian within recon_tol * (1 + ||M||); the tiny skew part coming from
// roundoff is symmetrized away before solving.
inline HermitianEig hermitian_eig(const ComplexMatrix& m,
                                  const ToleranceConfig& tol = {}) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermitian_eig: input matrix is not square");
    const double scale = 1.0 + spectral_norm(m);
    if (hermitian_defect(m) > tol.recon_tol * scale)
        throw std::invalid_argument("hermitian_eig: input matrix is not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()));
    if (es.info() != Eigen::Success)
        throw numerical_error("hermitian_eig: eigensolver did not converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

namespace detail {

// Shared eigenvalue filter for PSD inputs: negative dust down to
// -rank_rel_tol * lambda_max is clipped to zero, anything below is an error.
inline Eigen::VectorXd clipped_psd_eigenvalues(const Eigen::VectorXd& lam,
                                               const ToleranceConfig& tol,
                                               const char* who) {
    const double lam_max = std::max(lam.maxCoeff(), 0.0);
    const double floor = -tol.rank_rel_tol * lam_max;
    Eigen::VectorXd out = lam;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam(i) < floor)
            throw std::invalid_argument(std::string(who) + ": matrix not PSD (eigenvalue " +
                                        std::to_string(lam(i)) + ")");
        out(i) = std::max(lam(i), 0.0);
    }
    return out;
}

}  // namespace detail

// Principal square root of a Hermitian PSD matrix.
inline ComplexMatrix psd_sqrt(const ComplexMatrix& m, const ToleranceConfig& tol = {}) {
    HermitianEig eig = hermitian_eig(m, tol);
    Eigen::VectorXd lam = detail::clipped_psd_eigenvalues(eig.eigenvalues, tol, "psd_sqrt");
    return eig.unitary * lam.cwiseSqrt().asDiagonal() * eig.unitary.adjoint();
}

// Moore-Penrose pseudo-inverse of a Hermitian PSD matrix with the rank
// cutoff of the tolerance policy.
inline ComplexMatrix psd_pinv(const ComplexMatrix& m, const ToleranceConfig& tol = {}) {
    HermitianEig eig = hermitian_eig(m, tol);
    Eigen::VectorXd lam = detail::clipped_psd_eigenvalues(eig.eigenvalues, tol, "psd_pinv");
    const double cutoff = tol.rank_rel_tol * std::max(lam.maxCoeff(), 0.0);
    Eigen::VectorXd inv(lam.size());
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        inv(i) = lam(i) > cutoff ? 1.0 / lam(i) : 0.0;
    return eig.unitary * inv.asDiagonal() * eig.unitary.adjoint();
}

inline int psd_rank(const Eigen::VectorXd& lam, double rank_rel_tol) {
    const double cutoff = rank_rel_tol * std::max(lam.maxCoeff(), 0.0);
    int r = 0;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
        if (lam(i) > cutoff) ++r;
    return r;
}

enum class MatrixKind { dense, uppertriangular, normal, psd };

inline Complex standard_complex_normal(std::mt19937_64& rng) {
    static constexpr double inv_sqrt2 = 0.70710678118654752440;
    std::normal_distribution<double> g(0.0, 1.0);
    const double re = g(rng);
    const double im = g(rng);
    return {re * inv_sqrt2, im * inv_sqrt2};
}

inline ComplexMatrix random_dense(Eigen::Index n, std::mt19937_64& rng) {
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            m(i, j) = standard_complex_normal(rng);
    return m;
}

inline ComplexMatrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
    Eigen::HouseholderQR<ComplexMatrix> qr(random_dense(n, rng));
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    // Fix the phase of R's diagonal so the distribution is Haar-like.
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < n; ++i) {
        Complex d = r(i, i);
        q.col(i) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0, 0.0);
    }
    return q;
}

// Seeded random test matrices. Entries are i.i.d. complex standard normal
// before any structuring; identical (n, kind, seed) gives identical output.
inline ComplexMatrix random_matrix(Eigen::Index n, MatrixKind kind, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_matrix: n must be >= 1");
    std::mt19937_64 rng(seed);
    switch (kind) {
        case MatrixKind::dense:
            return random_dense(n, rng);
        case MatrixKind::uppertriangular: {
            ComplexMatrix m = random_dense(n, rng);
            return m.triangularView<Eigen::Upper>();
        }
        case MatrixKind::normal: {
            ComplexMatrix u = random_unitary(n, rng);
            ComplexVector d(n);
            for (Eigen::Index i = 0; i < n; ++i) d(i) = standard_complex_normal(rng);
            return u * d.asDiagonal() * u.adjoint();
        }
        case MatrixKind::psd: {
            ComplexMatrix a = random_dense(n, rng);
            return a.adjoint() * a;
        }
    }
    throw std::invalid_argument("random_matrix: unknown kind");
}

}  // namespace aluthge

#endif  // ALUTHGE_LINALG_HPP
