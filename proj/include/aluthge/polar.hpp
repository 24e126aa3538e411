#ifndef ALUTHGE_POLAR_HPP
#define ALUTHGE_POLAR_HPP

// Spherical polar decomposition T_k = V_k P of an operator tuple, where
// P = (Sum_k T_k^* T_k)^{1/2} and the stacked V is a partial isometry that
// vanishes on the kernel of P.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "aluthge/linalg.hpp"
#include "aluthge/tuple.hpp"

namespace aluthge {

struct SphericalPolarDecomposition {
    ComplexMatrix P;   // Hermitian PSD factor
    OperatorTuple V;   // joint partial isometry factors
    ComplexMatrix R;   // Sum_k V_k^* V_k, the projection onto range(P)
    int rank = 0;      // numerical rank of P
    ToleranceConfig tol;
};

// V_k is taken as T_k * pinv(P), which makes each V_k vanish on the kernel
// of P and makes R the spectral projection onto range(P).
inline SphericalPolarDecomposition spherical_polar(const OperatorTuple& t,
                                                   const ToleranceConfig& tol = {}) {
    const Eigen::Index n = t.dim();
    const ComplexMatrix g = tuple_gram(t);
    HermitianEig eig = hermitian_eig(g, tol);
    Eigen::VectorXd lam = detail::clipped_psd_eigenvalues(eig.eigenvalues, tol, "spherical_polar");

    const double cutoff = tol.rank_rel_tol * std::max(lam.maxCoeff(), 0.0);
    Eigen::VectorXd p_diag(n), pinv_diag(n);
    int rank = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (lam(i) > cutoff) {
            p_diag(i) = std::sqrt(lam(i));
            pinv_diag(i) = 1.0 / p_diag(i);
            ++rank;
        } else {
            p_diag(i) = 0.0;
            pinv_diag(i) = 0.0;
        }
    }

    SphericalPolarDecomposition out;
    out.tol = tol;
    out.rank = rank;
    out.P = eig.unitary * p_diag.asDiagonal() * eig.unitary.adjoint();
    const ComplexMatrix p_pinv = eig.unitary * pinv_diag.asDiagonal() * eig.unitary.adjoint();

    std::vector<ComplexMatrix> v;
    v.reserve(t.entries.size());
    for (const auto& m : t.entries) v.push_back(m * p_pinv);
    out.V = OperatorTuple(std::move(v));
    out.R = tuple_gram(out.V);

    // Internal consistency: T_k must reconstruct as V_k P.
    const double scale = 1.0 + joint_norm(t);
    for (int k = 0; k < t.d(); ++k) {
        const double resid = spectral_norm(out.V[k] * out.P - t[k]);
        if (resid > tol.recon_tol * scale)
            throw numerical_error("spherical_polar: reconstruction residual " +
                                  std::to_string(resid) + " exceeds tolerance");
    }
    return out;
}

// max over j,k of ||V_j P V_k - V_k P V_j||; zero iff the tuple commutes.
inline double commutation_witness(const SphericalPolarDecomposition& dec) {
    double w = 0.0;
    for (int j = 0; j < dec.V.d(); ++j)
        for (int k = j + 1; k < dec.V.d(); ++k)
            w = std::max(w, spectral_norm(dec.V[j] * dec.P * dec.V[k] -
                                          dec.V[k] * dec.P * dec.V[j]));
    return w;
}

}  // namespace aluthge

#endif  // ALUTHGE_POLAR_HPP
