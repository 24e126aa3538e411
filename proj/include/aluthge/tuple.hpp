#ifndef ALUTHGE_TUPLE_HPP
#define ALUTHGE_TUPLE_HPP

// Operator-tuple algebra: joint norm, tuple products and powers, the Gram
// recursion for ||T^n||, and commutativity testing.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aluthge/linalg.hpp"

namespace aluthge {

// Ordered list of d square complex matrices of shared dimension,
// modeling T = (T_1, ..., T_d).
struct OperatorTuple {
    std::vector<ComplexMatrix> entries;

    OperatorTuple() = default;
    explicit OperatorTuple(std::vector<ComplexMatrix> mats) : entries(std::move(mats)) {
        validate();
    }

    int d() const { return static_cast<int>(entries.size()); }
    Eigen::Index dim() const { return entries.empty() ? 0 : entries.front().rows(); }

    const ComplexMatrix& operator[](std::size_t k) const { return entries[k]; }

    void validate() const {
        if (entries.empty())
            throw std::invalid_argument("OperatorTuple: tuple length d must be >= 1");
        const Eigen::Index n = entries.front().rows();
        if (n < 1) throw std::invalid_argument("OperatorTuple: dimension must be >= 1");
        for (const auto& m : entries) {
            if (m.rows() != m.cols())
                throw std::invalid_argument("OperatorTuple: all matrices must be square");
            if (m.rows() != n)
                throw std::invalid_argument("OperatorTuple: all matrices must share one dimension");
            if (!all_finite(m))
                throw std::invalid_argument("OperatorTuple: entries must be finite");
        }
    }
};

inline OperatorTuple identity_tuple(Eigen::Index n) {
    return OperatorTuple({ComplexMatrix::Identity(n, n)});
}

// Sum_k T_k^* T_k, the Gram matrix of the stacked column operator.
inline ComplexMatrix tuple_gram(const OperatorTuple& t) {
    ComplexMatrix g = ComplexMatrix::Zero(t.dim(), t.dim());
    for (const auto& m : t.entries) g += m.adjoint() * m;
    return g;
}

// ||T|| = ||Sum_k T_k^* T_k||^{1/2}.
inline double joint_norm(const OperatorTuple& t) {
    return std::sqrt(spectral_norm(tuple_gram(t)));
}

// Product tuple of length T.d * S.d in lexicographic index order
// (T_1 S_1, ..., T_1 S_n, T_2 S_1, ..., T_m S_n).
inline OperatorTuple tuple_product(const OperatorTuple& t, const OperatorTuple& s) {
    if (t.dim() != s.dim())
        throw std::invalid_argument("tuple_product: dimension mismatch");
    std::vector<ComplexMatrix> out;
    out.reserve(static_cast<std::size_t>(t.d()) * s.d());
    for (const auto& a : t.entries)
        for (const auto& b : s.entries)
            out.push_back(a * b);
    return OperatorTuple(std::move(out));
}

inline OperatorTuple scale_tuple(const OperatorTuple& t, Complex c) {
    std::vector<ComplexMatrix> out;
    out.reserve(t.entries.size());
    for (const auto& m : t.entries) out.push_back(c * m);
    return OperatorTuple(std::move(out));
}

// Gram recursion Q_0 = I, Q_k = Sum_i T_i^* Q_{k-1} T_i with raw matrices
// retained; intended for small k (tests, small traces).
struct GramSequence {
    OperatorTuple base;
    std::vector<ComplexMatrix> matrices;  // Q_0 .. Q_N
    std::vector<double> norms;            // ||T^k|| = ||Q_k||^{1/2}
};

inline GramSequence gram_sequence(const OperatorTuple& t, int n_max) {
    if (n_max < 0) throw std::invalid_argument("gram_sequence: n_max must be >= 0");
    GramSequence seq;
    seq.base = t;
    ComplexMatrix q = ComplexMatrix::Identity(t.dim(), t.dim());
    seq.matrices.push_back(q);
    seq.norms.push_back(1.0);
    for (int k = 1; k <= n_max; ++k) {
        ComplexMatrix next = ComplexMatrix::Zero(t.dim(), t.dim());
        for (const auto& m : t.entries) next += m.adjoint() * q * m;
        q = 0.5 * (next + next.adjoint());  // symmetrize roundoff
        seq.matrices.push_back(q);
        seq.norms.push_back(std::sqrt(spectral_norm(q)));
    }
    return seq;
}

// ||T^k|| via the Gram recursion, with per-step rescaling so large k neither
// overflows nor underflows. O(k * d) matrix multiplications.
inline double tuple_power_norm(const OperatorTuple& t, int k) {
    if (k < 0) throw std::invalid_argument("tuple_power_norm: k must be >= 0");
    if (k == 0) return 1.0;
    ComplexMatrix q = ComplexMatrix::Identity(t.dim(), t.dim());
    double log_scale = 0.0;
    for (int step = 0; step < k; ++step) {
        ComplexMatrix next = ComplexMatrix::Zero(t.dim(), t.dim());
        for (const auto& m : t.entries) next += m.adjoint() * q * m;
        q = 0.5 * (next + next.adjoint());
        const double s = spectral_norm(q);
        if (s == 0.0) return 0.0;
        q /= s;
        log_scale += std::log(s);
    }
    return std::exp(0.5 * log_scale);
}

struct CommutationCheck {
    bool commuting = false;
    double witness = 0.0;  // max_{j<k} ||T_j T_k - T_k T_j||
};

// flag true iff witness <= tol * (1 + ||T||^2); the quadratic scale matches
// how commutator roundoff grows with entry magnitude.
inline CommutationCheck is_commuting(const OperatorTuple& t, double tol = 1e-10) {
    CommutationCheck out;
    for (int j = 0; j < t.d(); ++j)
        for (int k = j + 1; k < t.d(); ++k) {
            const double w = spectral_norm(t[j] * t[k] - t[k] * t[j]);
            out.witness = std::max(out.witness, w);
        }
    const double jn = joint_norm(t);
    out.commuting = out.witness <= tol * (1.0 + jn * jn);
    return out;
}

}  // namespace aluthge

#endif  // ALUTHGE_TUPLE_HPP
