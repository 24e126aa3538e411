#ifndef ALUTHGE_TRANSFORM_HPP
#define ALUTHGE_TRANSFORM_HPP

// Spherical Aluthge transform (sqrt(P) V_k sqrt(P)), the dual tuple (P V_k),
// and the iterated transform with norm and rank traces.

#include <stdexcept>
#include <utility>
#include <vector>

#include "aluthge/polar.hpp"

namespace aluthge {

inline OperatorTuple spherical_aluthge(const OperatorTuple& t, const ToleranceConfig& tol = {}) {
    SphericalPolarDecomposition dec = spherical_polar(t, tol);
    const ComplexMatrix sqrt_p = psd_sqrt(dec.P, tol);
    std::vector<ComplexMatrix> out;
    out.reserve(t.entries.size());
    for (const auto& v : dec.V.entries) out.push_back(sqrt_p * v * sqrt_p);
    return OperatorTuple(std::move(out));
}

// The reversed-order factorization tuple (P V_1, ..., P V_d).
inline OperatorTuple dual_tuple(const OperatorTuple& t, const ToleranceConfig& tol = {}) {
    SphericalPolarDecomposition dec = spherical_polar(t, tol);
    std::vector<ComplexMatrix> out;
    out.reserve(t.entries.size());
    for (const auto& v : dec.V.entries) out.push_back(dec.P * v);
    return OperatorTuple(std::move(out));
}

enum class StopReason { converged, max_iter, numerical_breakdown };

inline const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::converged: return "converged";
        case StopReason::max_iter: return "max_iter";
        case StopReason::numerical_breakdown: return "numerical_breakdown";
    }
    return "unknown";
}

struct AluthgeIteration {
    std::vector<OperatorTuple> tuples;  // T_0 = T, T_1, ..., T_N
    std::vector<double> norm_trace;     // joint norms, non-increasing
    std::vector<int> ranks;             // rank of P at each step
    StopReason stop_reason = StopReason::max_iter;
};

// Iterates the transform until the norm trace decrement drops below conv_tol
// or max_iter steps were taken. Each step recomputes a fresh polar
// decomposition; the rank sequence records kernel growth along the way.
inline AluthgeIteration iterate_aluthge(const OperatorTuple& t, int max_iter,
                                        double conv_tol, const ToleranceConfig& tol = {}) {
    if (max_iter < 1) throw std::invalid_argument("iterate_aluthge: max_iter must be >= 1");
    if (!(conv_tol > 0.0)) throw std::invalid_argument("iterate_aluthge: conv_tol must be > 0");

    AluthgeIteration it;
    it.tuples.push_back(t);
    it.norm_trace.push_back(joint_norm(t));
    it.stop_reason = StopReason::max_iter;
    for (int n = 0; n < max_iter; ++n) {
        SphericalPolarDecomposition dec;
        OperatorTuple next;
        try {
            dec = spherical_polar(it.tuples.back(), tol);
            const ComplexMatrix sqrt_p = psd_sqrt(dec.P, tol);
            std::vector<ComplexMatrix> mats;
            mats.reserve(t.entries.size());
            for (const auto& v : dec.V.entries) mats.push_back(sqrt_p * v * sqrt_p);
            next = OperatorTuple(std::move(mats));
        } catch (const numerical_error&) {
            it.stop_reason = StopReason::numerical_breakdown;
            break;
        }
        it.ranks.push_back(dec.rank);
        it.tuples.push_back(std::move(next));
        it.norm_trace.push_back(joint_norm(it.tuples.back()));
        const double decrement = it.norm_trace[it.norm_trace.size() - 2] - it.norm_trace.back();
        if (decrement < conv_tol) {
            it.stop_reason = StopReason::converged;
            break;
        }
    }
    return it;
}

}  // namespace aluthge

#endif  // ALUTHGE_TRANSFORM_HPP
