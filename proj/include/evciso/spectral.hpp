#pragma once

#include <stdexcept>
#include <vector>

#include "evciso/graph.hpp"

namespace evciso {

/// Thrown when power iteration cannot produce a converged eigenvector,
/// including the edgeless case where normalization is undefined.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ConvergenceConfig {
    /// Stop threshold on | ||A x_{i+1}|| - ||A x_i|| |.
    double norm_tolerance = 1e-10;
    /// Max-norm threshold on the iterate delta; decides whether the vector
    /// itself has settled once the norm has.
    double vector_tolerance = 1e-10;
    int max_iterations = 1000;
};

struct EvcResult {
    /// Per-vertex eigenvector-centrality scores: non-negative, unit L2 norm.
    std::vector<double> values;
    /// Converged normalization value (largest adjacency eigenvalue).
    double spectral_radius = 0.0;
    /// Matrix-vector products performed, counting any shifted re-run.
    int iterations = 0;
    bool vector_converged = false;
    /// Set when the result came from the A+I re-run (see power_iteration).
    bool used_shift = false;
};

/// Principal eigenvector of the adjacency matrix by power iteration from the
/// all-ones start vector: x_{i+1} = A x_i / ||A x_i||, stopping when
/// consecutive normalization values agree within norm_tolerance.
///
/// If the iterate itself has not settled at that point (bipartite graphs
/// oscillate with period 2 because their spectrum is symmetric), the
/// computation re-runs on A+I, which has the same eigenvectors but a strictly
/// dominant top eigenvalue per component, and reports the converged norm
/// minus one as the spectral radius. Every arithmetic reduction sums its
/// addends in value order, so results are bit-identical under vertex
/// relabeling.
///
/// Throws ConvergenceError for edgeless graphs and when even the shifted run
/// fails to converge within max_iterations.
EvcResult power_iteration(const Graph& g, const ConvergenceConfig& cfg = {});

/// The scores as a multiset, sorted non-increasing.
std::vector<double> evc_sequence(const EvcResult& r);

}  // namespace evciso
