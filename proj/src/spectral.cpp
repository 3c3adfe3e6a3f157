#include "evciso/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace evciso {

namespace {

// Sums after sorting ascending: the result depends only on the multiset of
// addends, never on vertex numbering. This is what makes iteration counts
// and scores bit-identical across relabelings of the same graph.
double canonical_sum(std::vector<double>& buf) {
    std::sort(buf.begin(), buf.end());
    double s = 0.0;
    for (double v : buf) s += v;
    return s;
}

struct RunOutcome {
    std::vector<double> values;
    double norm = 0.0;
    int iterations = 0;
    bool norm_converged = false;
    bool vector_converged = false;
};

// One power-iteration run on A (shifted=false) or A+I (shifted=true).
// The unshifted run stops at the first norm-delta convergence and reports
// whether the iterate had settled there; the shifted run keeps iterating
// until both the norm and the iterate have settled, or the cap is reached.
// A graph whose two largest eigenvalues are close (typically a disconnected
// graph with nearly-equal component spectral radii) contracts the iterate at
// rate (lambda2+1)/(lambda1+1) per step, so the vector can need far more
// iterations than the norm, whose residual decays at twice that exponent.
RunOutcome run(const Graph& g, const ConvergenceConfig& cfg, bool shifted) {
    const int n = g.vertex_count();
    RunOutcome out;
    std::vector<double> x(static_cast<size_t>(n), 1.0);  // column of all 1s
    std::vector<double> y(static_cast<size_t>(n));
    std::vector<double> buf;
    std::vector<double> squares(static_cast<size_t>(n));

    double prev_norm = 0.0;
    for (int it = 1; it <= cfg.max_iterations; ++it) {
        for (int u = 0; u < n; ++u) {
            buf.clear();
            for (int v : g.neighbors(u)) buf.push_back(x[static_cast<size_t>(v)]);
            if (shifted) buf.push_back(x[static_cast<size_t>(u)]);
            y[static_cast<size_t>(u)] = canonical_sum(buf);
        }
        for (int u = 0; u < n; ++u)
            squares[static_cast<size_t>(u)] = y[static_cast<size_t>(u)] * y[static_cast<size_t>(u)];
        const double norm = std::sqrt(canonical_sum(squares));

        double max_delta = 0.0;
        for (int u = 0; u < n; ++u) {
            const double next = y[static_cast<size_t>(u)] / norm;
            max_delta = std::max(max_delta, std::abs(next - x[static_cast<size_t>(u)]));
            x[static_cast<size_t>(u)] = next;
        }

        out.iterations = it;
        if (it >= 2 && std::abs(norm - prev_norm) <= cfg.norm_tolerance) {
            out.norm_converged = true;
            out.vector_converged = max_delta <= cfg.vector_tolerance;
            out.norm = norm;
            if (!shifted || out.vector_converged) {
                out.values = x;
                return out;
            }
        }
        prev_norm = norm;
    }
    out.values = x;
    return out;
}

}  // namespace

EvcResult power_iteration(const Graph& g, const ConvergenceConfig& cfg) {
    if (cfg.norm_tolerance <= 0.0 || cfg.vector_tolerance <= 0.0)
        throw std::invalid_argument("convergence tolerances must be positive");
    if (cfg.max_iterations < 1)
        throw std::invalid_argument("max_iterations must be at least 1");
    if (g.edge_count() == 0)
        throw ConvergenceError(
            "eigenvector centrality undefined for edgeless graph: A x is the "
            "zero vector");

    RunOutcome plain = run(g, cfg, false);
    if (plain.norm_converged && plain.vector_converged) {
        EvcResult r;
        r.values = std::move(plain.values);
        r.spectral_radius = plain.norm;
        r.iterations = plain.iterations;
        r.vector_converged = true;
        r.used_shift = false;
        return r;
    }

    RunOutcome shifted = run(g, cfg, true);
    if (!shifted.norm_converged)
        throw ConvergenceError("power iteration did not converge within " +
                               std::to_string(cfg.max_iterations) +
                               " iterations, even on the shifted matrix A+I");
    // If the iteration cap interrupts a norm-converged run before the iterate
    // itself settles, return the truncated iterate and say so via the flag
    // rather than failing: the canonical summation keeps truncated values
    // bit-identical across relabelings, so comparisons stay sound.
    EvcResult r;
    r.values = std::move(shifted.values);
    r.spectral_radius = shifted.norm - 1.0;  // A+I spectrum is A's shifted by +1
    r.iterations = plain.iterations + shifted.iterations;
    r.vector_converged = shifted.vector_converged;
    r.used_shift = true;
    return r;
}

std::vector<double> evc_sequence(const EvcResult& r) {
    std::vector<double> seq = r.values;
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return seq;
}

}  // namespace evciso
