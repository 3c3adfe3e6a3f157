#pragma once

#include <optional>

#include "evciso/graph.hpp"
#include "evciso/invariant_filter.hpp"

namespace evciso {

struct MatchResult {
    bool isomorphic = false;
    /// A verifying bijection g1 -> g2; present iff isomorphic.
    std::optional<VertexPermutation> witness;
    /// Tentative assignments made by the backtracking search.
    long nodes_explored = 0;
};

/// Restricts candidate images during the search. Refinement changes
/// nodes_explored only, never the verdict.
enum class Refinement {
    None,        // any unused vertex
    Degree,      // images must match degree
    EvcClasses,  // images must match degree and EVC class (runs the filter first)
};

/// True iff {u,v} in g1 <=> {f(u),f(v)} in g2 for all vertex pairs.
/// Throws std::invalid_argument on size mismatch or if f is not a permutation.
bool verify_mapping(const Graph& g1, const Graph& g2, const VertexPermutation& f);

/// Exact isomorphism decision by backtracking over vertex assignments,
/// highest-degree-first, with full partial-consistency checks at every step.
/// Unequal vertex or edge counts return non-isomorphic immediately. In
/// EvcClasses mode the invariant filter runs first; a filter rejection is a
/// sound non-isomorphic verdict with no search.
MatchResult is_isomorphic(const Graph& g1, const Graph& g2,
                          Refinement refinement = Refinement::Degree,
                          const ConvergenceConfig& cfg = {}, double tol = 1e-6);

/// Search constrained by an already-computed candidate-class pairing, as
/// produced by the filter for an EVC-flagged pair. Sound only when the EVC
/// sequences genuinely matched.
MatchResult is_isomorphic_within_classes(const Graph& g1, const Graph& g2,
                                         const CandidateMapping& mapping);

/// Test oracle: tries every permutation. Guarded to n <= 8 (8! = 40320);
/// larger inputs throw std::invalid_argument.
bool brute_force_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace evciso
