#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "evciso/graph.hpp"
#include "evciso/spectral.hpp"

namespace evciso {

/// Cheap per-graph invariants: counts, degree sequence, and — for graphs
/// with at least one edge — the sorted EVC sequence plus the full per-vertex
/// result it came from.
struct InvariantSignature {
    int n = 0;
    int m = 0;
    DegreeSequence degree_seq;       // non-increasing
    std::optional<EvcResult> evc;    // absent for edgeless graphs
    std::vector<double> evc_seq;     // non-increasing; empty iff evc absent
};

/// Computes the full signature, including EVC when the graph has edges.
/// Propagates ConvergenceError from power_iteration.
InvariantSignature signature(const Graph& g, const ConvergenceConfig& cfg = {});

/// True iff the sequences have equal length and agree elementwise within tol.
/// Both inputs must be sorted non-increasing.
bool sequences_equal(const std::vector<double>& a, const std::vector<double>& b,
                     double tol);

/// Vertices of two graphs grouped by EVC value and paired positionally.
/// Classes are maximal runs of the EVC-descending vertex order whose
/// consecutive value gaps stay within the tie tolerance. When every class is
/// a singleton the pairing is a full bijection and `unique` is set.
struct CandidateMapping {
    struct ClassPair {
        std::vector<int> left;   // vertex ids in the first graph
        std::vector<int> right;  // vertex ids in the second graph
    };
    std::vector<ClassPair> classes;
    bool unique = false;

    /// The induced bijection; only valid when unique is set.
    VertexPermutation bijection() const;
};

/// Staged outcome of the precursor pipeline. Rejections carry the first
/// failing stage only; a candidate mapping is present exactly for
/// PotentiallyIsomorphic.
struct FilterVerdict {
    enum class Kind {
        RejectedByCounts,
        RejectedByDegreeSeq,
        RejectedByEvcSeq,
        PotentiallyIsomorphic,
        TriviallyIsomorphic,  // both graphs edgeless with equal vertex count
    };
    Kind kind;
    std::optional<CandidateMapping> mapping;

    bool rejected() const {
        return kind == Kind::RejectedByCounts || kind == Kind::RejectedByDegreeSeq ||
               kind == Kind::RejectedByEvcSeq;
    }
};

const char* to_string(FilterVerdict::Kind kind);

/// Signatures for a fixed list of graphs, computed at most once per graph.
/// Counts and degree sequences are filled eagerly; EVC lazily, on the first
/// pair that survives the count and degree stages. Lazy population is safe
/// from concurrent workers, and evc_computations() counts actual
/// power-iteration runs — the observable guarantee that rejected pairs never
/// trigger spectral work.
class SignatureCache {
public:
    explicit SignatureCache(std::vector<Graph> graphs, ConvergenceConfig cfg = {});

    size_t size() const { return graphs_.size(); }
    const Graph& graph(size_t i) const { return graphs_[i]; }

    /// Counts and degree sequence only; never computes EVC.
    const InvariantSignature& basic(size_t i) const { return sigs_[i]; }

    /// Ensures the EVC part is present (no-op for edgeless graphs).
    /// Propagates ConvergenceError.
    const InvariantSignature& full(size_t i);

    long evc_computations() const { return evc_computations_.load(); }

private:
    std::vector<Graph> graphs_;
    ConvergenceConfig cfg_;
    std::vector<InvariantSignature> sigs_;
    std::vector<std::unique_ptr<std::once_flag>> evc_once_;
    std::atomic<long> evc_computations_{0};
};

/// Groups both vertex sets by EVC value and pairs the classes positionally.
/// Requires both signatures to carry EVC. Returns nullopt when the tolerance
/// grouped values differently across the two graphs (class count or a
/// positional class size differs) — callers downgrade that to an EVC-stage
/// rejection rather than guessing a pairing.
std::optional<CandidateMapping> candidate_mapping(const InvariantSignature& a,
                                                  const InvariantSignature& b,
                                                  double tol);

/// The staged precursor pipeline: counts, then degree sequences, then EVC
/// sequences. Earlier rejections short-circuit later stages, so EVC is never
/// computed for count or degree mismatches. Two edgeless graphs with equal
/// vertex count are TriviallyIsomorphic.
FilterVerdict compare(SignatureCache& cache, size_t i, size_t j, double tol = 1e-6);

FilterVerdict compare(const Graph& a, const Graph& b,
                      const ConvergenceConfig& cfg = {}, double tol = 1e-6);

}  // namespace evciso
