#include "evciso/invariant_filter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace evciso {

InvariantSignature signature(const Graph& g, const ConvergenceConfig& cfg) {
    InvariantSignature sig;
    sig.n = g.vertex_count();
    sig.m = g.edge_count();
    sig.degree_seq = degree_sequence(g);
    if (g.edge_count() > 0) {
        sig.evc = power_iteration(g, cfg);
        sig.evc_seq = evc_sequence(*sig.evc);
    }
    return sig;
}

bool sequences_equal(const std::vector<double>& a, const std::vector<double>& b,
                     double tol) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

VertexPermutation CandidateMapping::bijection() const {
    VertexPermutation p(classes.size());
    for (const auto& cls : classes) p[static_cast<size_t>(cls.left[0])] = cls.right[0];
    return p;
}

const char* to_string(FilterVerdict::Kind kind) {
    switch (kind) {
        case FilterVerdict::Kind::RejectedByCounts: return "RejectedByCounts";
        case FilterVerdict::Kind::RejectedByDegreeSeq: return "RejectedByDegreeSeq";
        case FilterVerdict::Kind::RejectedByEvcSeq: return "RejectedByEvcSeq";
        case FilterVerdict::Kind::PotentiallyIsomorphic: return "PotentiallyIsomorphic";
        case FilterVerdict::Kind::TriviallyIsomorphic: return "TriviallyIsomorphic";
    }
    return "unknown";
}

SignatureCache::SignatureCache(std::vector<Graph> graphs, ConvergenceConfig cfg)
    : graphs_(std::move(graphs)), cfg_(cfg) {
    sigs_.resize(graphs_.size());
    evc_once_.reserve(graphs_.size());
    for (size_t i = 0; i < graphs_.size(); ++i) {
        sigs_[i].n = graphs_[i].vertex_count();
        sigs_[i].m = graphs_[i].edge_count();
        sigs_[i].degree_seq = degree_sequence(graphs_[i]);
        evc_once_.push_back(std::make_unique<std::once_flag>());
    }
}

const InvariantSignature& SignatureCache::full(size_t i) {
    std::call_once(*evc_once_[i], [&] {
        if (graphs_[i].edge_count() == 0) return;  // EVC stays absent
        EvcResult evc = power_iteration(graphs_[i], cfg_);
        sigs_[i].evc_seq = evc_sequence(evc);
        sigs_[i].evc = std::move(evc);
        evc_computations_.fetch_add(1, std::memory_order_relaxed);
    });
    return sigs_[i];
}

namespace {

// Vertex ids ordered by EVC descending, ties by ascending id.
std::vector<int> evc_descending_order(const EvcResult& evc) {
    std::vector<int> order(evc.values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double va = evc.values[static_cast<size_t>(a)];
        const double vb = evc.values[static_cast<size_t>(b)];
        if (va != vb) return va > vb;
        return a < b;
    });
    return order;
}

// Class boundaries: a new class starts where the gap between consecutive
// sorted values exceeds tol. Returns per-class vertex lists.
std::vector<std::vector<int>> group_by_value(const EvcResult& evc, double tol) {
    const std::vector<int> order = evc_descending_order(evc);
    std::vector<std::vector<int>> classes;
    for (size_t k = 0; k < order.size(); ++k) {
        const double value = evc.values[static_cast<size_t>(order[k])];
        if (k == 0 ||
            evc.values[static_cast<size_t>(order[k - 1])] - value > tol)
            classes.emplace_back();
        classes.back().push_back(order[k]);
    }
    return classes;
}

}  // namespace

std::optional<CandidateMapping> candidate_mapping(const InvariantSignature& a,
                                                  const InvariantSignature& b,
                                                  double tol) {
    if (!a.evc || !b.evc)
        throw std::invalid_argument("candidate_mapping requires EVC in both signatures");
    auto ca = group_by_value(*a.evc, tol);
    auto cb = group_by_value(*b.evc, tol);
    if (ca.size() != cb.size()) return std::nullopt;
    CandidateMapping cm;
    cm.unique = true;
    cm.classes.reserve(ca.size());
    for (size_t k = 0; k < ca.size(); ++k) {
        if (ca[k].size() != cb[k].size()) return std::nullopt;
        if (ca[k].size() != 1) cm.unique = false;
        cm.classes.push_back({std::move(ca[k]), std::move(cb[k])});
    }
    return cm;
}

FilterVerdict compare(SignatureCache& cache, size_t i, size_t j, double tol) {
    const InvariantSignature& sa = cache.basic(i);
    const InvariantSignature& sb = cache.basic(j);
    if (sa.n != sb.n || sa.m != sb.m)
        return {FilterVerdict::Kind::RejectedByCounts, std::nullopt};
    if (sa.m == 0)  // equal n, both edgeless: any bijection works
        return {FilterVerdict::Kind::TriviallyIsomorphic, std::nullopt};
    if (sa.degree_seq != sb.degree_seq)
        return {FilterVerdict::Kind::RejectedByDegreeSeq, std::nullopt};

    const InvariantSignature& fa = cache.full(i);
    const InvariantSignature& fb = cache.full(j);
    if (!sequences_equal(fa.evc_seq, fb.evc_seq, tol))
        return {FilterVerdict::Kind::RejectedByEvcSeq, std::nullopt};
    auto cm = candidate_mapping(fa, fb, tol);
    if (!cm)  // tolerance grouped values differently: conservative rejection
        return {FilterVerdict::Kind::RejectedByEvcSeq, std::nullopt};
    return {FilterVerdict::Kind::PotentiallyIsomorphic, std::move(cm)};
}

FilterVerdict compare(const Graph& a, const Graph& b, const ConvergenceConfig& cfg,
                      double tol) {
    SignatureCache cache({a, b}, cfg);
    return compare(cache, 0, 1, tol);
}

}  // namespace evciso
