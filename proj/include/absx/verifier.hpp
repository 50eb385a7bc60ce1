#pragma once

#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absx/abs_index.hpp"
#include "absx/enumerator.hpp"
#include "absx/extremal.hpp"

namespace absx {

enum class Verdict {
    kConfirmed,   // unique maximizer is the predicted graph, value matches
    kRefuted,     // anything else on a class with a prediction
    kVacuous,     // the class is empty
    kDescriptive, // non-empty class with no prediction (tiny n, r = 0, bipartite n < 7)
};

inline std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::kConfirmed: return "confirmed";
    case Verdict::kRefuted: return "refuted";
    case Verdict::kVacuous: return "vacuous";
    case Verdict::kDescriptive: return "descriptive";
    }
    return "?";
}

struct ExtremalReport {
    ClassConstraint constraint;
    int order = 0;
    std::size_t class_size = 0;
    std::optional<double> max_abs;
    std::vector<CanonicalForm> maximizers;
    std::optional<ExpectedExtremal> expected;
    Verdict verdict = Verdict::kVacuous;
    // Cut-vertex classes only: every maximizer has clique blocks and each
    // cut-vertex lies in exactly two blocks.
    std::optional<bool> block_structure_ok;
    double elapsed_seconds = 0.0;
};

struct VerifyOptions {
    int workers = 0;
    double tie_tolerance = kTieTolerance;
    int block_check_max_order = 7;
};

/// Blocks are cliques and every cut-vertex sits in exactly two blocks.
inline bool has_clique_block_structure(const Graph& g) {
    const auto blocks = block_decomposition(g);
    for (VertexMask b : blocks)
        for (int v = 0; v < g.order(); ++v)
            if ((b & bit(v)) != 0 && (g.neighbors(v) & b) != (b & ~bit(v))) return false;
    bool ok = true;
    for_each_bit(cut_vertices(g), [&](int v) {
        int containing = 0;
        for (VertexMask b : blocks) containing += (b & bit(v)) != 0 ? 1 : 0;
        ok = ok && containing == 2;
    });
    return ok;
}

namespace detail {

inline EnumMode mode_for(const ClassConstraint& c) {
    return std::holds_alternative<BipartiteConnectivity>(c) ? EnumMode::kConnectedBipartite : EnumMode::kConnected;
}

// Per-class invariants computed once per enumeration and shared by every
// constraint in a batch.
struct ClassTable {
    std::vector<GraphClass> classes;
    std::vector<double> abs;
    std::vector<int> cut_count;
    std::map<int, std::vector<int>> partiteness; // k -> v_k per class
    std::vector<int> connectivity;
    double seconds = 0.0;
};

inline ClassTable build_table(int n, EnumMode mode, std::span<const ClassConstraint> constraints, int workers) {
    const auto start = std::chrono::steady_clock::now();
    ClassTable t;
    t.classes = enumerate_classes(EnumSpec{n, mode, std::nullopt}, EnumOptions{workers});
    const std::size_t count = t.classes.size();
    bool need_cut = false;
    bool need_kappa = false;
    for (const auto& c : constraints) {
        if (std::holds_alternative<CutVertices>(c)) need_cut = true;
        if (std::holds_alternative<BipartiteConnectivity>(c)) need_kappa = true;
        if (const auto* kp = std::get_if<KPartiteness>(&c)) t.partiteness[kp->k].assign(count, 0);
    }
    t.abs.assign(count, 0.0);
    if (need_cut) t.cut_count.assign(count, 0);
    if (need_kappa) t.connectivity.assign(count, 0);
    parallel_chunks(count, resolve_workers(workers), [&](std::size_t begin, std::size_t end, int) {
        for (std::size_t i = begin; i < end; ++i) {
            const Graph& g = t.classes[i].graph;
            t.abs[i] = abs_index(g);
            if (need_cut) t.cut_count[i] = cut_vertex_count(g);
            if (need_kappa) t.connectivity[i] = g.order() >= 2 ? vertex_connectivity(g) : 0;
            for (auto& [k, values] : t.partiteness) values[i] = vertex_k_partiteness(g, k);
        }
    });
    t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return t;
}

inline bool member(const ClassTable& t, std::size_t i, const ClassConstraint& c) {
    if (const auto* cv = std::get_if<CutVertices>(&c)) return t.cut_count[i] == cv->p;
    if (const auto* kp = std::get_if<KPartiteness>(&c)) return t.partiteness.at(kp->k)[i] == kp->r;
    return t.classes[i].graph.order() >= 2 && t.connectivity[i] == std::get<BipartiteConnectivity>(c).kappa;
}

inline ExtremalReport assess(const ClassTable& t, const ClassConstraint& c, int n, const VerifyOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    ExtremalReport rep;
    rep.constraint = c;
    rep.order = n;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < t.classes.size(); ++i)
        if (member(t, i, c)) members.push_back(i);
    rep.class_size = members.size();
    rep.expected = expected_extremal(c, n);

    if (!members.empty()) {
        double best = t.abs[members.front()];
        for (std::size_t i : members) best = std::max(best, t.abs[i]);
        rep.max_abs = best;
        // Everything within the tie tolerance is a maximizer; classes are
        // already distinct up to isomorphism.
        for (std::size_t i : members)
            if (t.abs[i] >= best - opts.tie_tolerance) rep.maximizers.push_back(t.classes[i].form);
    }

    if (members.empty()) {
        rep.verdict = Verdict::kVacuous;
    } else if (!rep.expected) {
        rep.verdict = Verdict::kDescriptive;
    } else {
        const bool unique_match = rep.maximizers.size() == 1 && rep.maximizers.front() == rep.expected->form;
        const bool value_match = std::abs(*rep.max_abs - rep.expected->closed_form) <= opts.tie_tolerance;
        rep.verdict = unique_match && value_match ? Verdict::kConfirmed : Verdict::kRefuted;
    }

    if (std::holds_alternative<CutVertices>(c) && n <= opts.block_check_max_order && !rep.maximizers.empty()) {
        bool ok = true;
        for (const auto& f : rep.maximizers) ok = ok && has_clique_block_structure(f.to_graph());
        rep.block_structure_ok = ok;
    }
    rep.elapsed_seconds =
        t.seconds + std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace detail

/// Verifies several constraints at one order, sharing the enumeration.
/// Reports come back in the order of `constraints`.
inline std::vector<ExtremalReport> verify_extremal_batch(std::span<const ClassConstraint> constraints, int n,
                                                         const VerifyOptions& opts = {}) {
    for (const auto& c : constraints) validate(c);
    check_envelope(EnumSpec{n, EnumMode::kConnected, std::nullopt});
    std::vector<ExtremalReport> out(constraints.size());
    for (EnumMode mode : {EnumMode::kConnected, EnumMode::kConnectedBipartite}) {
        std::vector<ClassConstraint> group;
        for (const auto& c : constraints)
            if (detail::mode_for(c) == mode) group.push_back(c);
        if (group.empty()) continue;
        const detail::ClassTable table = detail::build_table(n, mode, group, opts.workers);
        for (std::size_t i = 0; i < constraints.size(); ++i)
            if (detail::mode_for(constraints[i]) == mode) out[i] = detail::assess(table, constraints[i], n, opts);
    }
    return out;
}

/// Exhaustively finds all ABS maximizers of the class at order n and checks
/// them against the predicted extremal graph.
inline ExtremalReport verify_extremal(const ClassConstraint& c, int n, const VerifyOptions& opts = {}) {
    const ClassConstraint one[] = {c};
    return verify_extremal_batch(one, n, opts).front();
}

} // namespace absx
