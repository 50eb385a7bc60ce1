#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absx/canonical.hpp"
#include "absx/detail/parallel.hpp"
#include "absx/graph.hpp"
#include "absx/invariants.hpp"

namespace absx {

inline constexpr int kMaxEnumOrder = 9;

enum class EnumMode { kConnected, kConnectedBipartite };

struct EnumSpec {
    int order = 1;
    EnumMode mode = EnumMode::kConnected;
    std::optional<ClassConstraint> filter;
};

struct EnumOptions {
    int workers = 0; // 0 = hardware concurrency
};

/// One isomorphism class: the canonical representative and its form.
struct GraphClass {
    Graph graph;
    CanonicalForm form;
};

namespace detail {

// Canonical augmentation by vertex addition. A child is kept only when the
// added vertex lies in the automorphism orbit of the child's canonically
// chosen deletable vertex: a non-cut vertex minimizing (degree, sum of
// neighbor degrees), ties broken by the largest canonical position. Deleting
// a non-cut vertex keeps the graph connected (and bipartite), so parents stay
// inside the generated class and every class has exactly one parent class.
class Augmenter {
public:
    explicit Augmenter(EnumMode mode) : mode_(mode) {}

    void children(const GraphClass& parent, std::vector<GraphClass>& out) const {
        const Graph& p = parent.graph;
        const int m = p.order();
        std::vector<VertexMask> ranges;
        if (mode_ == EnumMode::kConnected) {
            ranges.push_back(p.vertices());
        } else {
            const auto sides = bipartition(p);
            ranges.push_back(sides->first);
            if (sides->second != 0) ranges.push_back(sides->second);
        }
        const std::size_t first = out.size();
        std::vector<VertexMask> rows(p.rows().begin(), p.rows().end());
        rows.push_back(0);
        for (VertexMask range : ranges) {
            // Non-empty submasks of range.
            for (VertexMask s = range; s != 0; s = (s - 1) & range) {
                rows[m] = s;
                for (int v = 0; v < m; ++v) rows[v] = p.neighbors(v) | ((s >> v) & 1U ? bit(m) : 0);
                Graph child = Graph::from_rows(rows);
                if (auto accepted = accept(child)) out.push_back(std::move(*accepted));
            }
        }
        // Children of one parent that lie in one Aut(parent)-orbit coincide.
        std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
                  [](const GraphClass& a, const GraphClass& b) { return a.form < b.form; });
        out.erase(std::unique(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
                              [](const GraphClass& a, const GraphClass& b) { return a.form == b.form; }),
                  out.end());
    }

private:
    static std::pair<int, int> deletion_key(const Graph& g, int v) {
        int sum = 0;
        for_each_bit(g.neighbors(v), [&](int u) { sum += g.degree(u); });
        return {g.degree(v), sum};
    }

    std::optional<GraphClass> accept(const Graph& child) const {
        const int added = child.order() - 1;
        const VertexMask candidates = child.vertices() & ~cut_vertices(child);
        if ((candidates & bit(added)) == 0) return std::nullopt;
        std::pair<int, int> best{child.order() + 1, 0};
        VertexMask tied = 0;
        for_each_bit(candidates, [&](int v) {
            const auto key = deletion_key(child, v);
            if (key < best) {
                best = key;
                tied = bit(v);
            } else if (key == best) {
                tied |= bit(v);
            }
        });
        if ((tied & bit(added)) == 0) return std::nullopt;
        CanonicalLabeling lab = canonical_labeling(child);
        if (tied != bit(added)) {
            int chosen = -1;
            for_each_bit(tied, [&](int v) {
                if (chosen < 0 || lab.position[v] > lab.position[chosen]) chosen = v;
            });
            if (lab.orbit[chosen] != lab.orbit[added]) return std::nullopt;
        }
        return GraphClass{relabel(child, lab.position), std::move(lab.form)};
    }

    EnumMode mode_;
};

inline std::vector<GraphClass> generate_classes(int order, EnumMode mode, int workers) {
    std::vector<GraphClass> level;
    level.push_back(GraphClass{Graph(1), canonical_form(Graph(1))});
    const Augmenter aug(mode);
    for (int m = 1; m < order; ++m) {
        std::vector<std::vector<GraphClass>> per_worker(static_cast<std::size_t>(resolve_workers(workers)));
        parallel_chunks(level.size(), resolve_workers(workers), [&](std::size_t begin, std::size_t end, int w) {
            auto& out = per_worker[static_cast<std::size_t>(w)];
            for (std::size_t i = begin; i < end; ++i) aug.children(level[i], out);
        });
        std::vector<GraphClass> next;
        for (auto& chunk : per_worker)
            for (auto& c : chunk) next.push_back(std::move(c));
        std::sort(next.begin(), next.end(), [](const GraphClass& a, const GraphClass& b) { return a.form < b.form; });
        const auto dup = std::adjacent_find(next.begin(), next.end(),
                                            [](const GraphClass& a, const GraphClass& b) { return a.form == b.form; });
        if (dup != next.end()) throw std::logic_error("canonical augmentation produced a duplicate class");
        level = std::move(next);
    }
    return level;
}

} // namespace detail

inline void check_envelope(const EnumSpec& spec) {
    if (spec.order < 1 || spec.order > kMaxEnumOrder)
        throw EnvelopeError("enumeration is exhaustive and limited to 1 <= n <= " + std::to_string(kMaxEnumOrder) +
                            "; requested n = " + std::to_string(spec.order));
    if (spec.filter) validate(*spec.filter);
}

/// One representative per isomorphism class of connected (bipartite) graphs
/// of the requested order that pass the filter, sorted by canonical form.
inline std::vector<GraphClass> enumerate_classes(const EnumSpec& spec, const EnumOptions& opts = {}) {
    check_envelope(spec);
    auto classes = detail::generate_classes(spec.order, spec.mode, opts.workers);
    if (!spec.filter) return classes;
    std::vector<char> keep(classes.size(), 0);
    detail::parallel_chunks(classes.size(), detail::resolve_workers(opts.workers),
                            [&](std::size_t begin, std::size_t end, int) {
                                for (std::size_t i = begin; i < end; ++i)
                                    keep[i] = satisfies(classes[i].graph, *spec.filter) ? 1 : 0;
                            });
    std::vector<GraphClass> out;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (keep[i]) out.push_back(std::move(classes[i]));
    return out;
}

inline std::vector<Graph> enumerate(const EnumSpec& spec, const EnumOptions& opts = {}) {
    std::vector<Graph> out;
    for (auto& c : enumerate_classes(spec, opts)) out.push_back(std::move(c.graph));
    return out;
}

inline std::size_t count(const EnumSpec& spec, const EnumOptions& opts = {}) {
    return enumerate_classes(spec, opts).size();
}

} // namespace absx
