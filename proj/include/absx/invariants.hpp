#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "absx/graph.hpp"

namespace absx {

/// Vertices reachable from `start` inside `allowed`.
inline VertexMask reachable(const Graph& g, int start, VertexMask allowed) {
    VertexMask seen = bit(start) & allowed;
    VertexMask frontier = seen;
    while (frontier != 0) {
        VertexMask next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
        frontier = next & allowed & ~seen;
        seen |= frontier;
    }
    return seen;
}

/// True when the subgraph induced by `allowed` is connected (the empty set counts as connected).
inline bool is_connected_within(const Graph& g, VertexMask allowed) {
    allowed &= g.vertices();
    if (allowed == 0) return true;
    return reachable(g, std::countr_zero(allowed), allowed) == allowed;
}

inline bool is_connected(const Graph& g) { return is_connected_within(g, g.vertices()); }

namespace detail {

inline void require_connected(const Graph& g, const char* op) {
    if (!is_connected(g)) throw PreconditionError(std::string(op) + " requires a connected graph");
}

// Low-link DFS shared by the articulation-point and block computations.
class LowLink {
public:
    explicit LowLink(const Graph& g) : g_(g), disc_(g.order(), -1), low_(g.order(), 0) {}

    VertexMask articulation_points() {
        dfs(0, -1);
        return cuts_;
    }

    std::vector<VertexMask> blocks() {
        dfs(0, -1);
        if (g_.order() == 1) blocks_.push_back(bit(0));
        std::sort(blocks_.begin(), blocks_.end());
        return blocks_;
    }

private:
    void dfs(int v, int parent) {
        disc_[v] = low_[v] = timer_++;
        int children = 0;
        for_each_bit(g_.neighbors(v), [&](int u) {
            if (u == parent) return;
            if (disc_[u] == -1) {
                edges_.emplace_back(v, u);
                ++children;
                dfs(u, v);
                low_[v] = std::min(low_[v], low_[u]);
                if (low_[u] >= disc_[v]) {
                    if (parent != -1) cuts_ |= bit(v);
                    VertexMask block = 0;
                    while (true) {
                        const auto [a, b] = edges_.back();
                        edges_.pop_back();
                        block |= bit(a) | bit(b);
                        if (a == v && b == u) break;
                    }
                    blocks_.push_back(block);
                }
            } else if (disc_[u] < disc_[v]) {
                edges_.emplace_back(v, u);
                low_[v] = std::min(low_[v], disc_[u]);
            }
        });
        if (parent == -1 && children > 1) cuts_ |= bit(v);
    }

    const Graph& g_;
    std::vector<int> disc_;
    std::vector<int> low_;
    int timer_ = 0;
    VertexMask cuts_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<VertexMask> blocks_;
};

} // namespace detail

/// Articulation points of a connected graph.
inline VertexMask cut_vertices(const Graph& g) {
    detail::require_connected(g, "cut_vertices");
    return detail::LowLink(g).articulation_points();
}

inline int cut_vertex_count(const Graph& g) { return std::popcount(cut_vertices(g)); }

/// Blocks (maximal 2-connected pieces and bridges) as vertex sets, sorted by mask.
/// K_1 is a single block.
inline std::vector<VertexMask> block_decomposition(const Graph& g) {
    detail::require_connected(g, "block_decomposition");
    return detail::LowLink(g).blocks();
}

/// Smallest separator size; n - 1 for complete graphs.
///
/// Exhaustive over candidate separators in order of size, bounded by the
/// minimum degree (the neighborhood of a minimum-degree vertex separates it).
inline int vertex_connectivity(const Graph& g) {
    detail::require_connected(g, "vertex_connectivity");
    const int n = g.order();
    detail::require(n >= 2, "vertex_connectivity needs at least two vertices");
    if (g.is_complete()) return n - 1;
    int min_degree = n;
    for (int v = 0; v < n; ++v) min_degree = std::min(min_degree, g.degree(v));
    const VertexMask all = g.vertices();
    for (int s = 1; s < min_degree; ++s) {
        // Gosper's hack over s-subsets of n bits.
        VertexMask sep = low_bits(s);
        while (sep != 0 && (sep & ~all) == 0) {
            if (!is_connected_within(g, all & ~sep)) return s;
            const VertexMask c = sep & (~sep + 1);
            const VertexMask r = sep + c;
            if (r == 0) break;
            sep = (((r ^ sep) >> 2) / c) | r;
        }
    }
    return min_degree;
}

/// Two-coloring when g is bipartite. Each component's smallest vertex lands
/// on the first side, so for connected graphs the answer is unique.
inline std::optional<std::pair<VertexMask, VertexMask>> bipartition(const Graph& g) {
    VertexMask side_a = 0;
    VertexMask side_b = 0;
    VertexMask unseen = g.vertices();
    while (unseen != 0) {
        VertexMask frontier = bit(std::countr_zero(unseen));
        bool on_a = true;
        while (frontier != 0) {
            (on_a ? side_a : side_b) |= frontier;
            unseen &= ~frontier;
            VertexMask next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
            if ((next & (on_a ? side_a : side_b)) != 0) return std::nullopt;
            frontier = next & unseen;
            on_a = !on_a;
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if ((g.neighbors(v) & ((side_a & bit(v)) != 0 ? side_a : side_b)) != 0) return std::nullopt;
    return std::make_pair(side_a, side_b);
}

namespace detail {

inline bool colorable_from(const Graph& g, const std::vector<int>& order, std::size_t idx,
                           std::vector<VertexMask>& classes, int k, int used) {
    if (idx == order.size()) return true;
    const int v = order[idx];
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        if ((g.neighbors(v) & classes[c]) != 0) continue;
        classes[c] |= bit(v);
        const bool ok = colorable_from(g, order, idx + 1, classes, k, std::max(used, c + 1));
        classes[c] &= ~bit(v);
        if (ok) return true;
    }
    return false;
}

} // namespace detail

/// Whether the subgraph induced by `allowed` admits a proper k-coloring.
inline bool is_k_colorable_within(const Graph& g, int k, VertexMask allowed) {
    allowed &= g.vertices();
    if (allowed == 0) return true;
    if (k <= 0) return false;
    if (k == 1) {
        bool independent = true;
        for_each_bit(allowed, [&](int v) { independent = independent && (g.neighbors(v) & allowed) == 0; });
        return independent;
    }
    if (k == 2) return bipartition(induced_subgraph(g, allowed)).has_value();
    if (std::popcount(allowed) <= k) return true;
    // Highest degree first keeps the backtracking shallow.
    std::vector<int> order;
    for_each_bit(allowed, [&](int v) { order.push_back(v); });
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(g.neighbors(a) & allowed) > std::popcount(g.neighbors(b) & allowed);
    });
    std::vector<VertexMask> classes(k, 0);
    return detail::colorable_from(g, order, 0, classes, k, 0);
}

/// v_k(g): fewest vertex deletions leaving a k-colorable graph.
/// Iterative deepening over deletion-set size; exact.
inline int vertex_k_partiteness(const Graph& g, int k) {
    detail::require(k >= 2, "vertex_k_partiteness needs k >= 2");
    const int n = g.order();
    const VertexMask all = g.vertices();
    for (int s = 0; s < n - k; ++s) {
        if (s == 0) {
            if (is_k_colorable_within(g, k, all)) return 0;
            continue;
        }
        VertexMask del = low_bits(s);
        while (del != 0 && (del & ~all) == 0) {
            if (is_k_colorable_within(g, k, all & ~del)) return s;
            const VertexMask c = del & (~del + 1);
            const VertexMask r = del + c;
            if (r == 0) break;
            del = (((r ^ del) >> 2) / c) | r;
        }
    }
    return std::max(0, n - k);
}

struct CutVertices {
    int p = 0;
};

struct KPartiteness {
    int k = 2;
    int r = 0;
};

struct BipartiteConnectivity {
    int kappa = 1;
};

/// Selects one of the three extremal graph classes.
using ClassConstraint = std::variant<CutVertices, KPartiteness, BipartiteConnectivity>;

inline void validate(const ClassConstraint& c) {
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CutVertices>) {
                detail::require(v.p >= 0, "cut-vertex count must be >= 0");
            } else if constexpr (std::is_same_v<T, KPartiteness>) {
                detail::require(v.k >= 2, "k-partiteness needs k >= 2");
                detail::require(v.r >= 0, "k-partiteness needs r >= 0");
            } else {
                detail::require(v.kappa >= 1, "connectivity must be >= 1");
            }
        },
        c);
}

inline std::string describe(const ClassConstraint& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CutVertices>) return "cut-vertices p=" + std::to_string(v.p);
            else if constexpr (std::is_same_v<T, KPartiteness>)
                return "k-partiteness k=" + std::to_string(v.k) + " r=" + std::to_string(v.r);
            else return "bipartite-kappa kappa=" + std::to_string(v.kappa);
        },
        c);
}

/// Class membership; g must be connected.
inline bool satisfies(const Graph& g, const ClassConstraint& c) {
    validate(c);
    detail::require_connected(g, "satisfies");
    return std::visit(
        [&](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CutVertices>) {
                return cut_vertex_count(g) == v.p;
            } else if constexpr (std::is_same_v<T, KPartiteness>) {
                return vertex_k_partiteness(g, v.k) == v.r;
            } else {
                return g.order() >= 2 && bipartition(g).has_value() && vertex_connectivity(g) == v.kappa;
            }
        },
        c);
}

} // namespace absx
