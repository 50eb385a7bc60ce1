#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absx/errors.hpp"

namespace absx {

using VertexMask = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

constexpr VertexMask low_bits(int n) { return n >= 64 ? ~VertexMask{0} : bit(n) - 1; }

template <class Fn>
constexpr void for_each_bit(VertexMask mask, Fn&& fn) {
    while (mask != 0) {
        fn(std::countr_zero(mask));
        mask &= mask - 1;
    }
}

class GraphBuilder;

/// Simple undirected graph on vertices 0..n-1, one neighbor bitmask per vertex.
///
/// Graph values are immutable once built; every construction operator below
/// returns a new value, so graphs can be shared freely between threads.
class Graph {
public:
    /// The edgeless graph on `order` vertices.
    explicit Graph(int order) : adj_(check_order(order), 0) {}

    /// Adopts adjacency rows after checking symmetry, loops and range.
    static Graph from_rows(std::vector<VertexMask> rows) {
        const int n = check_order(static_cast<int>(rows.size()));
        for (int v = 0; v < n; ++v) {
            detail::require((rows[v] & ~low_bits(n)) == 0, "adjacency row references a vertex >= n");
            detail::require((rows[v] & bit(v)) == 0, "self-loop at vertex " + std::to_string(v));
            for_each_bit(rows[v], [&](int u) {
                detail::require((rows[u] & bit(v)) != 0, "adjacency rows are not symmetric");
            });
        }
        Graph g(n);
        g.adj_ = std::move(rows);
        return g;
    }

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    VertexMask vertices() const noexcept { return low_bits(order()); }
    VertexMask neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    bool has_edge(int u, int v) const { return (adj_[u] & bit(v)) != 0; }
    std::span<const VertexMask> rows() const noexcept { return adj_; }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (VertexMask row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
        return twice / 2;
    }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count());
        for (int u = 0; u < order(); ++u)
            for_each_bit(adj_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    std::vector<int> degrees() const {
        std::vector<int> out(adj_.size());
        for (int v = 0; v < order(); ++v) out[v] = degree(v);
        return out;
    }

    bool is_complete() const {
        for (int v = 0; v < order(); ++v)
            if (adj_[v] != (vertices() & ~bit(v))) return false;
        return true;
    }

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;

    static int check_order(int n) {
        detail::require(n >= 1 && n <= kMaxOrder,
                        "graph order must be in [1, 64], got " + std::to_string(n));
        return n;
    }

    std::vector<VertexMask> adj_;
};

/// Mutable staging area for building a Graph edge by edge.
class GraphBuilder {
public:
    explicit GraphBuilder(int order) : g_(order) {}
    explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

    int order() const noexcept { return g_.order(); }

    GraphBuilder& add_edge(int u, int v) {
        check_pair(u, v);
        g_.adj_[u] |= bit(v);
        g_.adj_[v] |= bit(u);
        return *this;
    }

    GraphBuilder& remove_edge(int u, int v) {
        check_pair(u, v);
        g_.adj_[u] &= ~bit(v);
        g_.adj_[v] &= ~bit(u);
        return *this;
    }

    /// Connects every vertex of `a` with every vertex of `b` (the sets must be disjoint).
    GraphBuilder& connect_all(VertexMask a, VertexMask b) {
        detail::require((a & b) == 0, "connect_all needs disjoint vertex sets");
        detail::require(((a | b) & ~g_.vertices()) == 0, "connect_all references a vertex >= n");
        for_each_bit(a, [&](int u) { g_.adj_[u] |= b; });
        for_each_bit(b, [&](int v) { g_.adj_[v] |= a; });
        return *this;
    }

    GraphBuilder& make_clique(VertexMask s) {
        detail::require((s & ~g_.vertices()) == 0, "make_clique references a vertex >= n");
        for_each_bit(s, [&](int v) { g_.adj_[v] |= s & ~bit(v); });
        return *this;
    }

    const Graph& peek() const noexcept { return g_; }
    Graph build() const& { return g_; }
    Graph build() && { return std::move(g_); }

private:
    void check_pair(int u, int v) const {
        detail::require(u >= 0 && v >= 0 && u < g_.order() && v < g_.order(),
                        "vertex index out of range");
        detail::require(u != v, "self-loop at vertex " + std::to_string(u));
    }

    Graph g_;
};

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph add_edge(const Graph& g, int u, int v) { return GraphBuilder(g).add_edge(u, v).build(); }

/// Disjoint union; vertices of `b` are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.order();
    detail::require(na + b.order() <= kMaxOrder, "combined order exceeds 64");
    std::vector<VertexMask> rows(a.rows().begin(), a.rows().end());
    for (VertexMask r : b.rows()) rows.push_back(r << na);
    return Graph::from_rows(std::move(rows));
}

/// a ∨ b: disjoint union plus every edge between the two vertex sets.
inline Graph join(const Graph& a, const Graph& b) {
    Graph u = disjoint_union(a, b);
    const VertexMask left = low_bits(a.order());
    const VertexMask right = u.vertices() & ~left;
    return GraphBuilder(std::move(u)).connect_all(left, right).build();
}

inline Graph complement(const Graph& g) {
    std::vector<VertexMask> rows(g.rows().begin(), g.rows().end());
    for (int v = 0; v < g.order(); ++v) rows[v] = ~rows[v] & g.vertices() & ~bit(v);
    return Graph::from_rows(std::move(rows));
}

/// Renames vertex v to new_label[v]; new_label must be a permutation.
inline Graph relabel(const Graph& g, std::span<const int> new_label) {
    const int n = g.order();
    detail::require(static_cast<int>(new_label.size()) == n, "relabel: permutation size mismatch");
    VertexMask seen = 0;
    for (int l : new_label) {
        detail::require(l >= 0 && l < n && (seen & bit(l)) == 0, "relabel: not a permutation");
        seen |= bit(l);
    }
    std::vector<VertexMask> rows(n, 0);
    for (int v = 0; v < n; ++v)
        for_each_bit(g.neighbors(v), [&](int u) { rows[new_label[v]] |= bit(new_label[u]); });
    return Graph::from_rows(std::move(rows));
}

/// Subgraph induced by `keep`, vertices renumbered in increasing order.
inline Graph induced_subgraph(const Graph& g, VertexMask keep) {
    keep &= g.vertices();
    detail::require(keep != 0, "induced_subgraph of an empty vertex set");
    std::vector<int> index(g.order(), -1);
    int next = 0;
    for_each_bit(keep, [&](int v) { index[v] = next++; });
    std::vector<VertexMask> rows(next, 0);
    for_each_bit(keep, [&](int v) {
        for_each_bit(g.neighbors(v) & keep, [&](int u) { rows[index[v]] |= bit(index[u]); });
    });
    return Graph::from_rows(std::move(rows));
}

/// Appends a path of `length` new vertices hanging off vertex `at`.
inline Graph attach_path(const Graph& g, int at, int length) {
    detail::require(at >= 0 && at < g.order(), "attach_path: anchor out of range");
    detail::require(length >= 0 && g.order() + length <= kMaxOrder, "attach_path: bad length");
    std::vector<VertexMask> rows(g.rows().begin(), g.rows().end());
    rows.resize(g.order() + length, 0);
    GraphBuilder b(Graph::from_rows(std::move(rows)));
    int prev = at;
    for (int i = 0; i < length; ++i) {
        const int v = g.order() + i;
        b.add_edge(prev, v);
        prev = v;
    }
    return std::move(b).build();
}

} // namespace absx
