#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "absx/graph.hpp"
#include "absx/graph_io.hpp"

namespace absx {

/// Labeling-invariant representation of a graph: its order plus the
/// upper-triangle adjacency bitstring (graph6 bit order) under the canonical
/// vertex ordering. Equal forms <=> isomorphic graphs.
struct CanonicalForm {
    int order = 0;
    std::vector<std::uint64_t> bits;

    auto operator<=>(const CanonicalForm&) const = default;
    bool operator==(const CanonicalForm&) const = default;

    std::string to_graph6() const { return detail::encode_graph6(order, bits); }
    Graph to_graph() const { return detail::graph_from_upper_triangle(order, bits); }
};

struct CanonicalLabeling {
    std::vector<int> position;                // vertex -> canonical position
    std::vector<int> orbit;                   // vertex -> smallest vertex of its automorphism orbit
    std::vector<std::vector<int>> generators; // automorphisms found, as vertex maps
    CanonicalForm form;
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int v) {
        while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
        return v;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) parent_[b] = a;
        else parent_[a] = b;
    }

private:
    std::vector<int> parent_;
};

// Individualization-refinement search. The canonical form is the maximum,
// over all leaves of the search tree, of the relabeled adjacency rows.
// Subtrees are skipped only when a known automorphism maps them onto an
// explored subtree, so the maximum is exact.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) { seed_twin_generators(); }

    CanonicalLabeling run() {
        std::vector<VertexMask> cells{g_.vertices()};
        search(std::move(cells));

        CanonicalLabeling out;
        out.position.assign(n_, 0);
        for (int i = 0; i < n_; ++i) out.position[best_order_[i]] = i;

        UnionFind uf(n_);
        for (const auto& gamma : generators_)
            for (int v = 0; v < n_; ++v) uf.unite(v, gamma[v]);
        out.orbit.resize(n_);
        for (int v = 0; v < n_; ++v) out.orbit[v] = uf.find(v);

        out.form.order = n_;
        const std::size_t total = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
        out.form.bits.assign((total + 63) / 64, 0);
        for (int j = 1; j < n_; ++j)
            for_each_bit(best_rows_[j] & low_bits(j), [&](int i) {
                const std::size_t t = graph6_pair_index(i, j);
                out.form.bits[t / 64] |= std::uint64_t{1} << (t % 64);
            });
        out.generators = std::move(generators_);
        return out;
    }

private:
    // Twins (same neighborhood apart from each other) can be swapped by an
    // automorphism; registering these up front prunes cliques and independent
    // sets without search.
    void seed_twin_generators() {
        std::vector<bool> linked(n_, false);
        for (int u = 0; u < n_; ++u) {
            if (linked[u]) continue;
            for (int v = u + 1; v < n_; ++v) {
                if (linked[v]) continue;
                if ((g_.neighbors(u) & ~bit(v)) == (g_.neighbors(v) & ~bit(u))) {
                    std::vector<int> gamma(n_);
                    std::iota(gamma.begin(), gamma.end(), 0);
                    std::swap(gamma[u], gamma[v]);
                    generators_.push_back(std::move(gamma));
                    linked[v] = true;
                }
            }
        }
    }

    // Splits cells until the partition is equitable. Sub-cells are ordered by
    // neighbor count so the result depends only on structure.
    void refine(std::vector<VertexMask>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                const VertexMask splitter = cells[s];
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    const VertexMask cell = cells[c];
                    if (std::has_single_bit(cell)) continue;
                    std::array<VertexMask, kMaxOrder + 1> buckets{};
                    int lo = kMaxOrder + 1;
                    int hi = -1;
                    for_each_bit(cell, [&](int v) {
                        const int k = std::popcount(g_.neighbors(v) & splitter);
                        buckets[k] |= bit(v);
                        lo = std::min(lo, k);
                        hi = std::max(hi, k);
                    });
                    if (lo == hi) continue;
                    std::vector<VertexMask> parts;
                    for (int k = lo; k <= hi; ++k)
                        if (buckets[k] != 0) parts.push_back(buckets[k]);
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    bool fixes_prefix(const std::vector<int>& gamma) const {
        for (int v : prefix_)
            if (gamma[v] != v) return false;
        return true;
    }

    bool same_orbit_as_tried(int v, const std::vector<int>& tried) const {
        if (tried.empty()) return false;
        UnionFind uf(n_);
        for (const auto& gamma : generators_)
            if (fixes_prefix(gamma))
                for (int u = 0; u < n_; ++u) uf.unite(u, gamma[u]);
        const int root = uf.find(v);
        for (int u : tried)
            if (uf.find(u) == root) return true;
        return false;
    }

    // Returns the depth the search should resume at; a value below the
    // caller's depth means "abandon this subtree".
    int search(std::vector<VertexMask> cells) {
        refine(cells);
        const int depth = static_cast<int>(prefix_.size());
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (!std::has_single_bit(cells[c])) {
                target = c;
                break;
            }
        if (target == cells.size()) return visit_leaf(cells);

        const VertexMask cell = cells[target];
        std::vector<int> tried;
        int resume = depth;
        for_each_bit(cell, [&](int v) {
            if (resume < depth) return;
            if (same_orbit_as_tried(v, tried)) return;
            tried.push_back(v);
            std::vector<VertexMask> child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
            child.push_back(bit(v));
            child.push_back(cell & ~bit(v));
            child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
            prefix_.push_back(v);
            const int r = search(std::move(child));
            prefix_.pop_back();
            if (r < depth) resume = r;
        });
        return resume;
    }

    int visit_leaf(const std::vector<VertexMask>& cells) {
        std::vector<int> order(n_);
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) {
            order[i] = std::countr_zero(cells[i]);
            pos[order[i]] = i;
        }
        std::vector<VertexMask> rows(n_, 0);
        for (int i = 0; i < n_; ++i)
            for_each_bit(g_.neighbors(order[i]), [&](int u) { rows[i] |= bit(pos[u]); });

        const int depth = static_cast<int>(prefix_.size());
        if (best_rows_.empty() || rows > best_rows_) {
            best_rows_ = std::move(rows);
            best_order_ = std::move(order);
            best_path_ = prefix_;
            return depth;
        }
        if (rows == best_rows_) {
            std::vector<int> gamma(n_);
            bool identity = true;
            for (int i = 0; i < n_; ++i) {
                gamma[best_order_[i]] = order[i];
                identity = identity && best_order_[i] == order[i];
            }
            if (!identity) generators_.push_back(std::move(gamma));
            // The automorphism fixes the common prefix and maps the subtree
            // holding the best leaf onto this one: nothing new below here.
            std::size_t common = 0;
            while (common < prefix_.size() && common < best_path_.size() && prefix_[common] == best_path_[common])
                ++common;
            return static_cast<int>(common);
        }
        return depth;
    }

    const Graph& g_;
    int n_;
    std::vector<int> prefix_;
    std::vector<std::vector<int>> generators_;
    std::vector<VertexMask> best_rows_;
    std::vector<int> best_order_;
    std::vector<int> best_path_;
};

} // namespace detail

/// Canonical labeling, automorphism orbits and canonical form of g.
/// Exact for every order; fast up to n = 12 and for graphs with many twins.
inline CanonicalLabeling canonical_labeling(const Graph& g) { return detail::CanonicalSearch(g).run(); }

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    auto da = a.degrees();
    auto db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

/// The canonical representative: g relabeled by its canonical positions.
inline Graph canonical_graph(const Graph& g) { return relabel(g, canonical_labeling(g).position); }

} // namespace absx
