#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "absx/graph.hpp"

namespace absx {

/// Tie tolerance for comparing ABS values in verdicts.
inline constexpr double kTieTolerance = 1e-9;

/// ABS weight of an edge whose endpoints have degrees a and b:
/// sqrt(1 - 2 / (a + b)).
inline double edge_weight(int a, int b) {
    detail::require(a >= 1 && b >= 1, "edge_weight: degrees must be >= 1, got (" + std::to_string(a) + ", " +
                                          std::to_string(b) + ")");
    return std::sqrt(1.0 - 2.0 / static_cast<double>(a + b));
}

/// Same weight expressed through the degree sum; used by closed forms.
inline double weight_for_degree_sum(long long sum) {
    detail::require(sum >= 2, "degree sum of an edge must be >= 2");
    return std::sqrt(1.0 - 2.0 / static_cast<double>(sum));
}

/// Memo of edge weights for degrees up to 64, indexed by degree sum.
/// Built on first use; reads are safe from any thread.
class EdgeWeightTable {
public:
    static const EdgeWeightTable& instance() {
        static const EdgeWeightTable table;
        return table;
    }

    double weight(int a, int b) const {
        detail::require(a >= 1 && b >= 1 && a <= kMaxOrder && b <= kMaxOrder, "EdgeWeightTable: degree out of range");
        return by_sum_[static_cast<std::size_t>(a + b)];
    }

private:
    EdgeWeightTable() {
        for (int s = 2; s <= 2 * kMaxOrder; ++s) by_sum_[static_cast<std::size_t>(s)] = weight_for_degree_sum(s);
    }

    std::array<double, 2 * kMaxOrder + 1> by_sum_{};
};

struct DegreePairCount {
    int low = 1;
    int high = 1;
    long long multiplicity = 0;

    bool operator==(const DegreePairCount&) const = default;
};

/// Σ multiplicity · edge_weight(low, high), summed in the given order.
inline double abs_from_degree_pairs(std::span<const DegreePairCount> pairs) {
    double total = 0.0;
    for (const auto& p : pairs) {
        detail::require(p.multiplicity >= 0, "abs_from_degree_pairs: negative multiplicity");
        if (p.multiplicity == 0) continue;
        total += static_cast<double>(p.multiplicity) * edge_weight(p.low, p.high);
    }
    return total;
}

/// Degree-pair multiset of g's edges, sorted by (low, high).
inline std::vector<DegreePairCount> degree_pair_multiset(const Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        const int a = g.degree(u);
        const int b = g.degree(v);
        pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<DegreePairCount> out;
    for (const auto& [a, b] : pairs) {
        if (!out.empty() && out.back().low == a && out.back().high == b) ++out.back().multiplicity;
        else out.push_back({a, b, 1});
    }
    return out;
}

/// ABS(g) = Σ_{uv ∈ E} sqrt(1 - 2 / (d(u) + d(v))).
///
/// Summed over the sorted degree-pair multiset, so the result is identical
/// to the last bit for every relabeling of g.
inline double abs_index(const Graph& g) {
    const auto pairs = degree_pair_multiset(g);
    return abs_from_degree_pairs(pairs);
}

} // namespace absx
