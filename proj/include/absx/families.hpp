#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absx/abs_index.hpp"
#include "absx/graph.hpp"

namespace absx {

// Labeling conventions: every builder numbers vertices block by block in the
// order the blocks are named (clique first, then pendants, then paths; K_r
// before the parts; H_1..H_6 in order).

inline Graph build_path(int n) {
    detail::require(n >= 1, "path needs n >= 1");
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return std::move(b).build();
}

inline Graph build_cycle(int n) {
    detail::require(n >= 3, "cycle needs n >= 3");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

inline Graph build_complete(int n) {
    detail::require(n >= 1, "complete graph needs n >= 1");
    return GraphBuilder(n).make_clique(low_bits(n)).build();
}

inline Graph build_complete_bipartite(int a, int b) {
    detail::require(a >= 1 && b >= 1, "complete bipartite needs both sides >= 1");
    return join(empty_graph(a), empty_graph(b));
}

/// Ordered list of positive part sizes t_1..t_k.
class PartSizes {
public:
    PartSizes(std::initializer_list<int> sizes) : PartSizes(std::vector<int>(sizes)) {}
    explicit PartSizes(std::vector<int> sizes) : sizes_(std::move(sizes)) {
        detail::require(!sizes_.empty(), "part list must not be empty");
        for (int t : sizes_) detail::require(t >= 1, "every part must have at least one vertex");
    }

    std::span<const int> sizes() const noexcept { return sizes_; }
    int parts() const noexcept { return static_cast<int>(sizes_.size()); }
    int total() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }
    int operator[](std::size_t i) const { return sizes_[i]; }

    bool operator==(const PartSizes&) const = default;

private:
    std::vector<int> sizes_;
};

inline Graph build_complete_multipartite(const PartSizes& parts) {
    detail::require(parts.parts() >= 2, "complete multipartite needs k >= 2");
    detail::require(parts.total() <= kMaxOrder, "complete multipartite: order exceeds 64");
    GraphBuilder b(parts.total());
    std::vector<VertexMask> blocks;
    int start = 0;
    for (int t : parts.sizes()) {
        blocks.push_back(low_bits(start + t) & ~low_bits(start));
        start += t;
    }
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j) b.connect_all(blocks[i], blocks[j]);
    return std::move(b).build();
}

/// Σ_{i<j} t_i t_j sqrt(1 - 2 / (2n - t_i - t_j)).
inline double abs_multipartite_closed(const PartSizes& parts) {
    detail::require(parts.parts() >= 2, "complete multipartite needs k >= 2");
    const long long n = parts.total();
    double total = 0.0;
    const auto t = parts.sizes();
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            total += static_cast<double>(t[i]) * t[j] * weight_for_degree_sum(2 * n - t[i] - t[j]);
    return total;
}

/// Part sizes of T(n, k): with n = kt + s, (k - s) parts of size t then s of size t + 1.
inline PartSizes turan_parts(int n, int k) {
    detail::require(k >= 2, "Turán graph needs k >= 2");
    detail::require(k <= n, "Turán graph needs k <= n");
    const int t = n / k;
    const int s = n % k;
    std::vector<int> sizes(static_cast<std::size_t>(k - s), t);
    sizes.insert(sizes.end(), static_cast<std::size_t>(s), t + 1);
    return PartSizes(std::move(sizes));
}

inline Graph build_turan(int n, int k) { return build_complete_multipartite(turan_parts(n, k)); }

/// K_r ∨ K_{t_1..t_k}; the clique occupies vertices 0..r-1.
inline Graph build_kr_join_multipartite(int r, const PartSizes& parts) {
    detail::require(r >= 1, "K_r join needs r >= 1 (use the plain multipartite family for r = 0)");
    return join(build_complete(r), build_complete_multipartite(parts));
}

/// C(r,2) w(2n-2) + Σ_i r t_i w(2n-1-t_i) + Σ_{i<j} t_i t_j w(2n-t_i-t_j), with w(s) = sqrt(1 - 2/s).
inline double abs_kr_join_closed(int r, const PartSizes& parts) {
    detail::require(r >= 1, "K_r join needs r >= 1 (use the plain multipartite family for r = 0)");
    detail::require(parts.parts() >= 2, "K_r join needs k >= 2");
    const long long n = r + parts.total();
    double total = 0.0;
    if (r >= 2) total += static_cast<double>(r) * (r - 1) / 2.0 * weight_for_degree_sum(2 * n - 2);
    const auto t = parts.sizes();
    for (int ti : t) total += static_cast<double>(r) * ti * weight_for_degree_sum(2 * n - 1 - ti);
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            total += static_cast<double>(t[i]) * t[j] * weight_for_degree_sum(2 * n - t[i] - t[j]);
    return total;
}

// K_n^p: for n >= 2p, K_{n-p} with one pendant on each of p clique vertices;
// for n < 2p, pendants on n-p-1 clique vertices and a path of length 2p-n+1
// on the last one.

inline void require_knp_params(int n, int p) {
    detail::require(n >= 3, "K_n^p needs n >= 3");
    detail::require(p >= 0 && p <= n - 2, "K_n^p needs 0 <= p <= n - 2");
}

inline Graph build_knp(int n, int p) {
    require_knp_params(n, p);
    const int m = n - p;
    Graph g = build_complete(m);
    if (n >= 2 * p) {
        for (int i = 0; i < p; ++i) g = attach_path(g, i, 1);
    } else {
        for (int i = 0; i < m - 1; ++i) g = attach_path(g, i, 1);
        g = attach_path(g, m - 1, 2 * p - n + 1);
    }
    return g;
}

/// Degree-pair multiset of K_n^p read off the construction.
///
/// n >= 2p (m = n - p): C(p,2) edges (m,m), p(m-p) edges (m-1,m),
/// C(m-p,2) edges (m-1,m-1), p pendant edges (1,m).
/// n < 2p: C(m,2) edges (m,m), m-1 pendant edges (1,m), and a path of
/// length L = 2p-n+1 contributing (2,m), L-2 edges (2,2) and (1,2).
inline std::vector<DegreePairCount> knp_degree_pairs(int n, int p) {
    require_knp_params(n, p);
    const long long m = n - p;
    std::vector<DegreePairCount> pairs;
    const int mi = static_cast<int>(m);
    if (n >= 2 * p) {
        pairs.push_back({mi, mi, static_cast<long long>(p) * (p - 1) / 2});
        pairs.push_back({mi - 1, mi, static_cast<long long>(p) * (m - p)});
        pairs.push_back({mi - 1, mi - 1, (m - p) * (m - p - 1) / 2});
        pairs.push_back({1, mi, p});
    } else {
        const long long len = 2LL * p - n + 1;
        pairs.push_back({mi, mi, m * (m - 1) / 2});
        pairs.push_back({1, mi, m - 1});
        pairs.push_back({2, mi, 1});
        pairs.push_back({2, 2, len - 2});
        pairs.push_back({1, 2, 1});
    }
    return pairs;
}

inline double abs_knp_closed(int n, int p) {
    const auto pairs = knp_degree_pairs(n, p);
    return abs_from_degree_pairs(pairs);
}

/// Sizes (n_1..n_6) of the independent sets H_1..H_6. H_1 is joined to
/// H_4, H_5; H_2 to H_4, H_5, H_6; H_3 to H_5, H_6.
struct SixPart {
    std::array<int, 6> n{};

    int operator[](std::size_t i) const { return n[i]; }
    int total() const { return std::accumulate(n.begin(), n.end(), 0); }
    bool operator==(const SixPart&) const = default;
};

/// The three admissible shapes of a maximizer built from a minimum separator S.
enum class SixPartShape {
    kSplitSeparator, // n1,n3,n4,n6 >= 1, n2 + n5 = κ >= 1, n1,n3 >= n5, n4,n6 >= n2
    kSeparatorInH2,  // n1 = n5 = 0, n3,n4 >= 1, n2 = κ >= 1, n6 >= n2
    kSeparatorInH5,  // n2 = n4 = 0, n1,n6 >= 1, n5 = κ >= 1, n3 >= n5
};

enum class ShapeCheck { kStrict, kUnchecked };

inline std::optional<SixPartShape> classify_sixpart(const SixPart& s) {
    const auto& [n1, n2, n3, n4, n5, n6] = s.n;
    if (n1 >= 1 && n3 >= 1 && n4 >= 1 && n6 >= 1 && n2 + n5 >= 1 && n1 >= n5 && n3 >= n5 && n4 >= n2 && n6 >= n2)
        return SixPartShape::kSplitSeparator;
    if (n1 == 0 && n5 == 0 && n3 >= 1 && n4 >= 1 && n2 >= 1 && n6 >= n2) return SixPartShape::kSeparatorInH2;
    if (n2 == 0 && n4 == 0 && n1 >= 1 && n6 >= 1 && n5 >= 1 && n3 >= n5) return SixPartShape::kSeparatorInH5;
    return std::nullopt;
}

namespace detail {

inline void check_sixpart(const SixPart& s, ShapeCheck check) {
    for (int v : s.n) require(v >= 0, "six-part sizes must be non-negative");
    require(s.total() >= 1 && s.total() <= kMaxOrder, "six-part order must be in [1, 64]");
    if (check == ShapeCheck::kStrict)
        require(classify_sixpart(s).has_value(), "six-part tuple matches none of the three maximizer shapes");
}

// m · sqrt(1 - 2/sum), skipping empty blocks.
inline double block_term(long long multiplicity, long long degree_sum) {
    return multiplicity == 0 ? 0.0 : static_cast<double>(multiplicity) * weight_for_degree_sum(degree_sum);
}

} // namespace detail

inline Graph build_sixpart(const SixPart& s, ShapeCheck check = ShapeCheck::kStrict) {
    detail::check_sixpart(s, check);
    std::array<VertexMask, 6> h{};
    int start = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        h[i] = low_bits(start + s.n[i]) & ~low_bits(start);
        start += s.n[i];
    }
    GraphBuilder b(s.total());
    b.connect_all(h[0], h[3] | h[4]);
    b.connect_all(h[1], h[3] | h[4] | h[5]);
    b.connect_all(h[2], h[4] | h[5]);
    return std::move(b).build();
}

/// n1n4 w(n-n3-n6) + n1n5 w(n-n6) + n2n4 w(n-n3) + n2n5 w(n) + n2n6 w(n-n1)
/// + n3n5 w(n-n4) + n3n6 w(n-n1-n4), with w(s) = sqrt(1 - 2/s).
inline double abs_sixpart_closed(const SixPart& s, ShapeCheck check = ShapeCheck::kStrict) {
    detail::check_sixpart(s, check);
    const long long n1 = s[0], n2 = s[1], n3 = s[2], n4 = s[3], n5 = s[4], n6 = s[5];
    const long long n = s.total();
    using detail::block_term;
    return block_term(n1 * n4, n - n3 - n6) + block_term(n1 * n5, n - n6) + block_term(n2 * n4, n - n3) +
           block_term(n2 * n5, n) + block_term(n2 * n6, n - n1) + block_term(n3 * n5, n - n4) +
           block_term(n3 * n6, n - n1 - n4);
}

/// Parameters of K̄_κ[x,y] = K̄[x, 0, 1, y, κ, 0]; order x + y + κ + 1.
struct KappaXY {
    int x = 1;
    int y = 1;
    int kappa = 1;

    int order() const { return x + y + kappa + 1; }
    SixPart as_sixpart() const { return SixPart{{x, 0, 1, y, kappa, 0}}; }
};

inline void require_kappa_xy(int x, int y, int kappa) {
    detail::require(x >= 1 && y >= 1 && kappa >= 1, "K̄_κ[x,y] needs x, y, κ >= 1");
}

inline Graph build_kappa_xy(int x, int y, int kappa) {
    require_kappa_xy(x, y, kappa);
    return build_sixpart(KappaXY{x, y, kappa}.as_sixpart(), ShapeCheck::kUnchecked);
}

/// xy sqrt(1 - 2/(n-1)) + xκ sqrt(1 - 2/n) + κ sqrt(1 - 2/(n-y)), n = x + y + κ + 1.
inline double abs_kappa_xy_closed(int x, int y, int kappa) {
    require_kappa_xy(x, y, kappa);
    const long long n = static_cast<long long>(x) + y + kappa + 1;
    return static_cast<double>(x) * y * weight_for_degree_sum(n - 1) +
           static_cast<double>(x) * kappa * weight_for_degree_sum(n) + kappa * weight_for_degree_sum(n - y);
}

} // namespace absx
