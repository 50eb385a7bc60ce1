#pragma once

#include <optional>
#include <string>

#include "absx/canonical.hpp"
#include "absx/families.hpp"
#include "absx/invariants.hpp"

namespace absx {

/// The graph predicted to be the unique ABS maximizer of a class.
struct ExpectedExtremal {
    std::string family;
    Graph graph;
    CanonicalForm form;
    double closed_form = 0.0;
};

/// Maximum ABS over connected bipartite graphs of order n >= 7 with
/// connectivity κ, as a function of (n, κ):
///   κ ∈ {(n-2)/2, (n-1)/2, n/2}:   κ(n-κ) sqrt(1-2/n)
///   n even, 1 <= κ <= (n-4)/2:     n(n-2κ-2)/4 sqrt(1-2/(n-1)) + nκ/2 sqrt(1-2/n) + κ sqrt(1-4/(2κ+n+2))
///   n odd,  1 <= κ <= (n-3)/2:     (n-1)(n-2κ-1)/4 sqrt(1-2/(n-1)) + (n-1)κ/2 sqrt(1-2/n) + κ sqrt(1-4/(2κ+n+1))
inline std::optional<double> bipartite_kappa_bound(int n, int kappa) {
    if (n < 7 || kappa < 1 || 2 * kappa > n) return std::nullopt;
    const double nd = n;
    const double k = kappa;
    if (2 * kappa >= n - 2) return k * (nd - k) * std::sqrt(1.0 - 2.0 / nd);
    if (n % 2 == 0)
        return nd * (nd - 2 * k - 2) / 4.0 * std::sqrt(1.0 - 2.0 / (nd - 1)) + nd * k / 2.0 * std::sqrt(1.0 - 2.0 / nd) +
               k * std::sqrt(1.0 - 4.0 / (2 * k + nd + 2));
    return (nd - 1) * (nd - 2 * k - 1) / 4.0 * std::sqrt(1.0 - 2.0 / (nd - 1)) +
           (nd - 1) * k / 2.0 * std::sqrt(1.0 - 2.0 / nd) + k * std::sqrt(1.0 - 4.0 / (2 * k + nd + 1));
}

/// Parameters (x, y) of the K̄_κ[x,y] maximizer, when the maximizer has that shape.
inline std::optional<KappaXY> bipartite_kappa_xy_maximizer(int n, int kappa) {
    if (n < 7 || kappa < 1 || 2 * kappa >= n - 2) return std::nullopt;
    if (n % 2 == 0) return KappaXY{n / 2, (n - 2 * kappa - 2) / 2, kappa};
    return KappaXY{(n - 1) / 2, (n - 2 * kappa - 1) / 2, kappa};
}

/// Family name and closed-form value of the predicted maximizer.
struct ExtremalPrediction {
    std::string family;
    double closed_form = 0.0;
};

/// The predicted unique maximizer's name and ABS at order n, or nothing when
/// no prediction applies (tiny n, r = 0, bipartite n < 7, empty class).
inline std::optional<ExtremalPrediction> predict_extremal(const ClassConstraint& c, int n) {
    validate(c);
    if (const auto* cv = std::get_if<CutVertices>(&c)) {
        if (n < 3 || cv->p > n - 2) return std::nullopt;
        return ExtremalPrediction{"K_" + std::to_string(n) + "^" + std::to_string(cv->p), abs_knp_closed(n, cv->p)};
    }
    if (const auto* kp = std::get_if<KPartiteness>(&c)) {
        if (kp->r < 1 || kp->r > n - kp->k) return std::nullopt;
        return ExtremalPrediction{"K_" + std::to_string(kp->r) + " v T(" + std::to_string(n - kp->r) + "," +
                                      std::to_string(kp->k) + ")",
                                  abs_kr_join_closed(kp->r, turan_parts(n - kp->r, kp->k))};
    }
    const int kappa = std::get<BipartiteConnectivity>(c).kappa;
    const auto bound = bipartite_kappa_bound(n, kappa);
    if (!bound) return std::nullopt;
    if (const auto xy = bipartite_kappa_xy_maximizer(n, kappa))
        return ExtremalPrediction{"Kbar_" + std::to_string(kappa) + "[" + std::to_string(xy->x) + "," +
                                      std::to_string(xy->y) + "]",
                                  *bound};
    return ExtremalPrediction{"K_{" + std::to_string(kappa) + "," + std::to_string(n - kappa) + "}", *bound};
}

/// The predicted maximizer as a graph with its canonical form.
inline std::optional<ExpectedExtremal> expected_extremal(const ClassConstraint& c, int n) {
    auto pred = predict_extremal(c, n);
    if (!pred) return std::nullopt;
    Graph g = [&] {
        if (const auto* cv = std::get_if<CutVertices>(&c)) return build_knp(n, cv->p);
        if (const auto* kp = std::get_if<KPartiteness>(&c))
            return build_kr_join_multipartite(kp->r, turan_parts(n - kp->r, kp->k));
        const int kappa = std::get<BipartiteConnectivity>(c).kappa;
        if (const auto xy = bipartite_kappa_xy_maximizer(n, kappa)) return build_kappa_xy(xy->x, xy->y, kappa);
        return build_complete_bipartite(kappa, n - kappa);
    }();
    CanonicalForm form = canonical_form(g);
    return ExpectedExtremal{std::move(pred->family), std::move(g), std::move(form), pred->closed_form};
}

} // namespace absx
