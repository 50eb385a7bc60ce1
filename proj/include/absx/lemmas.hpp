#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absx/abs_index.hpp"
#include "absx/extremal.hpp"
#include "absx/families.hpp"
#include "absx/invariants.hpp"

namespace absx {

enum class LemmaVerdict { kPass, kFail, kVacuous };

inline std::string_view to_string(LemmaVerdict v) {
    switch (v) {
    case LemmaVerdict::kPass: return "pass";
    case LemmaVerdict::kFail: return "fail";
    case LemmaVerdict::kVacuous: return "vacuous";
    }
    return "?";
}

struct LemmaCheck {
    std::string id;
    std::string grid;
    std::size_t tuples_checked = 0;
    std::size_t failure_count = 0;
    std::size_t finding_count = 0;
    std::vector<std::string> failures; // first kMaxListed only
    std::vector<std::string> findings; // first kMaxListed only
    LemmaVerdict verdict = LemmaVerdict::kVacuous;

    static constexpr std::size_t kMaxListed = 64;
};

struct LemmaGrid {
    int n_max = 40;
    int k_max = 6;
    int r_max = 5;
    int graph_check_n_max = 14; // graph-built double entry only up to this order
    double tolerance = 1e-10;   // closed form vs expanded expression vs direct sum
};

namespace detail {

inline double w(long long degree_sum) { return weight_for_degree_sum(degree_sum); }

inline std::string at(std::initializer_list<std::pair<const char*, long long>> fields) {
    std::string s;
    for (const auto& [name, value] : fields) {
        if (!s.empty()) s += ' ';
        s += name;
        s += '=';
        s += std::to_string(value);
    }
    return s;
}

inline std::string parts_string(std::span<const int> ts) {
    std::string s = "(";
    for (std::size_t i = 0; i < ts.size(); ++i) s += (i ? "," : "") + std::to_string(ts[i]);
    return s + ")";
}

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Differences within this band of zero are reported as findings, not failures.
inline constexpr double kZeroBand = kTieTolerance;

class CheckLog {
public:
    void tuple() { ++out_.tuples_checked; }

    // A strict "> 0" claim under the strictness policy.
    void positive(double d, std::string_view what, const std::string& where) {
        if (d > kZeroBand) return;
        if (d >= -kZeroBand)
            note(out_.findings, out_.finding_count, std::string(what) + " is zero (" + num(d) + ") at " + where);
        else
            fail(std::string(what) + " = " + num(d) + " at " + where);
    }

    void holds(bool ok, std::string_view what, const std::string& where) {
        if (!ok) fail(std::string(what) + " violated at " + where);
    }

    void agree(double a, double b, double tol, std::string_view what, const std::string& where) {
        if (std::abs(a - b) > tol) fail(std::string(what) + " mismatch " + num(a) + " vs " + num(b) + " at " + where);
    }

    void finding(std::string text) { note(out_.findings, out_.finding_count, std::move(text)); }

    void fail(std::string text) { note(out_.failures, out_.failure_count, std::move(text)); }

    void absorb(const LemmaCheck& other) {
        out_.tuples_checked += other.tuples_checked;
        for (const auto& f : other.failures) note(out_.failures, out_.failure_count, f);
        for (const auto& f : other.findings) note(out_.findings, out_.finding_count, f);
        out_.failure_count += other.failure_count - other.failures.size();
        out_.finding_count += other.finding_count - other.findings.size();
    }

    LemmaCheck finish(std::string id, std::string grid) {
        out_.id = std::move(id);
        out_.grid = std::move(grid);
        if (out_.failure_count > 0)
            out_.verdict = LemmaVerdict::kFail;
        else
            out_.verdict = out_.tuples_checked == 0 ? LemmaVerdict::kVacuous : LemmaVerdict::kPass;
        return std::move(out_);
    }

private:
    static void note(std::vector<std::string>& list, std::size_t& count, std::string text) {
        ++count;
        if (list.size() < LemmaCheck::kMaxListed) list.push_back(std::move(text));
    }

    LemmaCheck out_;
};

// Calls fn(parts) for every non-increasing list of k positive integers summing to n.
inline void for_each_partition(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int left, int slots, int cap) {
        if (slots == 0) {
            if (left == 0) fn(cur);
            return;
        }
        for (int t = std::min(cap, left - (slots - 1)); t * slots >= left && t >= 1; --t) {
            cur.push_back(t);
            rec(left - t, slots - 1, t);
            cur.pop_back();
        }
    };
    if (k >= 1 && n >= k) rec(n, k, n);
}

inline PartSizes shifted(const PartSizes& parts, int i, int j) {
    std::vector<int> ts(parts.sizes().begin(), parts.sizes().end());
    --ts[i];
    ++ts[j];
    return PartSizes(std::move(ts));
}

inline void require_shift(const PartSizes& parts, int i, int j) {
    require(i >= 0 && j >= 0 && i < parts.parts() && j < parts.parts() && i != j, "shift indices out of range");
    require(parts[i] - parts[j] >= 2, "shift needs t_i - t_j >= 2");
}

inline bool graph_checked(int order, const LemmaGrid& grid) { return order <= grid.graph_check_n_max; }

} // namespace detail

// ---------------------------------------------------------------------------
// Monotone helpers of the multipartite arguments.

/// sqrt(1-2/(x-t)) - sqrt(1-2/(x-t+1)); negative and increasing in x.
inline double zeta(double x, double t) {
    detail::require(x - t >= 2, "zeta needs x - t >= 2");
    return std::sqrt(1.0 - 2.0 / (x - t)) - std::sqrt(1.0 - 2.0 / (x - t + 1));
}

/// sqrt(1-2/(2n-x)) - sqrt(1-2/(2n-x-1)); positive and increasing in x.
inline double zeta1(int n, double x) {
    detail::require(2.0 * n - x - 1 >= 2, "zeta1 needs 2n - x - 1 >= 2");
    return std::sqrt(1.0 - 2.0 / (2.0 * n - x)) - std::sqrt(1.0 - 2.0 / (2.0 * n - x - 1));
}

inline LemmaCheck check_zeta_monotone(int t, int lo, int hi) {
    detail::require(t >= 1 && lo - t > 2 && hi >= lo, "zeta grid needs t >= 1, lo - t > 2, hi >= lo");
    detail::CheckLog log;
    for (int x = lo; x <= hi; ++x) {
        log.tuple();
        const std::string where = detail::at({{"t", t}, {"x", x}});
        log.positive(-zeta(x, t), "-zeta", where);
        if (x < hi) log.positive(zeta(x + 1, t) - zeta(x, t), "zeta(x+1)-zeta(x)", where);
    }
    return log.finish("zeta", detail::at({{"t", t}, {"x_lo", lo}, {"x_hi", hi}}));
}

inline LemmaCheck check_zeta1_monotone(int n, int lo, int hi) {
    detail::require(n >= 3 && lo >= 1 && hi >= lo && 2 * n - hi - 1 > 2, "zeta1 grid needs 1 <= lo <= hi <= 2n-4");
    detail::CheckLog log;
    for (int x = lo; x <= hi; ++x) {
        log.tuple();
        const std::string where = detail::at({{"n", n}, {"x", x}});
        log.positive(zeta1(n, x), "zeta1", where);
        if (x < hi) log.positive(zeta1(n, x + 1) - zeta1(n, x), "zeta1(x+1)-zeta1(x)", where);
    }
    return log.finish("zeta1", detail::at({{"n", n}, {"x_lo", lo}, {"x_hi", hi}}));
}

// ---------------------------------------------------------------------------
// Balancing shifts t_i -> t_i - 1, t_j -> t_j + 1 (indices are 0-based).

/// ABS(shifted) - ABS(original) for complete multipartite graphs, by closed form.
inline double check_multipartite_shift(const PartSizes& parts, int i, int j) {
    detail::require_shift(parts, i, j);
    return abs_multipartite_closed(detail::shifted(parts, i, j)) - abs_multipartite_closed(parts);
}

/// ABS(original) - ABS(shifted), term by term as expanded in the proof.
inline double expanded_multipartite_shift(const PartSizes& parts, int i, int j) {
    detail::require_shift(parts, i, j);
    using detail::w;
    const long long n = parts.total();
    const long long t1 = parts[i];
    const long long t2 = parts[j];
    double d = t1 * t2 * w(2 * n - (t1 + t2)) - (t1 - 1) * (t2 + 1) * w(2 * n - (t1 + t2));
    for (int q = 0; q < parts.parts(); ++q) {
        if (q == i || q == j) continue;
        const long long ti = parts[q];
        d += t1 * ti * (w(2 * n - t1 - ti) - w(2 * n - ti - t1 + 1));
        d += t2 * ti * (w(2 * n - t2 - ti) - w(2 * n - t2 - ti - 1));
        d += ti * (w(2 * n - ti - t1 + 1) - w(2 * n - ti - t2 - 1));
    }
    return d;
}

/// Upper bound on ABS(original) - ABS(shifted): sum of t_j t_q (zeta(2n-t_i) - zeta(2n-t_j-1)).
inline double multipartite_shift_bound(const PartSizes& parts, int i, int j) {
    detail::require_shift(parts, i, j);
    const int n = parts.total();
    double b = 0.0;
    for (int q = 0; q < parts.parts(); ++q) {
        if (q == i || q == j) continue;
        b += static_cast<double>(parts[j]) * parts[q] *
             (zeta(2.0 * n - parts[i], parts[q]) - zeta(2.0 * n - parts[j] - 1, parts[q]));
    }
    return b;
}

/// ABS(K_r v shifted) - ABS(K_r v original), by closed form.
inline double check_kr_join_shift(int r, const PartSizes& parts, int i, int j) {
    detail::require(r >= 1, "join shift needs r >= 1");
    detail::require_shift(parts, i, j);
    return abs_kr_join_closed(r, detail::shifted(parts, i, j)) - abs_kr_join_closed(r, parts);
}

/// ABS(K_r v original) - ABS(K_r v shifted), term by term as expanded in the proof.
inline double expanded_kr_join_shift(int r, const PartSizes& parts, int i, int j) {
    detail::require(r >= 1, "join shift needs r >= 1");
    detail::require_shift(parts, i, j);
    using detail::w;
    const long long rr = r;
    const long long n = r + parts.total();
    const long long t1 = parts[i];
    const long long t2 = parts[j];
    double d = rr * t1 * w(2 * n - (t1 + 1)) + rr * t2 * w(2 * n - (t2 + 1)) + t1 * t2 * w(2 * n - (t1 + t2));
    d -= rr * (t1 - 1) * w(2 * n - t1) + rr * (t2 + 1) * w(2 * (n - 1) - t2) + (t1 - 1) * (t2 + 1) * w(2 * n - (t1 + t2));
    for (int q = 0; q < parts.parts(); ++q) {
        if (q == i || q == j) continue;
        const long long ti = parts[q];
        d += t1 * ti * w(2 * n - (t1 + ti)) + t2 * ti * w(2 * n - (t2 + ti));
        d -= (t1 - 1) * ti * w(2 * n - (t1 + ti) + 1) + (t2 + 1) * ti * w(2 * n - (t2 + ti) - 1);
    }
    return d;
}

/// Upper bound on ABS(original) - ABS(shifted) for the join family.
inline double kr_join_shift_bound(int r, const PartSizes& parts, int i, int j) {
    detail::require_shift(parts, i, j);
    const int n = r + parts.total();
    double b = 0.0;
    for (int q = 0; q < parts.parts(); ++q) {
        if (q == i || q == j) continue;
        b += static_cast<double>(parts[j]) * parts[q] *
             (zeta(2.0 * n - parts[i], parts[q]) - zeta(2.0 * n - parts[j] - 1, parts[q]));
    }
    return b - static_cast<double>(r) * parts[j] * (zeta1(n, parts[i]) - zeta1(n, parts[j] + 1));
}

// ---------------------------------------------------------------------------
// Six-part merges. All values are ABS(target) - ABS(source) via the six-part
// closed form.

namespace detail {

inline void require_fl1(const SixPart& s) {
    require(s[0] >= 1 && s[3] >= 1 && s[5] >= 1, "merge needs n1, n4, n6 >= 1");
    require(s[2] >= 2, "merge needs n3 >= 2");
    require(s[0] >= s[4] && s[2] >= s[4], "merge needs n1, n3 >= n5");
    require(s[3] >= s[1] && s[5] >= s[1], "merge needs n4, n6 >= n2");
}

inline SixPart fl1_target(const SixPart& s) {
    return SixPart{{s[0] + s[1] + s[2] - 1, 0, 1, s[3] + s[5] - s[1], s[4] + s[1], 0}};
}

} // namespace detail

inline double check_sixpart_merge(const SixPart& s) {
    detail::require_fl1(s);
    return abs_sixpart_closed(detail::fl1_target(s), ShapeCheck::kUnchecked) - abs_sixpart_closed(s, ShapeCheck::kUnchecked);
}

/// The merge difference expanded term by term as in the proof.
inline double expanded_sixpart_merge(const SixPart& s) {
    detail::require_fl1(s);
    using detail::w;
    const long long n1 = s[0], n2 = s[1], n3 = s[2], n4 = s[3], n5 = s[4], n6 = s[5];
    const long long n = s.total();
    return n1 * n4 * (w(n - 1) - w(n - n3 - n6)) + n1 * n5 * (w(n) - w(n - n6)) + n2 * n4 * (w(n - 1) - w(n - n3)) +
           n2 * n6 * (w(n - 1) - w(n - n1)) + n2 * n2 * (w(n) - w(n - 1)) + (n3 - 1) * n5 * (w(n) - w(n - n4)) +
           ((n3 - 1) * (n6 - n2) * w(n - 1) + (n3 - 1) * n2 * w(n) - (n3 - 1) * n6 * w(n - n1 - n4)) +
           (n3 - 1) * n4 * w(n - 1) + n1 * n2 * (w(n) - w(n - 1)) + n1 * n6 * w(n - 1) - n6 * w(n - n1 - n4) -
           n5 * w(n - n4) + (n5 + n2) * w(n - n4 - n6 + n2);
}

/// Lower bound on the merge difference after dropping the non-negative bracketed terms.
inline double sixpart_merge_bound(const SixPart& s) {
    detail::require_fl1(s);
    using detail::w;
    const long long n1 = s[0], n2 = s[1], n3 = s[2], n4 = s[3], n5 = s[4], n6 = s[5];
    const long long n = s.total();
    return (n3 - 1) * n4 * w(n - 1) + n1 * n6 * w(n - 1) - n6 * w(n - n1 - n4) - n5 * w(n - n4) +
           (n5 + n2) * w(n - n4 - n6 + n2);
}

inline double check_bl2_merge(int n2, int n3, int n4, int n6) {
    detail::require(n2 >= 1 && n3 >= 1 && n4 >= 2 && n6 >= n2, "merge needs n2 >= 1, n3 >= 1, n4 >= 2, n6 >= n2");
    return abs_sixpart_closed(SixPart{{0, n2, n3, 1, 0, n6 + n4 - 1}}, ShapeCheck::kUnchecked) -
           abs_sixpart_closed(SixPart{{0, n2, n3, n4, 0, n6}}, ShapeCheck::kUnchecked);
}

inline double check_fl3_merge(int n1, int n3, int n5, int n6) {
    detail::require(n1 >= 2 && n5 >= 1 && n3 >= n5 && n6 >= 1, "merge needs n1 >= 2, n5 >= 1, n3 >= n5, n6 >= 1");
    return abs_sixpart_closed(SixPart{{1, 0, n3 + n1 - 1, 0, n5, n6}}, ShapeCheck::kUnchecked) -
           abs_sixpart_closed(SixPart{{n1, 0, n3, 0, n5, n6}}, ShapeCheck::kUnchecked);
}

// ---------------------------------------------------------------------------
// The two-parameter family Kbar_κ[x,y].

/// ABS(Kbar_κ[x+1,y-1]) - ABS(Kbar_κ[x,y]).
inline double check_kappa_shift(int x, int y, int kappa) {
    detail::require(x >= 1 && kappa >= 1, "x, kappa must be >= 1");
    detail::require(y >= 2, "kappa shift needs y >= 2");
    detail::require(y - x - 1 + kappa >= 0, "kappa shift needs y - x - 1 + kappa >= 0");
    return abs_kappa_xy_closed(x + 1, y - 1, kappa) - abs_kappa_xy_closed(x, y, kappa);
}

/// Even n: ABS(Kbar_κ[n/2+c, (n-2κ-2)/2-c]) - ABS(Kbar_κ[n/2+c+1, (n-2κ-2)/2-c-1]) in the proof's closed form.
inline double fil2_f(int n, int kappa, int c) {
    const double s = std::sqrt((n - 3.0) / (n - 1.0));
    const double k = kappa;
    const double nn = n;
    return 2 * s * c + s * k - k * std::sqrt((nn - 2) / nn) +
           k * std::sqrt((nn + 2 * k - 2 + 2 * c) / (nn + 2 * k + 2 + 2 * c)) -
           k * std::sqrt((nn + 2 * k + 2 * c) / (nn + 2 * k + 4 + 2 * c)) + 2 * s;
}

/// Odd n analogue: ABS(Kbar_κ[(n-1)/2+c, (n-2κ-1)/2-c]) - ABS(Kbar_κ[(n-1)/2+c+1, (n-2κ-1)/2-c-1]).
inline double fil3_f(int n, int kappa, int c) {
    const double s = std::sqrt((n - 3.0) / (n - 1.0));
    const double k = kappa;
    const double nn = n;
    return (2.0 * c + k + 1) * s - k * std::sqrt((nn - 2) / nn) +
           k * std::sqrt((nn + 2 * k - 3 + 2 * c) / (nn + 2 * k + 1 + 2 * c)) -
           k * std::sqrt((nn + 2 * k - 1 + 2 * c) / (nn + 2 * k + 3 + 2 * c));
}

/// The degree-6 polynomial whose positivity settles the squared chain-step inequality.
inline __int128 chain_step_polynomial(long long n_in, long long k_in) {
    const __int128 n = n_in;
    const __int128 k = k_in;
    const __int128 n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n, n6 = n5 * n;
    const __int128 k2 = k * k, k3 = k2 * k, k4 = k3 * k, k5 = k4 * k, k6 = k5 * k;
    return (64 * n2 - 256 * n + 192) * k6 + (128 * n3 - 256 * n2 - 640 * n + 768) * k5 +
           (96 * n4 - 1072 * n2 + 352 * n + 560) * k4 +
           (32 * n5 + 64 * n4 - 448 * n3 - 416 * n2 + 1312 * n - 1056) * k3 +
           (4 * n6 + 16 * n5 - 76 * n4 - 192 * n3 + 632 * n2 + 368 * n - 2256) * k2 +
           (-8 * n5 - 24 * n4 + 152 * n3 + 408 * n2 - 720 * n - 1728) * k - n6 - 6 * n5 + 11 * n4 + 108 * n3 +
           44 * n2 - 480 * n - 576;
}

/// The squared chain-step difference times its common denominator, computed exactly.
inline __int128 chain_step_squared_difference(long long n_in, long long k_in) {
    const __int128 n = n_in;
    const __int128 k = k_in;
    const __int128 a = n + 2 * k + 2;
    const __int128 b = n + 2 * k + 4;
    const __int128 lhs = 4 * k * k * k * k * (n + 2 * k - 2) * (n + 2 * k) * a * b * (n - 1) * (n - 1);
    const __int128 q = 2 * k * k * a * b * (n - 1) - 4 * k * k * b * (n - 1) - 4 * k * k * a * (n - 1) -
                       a * b * (n - 1) + 2 * a * b;
    return lhs - q * q;
}

namespace detail {

inline double kxy_graph_abs(int x, int y, int kappa) { return abs_index(build_kappa_xy(x, y, kappa)); }

// Shared by the even and odd chain lemmas: f on its full c-grid.
inline void chain_lemma_grid(CheckLog& log, int n, int kappa, int x0, int y0, int c_max,
                             double (*expanded_f)(int, int, int), const LemmaGrid& grid) {
    double prev = 0.0;
    for (int c = 0; c <= c_max; ++c) {
        log.tuple();
        const std::string where = at({{"n", n}, {"kappa", kappa}, {"c", c}});
        const double f = abs_kappa_xy_closed(x0 + c, y0 - c, kappa) - abs_kappa_xy_closed(x0 + c + 1, y0 - c - 1, kappa);
        log.positive(f, "f(c)", where);
        log.agree(expanded_f(n, kappa, c), f, grid.tolerance, "f(c) expression vs closed form", where);
        if (graph_checked(n, grid))
            log.agree(kxy_graph_abs(x0 + c, y0 - c, kappa) - kxy_graph_abs(x0 + c + 1, y0 - c - 1, kappa), f,
                      grid.tolerance, "f(c) direct sum vs closed form", where);
        if (c > 0) log.positive(f - prev, "f(c)-f(c-1)", where);
        prev = f;
    }
}

} // namespace detail

inline LemmaCheck check_fil2_chain(int n, int kappa, const LemmaGrid& grid = {}) {
    detail::require(n >= 8 && n % 2 == 0, "even-case chain lemma needs even n >= 8");
    detail::require(kappa >= 1 && n - 2 * kappa - 6 >= 0, "even-case chain lemma needs 1 <= kappa <= (n-6)/2");
    detail::CheckLog log;
    detail::chain_lemma_grid(log, n, kappa, n / 2, (n - 2 * kappa - 2) / 2, (n - 2 * kappa - 6) / 2, &fil2_f, grid);

    const std::string where = detail::at({{"n", n}, {"kappa", kappa}});
    const double s = std::sqrt((n - 3.0) / (n - 1.0));
    const double k = kappa;
    log.positive(s - (k * std::sqrt((n + 2 * k) / (n + 2 * k + 4)) - k * std::sqrt((n + 2 * k - 2) / (n + 2 * k + 2))),
                 "chain-step margin", where);
    log.positive(s - (k * std::sqrt((n - 2.0) / n) - k * s), "companion inequality margin", where);
    const __int128 p = chain_step_polynomial(n, kappa);
    log.holds(p > 0, "chain-step polynomial > 0", where);
    log.holds(chain_step_squared_difference(n, kappa) == p, "chain-step polynomial identity", where);
    return log.finish("fil2", where);
}

inline LemmaCheck check_fil3_chain(int n, int kappa, const LemmaGrid& grid = {}) {
    detail::require(n >= 7 && n % 2 == 1, "odd-case chain lemma needs odd n >= 7");
    detail::require(kappa >= 1 && n - 2 * kappa - 5 >= 0, "odd-case chain lemma needs 1 <= kappa <= (n-5)/2");
    detail::CheckLog log;
    detail::chain_lemma_grid(log, n, kappa, (n - 1) / 2, (n - 2 * kappa - 1) / 2, (n - 2 * kappa - 5) / 2, &fil3_f,
                             grid);
    return log.finish("fil3", detail::at({{"n", n}, {"kappa", kappa}}));
}

/// Unimodality of x -> ABS(Kbar_κ[x, n-κ-1-x]) over x = κ..n-κ-2 with the peak
/// at n/2 (even) or (n-1)/2 (odd). Vacuous when the peak is out of range.
inline LemmaCheck check_chains(int n, int kappa, const LemmaGrid& grid = {}) {
    detail::require(n >= 7, "chains need n >= 7");
    detail::require(kappa >= 1 && 2 * kappa <= n, "chains need 1 <= kappa <= n/2");
    const std::string label = detail::at({{"n", n}, {"kappa", kappa}});
    detail::CheckLog log;
    const int first = kappa;
    const int last = n - kappa - 2;
    const int peak = n / 2;
    if (peak < first || peak > last) return log.finish("chains", label);

    auto value = [&](int x) { return abs_kappa_xy_closed(x, n - kappa - 1 - x, kappa); };
    for (int x = first; x < last; ++x) {
        log.tuple();
        const std::string where = detail::at({{"n", n}, {"kappa", kappa}, {"x", x}});
        const double step = value(x + 1) - value(x);
        if (x < peak)
            log.positive(step, "rise toward the peak", where);
        else
            log.positive(-step, "fall after the peak", where);
        if (detail::graph_checked(n, grid))
            log.agree(detail::kxy_graph_abs(x + 1, n - kappa - 2 - x, kappa) - detail::kxy_graph_abs(x, n - kappa - 1 - x, kappa),
                      step, grid.tolerance, "step direct sum vs closed form", where);
    }
    return log.finish("chains", label);
}

/// The final theorem's case formula against the closed form and the built graph,
/// plus the comparisons used to pick between the candidate graphs.
inline LemmaCheck check_final_theorem_formulas(int n, int kappa, const LemmaGrid& grid = {}) {
    detail::require(n >= 7, "final theorem needs n >= 7");
    detail::require(kappa >= 1 && 2 * kappa <= n, "final theorem needs 1 <= kappa <= n/2");
    const std::string where = detail::at({{"n", n}, {"kappa", kappa}});
    detail::CheckLog log;
    log.tuple();
    const double formula = *bipartite_kappa_bound(n, kappa);
    const double complete = abs_multipartite_closed(PartSizes{kappa, n - kappa});
    const auto xy = bipartite_kappa_xy_maximizer(n, kappa);
    const bool graph = detail::graph_checked(n, grid);

    if (!xy) {
        log.agree(formula, complete, grid.tolerance, "case formula vs complete bipartite closed form", where);
        if (graph) {
            const Graph g = build_complete_bipartite(kappa, n - kappa);
            log.agree(abs_index(g), formula, grid.tolerance, "case formula vs direct sum", where);
        }
        if (2 * kappa == n - 2)
            log.positive(complete - abs_kappa_xy_closed(kappa, 1, kappa), "K_{κ,n-κ} over Kbar_κ[κ,1]", where);
        return log.finish("final-formulas", where);
    }

    const double extremal = abs_kappa_xy_closed(xy->x, xy->y, kappa);
    log.agree(formula, extremal, grid.tolerance, "case formula vs Kbar closed form", where);
    log.agree(extremal, abs_sixpart_closed(xy->as_sixpart(), ShapeCheck::kUnchecked), grid.tolerance,
              "Kbar closed form vs six-part closed form", where);
    if (graph) {
        const Graph g = build_kappa_xy(xy->x, xy->y, kappa);
        log.agree(abs_index(g), formula, grid.tolerance, "case formula vs direct sum", where);
        log.holds(bipartition(g).has_value(), "extremal graph is bipartite", where);
        log.holds(vertex_connectivity(g) == kappa, "extremal graph has connectivity kappa", where);
    }
    const double far_end = abs_kappa_xy_closed(n - kappa - 2, 1, kappa);
    if (xy->x != n - kappa - 2) log.positive(extremal - far_end, "peak over Kbar_κ[n-κ-2,1]", where);
    log.positive(far_end - complete, "Kbar_κ[n-κ-2,1] over K_{κ,n-κ}", where);
    return log.finish("final-formulas", where);
}

// ---------------------------------------------------------------------------
// Pendant relocation for the cut-vertex theorem. K_m carries a path of length
// ℓ >= 2 at clique vertex 0 and pendants at 1..k-1 (k < m). The relocated graph
// drops the far end of that path and hangs a pendant on clique vertex m-1.

namespace detail {

inline Graph pendant_source(int m, int length, int k) {
    Graph g = attach_path(build_complete(m), 0, length);
    for (int v = 1; v < k; ++v) g = attach_path(g, v, 1);
    return g;
}

inline Graph pendant_relocated(int m, int length, int k) {
    Graph g = attach_path(attach_path(build_complete(m), 0, length - 1), m - 1, 1);
    for (int v = 1; v < k; ++v) g = attach_path(g, v, 1);
    return g;
}

// Every clique vertex carries a path: vertex 0 a path of length `a`, vertex 1
// a path of length `b`, the rest pendants. The moved version drops the far end
// of the second path and extends the first one.
inline Graph all_paths(int m, int a, int b) {
    Graph g = attach_path(attach_path(build_complete(m), 0, a), 1, b);
    for (int v = 2; v < m; ++v) g = attach_path(g, v, 1);
    return g;
}

} // namespace detail

/// The proof's expression for ABS(G) - ABS(G'), with m = n - p clique vertices.
inline double expanded_pendant_shift(int m, int length) {
    using detail::w;
    const long long d = length == 2 ? m : 2; // degree of the path vertex two steps from the end
    return 1.0 / std::sqrt(3.0) + w(d + 2) - w(d + 1) - w(m + 1) + (m - 1) * (w(2LL * (m - 1)) - w(2LL * m - 1));
}

inline double pendant_shift_bound(int m) { return 1.0 / std::sqrt(2.0) - detail::w(m + 1); }

/// Second step: ABS(G) - ABS(G'') when a length-2 path loses its end to the longest path.
inline double expanded_path_merge(int m) {
    using detail::w;
    return w(m + 2) - w(m + 1) + 1.0 / std::sqrt(3.0) - 1.0 / std::sqrt(2.0);
}

inline LemmaCheck check_pendant_relocation(const LemmaGrid& grid = {}) {
    detail::CheckLog log;
    const int order_max = std::min(grid.n_max, kMaxOrder);
    double worst_gap = 0.0;
    std::string worst_at;
    for (int m = 3; m < order_max; ++m) {
        const std::string mwhere = detail::at({{"clique", m}});
        // The bound vanishes exactly at m = 3.
        if (m > 3)
            log.positive(-pendant_shift_bound(m), "-bound", mwhere);
        else
            log.holds(std::abs(pendant_shift_bound(m)) <= detail::kZeroBand, "bound = 0", mwhere);
        for (int length = 2; m + length <= order_max; ++length) {
            const double expr = expanded_pendant_shift(m, length);
            log.positive(pendant_shift_bound(m) - expr, "bound - expression", detail::at({{"clique", m}, {"length", length}}));
            for (int k = 1; k < m && m + length + k - 1 <= order_max; ++k) {
                log.tuple();
                const std::string where = detail::at({{"clique", m}, {"length", length}, {"paths", k}});
                const double actual = abs_index(detail::pendant_source(m, length, k)) -
                                      abs_index(detail::pendant_relocated(m, length, k));
                log.positive(-actual, "ABS(G') - ABS(G)", where);
                if (std::abs(actual - expr) > std::abs(worst_gap)) {
                    worst_gap = actual - expr;
                    worst_at = where;
                }
            }
        }
        // Every clique vertex carries a path.
        const double merge = expanded_path_merge(m);
        log.holds(merge <= std::sqrt(3.0 / 5.0) - std::sqrt(2.0) + 1.0 / std::sqrt(3.0) + detail::kZeroBand,
                  "path merge expression <= sqrt(3/5) - sqrt(2) + 1/sqrt(3)", mwhere);
        for (int a = 2; 2 * m + a <= order_max; ++a) {
            for (int b = 2; 2 * m - 2 + a + b <= order_max; ++b) {
                log.tuple();
                const std::string where = detail::at({{"clique", m}, {"first", a}, {"second", b}});
                const double actual = abs_index(detail::all_paths(m, a, b)) - abs_index(detail::all_paths(m, a + 1, b - 1));
                if (b == 2) {
                    log.agree(actual, merge, grid.tolerance, "path merge direct sum vs expression", where);
                    log.positive(-actual, "ABS(G'') - ABS(G)", where);
                } else if (a >= 3) {
                    log.agree(actual, 0.0, grid.tolerance, "path merge with long paths", where);
                }
            }
        }
    }
    log.positive(std::sqrt(2.0) - std::sqrt(3.0 / 5.0) - 1.0 / std::sqrt(3.0), "-(sqrt(3/5) - sqrt(2) + 1/sqrt(3))",
                 "constant");
    if (std::abs(worst_gap) > grid.tolerance)
        log.finding("relocation expression is not an identity: direct difference minus expression = " +
                    detail::num(worst_gap) + " at " + worst_at);
    return log.finish("pendant-shift", detail::at({{"order_max", order_max}}));
}

// ---------------------------------------------------------------------------
// Exhaustive argmax over part-size multisets by closed form.

inline LemmaCheck check_turan_argmax(int n_max, int k_max) {
    detail::require(n_max >= 2 && k_max >= 2, "turan argmax needs n_max >= 2, k_max >= 2");
    detail::CheckLog log;
    for (int n = 2; n <= n_max; ++n) {
        for (int k = 2; k <= std::min(k_max, n); ++k) {
            const PartSizes balanced = turan_parts(n, k);
            std::vector<int> sorted(balanced.sizes().begin(), balanced.sizes().end());
            std::sort(sorted.rbegin(), sorted.rend());
            const double best = abs_multipartite_closed(balanced);
            detail::for_each_partition(n, k, [&](const std::vector<int>& ts) {
                log.tuple();
                if (ts == sorted) return;
                log.positive(best - abs_multipartite_closed(PartSizes(ts)), "Turan minus other",
                             detail::at({{"n", n}, {"k", k}}) + " parts=" + detail::parts_string(ts));
            });
        }
    }
    return log.finish("turan-max", detail::at({{"n_max", n_max}, {"k_max", k_max}}));
}

inline LemmaCheck check_join_argmax(int n_max, int k_max, int r_max) {
    detail::require(n_max >= 3 && k_max >= 2 && r_max >= 1, "join argmax needs n_max >= 3, k_max >= 2, r_max >= 1");
    detail::CheckLog log;
    for (int n = 3; n <= n_max; ++n) {
        for (int k = 2; k <= k_max; ++k) {
            for (int r = 1; r <= std::min(r_max, n - k); ++r) {
                const PartSizes balanced = turan_parts(n - r, k);
                std::vector<int> sorted(balanced.sizes().begin(), balanced.sizes().end());
                std::sort(sorted.rbegin(), sorted.rend());
                const double best = abs_kr_join_closed(r, balanced);
                detail::for_each_partition(n - r, k, [&](const std::vector<int>& ts) {
                    log.tuple();
                    if (ts == sorted) return;
                    log.positive(best - abs_kr_join_closed(r, PartSizes(ts)), "balanced join minus other",
                                 detail::at({{"n", n}, {"k", k}, {"r", r}}) + " parts=" + detail::parts_string(ts));
                });
            }
        }
    }
    return log.finish("join-max", detail::at({{"n_max", n_max}, {"k_max", k_max}, {"r_max", r_max}}));
}

// ---------------------------------------------------------------------------
// Grid runners.

namespace detail {

inline std::string grid_label(const LemmaGrid& g) {
    return at({{"n_max", g.n_max}, {"k_max", g.k_max}, {"r_max", g.r_max}, {"graph_check_n_max", g.graph_check_n_max}});
}

inline LemmaCheck run_zeta(const LemmaGrid& g) {
    CheckLog log;
    for (int t = 1; t <= g.n_max; ++t) log.absorb(check_zeta_monotone(t, t + 3, 2 * g.n_max));
    return log.finish("zeta", grid_label(g));
}

inline LemmaCheck run_zeta1(const LemmaGrid& g) {
    CheckLog log;
    for (int n = 3; n <= g.n_max; ++n) log.absorb(check_zeta1_monotone(n, 1, 2 * n - 4));
    return log.finish("zeta1", grid_label(g));
}

// Visits each multiset and each pair of distinct sizes with t_i - t_j >= 2.
inline void for_each_shift(int total, int k, const std::function<void(const PartSizes&, int, int)>& fn) {
    for_each_partition(total, k, [&](const std::vector<int>& ts) {
        const PartSizes parts(ts);
        for (int i = 0; i < k; ++i) {
            if (i > 0 && ts[i] == ts[i - 1]) continue;
            for (int j = i + 1; j < k; ++j) {
                if (ts[j] == ts[j - 1] && j - 1 != i) continue;
                if (ts[i] - ts[j] >= 2) fn(parts, i, j);
            }
        }
    });
}

inline LemmaCheck run_turan_shift(const LemmaGrid& g) {
    CheckLog log;
    for (int n = 4; n <= g.n_max; ++n)
        for (int k = 2; k <= std::min(g.k_max, n); ++k)
            for_each_shift(n, k, [&](const PartSizes& parts, int i, int j) {
                log.tuple();
                const std::string where = "parts=" + parts_string(parts.sizes()) + " " + at({{"i", i}, {"j", j}});
                const double d = check_multipartite_shift(parts, i, j);
                log.positive(d, "ABS(shifted) - ABS(original)", where);
                log.agree(expanded_multipartite_shift(parts, i, j), -d, g.tolerance, "expanded difference", where);
                const double bound = multipartite_shift_bound(parts, i, j);
                log.positive(bound + d, "bound - (ABS(original) - ABS(shifted))", where);
                log.holds(bound <= kZeroBand, "bound <= 0", where);
                if (graph_checked(n, g))
                    log.agree(abs_index(build_complete_multipartite(shifted(parts, i, j))) -
                                  abs_index(build_complete_multipartite(parts)),
                              d, g.tolerance, "direct sum difference", where);
            });
    return log.finish("turan-shift", grid_label(g));
}

inline LemmaCheck run_join_shift(const LemmaGrid& g) {
    CheckLog log;
    for (int m = 4; m < g.n_max; ++m)
        for (int k = 2; k <= std::min(g.k_max, m); ++k)
            for (int r = 1; r <= std::min(g.r_max, g.n_max - m); ++r)
                for_each_shift(m, k, [&](const PartSizes& parts, int i, int j) {
                    log.tuple();
                    const std::string where =
                        at({{"r", r}}) + " parts=" + parts_string(parts.sizes()) + " " + at({{"i", i}, {"j", j}});
                    const double d = check_kr_join_shift(r, parts, i, j);
                    log.positive(d, "ABS(shifted) - ABS(original)", where);
                    log.agree(expanded_kr_join_shift(r, parts, i, j), -d, g.tolerance, "expanded difference", where);
                    const double bound = kr_join_shift_bound(r, parts, i, j);
                    log.positive(bound + d, "bound - (ABS(original) - ABS(shifted))", where);
                    log.holds(bound <= kZeroBand, "bound <= 0", where);
                    if (graph_checked(m + r, g))
                        log.agree(abs_index(build_kr_join_multipartite(r, shifted(parts, i, j))) -
                                      abs_index(build_kr_join_multipartite(r, parts)),
                                  d, g.tolerance, "direct sum difference", where);
                });
    return log.finish("join-shift", grid_label(g));
}

inline double sixpart_graph_abs(const SixPart& s) { return abs_index(build_sixpart(s, ShapeCheck::kUnchecked)); }

inline std::string sixpart_string(const SixPart& s) { return "parts=" + parts_string(s.n); }

inline LemmaCheck run_fl1(const LemmaGrid& g) {
    CheckLog log;
    const int N = g.n_max;
    for (int n1 = 1; n1 <= N; ++n1)
        for (int n3 = 2; n1 + n3 <= N; ++n3)
            for (int n5 = 0; n5 <= std::min(n1, n3) && n1 + n3 + n5 <= N; ++n5)
                for (int n4 = 1; n1 + n3 + n5 + n4 <= N; ++n4)
                    for (int n6 = 1; n1 + n3 + n5 + n4 + n6 <= N; ++n6)
                        for (int n2 = 0; n2 <= std::min(n4, n6) && n1 + n2 + n3 + n4 + n5 + n6 <= N; ++n2) {
                            const SixPart s{{n1, n2, n3, n4, n5, n6}};
                            log.tuple();
                            const std::string where = sixpart_string(s);
                            const double d = check_sixpart_merge(s);
                            log.positive(d, "merge difference", where);
                            log.agree(expanded_sixpart_merge(s), d, g.tolerance, "expanded difference", where);
                            const double b = sixpart_merge_bound(s);
                            log.holds(d >= b - g.tolerance, "difference >= bound", where);
                            if (n5 > 1) {
                                const long long n = s.total();
                                const double b2 = (n5 - 1.0) * (n4 + n6) * w(n - 1) - n5 * w(n - n4);
                                const double b3 = 2.0 * (n5 - 1) * w(n - 1) - n5 * w(n - n4);
                                log.holds(b >= b2 - g.tolerance && b2 >= b3 - g.tolerance && b3 >= -g.tolerance,
                                          "bound chain for n5 > 1", where);
                            }
                            if (graph_checked(s.total(), g))
                                log.agree(sixpart_graph_abs(fl1_target(s)) - sixpart_graph_abs(s), d, g.tolerance,
                                          "direct sum difference", where);
                        }
    return log.finish("fl1", grid_label(g));
}

inline LemmaCheck run_bl2(const LemmaGrid& g) {
    CheckLog log;
    const int N = g.n_max;
    for (int n2 = 1; n2 <= N; ++n2)
        for (int n3 = 1; n2 + n3 <= N; ++n3)
            for (int n4 = 2; n2 + n3 + n4 <= N; ++n4)
                for (int n6 = n2; n2 + n3 + n4 + n6 <= N; ++n6) {
                    log.tuple();
                    const SixPart src{{0, n2, n3, n4, 0, n6}};
                    const SixPart dst{{0, n2, n3, 1, 0, n6 + n4 - 1}};
                    const std::string where = sixpart_string(src);
                    const long long n = src.total();
                    const double d = check_bl2_merge(n2, n3, n4, n6);
                    log.positive(d, "merge difference", where);
                    const double src_expanded = n2 * (n4 - 1.0) * w(n - n3) + n2 * w(n - n3) + 1.0 * n2 * n6 * w(n) +
                                             1.0 * n3 * n6 * w(n - n4);
                    const double dst_expanded = n2 * w(n - n3) + 1.0 * n2 * n6 * w(n) + n2 * (n4 - 1.0) * w(n) +
                                             1.0 * n3 * n6 * w(n - 1) + n3 * (n4 - 1.0) * w(n - 1);
                    log.agree(src_expanded, abs_sixpart_closed(src, ShapeCheck::kUnchecked), g.tolerance,
                              "source expression", where);
                    log.agree(dst_expanded, abs_sixpart_closed(dst, ShapeCheck::kUnchecked), g.tolerance,
                              "target expression", where);
                    log.holds(d >= n3 * (n4 - 1.0) * w(n - 1) - g.tolerance, "difference >= n3(n4-1)w(n-1)", where);
                    if (graph_checked(static_cast<int>(n), g))
                        log.agree(sixpart_graph_abs(dst) - sixpart_graph_abs(src), d, g.tolerance,
                                  "direct sum difference", where);
                }
    return log.finish("bl2", grid_label(g));
}

inline LemmaCheck run_fl3(const LemmaGrid& g) {
    CheckLog log;
    const int N = g.n_max;
    for (int n1 = 2; n1 <= N; ++n1)
        for (int n5 = 1; n1 + n5 <= N; ++n5)
            for (int n3 = n5; n1 + n5 + n3 <= N; ++n3)
                for (int n6 = 1; n1 + n5 + n3 + n6 <= N; ++n6) {
                    log.tuple();
                    const SixPart src{{n1, 0, n3, 0, n5, n6}};
                    const SixPart dst{{1, 0, n3 + n1 - 1, 0, n5, n6}};
                    const std::string where = sixpart_string(src);
                    const long long n = src.total();
                    const double d = check_fl3_merge(n1, n3, n5, n6);
                    log.positive(d, "merge difference", where);
                    log.holds(d >= (n1 - 1.0) * n6 * w(n - 1) - g.tolerance, "difference >= (n1-1)n6 w(n-1)", where);
                    if (graph_checked(static_cast<int>(n), g))
                        log.agree(sixpart_graph_abs(dst) - sixpart_graph_abs(src), d, g.tolerance,
                                  "direct sum difference", where);
                }
    return log.finish("fl3", grid_label(g));
}

inline LemmaCheck run_fil1(const LemmaGrid& g) {
    CheckLog log;
    for (int kappa = 1; kappa <= g.n_max; ++kappa)
        for (int x = 1; x + kappa + 3 <= g.n_max; ++x)
            for (int y = std::max(2, x + 1 - kappa); x + y + kappa + 1 <= g.n_max; ++y) {
                log.tuple();
                const std::string where = at({{"x", x}, {"y", y}, {"kappa", kappa}});
                const long long n = x + y + kappa + 1;
                const double d = check_kappa_shift(x, y, kappa);
                log.positive(d, "shift difference", where);
                log.positive(d - (y - x - 1.0 + kappa) * w(n - 1), "difference - (y-x-1+κ)w(n-1)", where);
                log.agree(abs_kappa_xy_closed(x, y, kappa),
                          abs_sixpart_closed(KappaXY{x, y, kappa}.as_sixpart(), ShapeCheck::kUnchecked), g.tolerance,
                          "Kbar closed form vs six-part closed form", where);
                if (graph_checked(static_cast<int>(n), g))
                    log.agree(kxy_graph_abs(x + 1, y - 1, kappa) - kxy_graph_abs(x, y, kappa), d, g.tolerance,
                              "direct sum difference", where);
            }
    return log.finish("fil1", grid_label(g));
}

inline LemmaCheck run_fil2(const LemmaGrid& g) {
    CheckLog log;
    for (int n = 8; n <= g.n_max; n += 2)
        for (int kappa = 1; n - 2 * kappa - 6 >= 0; ++kappa) log.absorb(check_fil2_chain(n, kappa, g));
    return log.finish("fil2", grid_label(g));
}

inline LemmaCheck run_fil3(const LemmaGrid& g) {
    CheckLog log;
    for (int n = 7; n <= g.n_max; n += 2)
        for (int kappa = 1; n - 2 * kappa - 5 >= 0; ++kappa) log.absorb(check_fil3_chain(n, kappa, g));
    return log.finish("fil3", grid_label(g));
}

inline LemmaCheck run_chains(const LemmaGrid& g) {
    CheckLog log;
    for (int n = 7; n <= g.n_max; ++n)
        for (int kappa = 1; 2 * kappa <= n; ++kappa) log.absorb(check_chains(n, kappa, g));
    return log.finish("chains", grid_label(g));
}

inline LemmaCheck run_final(const LemmaGrid& g) {
    CheckLog log;
    for (int n = 7; n <= g.n_max; ++n)
        for (int kappa = 1; 2 * kappa <= n; ++kappa) log.absorb(check_final_theorem_formulas(n, kappa, g));
    return log.finish("final-formulas", grid_label(g));
}

} // namespace detail

inline const std::vector<std::string>& lemma_ids() {
    static const std::vector<std::string> ids = {"zeta", "zeta1", "turan-shift", "join-shift",     "fl1",
                                                 "bl2",  "fl3",   "fil1",        "fil2",           "fil3",
                                                 "chains", "final-formulas", "pendant-shift", "turan-max", "join-max"};
    return ids;
}

/// Runs one lemma check over the grid. Throws PreconditionError on an unknown id.
inline LemmaCheck run_lemma(std::string_view id, const LemmaGrid& grid = {}) {
    detail::require(grid.n_max >= 8 && grid.n_max <= kMaxOrder, "grid n_max must lie in [8, 64]");
    detail::require(grid.k_max >= 2 && grid.r_max >= 1 && grid.tolerance > 0, "grid needs k_max >= 2, r_max >= 1, tolerance > 0");
    if (id == "zeta") return detail::run_zeta(grid);
    if (id == "zeta1") return detail::run_zeta1(grid);
    if (id == "turan-shift") return detail::run_turan_shift(grid);
    if (id == "join-shift") return detail::run_join_shift(grid);
    if (id == "fl1") return detail::run_fl1(grid);
    if (id == "bl2") return detail::run_bl2(grid);
    if (id == "fl3") return detail::run_fl3(grid);
    if (id == "fil1") return detail::run_fil1(grid);
    if (id == "fil2") return detail::run_fil2(grid);
    if (id == "fil3") return detail::run_fil3(grid);
    if (id == "chains") return detail::run_chains(grid);
    if (id == "final-formulas") return detail::run_final(grid);
    if (id == "pendant-shift") return check_pendant_relocation(grid);
    if (id == "turan-max") return check_turan_argmax(grid.n_max, grid.k_max);
    if (id == "join-max") return check_join_argmax(grid.n_max, grid.k_max, grid.r_max);
    throw PreconditionError("unknown lemma id '" + std::string(id) + "'");
}

} // namespace absx
