// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "absx/absx.hpp"
#include "oracles.hpp"

using namespace absx;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

bool rel_close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

void for_each_multiset(int n, int k, int min_part, std::vector<int>& cur, const std::function<void(const PartSizes&)>& fn) {
    if (k == 0) {
        if (n == 0) fn(PartSizes(cur));
        return;
    }
    for (int t = min_part; t * k <= n; ++t) {
        cur.push_back(t);
        for_each_multiset(n - t, k - 1, t, cur, fn);
        cur.pop_back();
    }
}

void for_each_multiset(int n, int k, const std::function<void(const PartSizes&)>& fn) {
    std::vector<int> cur;
    for_each_multiset(n, k, 1, cur, fn);
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// Definition oracle at n <= 7 plus an independent derivation of the class count.
Outcome ac1() {
    Outcome o;
    std::size_t checked = 0;
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate(EnumSpec{n, EnumMode::kConnected, std::nullopt})) {
            ++checked;
            o.require(rel_close(abs_index(g), oracle::naive_abs(g), 1e-12), "abs mismatch at " + to_graph6(g));
        }
    std::set<CanonicalForm> swept;
    std::uint64_t labeled = 0;
    oracle::for_each_connected_labeled(7, [&](const Graph& g) {
        ++labeled;
        swept.insert(canonical_form(g));
    });
    o.require(swept.size() == 853, "labeled sweep found " + std::to_string(swept.size()) + " classes");
    const auto classes = enumerate_classes(EnumSpec{7, EnumMode::kConnected, std::nullopt});
    o.require(classes.size() == 853, "enumerator yields " + std::to_string(classes.size()));
    std::uint64_t orbit_sum = 0;
    for (const auto& c : classes) orbit_sum += oracle::factorial(7) / oracle::automorphism_count(c.graph);
    o.require(orbit_sum == labeled, "orbit sum differs from labeled count");
    if (o.pass)
        o.detail = std::to_string(checked) + " classes n<=7 agree with naive sum; sweep of " + std::to_string(labeled) +
                   " labeled graphs gives 853";
    return o;
}

Outcome ac2() {
    Outcome o;
    std::size_t tuples = 0;
    auto check = [&](double closed, const Graph& g, const std::string& what) {
        ++tuples;
        o.require(rel_close(closed, abs_index(g), 1e-12), what);
    };
    for (int n = 3; n <= 12; ++n)
        for (int p = 0; p <= n - 2; ++p) check(abs_knp_closed(n, p), build_knp(n, p), "K_n^p");
    for (int n = 2; n <= 14; ++n)
        for (int k = 2; k <= std::min(n, 5); ++k)
            for_each_multiset(n, k, [&](const PartSizes& parts) {
                check(abs_multipartite_closed(parts), build_complete_multipartite(parts), "multipartite");
            });
    for (int n = 3; n <= 12; ++n)
        for (int r = 1; r <= n - 2; ++r)
            for (int k = 2; k <= n - r; ++k)
                for_each_multiset(n - r, k, [&](const PartSizes& parts) {
                    check(abs_kr_join_closed(r, parts), build_kr_join_multipartite(r, parts), "K_r join");
                });
    std::array<int, 6> s{};
    std::function<void(int, int)> six = [&](int idx, int left) {
        if (idx == 6) {
            const SixPart sp{s};
            if (classify_sixpart(sp)) check(abs_sixpart_closed(sp), build_sixpart(sp), "six-part");
            return;
        }
        for (int v = 0; v <= left; ++v) {
            s[idx] = v;
            six(idx + 1, left - v);
        }
    };
    for (int n = 2; n <= 14; ++n) six(0, n);
    for (int x = 1; x <= 12; ++x)
        for (int y = 1; x + y <= 12; ++y)
            for (int kappa = 1; x + y + kappa + 1 <= 14; ++kappa)
                check(abs_kappa_xy_closed(x, y, kappa), build_kappa_xy(x, y, kappa), "Kbar_kappa[x,y]");
    if (o.pass) o.detail = std::to_string(tuples) + " family members agree to 1e-12 relative";
    return o;
}

Outcome verify_all(const std::vector<std::pair<int, std::vector<ClassConstraint>>>& runs, bool check_bound) {
    Outcome o;
    std::size_t confirmed = 0;
    for (const auto& [n, cs] : runs)
        for (const auto& r : verify_extremal_batch(cs, n)) {
            const std::string where = describe(r.constraint) + " n=" + std::to_string(n);
            o.require(r.verdict == Verdict::kConfirmed, where + " is " + std::string(to_string(r.verdict)));
            if (r.verdict != Verdict::kConfirmed) continue;
            ++confirmed;
            if (check_bound) {
                const auto bound = bipartite_kappa_bound(n, std::get<BipartiteConnectivity>(r.constraint).kappa);
                o.require(bound && std::abs(*r.max_abs - *bound) <= 1e-9, where + " misses the case formula");
            }
            if (r.block_structure_ok) o.require(*r.block_structure_ok, where + " maximizer lacks clique blocks");
        }
    if (o.pass) o.detail = std::to_string(confirmed) + " classes confirmed with a unique maximizer";
    return o;
}

Outcome ac3() {
    std::vector<std::pair<int, std::vector<ClassConstraint>>> runs;
    for (int n = 5; n <= 8; ++n) {
        std::vector<ClassConstraint> cs;
        for (int p = 0; p <= n - 2; ++p) cs.push_back(CutVertices{p});
        runs.emplace_back(n, cs);
    }
    return verify_all(runs, false);
}

Outcome from_lemma(const LemmaCheck& c) {
    Outcome o;
    o.require(c.verdict == LemmaVerdict::kPass, c.id + " verdict " + std::string(to_string(c.verdict)) +
                                                    (c.failures.empty() ? "" : ": " + c.failures.front()));
    o.require(c.finding_count == 0, c.id + " has ties: " + (c.findings.empty() ? "" : c.findings.front()));
    if (o.pass) o.detail = std::to_string(c.tuples_checked) + " multisets, balanced one strictly best";
    return o;
}

Outcome ac4() { return from_lemma(check_turan_argmax(30, 6)); }

Outcome ac5() {
    Outcome o = from_lemma(check_join_argmax(20, 4, 5));
    const std::string a = o.detail;
    std::vector<std::pair<int, std::vector<ClassConstraint>>> runs;
    for (int n = 6; n <= 7; ++n) runs.push_back({n, {KPartiteness{2, 1}, KPartiteness{2, 2}}});
    const Outcome b = verify_all(runs, false);
    o.require(b.pass, b.detail);
    if (o.pass) o.detail = "(a) " + a + "; (b) " + b.detail;
    return o;
}

Outcome ac6() {
    std::vector<std::pair<int, std::vector<ClassConstraint>>> runs;
    for (int n = 7; n <= 8; ++n) {
        std::vector<ClassConstraint> cs;
        for (int kappa = 1; 2 * kappa <= n - 1 || (n % 2 == 0 && 2 * kappa == n); ++kappa)
            cs.push_back(BipartiteConnectivity{kappa});
        runs.emplace_back(n, cs);
    }
    return verify_all(runs, true);
}

Outcome ac7() {
    Outcome o;
    std::size_t tuples = 0;
    std::size_t findings = 0;
    std::string finding_text;
    for (const auto& id : lemma_ids()) {
        const auto c = run_lemma(id);
        tuples += c.tuples_checked;
        o.require(c.failure_count == 0, id + ": " + (c.failures.empty() ? "failed" : c.failures.front()));
        o.require(c.verdict == LemmaVerdict::kPass, id + " is " + std::string(to_string(c.verdict)));
        findings += c.finding_count;
        if (!c.findings.empty() && finding_text.empty()) finding_text = id + ": " + c.findings.front();
    }
    if (o.pass)
        o.detail = std::to_string(lemma_ids().size()) + " checks, " + std::to_string(tuples) + " tuples, 0 failures, " +
                   std::to_string(findings) + " finding(s)" + (finding_text.empty() ? "" : " [" + finding_text + "]");
    return o;
}

Outcome ac8() {
    Outcome o;
    std::size_t pairs = 0;
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate(EnumSpec{n, EnumMode::kConnected, std::nullopt})) {
            const double base = abs_index(g);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!g.has_edge(u, v)) {
                        ++pairs;
                        o.require(abs_index(add_edge(g, u, v)) > base, "no increase on " + to_graph6(g));
                    }
        }
    if (o.pass) o.detail = std::to_string(pairs) + " edge additions all increase ABS";
    return o;
}

std::string capture(const std::string& args) {
    const std::string cmd = std::string(ABSX_CLI_PATH) + " " + args;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int raw = pclose(pipe);
    if (!WIFEXITED(raw) || WEXITSTATUS(raw) != 0) out = "exit " + std::to_string(raw) + "\n" + out;
    return out;
}

Outcome ac9() {
    Outcome o;
    const std::vector<std::string> configs = {"verify cut-vertices --n-min 5 --n-max 8 --all-p",
                                              "verify k-partiteness --n 8 --k 2 --all-r",
                                              "verify bipartite-kappa --n-min 7 --n-max 8 --all-kappa"};
    std::size_t bytes = 0;
    for (const auto& cfg : configs) {
        const std::string one = capture(cfg + " --workers 1");
        const std::string four = capture(cfg + " --workers 4");
        const std::string again = capture(cfg + " --workers 4");
        o.require(one.rfind("{", 0) == 0, cfg + " did not produce a report");
        o.require(one == four && four == again, cfg + " differs across runs");
        bytes += one.size();
    }
    if (o.pass) o.detail = std::to_string(configs.size()) + " configs byte-identical for 1 and 4 workers (" +
                           std::to_string(bytes) + " bytes)";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
        {"AC1 definition oracle", ac1},       {"AC2 closed forms", ac2},          {"AC3 cut-vertex maximizers", ac3},
        {"AC4 Turan argmax", ac4},            {"AC5 join maximizers", ac5},       {"AC6 bipartite connectivity", ac6},
        {"AC7 lemma grid suite", ac7},        {"AC8 edge addition", ac8},         {"AC9 determinism", ac9},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail = std::string("exception: ") + ex.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s: %s (%ss)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), fmt("%.2f", secs).c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
