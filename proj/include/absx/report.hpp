#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "absx/lemmas.hpp"
#include "absx/verifier.hpp"

namespace absx {

inline constexpr int kReportSchemaVersion = 1;

/// Value rounded to 12 significant digits; dumps as the short decimal.
inline double round12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

inline std::string format12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline nlohmann::ordered_json constraint_json(const ClassConstraint& c) {
    nlohmann::ordered_json j;
    if (const auto* cv = std::get_if<CutVertices>(&c)) {
        j["class"] = "cut-vertices";
        j["p"] = cv->p;
    } else if (const auto* kp = std::get_if<KPartiteness>(&c)) {
        j["class"] = "k-partiteness";
        j["k"] = kp->k;
        j["r"] = kp->r;
    } else {
        j["class"] = "bipartite-kappa";
        j["kappa"] = std::get<BipartiteConnectivity>(c).kappa;
    }
    return j;
}

inline nlohmann::ordered_json to_json(const ExtremalReport& r, bool timing = false) {
    nlohmann::ordered_json j;
    j["constraint"] = constraint_json(r.constraint);
    j["n"] = r.order;
    j["class_size"] = r.class_size;
    j["max_abs"] = r.max_abs ? nlohmann::ordered_json(round12(*r.max_abs)) : nlohmann::ordered_json(nullptr);
    auto maximizers = nlohmann::ordered_json::array();
    for (const auto& f : r.maximizers) maximizers.push_back(f.to_graph6());
    j["maximizers"] = std::move(maximizers);
    if (r.expected) {
        j["expected"] = {{"family", r.expected->family},
                         {"graph6", r.expected->form.to_graph6()},
                         {"closed_form", round12(r.expected->closed_form)}};
    } else {
        j["expected"] = nullptr;
    }
    j["verdict"] = std::string(to_string(r.verdict));
    if (r.block_structure_ok) j["block_structure_ok"] = *r.block_structure_ok;
    if (timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

inline nlohmann::ordered_json to_json(const LemmaCheck& c) {
    return {{"id", c.id},
            {"grid", c.grid},
            {"tuples_checked", c.tuples_checked},
            {"failure_count", c.failure_count},
            {"finding_count", c.finding_count},
            {"failures", c.failures},
            {"findings", c.findings},
            {"verdict", std::string(to_string(c.verdict))}};
}

inline std::string extremal_reports_json(const std::vector<ExtremalReport>& reports, bool timing = false) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["kind"] = "extremal";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, timing));
    doc["reports"] = std::move(arr);
    return doc.dump(2) + "\n";
}

inline std::string lemma_checks_json(const std::vector<LemmaCheck>& checks) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["kind"] = "lemma";
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) arr.push_back(to_json(c));
    doc["checks"] = std::move(arr);
    return doc.dump(2) + "\n";
}

inline std::string extremal_reports_csv(const std::vector<ExtremalReport>& reports) {
    std::string out = "class,n,class_size,max_abs,maximizer_count,expected_family,expected_abs,verdict\n";
    for (const auto& r : reports) {
        out += '"' + describe(r.constraint) + "\"," + std::to_string(r.order) + ',' + std::to_string(r.class_size) + ',';
        out += (r.max_abs ? format12(*r.max_abs) : "") + ',' + std::to_string(r.maximizers.size()) + ',';
        out += (r.expected ? r.expected->family : "") + ',';
        out += (r.expected ? format12(r.expected->closed_form) : "") + ',';
        out += std::string(to_string(r.verdict)) + '\n';
    }
    return out;
}

inline std::string extremal_reports_markdown(const std::vector<ExtremalReport>& reports) {
    std::string out = "| Class | n | Extremal graph | ABS | Verdict |\n|---|---|---|---|---|\n";
    for (const auto& r : reports) {
        const std::string graph = r.expected ? r.expected->family
                                             : (r.maximizers.size() == 1 ? r.maximizers.front().to_graph6() : "-");
        out += "| " + describe(r.constraint) + " | " + std::to_string(r.order) + " | " + graph + " | " +
               (r.max_abs ? format12(*r.max_abs) : "-") + " | " + std::string(to_string(r.verdict)) + " |\n";
    }
    return out;
}

inline std::string lemma_checks_csv(const std::vector<LemmaCheck>& checks) {
    std::string out = "id,tuples_checked,failure_count,finding_count,verdict\n";
    for (const auto& c : checks)
        out += c.id + ',' + std::to_string(c.tuples_checked) + ',' + std::to_string(c.failure_count) + ',' +
               std::to_string(c.finding_count) + ',' + std::string(to_string(c.verdict)) + '\n';
    return out;
}

inline std::string lemma_checks_markdown(const std::vector<LemmaCheck>& checks) {
    std::string out = "| Check | Tuples | Failures | Findings | Verdict |\n|---|---|---|---|---|\n";
    for (const auto& c : checks)
        out += "| " + c.id + " | " + std::to_string(c.tuples_checked) + " | " + std::to_string(c.failure_count) +
               " | " + std::to_string(c.finding_count) + " | " + std::string(to_string(c.verdict)) + " |\n";
    return out;
}

} // namespace absx
