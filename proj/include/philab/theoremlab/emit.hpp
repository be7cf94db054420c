#pragma once

#include <string>

#include <json.hpp>

#include "philab/theoremlab/suites.hpp"

namespace philab {

inline constexpr const char* kReportSchema = "phi-lab-report/1";

inline nlohmann::json to_json(const Verdict& v) {
    return {{"value", to_string(v.value)}, {"bounded", v.bounded}, {"witness", v.witness}, {"method", v.method},
            {"citation", v.citation}};
}

inline nlohmann::json to_json(const ClassificationReport& rep) {
    nlohmann::json props = nlohmann::json::object(), routes = nlohmann::json::object();
    for (const auto& [k, v] : rep.properties) props[k] = to_json(v);
    for (const auto& [k, v] : rep.routes) {
        auto j = to_json(v);
        j["name"] = route_names().at(k);
        routes[k] = j;
    }
    return {{"ring", rep.ring}, {"family", rep.family}, {"properties", props}, {"routes", routes}, {"notes", rep.notes}};
}

inline nlohmann::json options_json(const LabOptions& o) {
    const auto& c = o.classify;
    return {{"deg_bound", c.deg_bound},
            {"pair_budget", c.pair_budget},
            {"gaussian_samples", c.gaussian_samples},
            {"divided_samples", c.divided_samples},
            {"norm_bound", c.norm_bound},
            {"generator_bound", c.generator_bound},
            {"exponent_bound", c.exponent_bound},
            {"ideal_budget", c.ideal_budget},
            {"pi_bound", o.pi_bound},
            {"annihilator_samples", o.annihilator_samples}};
}

/// Key-sorted JSON; contains nothing run-dependent besides the inputs.
inline nlohmann::json to_json(const LabReport& lab) {
    nlohmann::json rings = nlohmann::json::object(), suites = nlohmann::json::object();
    std::vector<std::string> corpus;
    for (const auto& r : lab.rings) {
        corpus.push_back(r.spec);
        nlohmann::json j = r.report ? to_json(*r.report) : nlohmann::json{{"ring", r.label}};
        j["spec"] = r.spec;
        if (r.error_code) j["error"] = r.error;
        rings[r.spec] = j;
    }
    for (const auto& s : lab.suites) {
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : s.entries)
            entries.push_back({{"ring", e.ring}, {"check", e.check}, {"status", to_string(e.status)}, {"detail", e.detail}});
        suites[s.id] = {{"status", to_string(s.status())},
                        {"citation", suite_citations().at(s.id)},
                        {"counts",
                         {{"pass", s.count(Status::Pass)},
                          {"fail", s.count(Status::Fail)},
                          {"inconclusive", s.count(Status::Inconclusive)},
                          {"skip", s.count(Status::Skip)}}},
                        {"entries", entries}};
    }
    return {{"schema", kReportSchema},
            {"seed", lab.options.classify.seed},
            {"budgets", options_json(lab.options)},
            {"corpus", corpus},
            {"rings", rings},
            {"suites", suites},
            {"summary",
             {{"suites_total", lab.suites.size()}, {"suites_passed", lab.passed()}, {"exit_code", lab.exit_code()}}}};
}

namespace detail {

inline std::string md_cell(std::string s) {
    for (std::size_t i = 0; (i = s.find('|', i)) != std::string::npos; i += 2) s.replace(i, 1, "\\|");
    return s;
}

inline std::string md_verdict(const Verdict& v) {
    std::string s = to_string(v.value);
    if (v.value == Truth::True && v.bounded) s += " (bounded)";
    return s;
}

}  // namespace detail

inline std::string to_markdown(const ClassificationReport& rep) {
    std::string out = "### " + detail::md_cell(rep.ring) + "\n\n| property | verdict | method | witness |\n|---|---|---|---|\n";
    for (const auto& [k, v] : rep.properties)
        out += "| " + k + " | " + detail::md_verdict(v) + " | " + detail::md_cell(v.method) + " | " + detail::md_cell(v.witness) + " |\n";
    if (!rep.routes.empty()) {
        out += "\n| route | verdict | method | witness |\n|---|---|---|---|\n";
        for (const auto& [k, v] : rep.routes)
            out += "| " + k + " " + route_names().at(k) + " | " + detail::md_verdict(v) + " | " + detail::md_cell(v.method) +
                   " | " + detail::md_cell(v.witness) + " |\n";
    }
    for (const auto& n : rep.notes) out += "\n- " + n;
    return out + "\n";
}

inline std::string to_markdown(const LabReport& lab) {
    std::string out = "# phi-lab report\n\nschema: " + std::string(kReportSchema) +
                      "  \nseed: " + std::to_string(lab.options.classify.seed) + "  \nrings: " + std::to_string(lab.rings.size()) +
                      "  \nsuites: " + std::to_string(lab.passed()) + "/" + std::to_string(lab.suites.size()) + " pass\n\n";
    out += "| suite | status | pass | fail | inconclusive | skip |\n|---|---|---|---|---|---|\n";
    for (const auto& s : lab.suites)
        out += "| " + s.id + " | " + to_string(s.status()) + " | " + std::to_string(s.count(Status::Pass)) + " | " +
               std::to_string(s.count(Status::Fail)) + " | " + std::to_string(s.count(Status::Inconclusive)) + " | " +
               std::to_string(s.count(Status::Skip)) + " |\n";
    for (const auto& s : lab.suites) {
        out += "\n## " + s.id + ": " + suite_citations().at(s.id) + "\n\n| ring | check | status | detail |\n|---|---|---|---|\n";
        for (const auto& e : s.entries)
            if (e.status != Status::Skip)
                out += "| " + detail::md_cell(e.ring) + " | " + e.check + " | " + to_string(e.status) + " | " + detail::md_cell(e.detail) + " |\n";
    }
    out += "\n## rings\n\n";
    for (const auto& r : lab.rings) {
        if (r.report) out += to_markdown(*r.report) + "\n";
        else out += "### " + detail::md_cell(r.spec) + "\n\nerror: " + r.error + "\n\n";
    }
    return out;
}

}  // namespace philab
