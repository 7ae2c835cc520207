#include "ringlab/report.hpp"

#include <json.hpp>

namespace ringlab {

std::string emit_report(const SuiteReport& report, ReportFormat format, bool with_timings) {
    if (format == ReportFormat::Json) {
        nlohmann::json out;
        out["corpus_digest"] = report.corpus_digest;
        nlohmann::json checks = nlohmann::json::array();
        for (auto& c : report.checks) {
            nlohmann::json r;
            r["id"] = c.id;
            r["anchor"] = c.anchor;
            r["status"] = c.verdict.status;
            r["instances"] = c.verdict.instances;
            r["hypothesis_hits"] = c.verdict.hypothesis_hits;
            r["skipped"] = c.verdict.skipped;
            if (c.verdict.witness.empty())
                r["witness"] = nullptr;
            else
                r["witness"] = c.verdict.witness;
            r["millis"] = with_timings ? c.millis : 0;
            checks.push_back(std::move(r));
        }
        out["checks"] = std::move(checks);
        return out.dump(2) + "\n";
    }

    // plain-text table
    std::string out;
    out += "check            status        instances  hits     skipped\n";
    out += "---------------- ------------- ---------- -------- -------\n";
    char line[256];
    for (auto& c : report.checks) {
        snprintf(line, sizeof line, "%-16s %-13s %10llu %8llu %7llu\n", c.id.c_str(),
                 c.verdict.status.c_str(),
                 static_cast<unsigned long long>(c.verdict.instances),
                 static_cast<unsigned long long>(c.verdict.hypothesis_hits),
                 static_cast<unsigned long long>(c.verdict.skipped));
        out += line;
        if (!c.verdict.witness.empty()) out += "  witness: " + c.verdict.witness + "\n";
        if (!c.note.empty()) out += "  note: " + c.note + "\n";
        if (with_timings) out += "  millis: " + std::to_string(c.millis) + "\n";
    }
    out += "corpus digest: " + report.corpus_digest + "\n";
    return out;
}

std::string validate_report_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        return std::string("invalid json: ") + e.what();
    }
    if (!j.is_object()) return "root must be an object";
    if (!j.contains("corpus_digest") || !j["corpus_digest"].is_string())
        return "corpus_digest must be a string";
    if (!j.contains("checks") || !j["checks"].is_array()) return "checks must be an array";
    static const std::vector<std::string> keys = {
        "id",     "anchor",  "status", "instances", "hypothesis_hits",
        "skipped", "witness", "millis"};
    for (auto& r : j["checks"]) {
        if (!r.is_object()) return "check record must be an object";
        if (r.size() != keys.size()) return "check record must have exactly 8 keys";
        for (auto& k : keys)
            if (!r.contains(k)) return "check record missing key: " + k;
        if (!r["id"].is_string() || !r["anchor"].is_string() || !r["status"].is_string())
            return "id, anchor, status must be strings";
        for (const char* num : {"instances", "hypothesis_hits", "skipped", "millis"})
            if (!r[num].is_number_integer() && !r[num].is_number_unsigned())
                return std::string(num) + " must be an integer";
        if (!r["witness"].is_null() && !r["witness"].is_string())
            return "witness must be a string or null";
        std::string st = r["status"].get<std::string>();
        if (st != "proved" && st != "refuted" && st != "vacuous_pass")
            return "status must be proved | refuted | vacuous_pass";
    }
    return "";
}

}  // namespace ringlab
