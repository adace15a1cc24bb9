#include "dwpc/report.hpp"

#include "json.hpp"

namespace dwpc {

using nlohmann::ordered_json;

std::string report_to_json(const SuiteReport& report) {
    ordered_json j;
    j["schema_version"] = 1;
    j["seed"] = report.seed;
    j["samples"] = report.samples;
    ordered_json rows = ordered_json::array();
    int pass = 0, fail = 0, errata = 0, info = 0;
    for (const auto& r : report.rows) {
        ordered_json row;
        row["identity"] = r.identity;
        row["manifold"] = r.manifold;
        row["points"] = r.points;
        row["seed"] = r.seed;
        row["max_residual"] = r.residual;
        row["tolerance"] = r.tolerance;
        row["verdict"] = r.verdict;
        if (!r.convention.empty()) row["convention"] = r.convention;
        if (!r.note.empty()) row["note"] = r.note;
        if (r.paper_residual >= 0.0) row["displayed_form_residual"] = r.paper_residual;
        rows.push_back(std::move(row));
        if (r.verdict == "pass" || r.verdict == "einstein" || r.verdict == "not-einstein")
            ++pass;
        else if (r.verdict == "errata-confirmed")
            ++errata;
        else if (r.verdict == "fail" || r.verdict == "oracle-invalid" ||
                 r.verdict == "convention-mismatch")
            ++fail;
        else
            ++info;
    }
    j["results"] = std::move(rows);
    j["summary"] = {{"pass", pass}, {"errata_confirmed", errata}, {"fail", fail}, {"info", info}};
    return j.dump(2) + "\n";
}

std::string SuiteReport::to_json() const { return report_to_json(*this); }

}  // namespace dwpc
