#include "swkb/report.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#ifndef SWKB_LAB_VERSION
#define SWKB_LAB_VERSION "0.0.0"
#endif

namespace swkb {

using nlohmann::json;

const char* tool_version() { return SWKB_LAB_VERSION; }

std::string current_timestamp_iso8601() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

RunManifest RunManifest::make(const std::string& command,
                              const std::map<std::string, std::string>& overrides,
                              const json& config) {
    RunManifest m;
    m.command = command;
    m.spec_overrides = overrides;
    m.timestamp = current_timestamp_iso8601();
    m.tool_version = swkb::tool_version();
    m.config = config.dump();
    return m;
}

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

json to_json(const RunManifest& m) {
    return json{{"command", m.command},
                {"spec_overrides", m.spec_overrides},
                {"timestamp", m.timestamp},
                {"tool_version", m.tool_version},
                {"config", json::parse(m.config.empty() ? "{}" : m.config)}};
}

json to_json(const DomainInterval& d) {
    json j;
    j["left"] = std::isfinite(d.left) ? json(d.left) : json("-inf");
    j["right"] = std::isfinite(d.right) ? json(d.right) : json("inf");
    j["left_open"] = d.left_open;
    j["right_open"] = d.right_open;
    return j;
}

json to_json(const ResidualReport& r) {
    return json{{"max_abs_residual", r.max_abs_residual},
                {"rms_residual", r.rms_residual},
                {"sample_count", r.sample_count},
                {"worst_point", {{"x", r.worst_x}, {"a", r.worst_a}}}};
}

json to_json(const TurningPoints& t) {
    return json{{"x1", t.x1}, {"x2", t.x2}, {"f_at_x1", t.f_at_x1}, {"f_at_x2", t.f_at_x2}};
}

json to_json(const SwkbResult& r) {
    return json{{"n", r.n},
                {"E_n", r.energy},
                {"turning", to_json(r.turning)},
                {"integral", r.integral},
                {"residual", r.residual},
                {"converged", r.converged},
                {"refinements_used", r.refinements_used},
                {"est_error", r.est_error}};
}

json to_json(const OracleReport& r) {
    return json{{"eigenvalues", r.eigenvalues},
                {"algebraic", r.algebraic},
                {"max_rel_deviation", r.max_rel_deviation},
                {"grid_points_used", r.grid_points_used},
                {"box", {r.box_lo, r.box_hi}},
                {"refinements_used", r.refinements_used},
                {"edge_amplitude", r.edge_amplitude}};
}

json to_json(const QuadratureConfig& c) {
    return json{{"method", c.method == QuadMethod::sine_substitution_gauss
                               ? "sine_substitution_gauss"
                               : "tanh_sinh"},
                {"base_nodes", c.base_nodes},
                {"max_refinements", c.max_refinements},
                {"rel_tol", c.rel_tol},
                {"root_tol", c.root_tol}};
}

json to_json(const OracleConfig& c) {
    return json{{"grid_points", c.grid_points},
                {"box", {c.box.left, c.box.right}},
                {"eigen_count", c.eigen_count},
                {"convergence_rel_tol", c.convergence_rel_tol},
                {"max_refinements", c.max_refinements},
                {"check_box", c.check_box},
                {"use_default_box", c.use_default_box}};
}

json catalog_document() {
    json doc;
    doc["tool_version"] = tool_version();
    doc["entries"] = json::array();
    for (const SuperpotentialSpec& spec : catalog()) {
        const ValidityInfo& info = validity_info(spec.name);
        json e;
        e["name"] = spec.name;
        e["class"] = to_string(spec.si_class);
        e["a"] = spec.a;
        e["hbar"] = spec.hbar;
        e["constants"] = spec.constants;
        e["domain"] = to_json(spec.domain);
        e["perturbation_amplitude"] = spec.perturbation_amplitude;
        e["constraints"] = info.constraints;
        e["grid"] = {{"x", {info.grid_x_lo, info.grid_x_hi}},
                     {"a", {info.grid_a_lo, info.grid_a_hi}}};
        e["oracle_box"] = {info.box_lo, info.box_hi};
        e["default_n_max"] = info.default_n_max;
        doc["entries"].push_back(e);
    }
    return doc;
}

CsvWriter::CsvWriter(std::vector<std::string> columns, const RunManifest& manifest)
    : columns_(std::move(columns)) {
    std::ostringstream h;
    h << "# command: " << manifest.command << "\n";
    h << "# tool_version: " << manifest.tool_version << "\n";
    h << "# timestamp: " << manifest.timestamp << "\n";
    if (!manifest.spec_overrides.empty()) {
        h << "# overrides:";
        for (const auto& [k, v] : manifest.spec_overrides) h << " " << k << "=" << v;
        h << "\n";
    }
    h << "# config: " << manifest.config << "\n";
    header_ = h.str();
}

void CsvWriter::add_row(const std::vector<std::string>& fields) {
    std::string row;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) row += ",";
        row += csv_field(fields[i]);
    }
    rows_.push_back(std::move(row));
}

std::string CsvWriter::str() const {
    std::string out = header_;
    for (size_t i = 0; i < columns_.size(); ++i) {
        if (i) out += ",";
        out += csv_field(columns_[i]);
    }
    out += "\n";
    for (const auto& r : rows_) {
        out += r;
        out += "\n";
    }
    return out;
}

}  // namespace swkb
