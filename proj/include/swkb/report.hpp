#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "swkb/oracle.hpp"
#include "swkb/shape_invariance.hpp"
#include "swkb/superpotential.hpp"
#include "swkb/swkb_engine.hpp"

namespace swkb {

/// Everything needed to reproduce a run bit-identically given the same
/// build: the command, the overrides, the config snapshot. The timestamp is
/// informational and lives only in report headers.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> spec_overrides;
    std::string timestamp;     // ISO-8601
    std::string tool_version;
    std::string config;        // QuadratureConfig / OracleConfig snapshot, serialized

    static RunManifest make(const std::string& command,
                            const std::map<std::string, std::string>& overrides,
                            const nlohmann::json& config);
};

nlohmann::json to_json(const RunManifest& m);
nlohmann::json to_json(const DomainInterval& d);
nlohmann::json to_json(const ResidualReport& r);
nlohmann::json to_json(const TurningPoints& t);
nlohmann::json to_json(const SwkbResult& r);
nlohmann::json to_json(const OracleReport& r);
nlohmann::json to_json(const QuadratureConfig& c);
nlohmann::json to_json(const OracleConfig& c);

/// Machine-readable catalog document: entries with class, constants, domain,
/// validity constraints, default grids and boxes.
nlohmann::json catalog_document();

/// Formats a real with 17 significant digits, '.' decimal separator.
std::string fmt_real(double v);

/// RFC-4180 field quoting (quotes only when the field needs it).
std::string csv_field(const std::string& s);

/// A CSV document: '#'-prefixed manifest header lines (timestamp lives
/// here), then the column header and rows. The body below the header is
/// byte-identical across reruns of the same manifest.
class CsvWriter {
  public:
    CsvWriter(std::vector<std::string> columns, const RunManifest& manifest);
    void add_row(const std::vector<std::string>& fields);
    std::string str() const;

  private:
    std::vector<std::string> columns_;
    std::string header_;
    std::vector<std::string> rows_;
};

std::string current_timestamp_iso8601();
const char* tool_version();

}  // namespace swkb
