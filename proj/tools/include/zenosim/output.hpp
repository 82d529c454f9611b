#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace zenosim {

using Cell = std::variant<double, std::string>;

struct Table {
    std::string stem;  // file name without extension
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
};

// Shortest decimal that reads back to the same double.
std::string format_double(double x);

// CSV: header row, comma separated, LF endings. JSON: {"columns", "rows"}.
std::string render_csv(const Table& t);
std::string render_json(const Table& t);

// Lower-case hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& p);

// Current UTC time as 2026-01-31T12:00:00Z.
std::string utc_timestamp();

// Result of one scenario or figure before it touches the disk.
struct RunOutput {
    std::vector<Table> tables;
    nlohmann::ordered_json resolved_params = nlohmann::ordered_json::object();
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();
    // reference comparisons; entries outside tolerance are repeated in
    // the manifest's discrepancies list
    nlohmann::ordered_json comparisons = nlohmann::ordered_json::array();

    // |value - reference| <= tolerance
    void compare(const std::string& quantity, double value, double reference,
                 double tolerance, const std::string& note = {});
    // value < bound ("<") or value > bound (">")
    void limit(const std::string& quantity, double value, const std::string& relation,
               double bound, const std::string& note = {});
};

struct WrittenFiles {
    std::vector<std::filesystem::path> data;
    std::filesystem::path manifest;
};

// Writes every table as <stem>.csv or <stem>.json, then <name>_manifest.json
// with version, scenario, resolved parameters, output checksums and a
// timestamp. Data files never contain the timestamp.
WrittenFiles write_outputs(const RunOutput& run, const std::filesystem::path& dir,
                           const std::string& format, const nlohmann::ordered_json& scenario,
                           const std::string& name);

}  // namespace zenosim
