#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace zenosim {

// Malformed config text: exit status 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed config with a missing, unknown or out-of-range key: exit 3.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// key=value pairs in file order.
using RawConfig = std::vector<std::pair<std::string, std::string>>;

// One pair per line, '#' starts a comment, surrounding blanks ignored.
// Duplicate keys and lines without '=' are parse errors.
RawConfig parse_config(std::istream& in, const std::string& origin = "<config>");
RawConfig read_config_file(const std::filesystem::path& path);

enum class KeyType { Number, Integer, Choice, String };

struct KeySpec {
    std::string name;
    KeyType type = KeyType::Number;
    // nullopt with required == false means the key is optional and has no value
    std::optional<std::string> default_value;
    bool required = false;
    std::string doc;
    std::vector<std::string> choices;
};

struct KindSpec {
    std::string kind;
    std::string doc;
    std::vector<KeySpec> keys;
    std::string outputs;  // files written, for --help
};

// Keys every scenario accepts besides its own.
const std::vector<KeySpec>& common_keys();
const std::vector<KindSpec>& scenario_kinds();
// Throws ValidationError for an unknown kind.
const KindSpec& kind_spec(std::string_view kind);

// Human-readable key reference for --help and `list`.
std::string describe_kinds();

class Params {
public:
    using Value = std::variant<double, long, std::string>;

    // Applies defaults, converts types and rejects unknown or missing keys.
    static Params resolve(const KindSpec& spec, const RawConfig& entries);

    double num(const std::string& key) const;
    long integer(const std::string& key) const;
    const std::string& choice(const std::string& key) const;
    bool has(const std::string& key) const { return values_.count(key) != 0; }

    // Every key with its effective value, in schema order.
    const nlohmann::ordered_json& resolved() const { return resolved_; }

private:
    const Value& get(const std::string& key) const;

    std::map<std::string, Value> values_;
    nlohmann::ordered_json resolved_ = nlohmann::ordered_json::object();
};

struct Scenario {
    std::string kind;
    std::string name;    // output file stem
    std::string out;     // output directory
    std::string format;  // csv or json
    Params params;
};

// Splits off the common keys and resolves the rest against the kind's
// schema.
Scenario load_scenario(const RawConfig& cfg);

}  // namespace zenosim
