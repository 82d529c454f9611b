#include "zenosim/output.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ctime>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace zenosim {

void Table::add(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::logic_error("row width does not match the header of " + stem);
    rows.push_back(std::move(row));
}

std::string format_double(double x) {
    std::array<char, 32> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf.data(), ptr);
}

std::string render_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            if (const double* d = std::get_if<double>(&row[i]))
                out += format_double(*d);
            else
                out += std::get<std::string>(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const Table& t) {
    nlohmann::ordered_json j;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& c : row) {
            if (const double* d = std::get_if<double>(&c))
                r.push_back(*d);
            else
                r.push_back(std::get<std::string>(c));
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j.dump() + "\n";
}

std::string sha256_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                                &EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 unavailable");
    std::array<char, 1 << 16> buf;
    while (in) {
        in.read(buf.data(), buf.size());
        if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), in.gcount());
    }
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), md, &len);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace {

nlohmann::ordered_json number_or_null(double x) {
    return std::isfinite(x) ? nlohmann::ordered_json(x) : nlohmann::ordered_json(nullptr);
}

void write_file(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + p.string());
}

}  // namespace

void RunOutput::compare(const std::string& quantity, double value, double reference,
                        double tolerance, const std::string& note) {
    nlohmann::ordered_json c;
    c["quantity"] = quantity;
    c["value"] = number_or_null(value);
    c["reference"] = reference;
    c["tolerance"] = tolerance;
    c["within_tolerance"] = std::abs(value - reference) <= tolerance;
    if (!note.empty()) c["note"] = note;
    comparisons.push_back(std::move(c));
}

void RunOutput::limit(const std::string& quantity, double value, const std::string& relation,
                      double bound, const std::string& note) {
    if (relation != "<" && relation != ">") throw std::logic_error("relation must be < or >");
    nlohmann::ordered_json c;
    c["quantity"] = quantity;
    c["value"] = number_or_null(value);
    c["relation"] = relation;
    c["reference"] = bound;
    c["within_tolerance"] = relation == "<" ? value < bound : value > bound;
    if (!note.empty()) c["note"] = note;
    comparisons.push_back(std::move(c));
}

WrittenFiles write_outputs(const RunOutput& run, const std::filesystem::path& dir,
                           const std::string& format, const nlohmann::ordered_json& scenario,
                           const std::string& name) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

    WrittenFiles w;
    auto outputs = nlohmann::ordered_json::array();
    for (const auto& t : run.tables) {
        const std::string file = t.stem + (format == "json" ? ".json" : ".csv");
        const auto path = dir / file;
        write_file(path, format == "json" ? render_json(t) : render_csv(t));
        outputs.push_back({{"path", file}, {"sha256", sha256_file(path)}});
        w.data.push_back(path);
    }

    nlohmann::ordered_json m;
    m["version"] = ZENOSIM_VERSION;
    m["scenario"] = scenario;
    m["resolved_params"] = run.resolved_params;
    m["outputs"] = std::move(outputs);
    m["timestamp"] = utc_timestamp();
    m["summary"] = run.summary;
    m["comparisons"] = run.comparisons;
    auto disc = nlohmann::ordered_json::array();
    for (const auto& c : run.comparisons)
        if (!c["within_tolerance"].get<bool>()) disc.push_back(c);
    m["discrepancies"] = std::move(disc);

    w.manifest = dir / (name + "_manifest.json");
    write_file(w.manifest, m.dump(2) + "\n");
    return w;
}

}  // namespace zenosim
