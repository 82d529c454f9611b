#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zenosim/config.hpp"
#include "zenosim/output.hpp"
#include "zenosim/scenarios.hpp"
#include "zenoswitch/error.hpp"

namespace {

enum Exit { kOk = 0, kIo = 1, kParse = 2, kValidation = 3, kNumerical = 4 };

void report(const zenosim::WrittenFiles& w) {
    for (const auto& p : w.data) std::cout << p.string() << "\n";
    std::cout << w.manifest.string() << "\n";
}

std::string figure_list() {
    std::string s = "Figure ids:\n";
    for (const auto& f : zenosim::figures()) s += "  " + f.id + "  " + f.description + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zenosim: quantum Zeno switch simulations"};
    app.require_subcommand(1);
    app.footer("Exit status: 0 ok, 1 I/O failure, 2 config parse error, 3 validation error, "
               "4 numerical failure.");

    std::string config, out, format;

    auto* run = app.add_subcommand("run", "Run a scenario described by a key=value config");
    run->add_option("--config", config, "Config file")->required();
    run->add_option("--out", out, "Output directory (overrides the config's out key)");
    run->add_option("--format", format, "Data file format (overrides the config's format key)")
        ->check(CLI::IsMember({"csv", "json"}));
    run->footer(zenosim::describe_kinds());

    std::string figure_id;
    auto* fig = app.add_subcommand("figure", "Write the dataset of one bundled figure");
    fig->add_option("id", figure_id, "Figure id")->required();
    fig->add_option("--out", out, "Output directory")->default_val(".");
    fig->add_option("--format", format, "Data file format")
        ->default_val("csv")
        ->check(CLI::IsMember({"csv", "json"}));
    fig->footer(figure_list());

    auto* list = app.add_subcommand("list", "List scenario kinds, their keys and figure ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*list) {
            std::cout << zenosim::describe_kinds() << "\n" << figure_list();
            return kOk;
        }
        if (*fig) {
            auto result = zenosim::run_figure(figure_id);
            nlohmann::ordered_json scen{{"kind", "figure"}, {"id", figure_id}};
            report(zenosim::write_outputs(result, out, format, scen, figure_id));
            return kOk;
        }
        const auto s = zenosim::load_scenario(zenosim::read_config_file(config));
        auto result = zenosim::run_scenario(s);
        nlohmann::ordered_json scen{{"kind", s.kind}, {"name", s.name}};
        if (s.kind == "figure") scen["id"] = s.params.choice("id");
        const std::string dir = out.empty() ? s.out : out;
        const std::string fmt = format.empty() ? s.format : format;
        const std::string stem = s.kind == "figure" ? s.params.choice("id") : s.name;
        report(zenosim::write_outputs(result, dir, fmt, scen, stem));
        return kOk;
    } catch (const zenosim::ParseError& e) {
        std::cerr << "config parse error: " << e.what() << "\n";
        return kParse;
    } catch (const zenosim::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const zeno::Error& e) {
        std::cerr << "numerical error: " << e.name() << ": " << e.what() << "\n";
        return kNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
}
