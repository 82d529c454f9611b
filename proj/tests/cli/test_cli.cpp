#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "zenosim/config.hpp"
#include "zenosim/output.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
};

Result invoke(const std::string& args) {
    const std::string cmd = std::string(ZENOSIM_EXE) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    const int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("zenosim_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path config(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p;
    }

    std::string run(const fs::path& cfg, const std::string& extra = "") {
        return "run --config " + cfg.string() + " --out " + (dir_ / "out").string() + " " + extra;
    }

    fs::path dir_;
};

}  // namespace

TEST(Config, CommentsBlanksAndOrder) {
    std::istringstream in("# header\n\n  kind = propagate  # trailing\nomega1=1\r\nlength= 2\n");
    const auto c = zenosim::parse_config(in);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0], std::make_pair(std::string("kind"), std::string("propagate")));
    EXPECT_EQ(c[1].second, "1");
    EXPECT_EQ(c[2].second, "2");
}

TEST(Config, MalformedLines) {
    std::istringstream a("omega1 1\n"), b("=1\n"), d("x=1\nx=2\n");
    EXPECT_THROW(zenosim::parse_config(a), zenosim::ParseError);
    EXPECT_THROW(zenosim::parse_config(b), zenosim::ParseError);
    EXPECT_THROW(zenosim::parse_config(d), zenosim::ParseError);
}

TEST(Config, ResolveAppliesDefaultsAndRejectsUnknown) {
    const auto s = zenosim::load_scenario({{"kind", "propagate"}, {"omega1", "2"}, {"length", "3"}});
    EXPECT_EQ(s.name, "propagate");
    EXPECT_EQ(s.format, "csv");
    EXPECT_DOUBLE_EQ(s.params.num("omega1"), 2);
    EXPECT_DOUBLE_EQ(s.params.num("stride"), 0.01);
    EXPECT_EQ(s.params.choice("model"), "full");
    EXPECT_EQ(s.params.resolved()["gamma"], 0.0);
    EXPECT_THROW(zenosim::load_scenario({{"kind", "propagate"}, {"omega1", "1"},
                                         {"length", "1"}, {"omgea2", "1"}}),
                 zenosim::ValidationError);
    EXPECT_THROW(zenosim::load_scenario({{"kind", "propagate"}, {"omega1", "x"}, {"length", "1"}}),
                 zenosim::ValidationError);
    EXPECT_THROW(zenosim::load_scenario({{"kind", "nope"}}), zenosim::ValidationError);
    EXPECT_THROW(zenosim::load_scenario({{"omega1", "1"}}), zenosim::ValidationError);
}

TEST(Output, ShortestRoundTripNumbers) {
    std::mt19937_64 rng(0x5eed2a11);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (int i = 0; i < 1000; ++i) {
        const double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
        const std::string s = zenosim::format_double(x);
        double y = 0;
        std::from_chars(s.data(), s.data() + s.size(), y);
        EXPECT_EQ(x, y) << s;
    }
    EXPECT_EQ(zenosim::format_double(0.1), "0.1");
    EXPECT_EQ(zenosim::format_double(1e-10), "1e-10");
}

TEST(Output, CsvShape) {
    zenosim::Table t{"x", {"a", "b"}, {}};
    t.add({1.5, std::string("s")});
    t.add({0.25, std::string("t")});
    EXPECT_EQ(zenosim::render_csv(t), "a,b\n1.5,s\n0.25,t\n");
    EXPECT_THROW(t.add({1.0}), std::logic_error);
}

TEST_F(Cli, Fig3Schema) {
    auto r = invoke("figure fig3 --out " + dir_.string());
    ASSERT_EQ(r.code, 0) << r.out;
    for (const char* f : {"fig3_signal.csv", "fig3_harmonic.csv"}) {
        const std::string csv = slurp(dir_ / f);
        EXPECT_EQ(csv.rfind("run,z,abs,phase\n", 0), 0u) << f;
        EXPECT_NE(csv.find("\npump_off,"), std::string::npos);
        EXPECT_NE(csv.find("\npump_on,"), std::string::npos);
        EXPECT_EQ(csv.find('\r'), std::string::npos);
    }
    const auto m = nlohmann::json::parse(slurp(dir_ / "fig3_manifest.json"));
    for (const char* k : {"version", "scenario", "resolved_params", "outputs", "timestamp"})
        EXPECT_TRUE(m.contains(k)) << k;
    EXPECT_EQ(m["scenario"]["id"], "fig3");
    EXPECT_EQ(m["resolved_params"]["omega_eff"], 10.0);
    ASSERT_EQ(m["outputs"].size(), 2u);
    for (const auto& o : m["outputs"])
        EXPECT_EQ(o["sha256"], zenosim::sha256_file(dir_ / o["path"].get<std::string>()));
}

TEST_F(Cli, Fig19HasTwentyOnePoints) {
    auto r = invoke("figure fig19 --out " + dir_.string());
    ASSERT_EQ(r.code, 0) << r.out;
    const std::string csv = slurp(dir_ / "fig19.csv");
    EXPECT_EQ(csv.rfind("r_prime,reflectance\n", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 22);
}

TEST_F(Cli, PropagateRunAndResolvedParams) {
    auto cfg = config("p.cfg", "kind=propagate\nname=trace\nomega1=1\nlength=2\nstride=0.5\n");
    auto r = invoke(run(cfg));
    ASSERT_EQ(r.code, 0) << r.out;
    const std::string csv = slurp(dir_ / "out" / "trace.csv");
    EXPECT_EQ(csv.rfind("z,signal_abs,signal_phase,harmonic_abs,", 0), 0u);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 6);
    const auto m = nlohmann::json::parse(slurp(dir_ / "out" / "trace_manifest.json"));
    EXPECT_EQ(m["resolved_params"]["length"], 2.0);
    EXPECT_EQ(m["resolved_params"]["abs_tol"], 1e-10);
    EXPECT_EQ(m["outputs"][0]["path"], "trace.csv");
}

TEST_F(Cli, JsonFormat) {
    auto cfg = config("s.cfg", "kind=cavity_spectrum\npoints=5\n");
    auto r = invoke(run(cfg, "--format json"));
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(slurp(dir_ / "out" / "cavity_spectrum.json"));
    EXPECT_EQ(j["columns"][2], "transmittance");
    EXPECT_EQ(j["rows"].size(), 5u);
    EXPECT_DOUBLE_EQ(j["rows"][2][2].get<double>(), 1.0);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
    auto cfg = config("d.cfg", "kind=pulse_metrics\nomega1=1\nomega2=10\ndelta_k=0.01\n"
                               "length=3\nsigma=0.2\nm=2\n");
    ASSERT_EQ(invoke(run(cfg)).code, 0);
    const std::string a = slurp(dir_ / "out" / "pulse_metrics.csv");
    ASSERT_EQ(invoke(run(cfg)).code, 0);
    EXPECT_EQ(a, slurp(dir_ / "out" / "pulse_metrics.csv"));
    EXPECT_FALSE(a.empty());
}

TEST_F(Cli, MissingRequiredKeyIsNamed) {
    auto cfg = config("m.cfg", "kind=propagate\nlength=1\n");
    auto r = invoke(run(cfg));
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("omega1"), std::string::npos) << r.out;
}

TEST_F(Cli, UnknownKeyRejected) {
    auto cfg = config("u.cfg", "kind=propagate\nomega1=1\nlength=1\nlenght=2\n");
    auto r = invoke(run(cfg));
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("lenght"), std::string::npos) << r.out;
}

TEST_F(Cli, OutOfRangeValueIsValidationError) {
    auto cfg = config("v.cfg", "kind=cavity_spectrum\nr=1.5\n");
    EXPECT_EQ(invoke(run(cfg)).code, 3);
}

TEST_F(Cli, UnknownFigure) {
    EXPECT_EQ(invoke("figure fig99 --out " + dir_.string()).code, 3);
    auto cfg = config("f.cfg", "kind=figure\nid=fig2\n");
    EXPECT_EQ(invoke(run(cfg)).code, 3);
}

TEST_F(Cli, ParseErrors) {
    EXPECT_EQ(invoke(run(config("b.cfg", "kind propagate\n"))).code, 2);
    EXPECT_EQ(invoke(run(dir_ / "missing.cfg")).code, 2);
    EXPECT_EQ(invoke("run").code, 2);
    EXPECT_EQ(invoke("frobnicate").code, 2);
}

TEST_F(Cli, NumericalFailureNamesTheError) {
    auto cfg = config("n.cfg", "kind=sweep\nparam=gamma\nfrom=0\nto=0\npoints=1\n"
                               "max_round_trips=20\n");
    auto r = invoke(run(cfg));
    EXPECT_EQ(r.code, 4);
    EXPECT_NE(r.out.find("NonConvergence"), std::string::npos) << r.out;
    auto cfg2 = config("g.cfg", "kind=cavity_pulse\nsigma=0.1\n");
    auto r2 = invoke(run(cfg2));
    EXPECT_EQ(r2.code, 4);
    EXPECT_NE(r2.out.find("GridTooCoarse"), std::string::npos) << r2.out;
}

TEST_F(Cli, HelpDocumentsEveryKey) {
    auto r = invoke("run --help");
    ASSERT_EQ(r.code, 0);
    for (const auto& k : zenosim::common_keys()) EXPECT_NE(r.out.find(k.name), std::string::npos);
    for (const auto& s : zenosim::scenario_kinds())
        for (const auto& k : s.keys)
            EXPECT_NE(r.out.find("    " + k.name + " ("), std::string::npos) << s.kind << " " << k.name;
    auto l = invoke("list");
    EXPECT_EQ(l.code, 0);
    for (const char* id : {"fig3", "fig10", "fig19"}) EXPECT_NE(l.out.find(id), std::string::npos);
}
