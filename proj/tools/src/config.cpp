#include "zenosim/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace zenosim {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

KeySpec number(std::string name, std::string def, std::string doc) {
    return {std::move(name), KeyType::Number, std::move(def), false, std::move(doc), {}};
}

KeySpec required(std::string name, std::string doc) {
    return {std::move(name), KeyType::Number, std::nullopt, true, std::move(doc), {}};
}

KeySpec optional_number(std::string name, std::string doc) {
    return {std::move(name), KeyType::Number, std::nullopt, false, std::move(doc), {}};
}

KeySpec integer(std::string name, std::string def, std::string doc) {
    return {std::move(name), KeyType::Integer, std::move(def), false, std::move(doc), {}};
}

KeySpec choice(std::string name, std::optional<std::string> def,
               std::vector<std::string> choices, std::string doc) {
    const bool req = !def.has_value();
    return {std::move(name), KeyType::Choice, std::move(def), req, std::move(doc),
            std::move(choices)};
}

std::vector<KeySpec> join(std::initializer_list<std::vector<KeySpec>> parts) {
    std::vector<KeySpec> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<KeySpec> integrator_keys(const char* tol, bool with_stride) {
    std::vector<KeySpec> k{
        number("abs_tol", tol, "integrator absolute tolerance"),
        number("rel_tol", tol, "integrator relative tolerance"),
        number("max_step", "0.1", "largest integrator step (mm)"),
    };
    if (with_stride) k.push_back(number("stride", "0.01", "sampling interval in z (mm)"));
    return k;
}

const char* kHalfPi = "1.5707963267948966";

std::vector<KeySpec> cavity_keys(const char* r, const char* r_prime) {
    return {
        number("length", "1", "cavity length L (mm)"),
        number("r", r, "signal and pump mirror reflectivity R"),
        number("r_prime", r_prime, "SF mirror reflectivity R'"),
        number("v_c", "1e11", "intracavity speed (mm/s)"),
        number("omega_eff", "0.5", "SFG rate with the steady intracavity pump (mm^-1)"),
        number("gamma", "0", "SF amplitude loss (mm^-1)"),
        number("ks_L", kHalfPi, "one-way signal phase (rad); resonance at pi/2"),
        number("kp_L", kHalfPi, "one-way pump phase (rad)"),
        number("kf_L", kHalfPi, "one-way SF phase (rad)"),
    };
}

std::vector<KeySpec> steady_keys() {
    return {
        number("signal_amp", "1e-3", "CW signal drive relative to the pump"),
        number("tol", "1e-9", "output power settling tolerance, relative to the input"),
        integer("window", "100", "round trips the output must stay settled"),
        integer("max_round_trips", "100000", "give up (exit 4) after this many"),
    };
}

std::vector<KindSpec> build_kinds() {
    std::vector<KindSpec> k;
    k.push_back({"propagate",
                 "z-propagation of the coupled signal/harmonic/pump/DF amplitudes",
                 join({{choice("model", "full", {"full", "undepleted"},
                               "full four-wave model or constant-pump reduction"),
                        required("omega1", "SHG coupling (mm^-1)"),
                        number("omega2", "0", "DFG coupling per unit pump amplitude (mm^-1)"),
                        number("delta_k", "0", "SHG phase mismatch (mm^-1)"),
                        number("gamma", "0", "DF amplitude loss (mm^-1)"),
                        required("length", "waveguide length (mm)"),
                        number("a_s", "1", "initial signal amplitude"),
                        number("a_p", "0", "pump amplitude; Omega_eff = omega2 * a_p")},
                       integrator_keys("1e-10", true)}),
                 "<name>.csv: z, signal/harmonic/DF amplitude and unwrapped phase, "
                 "pump amplitude, photon norm"});
    k.push_back({"analytic_compare",
                 "pump-off SHG: integrator against the sech/tanh or Jacobi-sn solution",
                 join({{required("omega1", "SHG coupling (mm^-1)"),
                        number("mu0", "1", "initial signal amplitude"),
                        number("delta_k", "0", "phase mismatch (mm^-1)"),
                        required("length", "waveguide length (mm)")},
                       integrator_keys("1e-10", true)}),
                 "<name>.csv: z, numeric and closed-form signal/harmonic amplitudes"});
    k.push_back({"pulse_metrics",
                 "slice-wise pulse propagation and interferometer contrasts",
                 join({{required("omega1", "SHG coupling (mm^-1)"),
                        required("omega2", "DFG coupling per unit pump amplitude (mm^-1)"),
                        number("delta_k", "0", "phase mismatch (mm^-1)"),
                        number("gamma", "0", "DF amplitude loss (mm^-1)"),
                        required("length", "waveguide length (mm)"),
                        integer("m", "1", "super-Gaussian order, 0 for CW"),
                        number("sigma", "1", "pulse width (ns)"),
                        number("peak", "1", "signal peak amplitude"),
                        number("pump_peak", "1", "pump peak amplitude")},
                       integrator_keys("1e-10", false)}),
                 "<name>.csv: t, input, pump-off/on signal amplitude and phase, port "
                 "amplitudes"});
    k.push_back({"cavity_spectrum", "Fabry-Perot transmission and reflection spectra",
                 join({cavity_keys("0.99", "0.9"),
                       {choice("model", "off", {"off", "iqz", "steady"},
                               "pump-off formula, IQZ formula or round-trip steady state"),
                        number("center", kHalfPi, "grid center in ks_L (rad)"),
                        number("half_width", "0.05", "grid half-width (rad)"),
                        integer("points", "201", "grid points")},
                       steady_keys(), integrator_keys("1e-11", false)}),
                 "<name>.csv: ks_L, detuning, transmittance, reflectance, loss"});
    k.push_back({"cavity_pulse", "time-domain round-trip simulation of a pulse",
                 join({cavity_keys("0.95", "1"),
                       {integer("m", "1", "super-Gaussian order"),
                        number("sigma", "2", "pulse width (ns)"),
                        number("peak", "1", "signal and pump peak amplitude"),
                        choice("pump", "on", {"on", "off"}, "apply the pump pulse"),
                        optional_number("advance", "pump lead time (ns); default 1/(2 linewidth)"),
                        number("window_sigmas", "6", "drive window half-width in sigma"),
                        number("tail_lifetimes", "60", "ring-down time in cavity lifetimes")},
                       integrator_keys("1e-11", false)}),
                 "<name>.csv: t, input, reflected and transmitted powers"});
    k.push_back({"sweep", "round-trip steady state on resonance over gamma or R'",
                 join({cavity_keys("0.99", "0.9"),
                       {choice("param", std::nullopt, {"gamma", "r_prime"}, "swept key"),
                        required("from", "first value"), required("to", "last value"),
                        integer("points", "21", "number of values")},
                       steady_keys(), integrator_keys("1e-11", false)}),
                 "<name>.csv: <param>, transmittance, reflectance, loss, round_trips"});
    k.push_back({"figure", "bundled parameter set of one figure",
                 {choice("id", std::nullopt,
                         {"fig3", "fig4", "fig5", "fig6", "fig8", "fig10", "fig13", "fig15",
                          "fig16", "fig17", "fig19"},
                         "figure id")},
                 "see `zenosim list`"});
    return k;
}

std::string type_name(const KeySpec& k) {
    switch (k.type) {
        case KeyType::Number: return "number";
        case KeyType::Integer: return "integer";
        case KeyType::String: return "string";
        case KeyType::Choice: {
            std::string s;
            for (const auto& c : k.choices) s += (s.empty() ? "" : "|") + c;
            return s;
        }
    }
    return "";
}

double parse_number(const std::string& key, const std::string& v) {
    double x = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(x))
        throw ValidationError("key '" + key + "': '" + v + "' is not a finite number");
    return x;
}

long parse_integer(const std::string& key, const std::string& v) {
    long x = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw ValidationError("key '" + key + "': '" + v + "' is not an integer");
    return x;
}

}  // namespace

RawConfig parse_config(std::istream& in, const std::string& origin) {
    RawConfig out;
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        const std::string where = origin + ":" + std::to_string(lineno);
        if (eq == std::string::npos) throw ParseError(where + ": expected key=value");
        std::string key = trim(std::string_view(t).substr(0, eq));
        std::string val = trim(std::string_view(t).substr(eq + 1));
        if (key.empty()) throw ParseError(where + ": empty key");
        if (!seen.insert(key).second) throw ParseError(where + ": duplicate key '" + key + "'");
        out.emplace_back(std::move(key), std::move(val));
    }
    return out;
}

RawConfig read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read config file '" + path.string() + "'");
    return parse_config(in, path.string());
}

const std::vector<KeySpec>& common_keys() {
    static const std::vector<KeySpec> keys{
        choice("kind", std::nullopt,
               {"propagate", "analytic_compare", "pulse_metrics", "cavity_spectrum",
                "cavity_pulse", "sweep", "figure"},
               "scenario kind"),
        {"name", KeyType::String, std::nullopt, false, "output file stem (default: kind)", {}},
        {"out", KeyType::String, ".", false, "output directory (--out overrides)", {}},
        choice("format", "csv", {"csv", "json"}, "data file format (--format overrides)"),
    };
    return keys;
}

const std::vector<KindSpec>& scenario_kinds() {
    static const std::vector<KindSpec> kinds = build_kinds();
    return kinds;
}

const KindSpec& kind_spec(std::string_view kind) {
    for (const auto& k : scenario_kinds())
        if (k.kind == kind) return k;
    throw ValidationError("unknown scenario kind '" + std::string(kind) + "'");
}

std::string describe_kinds() {
    std::ostringstream os;
    auto key_line = [&](const KeySpec& k) {
        os << "    " << k.name << " (" << type_name(k) << ")";
        if (k.required)
            os << " required";
        else if (k.default_value)
            os << " default " << *k.default_value;
        else
            os << " optional";
        os << ": " << k.doc << "\n";
    };
    os << "Config keys accepted by every scenario:\n";
    for (const auto& k : common_keys()) key_line(k);
    for (const auto& s : scenario_kinds()) {
        os << "\nkind = " << s.kind << "\n  " << s.doc << "\n  writes " << s.outputs << "\n";
        for (const auto& k : s.keys) key_line(k);
    }
    return os.str();
}

Params Params::resolve(const KindSpec& spec, const RawConfig& entries) {
    Params p;
    std::map<std::string, std::string> given(entries.begin(), entries.end());
    for (const auto& [key, _] : given) {
        const bool known = std::any_of(spec.keys.begin(), spec.keys.end(),
                                       [&](const KeySpec& k) { return k.name == key; });
        if (!known)
            throw ValidationError("unknown key '" + key + "' for kind " + spec.kind);
    }
    for (const auto& k : spec.keys) {
        std::optional<std::string> raw;
        if (auto it = given.find(k.name); it != given.end())
            raw = it->second;
        else
            raw = k.default_value;
        if (!raw) {
            if (k.required)
                throw ValidationError("missing required key '" + k.name + "' for kind " +
                                      spec.kind);
            p.resolved_[k.name] = nullptr;
            continue;
        }
        switch (k.type) {
            case KeyType::Number: {
                const double x = parse_number(k.name, *raw);
                p.values_[k.name] = x;
                p.resolved_[k.name] = x;
                break;
            }
            case KeyType::Integer: {
                const long x = parse_integer(k.name, *raw);
                p.values_[k.name] = x;
                p.resolved_[k.name] = x;
                break;
            }
            case KeyType::Choice:
                if (std::find(k.choices.begin(), k.choices.end(), *raw) == k.choices.end())
                    throw ValidationError("key '" + k.name + "': '" + *raw +
                                          "' is not one of " + type_name(k));
                [[fallthrough]];
            case KeyType::String:
                p.values_[k.name] = *raw;
                p.resolved_[k.name] = *raw;
                break;
        }
    }
    return p;
}

const Params::Value& Params::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ValidationError("key '" + key + "' has no value");
    return it->second;
}

double Params::num(const std::string& key) const {
    const Value& v = get(key);
    if (const auto* l = std::get_if<long>(&v)) return static_cast<double>(*l);
    return std::get<double>(v);
}

long Params::integer(const std::string& key) const { return std::get<long>(get(key)); }

const std::string& Params::choice(const std::string& key) const {
    return std::get<std::string>(get(key));
}

Scenario load_scenario(const RawConfig& cfg) {
    KindSpec common{"common", "", common_keys(), ""};
    RawConfig mine, rest;
    for (const auto& e : cfg) {
        const bool is_common = std::any_of(common.keys.begin(), common.keys.end(),
                                           [&](const KeySpec& k) { return k.name == e.first; });
        (is_common ? mine : rest).push_back(e);
    }
    Params c = Params::resolve(common, mine);
    Scenario s{c.choice("kind"), "", c.choice("out"), c.choice("format"), {}};
    s.name = c.has("name") ? c.choice("name") : s.kind;
    if (s.name.empty() || s.name.find_first_of("/\\") != std::string::npos)
        throw ValidationError("key 'name' must be a plain file stem");
    s.params = Params::resolve(kind_spec(s.kind), rest);
    return s;
}

}  // namespace zenosim
