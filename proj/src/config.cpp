#include "halfline/config.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace halfline {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& s) {
    const auto pos = s.find('#');
    return pos == std::string::npos ? s : s.substr(0, pos);
}

}  // namespace

RunConfig RunConfig::parse_string(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(line_no) +
                                  ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(line_no) + ": empty key");
        if (section.empty())
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": key '" + key + "' outside any [section]");
        cfg.sections_[section][key] = Entry{value, line_no};
    }
    return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str(), path);
}

bool RunConfig::has(const std::string& section, const std::string& key) const {
    const auto s = sections_.find(section);
    return s != sections_.end() && s->second.count(key) > 0;
}

std::string RunConfig::get_string(const std::string& section, const std::string& key,
                                  std::optional<std::string> fallback) const {
    const auto s = sections_.find(section);
    if (s != sections_.end()) {
        const auto k = s->second.find(key);
        if (k != s->second.end()) return k->second.value;
    }
    if (fallback) return *fallback;
    throw ConfigError(origin_ + ": missing required key [" + section + "] " + key);
}

double RunConfig::get_double(const std::string& section, const std::string& key,
                             std::optional<double> fallback) const {
    if (!has(section, key)) {
        if (fallback) return *fallback;
        throw ConfigError(origin_ + ": missing required key [" + section + "] " + key);
    }
    const auto& e = sections_.at(section).at(key);
    try {
        std::size_t used = 0;
        const double v = std::stod(e.value, &used);
        if (used != e.value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": [" + section + "] " + key +
                          " = '" + e.value + "' is not a number");
    }
}

long RunConfig::get_int(const std::string& section, const std::string& key,
                        std::optional<long> fallback) const {
    if (!has(section, key)) {
        if (fallback) return *fallback;
        throw ConfigError(origin_ + ": missing required key [" + section + "] " + key);
    }
    const auto& e = sections_.at(section).at(key);
    try {
        std::size_t used = 0;
        const long v = std::stol(e.value, &used);
        if (used != e.value.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": [" + section + "] " + key +
                          " = '" + e.value + "' is not an integer");
    }
}

bool RunConfig::get_bool(const std::string& section, const std::string& key, bool fallback) const {
    if (!has(section, key)) return fallback;
    const auto& e = sections_.at(section).at(key);
    std::string v = e.value;
    std::transform(v.begin(), v.end(), v.begin(), ::tolower);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": [" + section + "] " + key +
                      " = '" + e.value + "' is not a boolean");
}

std::vector<double> RunConfig::get_double_list(const std::string& section,
                                               const std::string& key) const {
    std::vector<double> out;
    if (!has(section, key)) return out;
    const auto& e = sections_.at(section).at(key);
    std::istringstream in(e.value);
    std::string tok;
    while (in >> tok) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw ConfigError(origin_ + ":" + std::to_string(e.line) + ": [" + section + "] " +
                              key + ": '" + tok + "' is not a number");
        }
    }
    return out;
}

void RunConfig::set(const std::string& section, const std::string& key, const std::string& value) {
    sections_[section][key] = Entry{value, 0};
}

std::string RunConfig::canonical() const {
    std::ostringstream out;
    for (const auto& [sec, kv] : sections_)
        for (const auto& [key, e] : kv) out << sec << "." << key << " = " << e.value << "\n";
    return out.str();
}

std::string RunConfig::config_hash() const {
    const std::string c = canonical();
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char ch : c) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

GridPtr RunConfig::build_grid() const {
    const double L = get_double("grid", "L", 80.0);
    const long N = get_int("grid", "N", 4095);
    if (N < 8) throw ConfigError("[grid] N must be at least 8");
    return make_grid(L, static_cast<std::size_t>(N));
}

ModelParams RunConfig::build_model(GridPtr g) const {
    ModelParams mp;
    mp.lambda = cplx(get_double("model", "lambda_re", 0.0), get_double("model", "lambda_im", 0.0));
    mp.p = get_double("model", "p", 3.0);
    mp.alpha = get_double("model", "alpha", -1.0);
    const std::string fam = get_string("initial", "family", std::string("gaussian-odd"));
    mp.u0 = make_initial_datum(std::move(g), fam, get_double("initial", "epsilon", 1e-2),
                               get_double("initial", "width", 1.0),
                               get_double("initial", "center", 3.0));
    mp.validate();
    return mp;
}

BoundaryData RunConfig::build_boundary() const {
    const std::string fam = get_string("boundary", "family", std::string("zero"));
    if (fam == "zero") return BoundaryData::zero();
    if (fam == "theorem4")
        return BoundaryData::theorem4(get_double("boundary", "epsilon", 1e-2),
                                      get_double("boundary", "gamma", 0.25));
    if (fam == "theorem7")
        return BoundaryData::theorem7(get_double("boundary", "epsilon", 1e-2),
                                      get_double("boundary", "beta", 0.85));
    if (fam == "theorem8")
        return BoundaryData::theorem8(get_double("boundary", "amplitude", 1e-2),
                                      get_double("boundary", "beta", 0.85),
                                      get_double("boundary", "remainder", 0.0),
                                      get_double("boundary", "gamma", 1.0));
    if (fam == "single-frequency")
        return BoundaryData::single_frequency(get_double("boundary", "omega", 1.0));
    throw ConfigError("unknown boundary family '" + fam + "'");
}

std::string RunConfig::output_directory() const {
    std::string dir = get_string("output", "directory", std::string("out"));
    const char* root = std::getenv("HALFLINE_OUT_ROOT");
    if (root && !dir.empty() && dir.front() != '/') dir = std::string(root) + "/" + dir;
    return dir;
}

void RunConfig::validate() const {
    build_grid();
    build_boundary();
    const double T = this->T();
    const double dt = this->dt();
    if (!(T > 0.0) || !(dt > 0.0)) throw ConfigError("[time] T and dt must be positive");
    if (T / dt > 1e7) throw ConfigError("[time] T/dt exceeds the 1e7 step budget");
}

namespace {

const std::map<std::string, std::string>& preset_table() {
    static const std::map<std::string, std::string> presets = {
        {"linear-only", R"(
[grid]
L = 40
N = 1023
[time]
T = 1
dt = 0.005
snapshot_stride = 20
[model]
lambda_re = 0
p = 3
alpha = -1
[initial]
family = gaussian-odd
epsilon = 0.01
width = 1
center = 4
[boundary]
family = theorem8
amplitude = 0.01
beta = 0.85
[analysis]
norms = true
oracle_compare = true
[checks]
oracle_rel_tol = 1e-3
[output]
directory = out/linear-only
)"},
        {"theorem4-small-data", R"(
[grid]
L = 80
N = 4095
[time]
T = 200
dt = 0.01
snapshot_stride = 100
[model]
lambda_re = 1
p = 3
alpha = -1
[initial]
family = gaussian-odd
epsilon = 0.01
width = 1
center = 4
[boundary]
family = theorem4
epsilon = 0.01
gamma = 0.22
[analysis]
norms = true
decay_fit = true
decay_window_lo = 10
decay_window_hi = 100
decay_expected = -0.5
decay_tolerance = 0.07
scattering = true
[checks]
mass_conservation = false
[output]
directory = out/theorem4
)"},
        {"theorem7-band", R"(
[grid]
L = 80
N = 4095
[time]
T = 150
dt = 0.01
snapshot_stride = 100
[model]
lambda_re = 1
p = 4
alpha = -1
[initial]
family = bump2
epsilon = 0.01
width = 2
[boundary]
family = theorem7
epsilon = 0.01
beta = 0.85
[analysis]
norms = true
decay_fit = true
decay_window_lo = 10
decay_window_hi = 100
decay_tolerance = 0.1
[output]
directory = out/theorem7
)"},
        {"theorem8-profile", R"(
[grid]
L = 80
N = 4095
[time]
T = 200
dt = 0.01
snapshot_stride = 100
[model]
lambda_re = 0
p = 4
alpha = -1
[initial]
family = zero
epsilon = 0
width = 1
[boundary]
family = theorem8
amplitude = 0.01
beta = 0.85
[analysis]
norms = true
theorem8_profile = true
profile_times = 50 200
[output]
directory = out/theorem8
)"},
        {"conservation", R"(
[grid]
L = 40
N = 2047
[time]
T = 10
dt = 0.005
snapshot_stride = 100
[model]
lambda_re = 1
p = 3
alpha = -1
[initial]
family = gaussian-odd
epsilon = 0.05
width = 1
center = 4
[boundary]
family = zero
[analysis]
norms = true
[checks]
mass_conservation = true
mass_drift_tol = 1e-6
[output]
directory = out/conservation
)"},
    };
    return presets;
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : preset_table()) names.push_back(k);
    return names;
}

RunConfig preset_config(const std::string& name) {
    const auto& t = preset_table();
    const auto it = t.find(name);
    if (it == t.end()) throw ConfigError("unknown preset '" + name + "'");
    return RunConfig::parse_string(it->second, "preset:" + name);
}

}  // namespace halfline
