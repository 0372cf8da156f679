#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsgn/time_integration.hpp"

namespace hsgn {

/** Fully resolved run configuration. Zero / NaN sentinels mean "use the
 *  scenario's default"; everything else is validated at parse time so a typo
 *  fails before any large allocation. */
struct RunConfig {
    std::string scenario;
    std::map<std::string, double> scenario_params;

    int nx = 0, ny = 0; // 0: scenario default
    double t0 = std::numeric_limits<double>::quiet_NaN();
    double t_final = std::numeric_limits<double>::quiet_NaN();
    int threads = 0; // 0: library default

    IntegratorConfig integrator;
    bool tolerances_set = false; // convergence studies default to 1e-10 otherwise

    std::string output_dir = "out";
    bool gauges_set = false;
    std::vector<std::array<double, 2>> gauges;
    bool snapshots_set = false;
    std::vector<double> snapshot_times;
    std::int64_t conservation_stride = 1;
    bool cross_section_set = false;
    double cross_section_y = 0.0;

    std::vector<int> resolutions; // converge rungs (nx per rung)
    int converge_ny = 0;          // 0: square grids (ny = nx)

    std::vector<int> bench_resolutions = {128, 181, 256, 362, 512};
    int bench_repetitions = 50;
    int bench_warmups = 5;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline double parse_double(const std::string& where, const std::string& text) {
    const std::string t = trim(text);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size())
        throw std::runtime_error("config: " + where + ": expected a number, got '" + text + "'");
    return v;
}

inline std::int64_t parse_int(const std::string& where, const std::string& text) {
    const double v = parse_double(where, text);
    const double r = std::round(v);
    if (!(std::abs(v - r) <= 0.0))
        throw std::runtime_error("config: " + where + ": expected an integer, got '" + text + "'");
    return static_cast<std::int64_t>(r);
}

inline std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline std::vector<double> parse_double_list(const std::string& where,
                                             const std::string& text) {
    std::vector<double> out;
    for (const std::string& part : split(text, ',')) {
        const std::string p = trim(part);
        if (!p.empty())
            out.push_back(parse_double(where, p));
    }
    if (out.empty())
        throw std::runtime_error("config: " + where + ": expected a list of numbers");
    return out;
}

inline std::vector<int> parse_int_list(const std::string& where, const std::string& text) {
    std::vector<int> out;
    for (double v : parse_double_list(where, text)) {
        const double r = std::round(v);
        if (!(std::abs(v - r) <= 0.0))
            throw std::runtime_error("config: " + where + ": expected integers");
        out.push_back(static_cast<int>(r));
    }
    return out;
}

/** Gauge list: semicolon-separated pairs, each pair "x, y". */
inline std::vector<std::array<double, 2>> parse_pair_list(const std::string& where,
                                                          const std::string& text) {
    std::vector<std::array<double, 2>> out;
    for (const std::string& pair : split(text, ';')) {
        const std::string p = trim(pair);
        if (p.empty())
            continue;
        const std::vector<double> xy = parse_double_list(where, p);
        if (xy.size() != 2)
            throw std::runtime_error("config: " + where + ": each gauge needs exactly x, y");
        out.push_back({xy[0], xy[1]});
    }
    if (out.empty())
        throw std::runtime_error("config: " + where + ": expected 'x1, y1; x2, y2; ...'");
    return out;
}

} // namespace detail

/** Parses the line-oriented key = value format with [section] headers and
 *  full-line # comments. Unknown sections or keys are an error; keys in the
 *  [scenario] section are validated later by the scenario registry. */
inline RunConfig parse_config_text(const std::string& text) {
    static const std::map<std::string, std::set<std::string>> schema = {
        {"run", {"scenario", "nx", "ny", "t0", "t_final", "threads"}},
        {"scenario", {}}, // free-form numeric parameters
        {"integrator",
         {"abs_tol", "rel_tol", "dt_initial", "dt_max", "fixed_dt", "max_steps",
          "safety", "growth_cap", "shrink_floor"}},
        {"output",
         {"directory", "gauges", "snapshot_times", "conservation_stride",
          "cross_section_y"}},
        {"converge", {"resolutions", "ny"}},
        {"bench", {"resolutions", "repetitions", "warmups"}},
    };

    RunConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = detail::trim(line);
        if (s.empty() || s[0] == '#')
            continue;
        const std::string at = "line " + std::to_string(lineno);
        if (s.front() == '[') {
            if (s.back() != ']')
                throw std::runtime_error("config: " + at + ": malformed section header");
            section = detail::trim(s.substr(1, s.size() - 2));
            if (schema.find(section) == schema.end())
                throw std::runtime_error("config: " + at + ": unknown section [" + section + "]");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: " + at + ": expected key = value");
        const std::string key = detail::trim(s.substr(0, eq));
        const std::string value = detail::trim(s.substr(eq + 1));
        if (section.empty())
            throw std::runtime_error("config: " + at + ": key outside any [section]");
        if (key.empty())
            throw std::runtime_error("config: " + at + ": empty key");
        const auto& allowed = schema.at(section);
        if (section != "scenario" && allowed.find(key) == allowed.end())
            throw std::runtime_error("config: " + at + ": unknown key '" + key +
                                     "' in section [" + section + "]");
        const std::string where = "[" + section + "] " + key;

        if (section == "run") {
            if (key == "scenario")
                cfg.scenario = value;
            else if (key == "nx")
                cfg.nx = static_cast<int>(detail::parse_int(where, value));
            else if (key == "ny")
                cfg.ny = static_cast<int>(detail::parse_int(where, value));
            else if (key == "t0")
                cfg.t0 = detail::parse_double(where, value);
            else if (key == "t_final")
                cfg.t_final = detail::parse_double(where, value);
            else if (key == "threads")
                cfg.threads = static_cast<int>(detail::parse_int(where, value));
        } else if (section == "scenario") {
            cfg.scenario_params[key] = detail::parse_double(where, value);
        } else if (section == "integrator") {
            if (key == "abs_tol") {
                cfg.integrator.abs_tol = detail::parse_double(where, value);
                cfg.tolerances_set = true;
            } else if (key == "rel_tol") {
                cfg.integrator.rel_tol = detail::parse_double(where, value);
                cfg.tolerances_set = true;
            }
            else if (key == "dt_initial")
                cfg.integrator.dt_initial = detail::parse_double(where, value);
            else if (key == "dt_max")
                cfg.integrator.dt_max = detail::parse_double(where, value);
            else if (key == "fixed_dt")
                cfg.integrator.fixed_dt = detail::parse_double(where, value);
            else if (key == "max_steps")
                cfg.integrator.max_steps = detail::parse_int(where, value);
            else if (key == "safety")
                cfg.integrator.safety = detail::parse_double(where, value);
            else if (key == "growth_cap")
                cfg.integrator.growth_cap = detail::parse_double(where, value);
            else if (key == "shrink_floor")
                cfg.integrator.shrink_floor = detail::parse_double(where, value);
        } else if (section == "output") {
            if (key == "directory")
                cfg.output_dir = value;
            else if (key == "gauges") {
                cfg.gauges = detail::parse_pair_list(where, value);
                cfg.gauges_set = true;
            } else if (key == "snapshot_times") {
                cfg.snapshot_times = detail::parse_double_list(where, value);
                cfg.snapshots_set = true;
            } else if (key == "conservation_stride") {
                cfg.conservation_stride = detail::parse_int(where, value);
                if (cfg.conservation_stride < 1)
                    throw std::runtime_error("config: " + where + ": stride must be >= 1");
            } else if (key == "cross_section_y") {
                cfg.cross_section_y = detail::parse_double(where, value);
                cfg.cross_section_set = true;
            }
        } else if (section == "converge") {
            if (key == "resolutions")
                cfg.resolutions = detail::parse_int_list(where, value);
            else if (key == "ny")
                cfg.converge_ny = static_cast<int>(detail::parse_int(where, value));
        } else if (section == "bench") {
            if (key == "resolutions")
                cfg.bench_resolutions = detail::parse_int_list(where, value);
            else if (key == "repetitions")
                cfg.bench_repetitions = static_cast<int>(detail::parse_int(where, value));
            else if (key == "warmups")
                cfg.bench_warmups = static_cast<int>(detail::parse_int(where, value));
        }
    }
    return cfg;
}

inline RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

/** Thread-count resolution: the config key wins over the THREADS environment
 *  variable; a command-line override (applied by the caller) wins over both. */
inline void apply_thread_env(RunConfig& cfg) {
    if (cfg.threads > 0)
        return;
    if (const char* env = std::getenv("THREADS")) {
        try {
            cfg.threads = static_cast<int>(detail::parse_int("THREADS", env));
        } catch (const std::runtime_error&) {
            throw std::runtime_error("THREADS environment variable is not an integer");
        }
    }
}

} // namespace hsgn
