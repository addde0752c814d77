#pragma once
/**
 * @file config.hpp
 * @brief Run-configuration files: flat key = value lines grouped in
 *        sections, strict validation with line diagnostics.
 *
 * Sections:
 *   [curve:alpha], [curve:beta]  factor curves (family + parameters + range)
 *   [surface]                    regularity margin and trim policy
 *   [output]                     artifact basename and projection pole
 *   [probe:<id>]                 one probe suite entry; keys pass through to
 *                                the probe runner (validated there)
 *
 * Curve invariants are constants, named families, or 3-column CSV tables;
 * there is no expression language.  Unknown sections, unknown keys,
 * duplicate keys, and malformed lines all raise ConfigError with
 * "<path>:<line>" diagnostics.
 */

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "s3surf/curve.hpp"
#include "s3surf/errors.hpp"
#include "s3surf/serialize.hpp"
#include "s3surf/surface.hpp"
#include "s3surf/theorems.hpp"

namespace s3surf {

/// One [curve:*] section, as written (family resolved later).
struct CurveSection {
    std::string family;  ///< great_circle | proper_helix | general_helix |
                         ///< clifford_factor | table
    std::optional<double> kappa, tau;         ///< proper_helix
    std::optional<double> b;                  ///< general_helix slope
    std::optional<int> sign;                  ///< general_helix shift sign
    std::optional<double> kappa_const;        ///< general_helix curvature
    std::optional<double> r1, r2;             ///< clifford_factor radii
    std::optional<std::string> table;         ///< CSV path for the table family
    double s_min = 0.0;
    double s_max = 1.0;
    double h = kDefaultStep;
    double seed_angle = 0.0;
};

struct ParsedConfig {
    std::optional<CurveSection> alpha, beta;
    double delta = kDefaultRegularityMargin;
    TrimPolicy trim = TrimPolicy::Throw;
    std::string basename;  ///< empty: command default
    std::string pole;      ///< empty: command default ("auto")
    std::vector<ProbeSpec> probes;
    std::string dir;  ///< directory of the config file (anchors table paths)
};

namespace detail {

inline double config_num(const std::string& where, const std::string& key,
                         const std::string& value) {
    double v = 0.0;
    const std::string t = strip(value);
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
        throw ConfigError(where + ": key '" + key + "': cannot parse number from '" + value +
                          "'");
    return v;
}

inline int config_int(const std::string& where, const std::string& key,
                      const std::string& value) {
    int v = 0;
    const std::string t = strip(value);
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
        throw ConfigError(where + ": key '" + key + "': cannot parse integer from '" + value +
                          "'");
    return v;
}

inline void apply_curve_key(CurveSection& c, const std::string& where, const std::string& key,
                            const std::string& value) {
    if (key == "family")
        c.family = strip(value);
    else if (key == "kappa")
        c.kappa = config_num(where, key, value);
    else if (key == "tau")
        c.tau = config_num(where, key, value);
    else if (key == "b")
        c.b = config_num(where, key, value);
    else if (key == "sign")
        c.sign = config_int(where, key, value);
    else if (key == "kappa_const")
        c.kappa_const = config_num(where, key, value);
    else if (key == "r1")
        c.r1 = config_num(where, key, value);
    else if (key == "r2")
        c.r2 = config_num(where, key, value);
    else if (key == "table")
        c.table = strip(value);
    else if (key == "s_min")
        c.s_min = config_num(where, key, value);
    else if (key == "s_max")
        c.s_max = config_num(where, key, value);
    else if (key == "h")
        c.h = config_num(where, key, value);
    else if (key == "seed_angle")
        c.seed_angle = config_num(where, key, value);
    else
        throw ConfigError(where + ": unknown curve key '" + key + "'");
}

} // namespace detail

/**
 * @brief Parse a configuration stream; `path` is used for diagnostics and
 *        `dir` anchors relative table paths.
 */
inline ParsedConfig parse_config_stream(std::istream& is, const std::string& path,
                                        const std::string& dir) {
    ParsedConfig cfg;
    cfg.dir = dir;
    std::string section;
    ProbeSpec* current_probe = nullptr;
    std::set<std::string> seen_keys;  // "<section>\x1f<key>"
    std::string line;
    std::size_t lineno = 0;

    while (std::getline(is, line)) {
        ++lineno;
        const std::string where = path + ":" + std::to_string(lineno);
        std::string t = detail::strip(line);
        if (t.empty() || t[0] == '#') continue;

        if (t.front() == '[') {
            if (t.back() != ']') throw ConfigError(where + ": unterminated section header");
            section = detail::strip(t.substr(1, t.size() - 2));
            current_probe = nullptr;
            if (section == "curve:alpha") {
                if (cfg.alpha) throw ConfigError(where + ": duplicate section [curve:alpha]");
                cfg.alpha.emplace();
            } else if (section == "curve:beta") {
                if (cfg.beta) throw ConfigError(where + ": duplicate section [curve:beta]");
                cfg.beta.emplace();
            } else if (section == "surface" || section == "output") {
                // singleton sections; duplicate keys are caught below
            } else if (section.rfind("probe:", 0) == 0) {
                const std::string id = section.substr(6);
                if (id.empty()) throw ConfigError(where + ": probe section needs an id");
                cfg.probes.push_back({id, {}});
                current_probe = &cfg.probes.back();
            } else {
                throw ConfigError(where + ": unknown section '" + section + "'");
            }
            continue;
        }

        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + ": expected 'key = value', got '" + t + "'");
        const std::string key = detail::strip(t.substr(0, eq));
        const std::string value = detail::strip(t.substr(eq + 1));
        if (key.empty()) throw ConfigError(where + ": empty key");
        if (section.empty())
            throw ConfigError(where + ": key '" + key + "' appears before any section");
        if (!seen_keys.insert(section + '\x1f' + key).second)
            throw ConfigError(where + ": duplicate key '" + key + "' in section [" + section +
                              "]");

        if (section == "curve:alpha")
            detail::apply_curve_key(*cfg.alpha, where, key, value);
        else if (section == "curve:beta")
            detail::apply_curve_key(*cfg.beta, where, key, value);
        else if (section == "surface") {
            if (key == "delta") {
                cfg.delta = detail::config_num(where, key, value);
                if (!(cfg.delta > 0.0 && cfg.delta < 1.0))
                    throw ConfigError(where + ": delta must lie in (0, 1), got " + value);
            } else if (key == "trim") {
                if (value == "throw")
                    cfg.trim = TrimPolicy::Throw;
                else if (value == "largest_rect")
                    cfg.trim = TrimPolicy::TrimLargestRectangle;
                else
                    throw ConfigError(where + ": trim must be 'throw' or 'largest_rect', got '" +
                                      value + "'");
            } else {
                throw ConfigError(where + ": unknown surface key '" + key + "'");
            }
        } else if (section == "output") {
            if (key == "basename")
                cfg.basename = value;
            else if (key == "pole")
                cfg.pole = value;
            else
                throw ConfigError(where + ": unknown output key '" + key + "'");
        } else {  // probe section
            current_probe->params.emplace_back(key, value);
        }
    }
    return cfg;
}

inline ParsedConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file '" + path + "'");
    const std::string dir = std::filesystem::path(path).parent_path().string();
    return parse_config_stream(is, path, dir);
}

/**
 * @brief Resolve a curve section into an integrable spec.
 *
 * Families and their required keys:
 *   great_circle      (none)
 *   proper_helix      kappa, tau
 *   general_helix     b; optional sign (default +1), kappa_const (default 1)
 *   clifford_factor   r1, r2
 *   table             table = <csv path> (relative to the config file)
 */
inline CurveSpec to_curve_spec(const CurveSection& c, const std::string& dir) {
    auto need = [&](const auto& opt, const char* key) -> decltype(*opt) {
        if (!opt)
            throw ConfigError("curve family '" + c.family + "' requires key '" + key + "'");
        return *opt;
    };
    CurveSpec spec;
    if (c.family.empty()) throw ConfigError("curve section is missing 'family'");
    if (c.family == "great_circle") {
        spec.family = GreatCircle{};
    } else if (c.family == "proper_helix") {
        spec.family = ProperHelix{need(c.kappa, "kappa"), need(c.tau, "tau")};
    } else if (c.family == "general_helix") {
        spec.family = GeneralHelix{need(c.b, "b"), c.sign.value_or(+1),
                                   Profile::constant(c.kappa_const.value_or(1.0))};
    } else if (c.family == "clifford_factor") {
        spec.family = CliffordFactor{need(c.r1, "r1"), need(c.r2, "r2")};
    } else if (c.family == "table") {
        std::filesystem::path p = std::string(need(c.table, "table"));
        if (p.is_relative() && !dir.empty()) p = std::filesystem::path(dir) / p;
        std::ifstream is(p);
        if (!is) throw ConfigError("cannot open curve table '" + p.string() + "'");
        spec.family = read_curve_table_csv(is, p.string());
    } else {
        throw ConfigError("unknown curve family '" + c.family +
                          "' (expected great_circle, proper_helix, general_helix, "
                          "clifford_factor, or table)");
    }
    if (!(c.s_max > c.s_min))
        throw ConfigError("curve range must satisfy s_max > s_min (got [" +
                          format_double(c.s_min) + ", " + format_double(c.s_max) + "])");
    if (!(c.h > 0.0)) throw ConfigError("curve step h must be positive");
    spec.s_min = c.s_min;
    spec.s_max = c.s_max;
    spec.h = c.h;
    spec.seed = rotated_tangent_seed(c.seed_angle);
    return spec;
}

} // namespace s3surf
