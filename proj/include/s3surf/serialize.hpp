#pragma once
/**
 * @file serialize.hpp
 * @brief CSV and JSON serialization of curves, surface reports,
 *        correspondence reports, and probe results.
 *
 * Numbers are written with the shortest representation that round-trips
 * (std::to_chars), so identical runs produce byte-identical files.  JSON uses
 * insertion-ordered keys for the same reason.
 */

#include <array>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "s3surf/correspond.hpp"
#include "s3surf/curve.hpp"
#include "s3surf/errors.hpp"
#include "s3surf/surface.hpp"
#include "s3surf/theorems.hpp"

namespace s3surf {

using json = nlohmann::ordered_json;

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
    std::array<char, 32> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

namespace detail {

inline void csv_row(std::ostream& os, const std::vector<double>& vals) {
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) os << ',';
        os << format_double(vals[i]);
    }
    os << '\n';
}

inline json stats_json(const SummaryStats& st) {
    json j;
    j["min"] = st.min;
    j["max"] = st.max;
    j["mean"] = st.mean;
    j["abs_max"] = st.abs_max;
    j["stdev"] = st.stdev;
    return j;
}

inline std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
    while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
    return s.substr(a, b - a);
}

inline double parse_csv_number(const std::string& field, const std::string& where) {
    const std::string t = strip(field);
    double v = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size())
        throw ConfigError(where + ": cannot parse number from '" + field + "'");
    return v;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Curves
// ---------------------------------------------------------------------------

/// Full node table: position and tangent quaternions plus invariants.
/// Geodesic families carry zero curvature and torsion columns.
inline void write_curve_csv(std::ostream& os, const SampledCurve& c) {
    os << "s,alpha_w,alpha_x,alpha_y,alpha_z,t_w,t_x,t_y,t_z,kappa,tau\n";
    for (std::size_t i = 0; i < c.size(); ++i)
        detail::csv_row(os, {c.s[i], c.alpha[i].w, c.alpha[i].x, c.alpha[i].y, c.alpha[i].z,
                             c.t[i].w, c.t[i].x, c.t[i].y, c.t[i].z, c.kappa[i],
                             c.has_frame ? c.tau[i] : 0.0});
}

/// Three-column invariant table (s, kappa, tau); the same layout the
/// tabulated curve family reads back in.
inline void write_curve_table_csv(std::ostream& os, const SampledCurve& c) {
    os << "s,kappa,tau\n";
    for (std::size_t i = 0; i < c.size(); ++i)
        detail::csv_row(os, {c.s[i], c.kappa[i], c.has_frame ? c.tau[i] : 0.0});
}

/**
 * @brief Read a tabulated curve family from 3-column CSV (s, kappa, tau).
 *
 * The header line "s,kappa,tau" is required.  Parse failures raise
 * ConfigError with "<path>:<line>" diagnostics.
 */
inline Tabulated read_curve_table_csv(std::istream& is, const std::string& path) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(is, line))
        throw ConfigError(path + ":1: empty file; expected header 's,kappa,tau'");
    ++lineno;
    {
        std::string header;
        for (char ch : detail::strip(line))
            if (ch != ' ' && ch != '\t') header += ch;
        if (header != "s,kappa,tau")
            throw ConfigError(path + ":1: expected header 's,kappa,tau', got '" +
                              detail::strip(line) + "'");
    }
    Tabulated tab;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = detail::strip(line);
        if (t.empty()) continue;
        std::array<double, 3> row{};
        std::size_t field = 0, start = 0;
        const std::string where = path + ":" + std::to_string(lineno);
        for (std::size_t i = 0; i <= t.size(); ++i) {
            if (i == t.size() || t[i] == ',') {
                if (field >= 3) throw ConfigError(where + ": expected 3 fields, got more");
                row[field++] = detail::parse_csv_number(t.substr(start, i - start), where);
                start = i + 1;
            }
        }
        if (field != 3)
            throw ConfigError(where + ": expected 3 fields, got " + std::to_string(field));
        tab.rows.push_back(row);
    }
    if (tab.rows.size() < 2)
        throw ConfigError(path + ": tabulated curve needs at least 2 data rows, got " +
                          std::to_string(tab.rows.size()));
    return tab;
}

/// Drift and invariant-recovery summary for one integrated curve.
inline json curve_summary_json(const SampledCurve& c) {
    json j;
    j["nodes"] = c.size();
    j["s_min"] = c.s.front();
    j["s_max"] = c.s.back();
    j["step"] = c.step();
    j["has_frame"] = c.has_frame;
    j["orthonormality_drift"] = orthonormality_drift(c);
    const auto inv = fd_curve_invariants(c);
    double kerr = 0.0, terr = 0.0;
    for (std::size_t i = 0; i < inv.s.size(); ++i) {
        kerr = std::max(kerr, std::abs(inv.kappa_fd[i] - c.kappa[i + 1]));
        if (c.has_frame) terr = std::max(terr, std::abs(inv.tau_fd[i] - c.tau[i + 1]));
    }
    j["max_kappa_recovery_error"] = kerr;
    if (c.has_frame) j["max_tau_recovery_error"] = terr;
    return j;
}

// ---------------------------------------------------------------------------
// Surface reports
// ---------------------------------------------------------------------------

/// One row per grid node, row-major; row count always ns * nt.
inline void write_geometry_csv(std::ostream& os, const GeometryReport& rep) {
    os << "s,t,F,e,f,g,H,K,K_ext,min_res,umb_defect\n";
    for (std::size_t i = 0; i < rep.ns; ++i)
        for (std::size_t j = 0; j < rep.nt; ++j) {
            const std::size_t q = rep.idx(i, j);
            detail::csv_row(os, {rep.s[i], rep.t[j], rep.forms.F[q], rep.forms.e[q],
                                 rep.forms.f[q], rep.forms.g[q], rep.H[q], rep.K[q],
                                 rep.K_ext[q], rep.min_res[q], rep.umb_defect[q]});
        }
}

/// Flat-space partner surface (second form is diagonal: f == 0).
inline void write_r3_report_csv(std::ostream& os, const R3SurfaceReport& rep) {
    os << "s,t,F,e,g,H,K\n";
    for (std::size_t i = 0; i < rep.ns; ++i)
        for (std::size_t j = 0; j < rep.nt; ++j) {
            const std::size_t q = rep.idx(i, j);
            detail::csv_row(os,
                            {rep.s[i], rep.t[j], rep.F[q], rep.e[q], rep.g[q], rep.H[q], rep.K[q]});
        }
}

inline json geometry_summary_json(const GeometryReport& rep, bool trimmed = false) {
    const GeometrySummary s = summarize(rep);
    json j;
    j["grid"]["ns"] = rep.ns;
    j["grid"]["nt"] = rep.nt;
    j["grid"]["s_range"] = {rep.s.front(), rep.s.back()};
    j["grid"]["t_range"] = {rep.t.front(), rep.t.back()};
    j["grid"]["trimmed"] = trimmed;
    j["stats"]["F"] = detail::stats_json(s.F);
    j["stats"]["H"] = detail::stats_json(s.H);
    j["stats"]["K"] = detail::stats_json(s.K);
    j["stats"]["K_ext"] = detail::stats_json(s.K_ext);
    j["stats"]["min_res"] = detail::stats_json(s.min_res);
    j["stats"]["umb_defect"] = detail::stats_json(s.umb_defect);
    j["flags"]["minimal"] = s.minimal;
    j["flags"]["flat"] = s.flat;
    j["flags"]["cmc"] = s.cmc;
    j["flags"]["constant_F"] = s.constant_F;
    j["min_umb_defect"] = s.min_umb_defect;
    return j;
}

// ---------------------------------------------------------------------------
// Correspondence
// ---------------------------------------------------------------------------

inline json correspondence_json(const CorrespondencePair& pair,
                                const CorrespondenceResiduals& res) {
    const auto cor = cmc_implies_flat(res);
    json j;
    j["torsion_shifts"]["alpha"] = pair.shift.alpha_shift;
    j["torsion_shifts"]["beta"] = pair.shift.beta_shift;
    j["grid"]["ns"] = pair.s3_report.ns;
    j["grid"]["nt"] = pair.s3_report.nt;
    j["residuals"]["isometry_E"] = res.isometry_E;
    j["residuals"]["isometry_F"] = res.isometry_F;
    j["residuals"]["isometry_G"] = res.isometry_G;
    j["residuals"]["mean_curvature_shift_law"] = res.shift_law;
    j["residuals"]["gauss_curvature_match"] = res.gauss;
    j["flags"]["isometry_within_1e-8"] = res.isometry_max() <= 1e-8;
    j["flags"]["shift_law_within_1e-5"] = res.shift_law <= 1e-5;
    j["flags"]["gauss_match_within_1e-5"] = res.gauss <= 1e-5;
    j["flags"]["cmc_sphere_side"] = res.cmc_s3;
    j["flags"]["cmc_flat_side"] = res.cmc_r3;
    j["flags"]["flat_sphere_side"] = res.flat_s3;
    j["flags"]["flat_flat_side"] = res.flat_r3;
    j["cmc_implies_flat"]["applicable"] = cor.applicable;
    j["cmc_implies_flat"]["holds"] = cor.holds;
    j["notes"] = res.notes;
    return j;
}

// ---------------------------------------------------------------------------
// Probe results
// ---------------------------------------------------------------------------

inline json probe_json(const ProbeResult& r) {
    json j;
    j["theorem_id"] = r.theorem_id;
    j["claim"] = r.claim;
    j["verdict"] = verdict_name(r.verdict);
    j["summary"] = verdict_phrase(r.verdict);
    j["config"] = json::object();
    for (const auto& [k, v] : r.config) j["config"][k] = v;
    j["observed"] = json::object();
    for (const auto& o : r.observed) j["observed"][o.name] = o.value;
    j["controls"] = json::array();
    for (const auto& c : r.controls) {
        json cj;
        cj["name"] = c.name;
        cj["quantity"] = c.quantity;
        cj["observed"] = c.observed;
        cj["expected_breach"] = c.expected_breach;
        cj["breached"] = c.breached;
        j["controls"].push_back(cj);
    }
    if (!r.offending.empty()) j["offending"] = r.offending;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline json suite_json(const std::vector<ProbeResult>& results) {
    json j = json::array();
    for (const auto& r : results) j.push_back(probe_json(r));
    return j;
}

/// Fixed-width human-readable summary, one row per probe.
inline std::string probe_summary_table(const std::vector<ProbeResult>& results) {
    std::ostringstream os;
    os << "probe                      verdict       summary\n";
    os << "-------------------------- ------------- "
          "------------------------------------------------\n";
    for (const auto& r : results) {
        std::string id = r.theorem_id;
        if (id.size() < 26) id += std::string(26 - id.size(), ' ');
        std::string v = verdict_name(r.verdict);
        if (v.size() < 13) v += std::string(13 - v.size(), ' ');
        os << id << ' ' << v << ' ' << verdict_phrase(r.verdict) << '\n';
        if (r.verdict == Verdict::Violates) os << "    offending: " << r.offending << '\n';
        if (r.verdict == Verdict::Inconclusive && !r.notes.empty())
            os << "    note: " << r.notes << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// File helpers
// ---------------------------------------------------------------------------

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot open '" + path + "' for writing");
    os << content;
    if (!os) throw ConfigError("failed while writing '" + path + "'");
}

} // namespace s3surf
