#pragma once
/**
 * @file cli.hpp
 * @brief Command-line front end: six subcommands over the library pipeline.
 *
 * Subcommands and artifacts (written into --out, default "."):
 *   curve       curve.csv, curve_table.csv, curve_summary.json
 *   surface     <basename>.csv, <basename>_summary.json
 *   analyze     surface artifacts plus oracle_summary.json
 *   verify      probes.json, probes_summary.txt (table also on stdout)
 *   correspond  correspondence.json, surface.csv, r3_surface.csv
 *   export      mesh.obj, mesh_scalars.csv
 *
 * Exit codes: 0 success, 1 configuration or usage error, 2 regularity
 * violation (the surface fails |F| <= 1 - delta on too much of the grid),
 * 3 a probe returned a Violates verdict.
 */

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "s3surf/config.hpp"
#include "s3surf/correspond.hpp"
#include "s3surf/curve.hpp"
#include "s3surf/errors.hpp"
#include "s3surf/mesh.hpp"
#include "s3surf/oracle.hpp"
#include "s3surf/serialize.hpp"
#include "s3surf/surface.hpp"
#include "s3surf/theorems.hpp"

namespace s3surf::cli {

struct Options {
    std::string config;
    std::string out = ".";
    double step = 0.0;   ///< > 0: override both curve steps
    double delta = 0.0;  ///< > 0: override the regularity margin
    std::string pole;    ///< export only; overrides [output] pole
    std::string probe;   ///< verify only; select one probe id
};

namespace detail {

inline std::filesystem::path prepare_out(const std::string& out) {
    std::filesystem::path dir = out.empty() ? std::filesystem::path(".")
                                            : std::filesystem::path(out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir.string() + "'");
    return dir;
}

template <typename WriteFn>
void emit(const std::filesystem::path& dir, const std::string& name, WriteFn&& fn) {
    std::ostringstream os;
    fn(os);
    write_text_file((dir / name).string(), os.str());
}

inline void emit_json(const std::filesystem::path& dir, const std::string& name,
                      const json& j) {
    write_text_file((dir / name).string(), j.dump(2) + "\n");
}

inline ParsedConfig load_config(const Options& o) {
    if (o.config.empty()) throw ConfigError("this command requires --config");
    ParsedConfig cfg = parse_config_file(o.config);
    if (o.delta > 0.0) cfg.delta = o.delta;
    return cfg;
}

inline SampledCurve integrate_section(const CurveSection& section, const ParsedConfig& cfg,
                                      const Options& o) {
    CurveSection cs = section;
    if (o.step > 0.0) cs.h = o.step;
    return integrate_frenet_s3(to_curve_spec(cs, cfg.dir));
}

inline const CurveSection& need_alpha(const ParsedConfig& cfg) {
    if (!cfg.alpha) throw ConfigError("config is missing a [curve:alpha] section");
    return *cfg.alpha;
}

inline const CurveSection& need_beta(const ParsedConfig& cfg) {
    if (!cfg.beta) throw ConfigError("config is missing a [curve:beta] section");
    return *cfg.beta;
}

/**
 * @brief Compare the closed-form report with the finite-difference probe of
 *        the embedded grid.
 *
 * The tabulated cross term F is the frame pairing, whose sign is opposite
 * the measured metric cross term, and the mean curvature is oriented along
 * -N; the probe is therefore referenced to +N for the form coefficients and
 * to -N for the mean curvature.  E and G are compared against their exact
 * value 1.
 */
inline json oracle_summary_json(const SurfaceGrid& grid, const GeometryReport& rep) {
    std::vector<Quat> X;
    X.reserve(grid.ns * grid.nt);
    for (std::size_t i = 0; i < grid.ns; ++i)
        for (std::size_t j = 0; j < grid.nt; ++j) X.push_back(grid.X(i, j));
    const double hs = grid.alpha.step(), ht = grid.beta.step();

    const auto& plusN = rep.N;
    std::vector<Quat> minusN(plusN.size());
    for (std::size_t q = 0; q < plusN.size(); ++q) minusN[q] = -plusN[q];

    const auto oc = fd_fundamental_forms(X, grid.ns, grid.nt, hs, ht, &plusN);
    const auto oh = fd_fundamental_forms(X, grid.ns, grid.nt, hs, ht, &minusN);

    double metric_err = 0.0, second_err = 0.0, H_err = 0.0, Kext_err = 0.0, gauss_err = 0.0,
           N_err = 0.0;
    for (std::size_t i = 0; i < oc.ns; ++i)
        for (std::size_t j = 0; j < oc.nt; ++j) {
            const std::size_t qo = oc.idx(i, j);
            const std::size_t qc = rep.idx(i + 1, j + 1);
            metric_err = std::max(metric_err, std::abs(oc.E[qo] - 1.0));
            metric_err = std::max(metric_err, std::abs(oc.G[qo] - 1.0));
            metric_err = std::max(metric_err, std::abs(oc.F[qo] + rep.forms.F[qc]));
            second_err = std::max(second_err, std::abs(oc.e[qo] - rep.forms.e[qc]));
            second_err = std::max(second_err, std::abs(oc.f[qo] - rep.forms.f[qc]));
            second_err = std::max(second_err, std::abs(oc.g[qo] - rep.forms.g[qc]));
            H_err = std::max(H_err, std::abs(oh.H[qo] - rep.H[qc]));
            Kext_err = std::max(Kext_err, std::abs(oc.K_ext[qo] - rep.K_ext[qc]));
            gauss_err = std::max(gauss_err, std::abs(rep.K[qc] - (oc.K_ext[qo] + 1.0)));
            N_err = std::max(N_err, norm(oc.N[qo] - plusN[qc]));
        }

    json j;
    j["interior"]["ns"] = oc.ns;
    j["interior"]["nt"] = oc.nt;
    j["step"]["s"] = hs;
    j["step"]["t"] = ht;
    j["max_abs_error"]["first_form"] = metric_err;
    j["max_abs_error"]["second_form"] = second_err;
    j["max_abs_error"]["mean_curvature"] = H_err;
    j["max_abs_error"]["extrinsic_curvature"] = Kext_err;
    j["max_abs_error"]["gauss_from_extrinsic"] = gauss_err;
    j["max_abs_error"]["normal_field"] = N_err;
    const double worst = std::max({metric_err, second_err, H_err, Kext_err, gauss_err, N_err});
    j["worst"] = worst;
    j["agrees_within_1e-5"] = worst <= 1e-5;
    return j;
}

inline int run_curve(const Options& o) {
    const ParsedConfig cfg = load_config(o);
    const SampledCurve c = integrate_section(need_alpha(cfg), cfg, o);
    const auto dir = prepare_out(o.out);
    emit(dir, "curve.csv", [&](std::ostream& os) { write_curve_csv(os, c); });
    emit(dir, "curve_table.csv", [&](std::ostream& os) { write_curve_table_csv(os, c); });
    emit_json(dir, "curve_summary.json", curve_summary_json(c));
    return 0;
}

inline int run_surface(const Options& o, bool with_oracle) {
    const ParsedConfig cfg = load_config(o);
    const SampledCurve a = integrate_section(need_alpha(cfg), cfg, o);
    const SampledCurve b = integrate_section(need_beta(cfg), cfg, o);
    const SurfaceGrid grid = build_surface(a, b, cfg.delta, cfg.trim);
    const GeometryReport rep = analyze(grid);
    const std::string base = cfg.basename.empty() ? "surface" : cfg.basename;
    const auto dir = prepare_out(o.out);
    emit(dir, base + ".csv", [&](std::ostream& os) { write_geometry_csv(os, rep); });
    emit_json(dir, base + "_summary.json", geometry_summary_json(rep, grid.trimmed));
    if (with_oracle) emit_json(dir, "oracle_summary.json", oracle_summary_json(grid, rep));
    return 0;
}

inline int run_verify(const Options& o) {
    std::vector<ProbeSpec> manifest;
    if (!o.config.empty()) {
        const ParsedConfig cfg = parse_config_file(o.config);
        manifest = cfg.probes;
    }
    if (manifest.empty()) manifest = default_manifest();
    if (!o.probe.empty()) {
        std::vector<ProbeSpec> keep;
        for (const auto& sp : manifest)
            if (sp.id == o.probe) keep.push_back(sp);
        if (keep.empty()) {
            const auto& ids = probe_ids();
            if (std::find(ids.begin(), ids.end(), o.probe) == ids.end())
                throw ConfigError("unknown probe id '" + o.probe + "'");
            keep.push_back({o.probe, {}});
        }
        manifest = std::move(keep);
    }

    std::vector<ProbeResult> results;
    results.reserve(manifest.size());
    for (const auto& sp : manifest) results.push_back(run_probe(sp));

    const auto dir = prepare_out(o.out);
    emit_json(dir, "probes.json", suite_json(results));
    const std::string table = probe_summary_table(results);
    write_text_file((dir / "probes_summary.txt").string(), table);
    std::cout << table;

    for (const auto& r : results)
        if (r.verdict == Verdict::Violates) return 3;
    return 0;
}

inline int run_correspond(const Options& o) {
    const ParsedConfig cfg = load_config(o);
    const SampledCurve a = integrate_section(need_alpha(cfg), cfg, o);
    const SampledCurve b = integrate_section(need_beta(cfg), cfg, o);
    const CorrespondencePair pair = make_correspondence(a, b, cfg.delta);
    const CorrespondenceResiduals res = verify_correspondence(pair);
    const auto dir = prepare_out(o.out);
    emit_json(dir, "correspondence.json", correspondence_json(pair, res));
    emit(dir, "surface.csv", [&](std::ostream& os) { write_geometry_csv(os, pair.s3_report); });
    emit(dir, "r3_surface.csv",
         [&](std::ostream& os) { write_r3_report_csv(os, pair.r3_report); });
    return 0;
}

inline int run_export(const Options& o) {
    const ParsedConfig cfg = load_config(o);
    const SampledCurve a = integrate_section(need_alpha(cfg), cfg, o);
    const SampledCurve b = integrate_section(need_beta(cfg), cfg, o);
    const SurfaceGrid grid = build_surface(a, b, cfg.delta, cfg.trim);
    const GeometryReport rep = analyze(grid);
    std::string pole = !o.pole.empty() ? o.pole : (!cfg.pole.empty() ? cfg.pole : "auto");
    const MeshArtifact mesh = make_mesh(grid, rep, pole);
    const auto dir = prepare_out(o.out);
    emit(dir, "mesh.obj", [&](std::ostream& os) { write_obj(os, mesh); });
    emit(dir, "mesh_scalars.csv", [&](std::ostream& os) { write_mesh_csv(os, mesh); });
    return 0;
}

} // namespace detail

/// Parse arguments, dispatch, and map failures onto the exit-code contract.
inline int run_main(int argc, const char* const* argv) {
    CLI::App app{
        "Product surfaces of framed curves in the unit 3-sphere: curve "
        "integration, closed-form geometry with a finite-difference "
        "cross-check, the flat-space correspondence, theorem probes, and "
        "mesh export."};
    app.require_subcommand(1);

    Options o;

    auto add_common = [&](CLI::App* sub, bool config_required) {
        auto* c = sub->add_option("--config", o.config, "Run configuration file");
        if (config_required) c->required();
        sub->add_option("--out", o.out, "Output directory (created if missing)");
    };
    auto add_step = [&](CLI::App* sub) {
        sub->add_option("--step", o.step, "Override the integration step of every curve")
            ->check(CLI::PositiveNumber);
    };
    auto add_delta = [&](CLI::App* sub) {
        sub->add_option("--delta", o.delta,
                        "Override the regularity margin (surfaces need |F| <= 1 - delta)")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* curve =
        app.add_subcommand("curve", "Integrate the [curve:alpha] section and write node "
                                    "tables plus a drift summary");
    add_common(curve, true);
    add_step(curve);

    CLI::App* surface = app.add_subcommand(
        "surface", "Build the product surface and write its geometry report");
    add_common(surface, true);
    add_step(surface);
    add_delta(surface);

    CLI::App* analyze_cmd = app.add_subcommand(
        "analyze", "Geometry report plus a finite-difference cross-check summary");
    add_common(analyze_cmd, true);
    add_step(analyze_cmd);
    add_delta(analyze_cmd);

    CLI::App* verify = app.add_subcommand(
        "verify", "Run theorem probes (default suite, or [probe:*] sections of --config)");
    add_common(verify, false);
    verify->add_option("--probe", o.probe, "Run a single probe id");

    CLI::App* correspond = app.add_subcommand(
        "correspond", "Pair the surface with its flat-space partner and report residuals");
    add_common(correspond, true);
    add_step(correspond);
    add_delta(correspond);

    CLI::App* export_cmd = app.add_subcommand(
        "export", "Write a stereographically projected OBJ mesh plus per-vertex scalars");
    add_common(export_cmd, true);
    add_step(export_cmd);
    add_delta(export_cmd);
    export_cmd->add_option("--pole", o.pole,
                           "Projection pole: auto or one of +e1 -e1 +e2 -e2 +e3 -e3 +e4 -e4");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(curve)) return detail::run_curve(o);
        if (app.got_subcommand(surface)) return detail::run_surface(o, false);
        if (app.got_subcommand(analyze_cmd)) return detail::run_surface(o, true);
        if (app.got_subcommand(verify)) return detail::run_verify(o);
        if (app.got_subcommand(correspond)) return detail::run_correspond(o);
        if (app.got_subcommand(export_cmd)) return detail::run_export(o);
    } catch (const RegularityViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace s3surf::cli
