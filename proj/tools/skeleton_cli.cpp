// Command-line front end: solve, critical, curve, k00, verify, kernel-dump.
//
// Exit codes: 0 success, 1 computation error or failed verification, 2 usage error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "skeleton/skeleton.hpp"

namespace {

using nlohmann::json;
using namespace skeleton;

/// Invalid flag values detected before any computation.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOptions {
    std::string mass_ratio;  ///< "inf" or a positive real
    std::optional<double> theta12;
    double charge = 1.0;
    int grid_n = 200;
    double grid_scale = 2.0;
    std::string grid_map = "algebraic";
    double quad_tol = 1e-13;
    double k_max = 10.0;
    std::string output;
    std::string format = "json";
    bool no_meta = false;
};

double parse_mass_ratio(const std::string& text) {
    if (text == "inf" || text == "Inf" || text == "infinity") return kInfiniteMass;
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("--mass-ratio must be a positive number or 'inf', got '" + text + "'");
    }
    if (used != text.size() || !(value > 0.0) || std::isnan(value)) {
        throw UsageError("--mass-ratio must be a positive number or 'inf', got '" + text + "'");
    }
    return value;
}

/// Resolves --mass-ratio / --theta12 into a mass ratio; exactly one must be given unless a default applies.
double resolve_mass_ratio(const CommonOptions& o, std::optional<double> fallback = std::nullopt) {
    if (!o.mass_ratio.empty() && o.theta12) throw UsageError("give either --mass-ratio or --theta12, not both");
    if (o.theta12) {
        if (!(*o.theta12 >= std::numbers::pi / 2.0 * (1.0 - 1e-15)) || !(*o.theta12 < std::numbers::pi)) {
            throw UsageError("--theta12 must lie in [pi/2, pi)");
        }
        return mass_ratio_from_theta12(*o.theta12);
    }
    if (!o.mass_ratio.empty()) return parse_mass_ratio(o.mass_ratio);
    if (fallback) return *fallback;
    throw UsageError("--mass-ratio or --theta12 is required");
}

void require_positive(double value, const std::string& flag) {
    if (!(value > 0.0) || !std::isfinite(value)) throw UsageError(flag + " must be a positive finite number");
}

void validate_grid(const CommonOptions& o) {
    if (o.grid_n < 2) throw UsageError("--grid-n must be at least 2");
    require_positive(o.grid_scale, "--grid-scale");
    require_positive(o.quad_tol, "--quad-tol");
}

MapKind parse_map(const std::string& text) { return text == "tangent" ? MapKind::tangent : MapKind::algebraic; }

/// Writes to --output or stdout.
void emit(const CommonOptions& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + o.output + "'");
    file << text;
}

std::string dump_json(json document, const CommonOptions& o, const std::string& command) {
    if (!o.no_meta) document["meta"] = metadata_line(command);
    return document.dump(2) + "\n";
}

void csv_meta(CsvWriter& csv, const CommonOptions& o, const std::string& command) {
    if (!o.no_meta) csv.comment(metadata_line(command));
}

// ---------------------------------------------------------------- solve

struct SolveFlags {
    CommonOptions common;
    std::string sector;
    bool grid_n_given = false;
};

int cmd_solve(const SolveFlags& flags) {
    CommonOptions o = flags.common;
    const double mu = resolve_mass_ratio(o);
    require_positive(o.charge, "--charge");
    validate_grid(o);
    if (!(o.k_max > threshold_k<double>())) throw UsageError("--k-max must exceed 1/sqrt(2)");
    if (o.format != "json" && o.format != "csv") throw UsageError("solve supports --format json or csv");
    std::vector<SectorId> sectors(std::begin(kAllSectors), std::end(kAllSectors));
    if (!flags.sector.empty()) {
        try {
            sectors = {parse_sector(flags.sector)};
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }

    const Geometry geometry = derive_geometry({mu, o.charge});
    // Near theta12 = pi the kernels sharpen; raise the default resolution.
    if (!flags.grid_n_given && geometry.theta12() > 0.85 * std::numbers::pi) o.grid_n = 400;
    const auto grid = share(build_grid(QuadratureConfig{o.grid_n, o.grid_scale, parse_map(o.grid_map), o.quad_tol}));
    SolveOptions options;
    options.k_max = o.k_max;

    struct SectorResult {
        SectorId sector;
        std::vector<BoundStateResult> states;
    };
    std::vector<SectorResult> results;
    for (SectorId s : sectors) results.push_back({s, solve_bound_states(build_sector(geometry, s, grid), options)});

    const auto config_json = [&] {
        return json{{"grid_n", o.grid_n},       {"grid_scale", o.grid_scale}, {"grid_map", o.grid_map},
                    {"k_max", o.k_max},         {"k_step", options.k_step},   {"solver_tol", options.tol},
                    {"theta12", geometry.theta12()}};
    };
    if (o.format == "json") {
        json out = json::array();
        for (const auto& r : results) {
            json entry{{"sector", to_string(r.sector)}, {"mass_ratio", json_number(mu)}, {"Z", o.charge},
                       {"status", r.states.empty() ? "no bound state" : "bound states found"},
                       {"states", json::array()}, {"config", config_json()}};
            for (const auto& st : r.states) {
                entry["states"].push_back(json{{"sector", to_string(st.sector)},
                                               {"mass_ratio", json_number(st.mass_ratio)},
                                               {"Z", st.charge},
                                               {"k_star", st.k_star},
                                               {"E_dimensionless", st.energy_dimensionless},
                                               {"E_physical", st.energy_physical},
                                               {"multiplicity", st.multiplicity},
                                               {"grid_n", st.grid_n},
                                               {"residual", st.residual},
                                               {"config", config_json()}});
            }
            out.push_back(entry);
        }
        emit(o, dump_json(json{{"command", "solve"}, {"results", out}}, o, "solve"));
    } else {
        std::ostringstream text;
        CsvWriter csv(text);
        csv_meta(csv, o, "solve");
        csv.header({"sector", "status", "mass_ratio", "theta12", "Z", "k_star", "E_dimensionless", "E_physical",
                    "multiplicity", "grid_n", "grid_scale", "grid_map", "k_max", "solver_tol"});
        for (const auto& r : results) {
            const std::vector<std::string> tail = {std::to_string(o.grid_n), format_double(o.grid_scale), o.grid_map,
                                                   format_double(o.k_max), format_double(options.tol)};
            if (r.states.empty()) {
                std::vector<std::string> row = {to_string(r.sector), "no bound state", format_double(mu),
                                                format_double(geometry.theta12()), format_double(o.charge), "", "", "", "0"};
                row.insert(row.end(), tail.begin(), tail.end());
                csv.row(row);
            }
            for (const auto& st : r.states) {
                std::vector<std::string> row = {to_string(r.sector), "bound state", format_double(mu),
                                                format_double(geometry.theta12()), format_double(o.charge),
                                                format_double(st.k_star), format_double(st.energy_dimensionless),
                                                format_double(st.energy_physical), std::to_string(st.multiplicity)};
                row.insert(row.end(), tail.begin(), tail.end());
                csv.row(row);
            }
        }
        emit(o, text.str());
    }
    return 0;
}

// ---------------------------------------------------------------- critical

int cmd_critical(const CommonOptions& o, bool extended) {
    const double mu = resolve_mass_ratio(o, kInfiniteMass);
    require_positive(o.quad_tol, "--quad-tol");
    if (o.format != "json" && o.format != "csv") throw UsageError("critical supports --format json or csv");
    const CriticalPoint cp = z_critical_ub(mu, o.quad_tol);
    std::optional<ExtendedCriticalPoint> ext;
    if (extended) ext = z_critical_ub_extended(mu);

    if (o.format == "json") {
        json out{{"command", "critical"},        {"theta12", cp.theta12},         {"mass_ratio", json_number(cp.mass_ratio)},
                 {"z_c_ub", cp.z_c_ub},          {"k00_residual", cp.k00_at_root}, {"quad_tol", cp.quad_tol}};
        if (ext) {
            out["z_c_ub_extended"] = to_string(ext->z_c_ub, 32);
            out["extended_refinement_change"] = ext->refinement_change;
        }
        emit(o, dump_json(out, o, "critical"));
    } else {
        std::ostringstream text;
        CsvWriter csv(text);
        csv_meta(csv, o, "critical");
        std::vector<std::string> header = {"theta12_rad", "mass_ratio", "z_c_ub", "k00_residual", "quad_tol"};
        std::vector<std::string> row = {format_double(cp.theta12), format_double(cp.mass_ratio), format_double(cp.z_c_ub),
                                        format_double(cp.k00_at_root), format_double(cp.quad_tol)};
        if (ext) {
            header.push_back("z_c_ub_extended");
            row.push_back(to_string(ext->z_c_ub, 32));
        }
        csv.header(header);
        csv.row(row);
        emit(o, text.str());
    }
    return 0;
}

// ---------------------------------------------------------------- curve

struct CurveFlags {
    CommonOptions common;
    double theta_min = std::numbers::pi / 2.0;
    double theta_max = 2.9;
    int steps = 50;
};

std::string curve_csv(const std::vector<CurvePoint>& curve, const CommonOptions& o) {
    std::ostringstream text;
    CsvWriter csv(text);
    csv_meta(csv, o, "curve");
    csv.header({"theta12_rad", "mass_ratio", "z_c_ub", "k00_residual", "quad_tol"});
    for (const auto& c : curve) {
        const auto& p = c.point;
        if (c.error) {
            csv.row({format_double(p.theta12), format_double(p.mass_ratio), "nan", "nan", format_double(p.quad_tol)});
        } else {
            csv.row({format_double(p.theta12), format_double(p.mass_ratio), format_double(p.z_c_ub),
                     format_double(p.k00_at_root), format_double(p.quad_tol)});
        }
    }
    return text.str();
}

int cmd_curve(const CurveFlags& flags) {
    const CommonOptions& o = flags.common;
    require_positive(o.quad_tol, "--quad-tol");
    if (flags.steps < 2) throw UsageError("--steps must be at least 2");
    if (!(flags.theta_min >= std::numbers::pi / 2.0 * (1.0 - 1e-15)) || !(flags.theta_min < flags.theta_max) ||
        !(flags.theta_max < std::numbers::pi)) {
        throw UsageError("need pi/2 <= --theta-min < --theta-max < pi");
    }
    if (o.format != "json" && o.format != "csv" && o.format != "svg") throw UsageError("--format must be json, csv or svg");
    if (o.format == "svg" && o.output.empty()) throw UsageError("--format svg needs --output (a CSV sidecar is written next to it)");

    const auto curve = critical_curve(flags.theta_min, flags.theta_max, flags.steps, o.quad_tol);
    int failures = 0;
    for (const auto& c : curve) {
        if (c.error) {
            ++failures;
            std::cerr << "curve: theta12 = " << format_double(c.point.theta12) << ": " << *c.error << '\n';
        }
    }

    if (o.format == "csv") {
        emit(o, curve_csv(curve, o));
    } else if (o.format == "json") {
        json points = json::array();
        for (const auto& c : curve) {
            json p{{"theta12_rad", c.point.theta12}, {"mass_ratio", json_number(c.point.mass_ratio)},
                   {"quad_tol", c.point.quad_tol}};
            if (c.error) {
                p["error"] = *c.error;
            } else {
                p["z_c_ub"] = c.point.z_c_ub;
                p["k00_residual"] = c.point.k00_at_root;
            }
            points.push_back(p);
        }
        emit(o, dump_json(json{{"command", "curve"}, {"points", points}}, o, "curve"));
    } else {
        PlotSeries series;
        for (const auto& c : curve) {
            if (c.error) continue;
            series.x.push_back(c.point.theta12);
            series.y.push_back(c.point.z_c_ub);
        }
        emit(o, svg_line_plot(series, {"Upper bound on the critical charge", "theta_12 (rad)", "Z_c^ub"}));
        const std::filesystem::path sidecar = std::filesystem::path(o.output).replace_extension(".csv");
        std::ofstream file(sidecar, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open sidecar file '" + sidecar.string() + "'");
        file << curve_csv(curve, o);
    }
    return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- k00

int cmd_k00(const CommonOptions& o) {
    const double mu = resolve_mass_ratio(o);
    require_positive(o.charge, "--charge");
    require_positive(o.quad_tol, "--quad-tol");
    if (o.format != "json" && o.format != "csv") throw UsageError("k00 supports --format json or csv");
    const Geometry geometry = derive_geometry({mu, o.charge});
    const K00Evaluation e = k00(geometry, o.quad_tol);
    if (o.format == "json") {
        emit(o, dump_json(json{{"command", "k00"},
                               {"mass_ratio", json_number(mu)},
                               {"theta12", geometry.theta12()},
                               {"Z", o.charge},
                               {"value", e.value},
                               {"direct_term", e.direct_term},
                               {"schur_term", e.schur_term},
                               {"error_estimate", e.error_estimate},
                               {"quad_tol", e.tol}},
                          o, "k00"));
    } else {
        std::ostringstream text;
        CsvWriter csv(text);
        csv_meta(csv, o, "k00");
        csv.header({"mass_ratio", "theta12", "Z", "value", "direct_term", "schur_term", "error_estimate", "quad_tol"});
        csv.row({format_double(mu), format_double(geometry.theta12()), format_double(o.charge), format_double(e.value),
                 format_double(e.direct_term), format_double(e.schur_term), format_double(e.error_estimate),
                 format_double(e.tol)});
        emit(o, text.str());
    }
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyFlags {
    VerifyConfig config;
    std::string report;
    bool no_oracle = false;
};

int cmd_verify(VerifyFlags flags) {
    if (flags.config.grid_n < 4) throw UsageError("--grid-n must be at least 4");
    require_positive(flags.config.grid_scale, "--grid-scale");
    require_positive(flags.config.quad_tol, "--quad-tol");
    if (flags.config.oracle.mesh < 200 || flags.config.oracle.mesh % 2 != 0) {
        throw UsageError("--oracle-mesh must be an even number of cells, at least 200");
    }
    flags.config.run_grid_oracle = !flags.no_oracle;

    const auto reports = run_all(flags.config);
    for (const auto& r : reports) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed && !r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << '\n';
    }
    const bool ok = all_passed(reports);
    std::cout << (ok ? "all checks passed" : "some checks failed") << '\n';
    if (!flags.report.empty()) {
        std::ofstream file(flags.report, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open report file '" + flags.report + "'");
        file << verify_report_json(reports, flags.config).dump(2) << '\n';
    }
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------- kernel-dump

struct DumpFlags {
    CommonOptions common;
    std::string sector = "PP";
    std::string block = "t12";
    double k = 1.0;
};

int cmd_kernel_dump(const DumpFlags& flags) {
    const CommonOptions& o = flags.common;
    const double mu = resolve_mass_ratio(o, kInfiniteMass);
    require_positive(o.charge, "--charge");
    validate_grid(o);
    SectorId sector;
    try {
        sector = parse_sector(flags.sector);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    if (flags.block != "t12" && flags.block != "t23" && flags.block != "skeleton") {
        throw UsageError("--block must be t12, t23 or skeleton");
    }
    if (flags.block == "t23" && !has_third_channel(sector)) throw UsageError("sector " + flags.sector + " has no T_23 block");
    if (flags.block == "skeleton" && !(flags.k > threshold_k<double>())) throw UsageError("--k must exceed 1/sqrt(2)");

    const Geometry geometry = derive_geometry({mu, o.charge});
    const auto grid = share(build_grid(QuadratureConfig{o.grid_n, o.grid_scale, parse_map(o.grid_map), o.quad_tol}));
    const SectorSkeleton sk = build_sector(geometry, sector, grid);
    Matrix m;
    std::string label;
    if (flags.block == "t12") {
        m = sk.t12_block.matrix;
        label = sk.t12_block.label;
    } else if (flags.block == "t23") {
        m = sk.t23_block->matrix;
        label = sk.t23_block->label;
    } else {
        m = evaluate_matrix(sk, flags.k);
        label = "S_" + to_string(sector) + "(k=" + format_double(flags.k) + ")";
    }

    std::ostringstream text;
    CsvWriter csv(text);
    csv_meta(csv, o, "kernel-dump");
    csv.comment("label=" + label + " sector=" + to_string(sector) + " mass_ratio=" + format_double(mu) +
                " Z=" + format_double(o.charge) + " grid_n=" + std::to_string(o.grid_n) +
                " grid_scale=" + format_double(o.grid_scale) + " grid_map=" + o.grid_map +
                " entries=sqrt(w_i w_j) K(p_i, p_j), row-major");
    csv.header({"i", "j", "p_i", "p_j", "value"});
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            csv.row({std::to_string(i), std::to_string(j), format_double(grid->nodes[static_cast<std::size_t>(i)]),
                     format_double(grid->nodes[static_cast<std::size_t>(j)]), format_double(m(i, j))});
        }
    }
    emit(o, text.str());
    return 0;
}

// ---------------------------------------------------------------- flag wiring

void add_target_flags(CLI::App* app, CommonOptions& o) {
    app->add_option("--mass-ratio", o.mass_ratio, "Mass ratio M/m of the third particle: a positive number or 'inf'");
    app->add_option("--theta12", o.theta12, "Angle theta_12 in [pi/2, pi), alternative to --mass-ratio");
}

void add_grid_flags(CLI::App* app, CommonOptions& o) {
    app->add_option("--grid-scale", o.grid_scale, "Half-line map scale L")->capture_default_str();
    app->add_option("--grid-map", o.grid_map, "Half-line map")->check(CLI::IsMember({"algebraic", "tangent"}))->capture_default_str();
}

void add_output_flags(CLI::App* app, CommonOptions& o, const std::vector<std::string>& formats) {
    app->add_option("-o,--output", o.output, "Output file (default: stdout)");
    app->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
    app->add_flag("--no-meta", o.no_meta, "Omit the metadata line (the only non-deterministic output)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound states and critical charges of three 1-D particles with delta interactions"};
    app.require_subcommand(1);

    SolveFlags solve;
    auto* solve_cmd = app.add_subcommand("solve", "Bound states per symmetry sector");
    add_target_flags(solve_cmd, solve.common);
    solve_cmd->add_option("--charge", solve.common.charge, "Charge Z of the third particle")->capture_default_str();
    solve_cmd->add_option("--sector", solve.sector, "One of PP, MP, PM, MM (default: all four)");
    auto* grid_n_opt = solve_cmd->add_option("--grid-n", solve.common.grid_n,
                                             "Quadrature nodes N (default 200; 400 when theta_12 > 0.85 pi)");
    add_grid_flags(solve_cmd, solve.common);
    solve_cmd->add_option("--quad-tol", solve.common.quad_tol, "Quadrature tolerance")->capture_default_str();
    solve_cmd->add_option("--k-max", solve.common.k_max, "Upper end of the k scan")->capture_default_str();
    add_output_flags(solve_cmd, solve.common, {"json", "csv"});

    CommonOptions critical;
    bool extended = false;
    auto* critical_cmd = app.add_subcommand("critical", "Upper bound Z_c^ub on the critical charge (default: static third particle)");
    add_target_flags(critical_cmd, critical);
    critical_cmd->add_option("--quad-tol", critical.quad_tol, "Absolute quadrature tolerance on K(0,0)")->capture_default_str();
    critical_cmd->add_flag("--extended", extended, "Also compute Z_c^ub in double-double arithmetic");
    add_output_flags(critical_cmd, critical, {"json", "csv"});

    CurveFlags curve;
    curve.common.format = "csv";
    auto* curve_cmd = app.add_subcommand("curve", "Z_c^ub as a function of theta_12");
    curve_cmd->add_option("--theta-min", curve.theta_min, "First theta_12")->capture_default_str();
    curve_cmd->add_option("--theta-max", curve.theta_max, "Last theta_12")->capture_default_str();
    curve_cmd->add_option("--steps", curve.steps, "Number of theta_12 samples")->capture_default_str();
    curve_cmd->add_option("--quad-tol", curve.common.quad_tol, "Absolute quadrature tolerance on K(0,0)")->capture_default_str();
    add_output_flags(curve_cmd, curve.common, {"json", "csv", "svg"});

    CommonOptions k00_opts;
    auto* k00_cmd = app.add_subcommand("k00", "Evaluate K(0,0) with its direct and subtracted terms");
    add_target_flags(k00_cmd, k00_opts);
    k00_cmd->add_option("--charge", k00_opts.charge, "Charge Z of the third particle")->capture_default_str();
    k00_cmd->add_option("--quad-tol", k00_opts.quad_tol, "Absolute quadrature tolerance")->capture_default_str();
    add_output_flags(k00_cmd, k00_opts, {"json", "csv"});

    VerifyFlags verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run every numerical check; exit 1 if any fails");
    verify_cmd->add_option("--grid-n", verify.config.grid_n, "Quadrature nodes for the discretised checks")->capture_default_str();
    verify_cmd->add_option("--grid-scale", verify.config.grid_scale, "Half-line map scale L")->capture_default_str();
    verify_cmd->add_option("--quad-tol", verify.config.quad_tol, "Quadrature tolerance")->capture_default_str();
    verify_cmd->add_option("--oracle-mesh", verify.config.oracle.mesh, "Finite-difference cells per axis (even)")->capture_default_str();
    verify_cmd->add_flag("--no-oracle", verify.no_oracle, "Skip the finite-difference oracle");
    verify_cmd->add_option("--report", verify.report, "Write a JSON report to this path");

    DumpFlags dump;
    dump.common.format = "csv";
    auto* dump_cmd = app.add_subcommand("kernel-dump", "Dump a discretised block as CSV");
    add_target_flags(dump_cmd, dump.common);
    dump_cmd->add_option("--charge", dump.common.charge, "Charge Z of the third particle")->capture_default_str();
    dump_cmd->add_option("--sector", dump.sector, "Sector")->capture_default_str();
    dump_cmd->add_option("--block", dump.block, "t12, t23 or skeleton")->capture_default_str();
    dump_cmd->add_option("--k", dump.k, "k for --block skeleton")->capture_default_str();
    dump_cmd->add_option("--grid-n", dump.common.grid_n, "Quadrature nodes N")->capture_default_str();
    add_grid_flags(dump_cmd, dump.common);
    dump_cmd->add_option("-o,--output", dump.common.output, "Output file (default: stdout)");
    dump_cmd->add_flag("--no-meta", dump.common.no_meta, "Omit the metadata line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*solve_cmd) {
            solve.grid_n_given = grid_n_opt->count() > 0;
            return cmd_solve(solve);
        }
        if (*critical_cmd) return cmd_critical(critical, extended);
        if (*curve_cmd) return cmd_curve(curve);
        if (*k00_cmd) return cmd_k00(k00_opts);
        if (*verify_cmd) return cmd_verify(verify);
        if (*dump_cmd) return cmd_kernel_dump(dump);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
