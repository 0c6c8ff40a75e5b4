#include "commands.hpp"

#include "isocoulomb/errors.hpp"
#include "isocoulomb/factorization.hpp"
#include "isocoulomb/grid.hpp"
#include "isocoulomb/potential.hpp"
#include "isocoulomb/quadrature.hpp"
#include "isocoulomb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace isocoulomb::tools {

namespace {

const char* mode_name(GammaMode m) {
    switch (m) {
    case GammaMode::Regular: return "regular";
    case GammaMode::Critical: return "critical";
    default: return "singular";
    }
}

} // namespace

double default_r_max(const RunConfig& cfg) {
    int n_deep = cfg.l + cfg.k - 1;
    try {
        for (double g : cfg.gammas) {
            if (classify_gamma(cfg.l, g) == GammaMode::Critical) {
                ++n_deep;
                break;
            }
        }
    } catch (...) {
        // invalid l or gamma: the renderer owns the error message
    }
    return std::max(60.0, 18.0 * n_deep);
}

namespace {

std::vector<FactorizationParams> family_params(const RunConfig& cfg, bool singular_ok) {
    if (cfg.gammas.empty())
        throw std::invalid_argument(cfg.subcommand + ": needs at least one --gamma value");
    if (cfg.l < 1)
        throw std::invalid_argument(cfg.subcommand + ": needs --l >= 1");
    std::vector<FactorizationParams> ps;
    ps.reserve(cfg.gammas.size());
    for (double g : cfg.gammas) {
        FactorizationParams p = FactorizationParams::make(cfg.l, g);
        if (p.mode == GammaMode::Singular && !singular_ok)
            throw std::invalid_argument(
                cfg.subcommand + ": gamma=" + format_double(g) + " lies in the singular band [0, " +
                format_double(p.gamma_crit) + ") for l=" + std::to_string(cfg.l) +
                (cfg.subcommand == "potential" || cfg.subcommand == "spectrum"
                     ? "; pass --allow-singular to evaluate anyway"
                     : ""));
        ps.push_back(p);
    }
    return ps;
}

RadialGrid plot_grid(const RunConfig& cfg) {
    return RadialGrid(cfg.r_min, cfg.r_max, cfg.points);
}

// Eigensolver mesh: r_i = (i+1) h with h = cfg.r_min (see RunConfig note).
RadialGrid solver_grid(const RunConfig& cfg) {
    return RadialGrid::from_spacing(cfg.r_min, cfg.r_max);
}

nlohmann::json base_params(const RunConfig& cfg) {
    nlohmann::json jp;
    jp["subcommand"] = cfg.subcommand;
    jp["l"] = cfg.l;
    jp["gamma"] = cfg.gammas;
    jp["r_min"] = cfg.r_min;
    jp["r_max"] = cfg.r_max;
    return jp;
}

std::string emit(const RunConfig& cfg, const Table& table, const nlohmann::json& params,
                 const nlohmann::json& diagnostics) {
    if (cfg.format == "csv") return to_csv(table);
    if (cfg.format == "json") return table_json(params, table, diagnostics).dump(2) + "\n";
    throw std::invalid_argument("unknown output format '" + cfg.format + "' (use csv or json)");
}

struct StateColumn {
    std::string name;
    std::vector<double> values;
};

} // namespace

std::string render_potential(const RunConfig& cfg) {
    const auto ps = family_params(cfg, cfg.allow_singular);
    const RadialGrid grid = plot_grid(cfg);
    const auto radii = grid.points();

    Table t;
    t.columns = {"r", "V_coulomb"};
    std::vector<PotentialSpec> specs;
    for (const auto& p : ps) {
        t.columns.push_back("V_gamma=" + format_double(p.gamma));
        specs.push_back(PotentialSpec::deformed(p, cfg.allow_singular));
    }
    const PotentialSpec coulomb = PotentialSpec::coulomb_effective(cfg.l - 1);

    t.rows.reserve(radii.size());
    for (double r : radii) {
        std::vector<double> row;
        row.reserve(2 + specs.size());
        row.push_back(r);
        row.push_back(coulomb(r));
        for (const auto& v : specs) row.push_back(v(r));
        t.rows.push_back(std::move(row));
    }

    nlohmann::json jp = base_params(cfg);
    jp["points"] = cfg.points;
    jp["allow_singular"] = cfg.allow_singular;
    nlohmann::json jd;
    for (const auto& p : ps) jd["gamma_modes"].push_back(mode_name(p.mode));
    jd["coulomb_reference_l"] = cfg.l - 1;
    return emit(cfg, t, jp, jd);
}

std::string render_states(const RunConfig& cfg) {
    // Missing state is undefined on the singular band, override or not.
    const auto ps = family_params(cfg, false);
    if (cfg.k < 1) throw std::invalid_argument("states: needs --k >= 1");
    const RadialGrid grid = plot_grid(cfg);
    const auto radii = grid.points();

    std::vector<StateColumn> cols;
    nlohmann::json ground_norms = nlohmann::json::array();
    nlohmann::json non_normalizable = nlohmann::json::array();

    for (const auto& p : ps) {
        const std::string tag = "Rtilde_gamma=" + format_double(p.gamma);
        MissingState ground(p);
        StateColumn gcol;
        gcol.name = ground.normalizable() ? tag : tag + "_unnormalizable";
        gcol.values.reserve(radii.size());
        for (double r : radii) gcol.values.push_back(ground(r));
        cols.push_back(std::move(gcol));
        if (ground.normalizable()) {
            // re-integrate the emitted state as a plumbing check
            auto density = [&ground](double r) {
                const double v = r > 0 ? ground(r) : 0.0;
                return 4.0 * 3.14159265358979323846 * v * v * r * r;
            };
            ground_norms.push_back(integrate_decaying(density, 0.0, 10.0 * p.l));
        } else {
            ground_norms.push_back(nullptr);
            non_normalizable.push_back(format_double(p.gamma));
        }
        for (int n = p.l + 1; n <= p.l + cfg.k - 1; ++n) {
            const QuantumNumbers qn(n, p.l);
            StateColumn tcol;
            tcol.name = tag + "_n=" + std::to_string(n);
            tcol.values.reserve(radii.size());
            for (double r : radii) tcol.values.push_back(transformed_state(p, qn, r));
            cols.push_back(std::move(tcol));
        }
    }

    Table t;
    t.columns = {"r"};
    for (const auto& c : cols) t.columns.push_back(c.name);
    t.rows.reserve(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        std::vector<double> row;
        row.reserve(1 + cols.size());
        row.push_back(radii[i]);
        for (const auto& c : cols) row.push_back(c.values[i]);
        t.rows.push_back(std::move(row));
    }

    nlohmann::json jp = base_params(cfg);
    jp["points"] = cfg.points;
    jp["k"] = cfg.k;
    nlohmann::json jd;
    jd["ground_norms"] = ground_norms;
    jd["non_normalizable"] = non_normalizable;
    for (const auto& p : ps) jd["gamma_modes"].push_back(mode_name(p.mode));
    return emit(cfg, t, jp, jd);
}

std::string render_spectrum(const RunConfig& cfg) {
    const auto ps = family_params(cfg, cfg.allow_singular);
    if (cfg.k < 1) throw std::invalid_argument("spectrum: needs --k >= 1");
    const RadialGrid grid = solver_grid(cfg);
    if (cfg.k > grid.n_points)
        throw std::invalid_argument("spectrum: k exceeds mesh size");

    Table t;
    t.columns = {"gamma", "index", "eigenvalue"};
    for (const auto& p : ps) {
        const SpectralProblem problem =
            discretize(PotentialSpec::deformed(p, cfg.allow_singular), grid);
        const auto eig = lowest_eigenvalues(problem, cfg.k);
        for (int j = 0; j < cfg.k; ++j)
            t.rows.push_back({p.gamma, static_cast<double>(j), eig[j]});
    }

    nlohmann::json jp = base_params(cfg);
    jp["k"] = cfg.k;
    jp["h"] = grid.spacing();
    jp["n_points"] = grid.n_points;
    nlohmann::json jd;
    for (const auto& p : ps) jd["gamma_modes"].push_back(mode_name(p.mode));
    return emit(cfg, t, jp, jd);
}

std::string render_verify(const RunConfig& cfg) {
    const auto ps = family_params(cfg, false);
    if (cfg.k < 1) throw std::invalid_argument("verify: needs --k >= 1");
    const RadialGrid grid = solver_grid(cfg);

    Table t;
    t.columns = {"gamma", "n", "target", "eigenvalue_2h", "eigenvalue_h",
                 "extrapolated", "residual", "convergence_order", "pass"};
    bool all_pass = true;
    nlohmann::json modes = nlohmann::json::array();
    for (const auto& p : ps) {
        const SpectrumReport rep = verify_isospectral(p, grid, cfg.k);
        modes.push_back(mode_name(rep.mode));
        for (int j = 0; j < cfg.k; ++j) {
            const bool pass = rep.residuals[j] <= cfg.tolerance;
            all_pass = all_pass && pass;
            t.rows.push_back({p.gamma, static_cast<double>(rep.principal_numbers[j]),
                              rep.targets[j], rep.eigenvalues_2h[j], rep.eigenvalues_h[j],
                              rep.eigenvalues[j], rep.residuals[j], rep.convergence_orders[j],
                              pass ? 1.0 : 0.0});
        }
    }

    nlohmann::json jp = base_params(cfg);
    jp["k"] = cfg.k;
    jp["h"] = grid.spacing();
    jp["n_points"] = grid.n_points;
    jp["tolerance"] = cfg.tolerance;
    nlohmann::json jd;
    jd["all_pass"] = all_pass;
    jd["gamma_modes"] = modes;
    return emit(cfg, t, jp, jd);
}

std::vector<std::pair<std::string, std::string>> render_figures() {
    RunConfig base;
    base.l = 1;
    base.r_min = 0.01;
    base.r_max = 15.0;
    base.points = 1500;
    base.format = "csv";

    RunConfig fig1 = base;
    fig1.subcommand = "potential";
    fig1.gammas = {0.251, 0.3, 0.5, 1.0, 5.0, -1.0, 0.25};
    const std::string fig1_csv = render_potential(fig1);

    RunConfig fig2 = base;
    fig2.subcommand = "states";
    fig2.gammas = {0.251, 0.3, 0.5, 1.0, 5.0, -1.0};
    fig2.k = 1; // ground states only
    const std::string fig2_csv = render_states(fig2);

    // unit-norm check of each fig2 ground state, reported in the manifest
    nlohmann::json norms;
    for (double g : fig2.gammas) {
        const MissingState state(FactorizationParams::make(1, g));
        auto density = [&state](double r) {
            const double v = r > 0 ? state(r) : 0.0;
            return 4.0 * 3.14159265358979323846 * v * v * r * r;
        };
        norms["gamma=" + format_double(g)] = integrate_decaying(density, 0.0, 10.0);
    }

    nlohmann::json manifest;
    manifest["params"] = {{"l", 1},
                          {"gamma_fig1", fig1.gammas},
                          {"gamma_fig2", fig2.gammas},
                          {"r_min", base.r_min},
                          {"r_max", base.r_max},
                          {"points", base.points}};
    manifest["files"] = {{{"name", "fig1.csv"},
                          {"bytes", fig1_csv.size()},
                          {"fnv1a64", fnv1a64_hex(fig1_csv)}},
                         {{"name", "fig2.csv"},
                          {"bytes", fig2_csv.size()},
                          {"fnv1a64", fnv1a64_hex(fig2_csv)}}};
    manifest["diagnostics"] = {{"fig2_ground_norms", norms}};

    return {{"fig1.csv", fig1_csv},
            {"fig2.csv", fig2_csv},
            {"manifest.json", manifest.dump(2) + "\n"}};
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output path: " + path.string());
    f << content;
    f.flush();
    if (!f) throw std::invalid_argument("write failed: " + path.string());
}

void write_output(const RunConfig& cfg, const std::string& content) {
    if (cfg.out_path.empty()) {
        std::cout << content;
        return;
    }
    write_file(cfg.out_path, content);
}

} // namespace

int exit_code_for_current_exception() {
    try {
        throw;
    } catch (const DenominatorVanishing&) {
        return 3;
    } catch (const NumericalFailure&) {
        return 3;
    } catch (const std::invalid_argument&) {
        return 2;
    } catch (const std::overflow_error&) {
        return 2; // requested parameters outside representable range
    } catch (const std::exception&) {
        return 3;
    }
}

int run_command(const RunConfig& cfg) {
    try {
        if (cfg.subcommand == "potential") {
            write_output(cfg, render_potential(cfg));
        } else if (cfg.subcommand == "states") {
            write_output(cfg, render_states(cfg));
        } else if (cfg.subcommand == "spectrum") {
            write_output(cfg, render_spectrum(cfg));
        } else if (cfg.subcommand == "verify") {
            write_output(cfg, render_verify(cfg));
        } else if (cfg.subcommand == "figures") {
            const std::filesystem::path dir = cfg.out_path.empty() ? "." : cfg.out_path;
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            if (ec) throw std::invalid_argument("cannot create output directory: " + dir.string());
            for (const auto& [name, content] : render_figures())
                write_file(dir / name, content);
        } else {
            throw std::invalid_argument("unknown subcommand '" + cfg.subcommand + "'");
        }
        return 0;
    } catch (const std::exception& e) {
        const int code = exit_code_for_current_exception();
        nlohmann::json err;
        err["error"] = {{"code", code},
                        {"kind", code == 2 ? "config" : "numerical"},
                        {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return code;
    }
}

} // namespace isocoulomb::tools
