#include "CLI11.hpp"

#include "commands.hpp"

#include <iostream>
#include <string>
#include <vector>

namespace {

using isocoulomb::tools::RunConfig;

void add_common_options(CLI::App* sub, RunConfig& cfg, bool solver_defaults) {
    sub->add_option("--l", cfg.l, "angular momentum of the factorized problem (>= 1)")
        ->capture_default_str();
    sub->add_option("--gamma", cfg.gammas,
                    "deformation parameter(s), comma separated (e.g. 0.3,1,-1)")
        ->delimiter(',');
    if (solver_defaults) {
        sub->add_option("--r-min", cfg.r_min, "mesh spacing h; mesh points are (i+1)*h "
                                              "(default 0.01)");
        sub->add_option("--r-max", cfg.r_max, "radial box size; mesh size n = round(r-max/h) "
                                              "(default scales with the deepest target level; "
                                              "60 for the standard four)");
    } else {
        sub->add_option("--r-min", cfg.r_min, "first radius of the output mesh")
            ->capture_default_str();
        sub->add_option("--r-max", cfg.r_max, "last radius of the output mesh")
            ->capture_default_str();
        sub->add_option("--points", cfg.points, "number of mesh points")->capture_default_str();
    }
    sub->add_option("--k", cfg.k, "number of states / eigenvalues per gamma")
        ->capture_default_str();
    sub->add_option("--format", cfg.format, "output format: csv or json (verify defaults json)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out_path, "output file (default: standard output)");
    sub->add_flag("--allow-singular", cfg.allow_singular,
                  "evaluate gammas in the singular band [0, gamma_c) anyway");
    sub->add_option("--tolerance", cfg.tolerance, "pass/fail residual tolerance (verify)")
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"isocoulomb: one-parameter isospectral deformations of the radial "
                 "Coulomb problem (deformed potentials, extra bound state, and an "
                 "independent finite-difference spectral check)"};
    app.require_subcommand(1);

    RunConfig cfg;

    CLI::App* potential = app.add_subcommand(
        "potential", "tabulate the deformed potential family against the Coulomb reference");
    CLI::App* states = app.add_subcommand(
        "states", "tabulate the extra bound state (and transformed states n = l+1..l+k-1)");
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "lowest k finite-difference eigenvalues per gamma on a single mesh");
    CLI::App* verify = app.add_subcommand(
        "verify", "two-mesh Richardson-extrapolated eigenvalues vs the exact -1/n^2 targets");
    CLI::App* figures = app.add_subcommand(
        "figures", "emit the canonical fig1.csv / fig2.csv / manifest.json set "
                   "(--out names the output directory)");

    add_common_options(potential, cfg, false);
    add_common_options(states, cfg, false);
    add_common_options(spectrum, cfg, true);
    add_common_options(verify, cfg, true);
    figures->add_option("--out", cfg.out_path, "output directory (default: current directory)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        nlohmann::json err;
        err["error"] = {{"code", 2}, {"kind", "config"}, {"message", std::string(e.what())}};
        std::cerr << err.dump() << "\n";
        return 2;
    }

    CLI::App* active = app.get_subcommands().front();
    cfg.subcommand = active->get_name();
    // eigensolver subcommands get the wider default box and JSON reports
    if (cfg.subcommand == "spectrum" || cfg.subcommand == "verify") {
        if (active->count("--r-max") == 0)
            cfg.r_max = isocoulomb::tools::default_r_max(cfg);
        if (cfg.subcommand == "verify" && active->count("--format") == 0) cfg.format = "json";
    }
    return isocoulomb::tools::run_command(cfg);
}
