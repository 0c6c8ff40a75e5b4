#ifndef ISOCOULOMB_TOOLS_COMMANDS_HPP
#define ISOCOULOMB_TOOLS_COMMANDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "export_format.hpp"

namespace isocoulomb::tools {

// One CLI invocation's worth of settings.  Grid semantics differ by
// subcommand: potential/states/figures treat (r_min, r_max, points) as a
// plotting mesh; spectrum/verify use r_min as the eigensolver spacing h
// with n = round(r_max / h) mesh points (so the Dirichlet ghost sits at
// r = 0), ignoring `points`.
struct RunConfig {
    std::string subcommand; // potential | states | spectrum | verify | figures
    int l = 1;
    std::vector<double> gammas;
    double r_min = 0.01;
    double r_max = 15.0;
    int points = 1500;
    int k = 4;
    std::string format = "csv"; // csv | json
    std::string out_path;       // empty = stdout; for figures: output directory
    bool allow_singular = false;
    double tolerance = 1e-5;
};

// Default radial box for the eigensolver subcommands when --r-max is not
// given: 18 per deepest requested target level (a critical gamma shifts the
// tower one level deeper), floored at 60 so the standard four-level check
// keeps its canonical box.  Invalid l/gamma leave the floor untouched; the
// command itself reports the configuration error.
double default_r_max(const RunConfig& cfg);

// Each renderer returns the full output file content (CSV or JSON per
// config), throwing std::invalid_argument for bad configs and the core's
// numerical exceptions for runtime failures.
std::string render_potential(const RunConfig& cfg);
std::string render_states(const RunConfig& cfg);
std::string render_spectrum(const RunConfig& cfg);
std::string render_verify(const RunConfig& cfg);

// figures: fixed canonical parameter set; returns (filename, content) in
// emission order: fig1.csv, fig2.csv, manifest.json.
std::vector<std::pair<std::string, std::string>> render_figures();

// Dispatch + output writing + exception-to-exit-code mapping:
// 0 success, 2 invalid configuration (including singular gamma and
// unwritable paths), 3 numerical failure.  On failure prints a single-line
// JSON object to stderr.
int run_command(const RunConfig& cfg);

// Exit code a given in-flight exception maps to (2 or 3).
int exit_code_for_current_exception();

} // namespace isocoulomb::tools

#endif
