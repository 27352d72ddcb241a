#pragma once

#include "orbhodge/report.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace orbhodge::cli {

enum ExitCode : int { exit_pass = 0, exit_check_failed = 1, exit_invalid_input = 2 };

struct Options {
    std::string file;
    bool json = false;
    bool timing = false;
    /// One sample point per entry, coordinates comma-separated.
    std::vector<std::string> samples;
    std::vector<std::string> coeffs;
    long order = 1;
    std::vector<long> exponents;
};

struct RunReport {
    std::string command;
    Status verdict = Status::pass;
    std::vector<Finding> items;
    /// Command-specific payload (dual vertices, candidates, age, ...).
    nlohmann::json result = nlohmann::json::object();
    double timing_ms = 0;
};

/// Verdict is fail if any item failed, else caveat if any item is a caveat.
RunReport make_run_report(std::string command, const Report &r, nlohmann::json result = nlohmann::json::object());

nlohmann::json to_json(const RunReport &r, bool with_timing);
std::string render_text(const RunReport &r, bool with_timing);

/// The individual commands. Invalid input throws InputError.
RunReport cmd_dual(const Options &opt);
RunReport cmd_hlc(const Options &opt);
RunReport cmd_check_hs(const Options &opt);
RunReport cmd_check_pmhs(const Options &opt);
RunReport cmd_check_orbifold(const Options &opt);
RunReport cmd_orbit(const Options &opt);
RunReport cmd_age(const Options &opt);

/// Runs one command, writes the report to `out` and diagnostics to `err`,
/// and returns the exit code.
int run_command(const std::string &command, const Options &opt, std::ostream &out, std::ostream &err);

} // namespace orbhodge::cli
