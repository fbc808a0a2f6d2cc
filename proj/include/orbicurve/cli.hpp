#pragma once

#include "orbicurve/io.hpp"
#include "orbicurve/suites.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace orbicurve {

enum class Command { Cohomology, Convexity, Rank, Sign, Wps, SeriesVerify, Verify };

std::string_view to_string(Command c) noexcept;

struct JobSpec {
    Command command = Command::Cohomology;
    std::optional<ParsedInput> input;
    bool json = false;
    bool timing = false;
    std::uint64_t seed = 1;
    std::int64_t order = 4;

    std::string wps_action;    // sectors | pairing | verify
    std::string suite;         // verify: a suite name or "all"
    std::optional<std::int64_t> max_a, max_l, min_d, max_d, max_len;
    std::optional<std::uint64_t> trials;
    std::optional<std::string> beta_detE, g1, g2;
};

/// 0: success, 1: a check or suite failed, 2: input error.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2 };

struct Report {
    Json body;
    int exit_code = kExitOk;
};

/// Throws InputError / std::invalid_argument on bad input; module errors
/// propagate unchanged.
Report run(const JobSpec& job);

/// Text rendering: one aligned "key  value" line per scalar, tables for
/// arrays of objects.
std::string render_text(const Json& body);

/// Full command line front end. Writes the report to out, diagnostics to err
/// and returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace orbicurve
