#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "transurf/method.hpp"

namespace transurf {

enum class Command { implicitize, check, mubasis };
enum class OutputFormat { text, json, latex };

struct JobConfig {
    Command command = Command::implicitize;
    std::string input_path;
    /// Overrides the job file; automatic when neither is given.
    std::optional<Method> method;
    /// Overrides the job file; 25 when neither is given.
    std::optional<unsigned> verify_samples;
    OutputFormat format = OutputFormat::text;
    bool show_intermediates = false;
    std::uint64_t seed = 0;
    bool run_basepoint_diagnostic = false;
    double tol = 1e-9;
};

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitPipeline = 3;

/// Runs one job. The report goes to `out`, errors to `err` (as a JSON object
/// when the format is json). Returns 0, 2 for invalid input or 3 when the
/// pipeline fails.
int run(const JobConfig &config, std::ostream &out, std::ostream &err);

} // namespace transurf
