#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace dirsym::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
    std::string subcommand;
    std::string model;              // zoo name or model file
    std::optional<double> mass;
    bool massless = false;
    std::string symmetry;
    std::string format = "markdown";
    double tol = 1e-10;
    unsigned seed = 42;
    int max_degree = 0;
    std::string momentum;           // comma-separated reals
};

/// Parses and dispatches; reports go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on a verification mismatch, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dirsym::cli
