#pragma once

// The command-line subcommands as library functions. Each writes JSON lines
// to `out` and returns the process exit code: 0 clean, 1 law violations or
// oracle disagreement, 2 unreadable input.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace lawvere {

struct RunConfig {
    std::string input;
    std::size_t max_iter = 10000;
    std::optional<double> tolerance;
    std::uint64_t seed = 0;
    std::string schedule = "unweighted";  // or "dijkstra"
    std::size_t grid = 1000;
};

int cmd_validate(const RunConfig& cfg, std::ostream& out);
int cmd_flow(const RunConfig& cfg, std::ostream& out);
int cmd_sections(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_des(const RunConfig& cfg, std::ostream& out);
int cmd_paths(const RunConfig& cfg, std::ostream& out);
int cmd_prefs(const RunConfig& cfg, std::ostream& out);

/// Dispatches by name; unknown names exit 2.
int run_command(const std::string& name, const RunConfig& cfg, std::ostream& out);

}  // namespace lawvere
