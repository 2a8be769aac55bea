#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace framedual::cli {

// One parsed invocation. `command` is one of: classify, dual-window,
// wexler-raz, figa, duality, superframe, multiframe, rep-info, gen-window.
struct RunConfig {
    std::string command;
    std::vector<std::string> window_paths;  // --window, repeatable
    std::string lattice_spec;               // --lattice
    std::string group_path;                 // --group
    int L = 0;                              // --L
    std::uint64_t seed = 42;                // --seed
    double tolerance = 1e-8;                // --tol
    int count = 2;                          // --count, windows for super/multiframe
    std::string kind = "random";            // --kind, for gen-window
    std::string out_path;                   // --out, stdout when empty
};

// Executes one command; writes a JSON report to out_path (or stdout).
// Returns 0 on success/pass, 1 when a theorem check fails, 2 on input
// errors (malformed files, bad specs, module errors).
int run(const RunConfig& config);

}  // namespace framedual::cli
