// Experiment configuration and the end-to-end recovery pipeline:
// load or synthesize an input, project onto the band, remove the missing
// region (plus optional noise), run the iteration, and write the four
// figure panels (original / received / recovered / error map) together
// with a metrics file.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsr/qsignal.hpp"
#include "qsr/recovery.hpp"

namespace qsr {

struct ExperimentConfig {
    int rows = 64;
    int cols = 64;
    std::optional<MaskSpec> band;     // W, required
    std::optional<MaskSpec> missing;  // T, required
    double noise = 0.0;               // target ||n||; 0 disables noise
    std::uint64_t seed = 1;
    int max_iters = 0;  // 0 = auto
    double tol = 0.0;   // 0 = auto
    std::string input;  // optional PGM/PPM path; empty = synthetic texture
    std::string out_dir = "out";
};

/// "block:r0,c0,h,w" | "centered-rect:hr,hc" | "disc:r,c,radius" |
/// "explicit:r,c;r,c;..." (empty cell list allowed).
MaskSpec parse_mask_spec(const std::string& text);

/// Flat key=value file, '#' comments. Unknown keys are errors.
ExperimentConfig load_config(const std::string& path);

struct ExperimentOutcome {
    RecoveryReport report;
    bool guarantee = false;
    double rho = 0.0;
    int status = 0;  // 0 converged with guarantee, 2 otherwise
    std::vector<std::string> artifacts;
};

ExperimentOutcome run_recover(const ExperimentConfig& config);

}  // namespace qsr
