// Test-signal synthesis, PGM/PPM image ingestion/export, and metric
// serialization — the supporting engineering for the recovery experiments.
//
// Grayscale pixels embed into the scalar part, RGB into the pure-vector
// part (0, R, G, B), samples scaled by 1/maxval.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsr/qsignal.hpp"
#include "qsr/recovery.hpp"

namespace qsr {

struct ImageBuffer {
    int rows = 0;
    int cols = 0;
    int channels = 1;  // 1 = gray, 3 = RGB
    int maxval = 255;  // 255 or 65535
    std::vector<std::uint16_t> samples;  // row-major, interleaved
};

/// Binary PGM (P5) / PPM (P6), maxval up to 65535 (16-bit stored
/// big-endian per the format).
ImageBuffer read_pnm(const std::string& path);
void write_pnm(const ImageBuffer& img, const std::string& path);

QSignal2D image_to_qsignal(const ImageBuffer& img);

enum class RenderMode { scalar, vector, modulus };

/// Clamp components to [0, 1], quantize to maxval levels. Modulus mode
/// emits |q| per cell as grayscale (the error-map rendering).
ImageBuffer qsignal_to_image(const QSignal2D& f, RenderMode mode, int maxval = 255);

/// F_W f for the given band; the canonical construction of a truly
/// bandlimited signal. Idempotent.
QSignal2D bandlimit_project(const QSignal2D& f, const MaskSpec& band);

/// Unit-norm signal with a seed-deterministic random spectrum supported on
/// the band.
QSignal2D synth_bandlimited(int rows, int cols, const MaskSpec& band, std::uint64_t seed);

/// Bandlimited texture with all components shifted into [0.05, 0.95] so it
/// renders as an image. DC must lie in the band for the shift to survive
/// projection; the experiment pipeline re-projects regardless.
QSignal2D synth_texture(int rows, int cols, const MaskSpec& band, std::uint64_t seed);

/// Component-wise random field scaled so that the realized l2 norm equals
/// target_norm exactly.
QSignal2D synth_noise(int rows, int cols, double target_norm, std::uint64_t seed);

/// Comma-delimited per-iteration records (iter, residual, true_error — nan
/// when no ground truth) followed by a '#'-prefixed summary line with rho,
/// the error-bound constant, convergence flag and iteration count. Doubles
/// are printed with enough digits to parse back exactly.
void write_metrics(const RecoveryReport& report, const std::string& path);

}  // namespace qsr
