// Epsilon-concentration measurement and the measurable-set uncertainty
// bound: for a unit-norm signal eps_T-concentrated on T whose spectrum is
// eps_W-concentrated on W,
//
//   |T| * |W| / N_px >= max(0, 1 - eps_T - eps_W)^2.
//
// The optimal vanishing-outside-T approximant is the masked signal itself
// (masking is an orthogonal projection), so eps_T = ||f - S_T f|| and
// eps_W = ||F{f} - chi_W F{f}|| for normalized f.

#pragma once

#include "qsr/limiting.hpp"
#include "qsr/qsignal.hpp"

namespace qsr {

struct ConcentrationReport {
    double eps_t = 0.0;
    double eps_w = 0.0;
    long t_count = 0;
    long w_count = 0;
    long n_px = 0;
    double bound_lhs = 0.0;  // t_count * w_count / n_px
    double bound_rhs = 0.0;  // max(0, 1 - eps_t - eps_w)^2
};

/// Concentration of f (normalized internally) on the pair's sets.
/// Throws "degenerate" for the zero signal.
ConcentrationReport concentration(const QSignal2D& f, const LimitingPair& pair);

struct UncertaintyCheck {
    bool holds = false;
    double margin = 0.0;  // bound_lhs - bound_rhs
};

/// Whether the report satisfies the bound within 1e-9 tolerance.
UncertaintyCheck check_uncertainty(const ConcentrationReport& report);

/// Compact-support corollary: eps_t, eps_w < 1e-10 forces
/// t_count * w_count >= N_px. Vacuously true when the supports are not
/// compact at that tolerance.
bool corollary_support(const QSignal2D& f, const LimitingPair& pair);

}  // namespace qsr
