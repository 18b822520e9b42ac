// Recovery of a W-bandlimited signal from observations with a missing
// spatial region T and additive noise.
//
// Received-signal model: r = f + n off T, r = 0 on T. When
// |T| * |W| < N_px the operator I - S_T F_W is invertible, recovery is
// unique, and the Neumann iteration
//
//   s(0) = r,   s(n+1) = r + S_T F_W s(n)
//
// converges geometrically at rate rho = sqrt(|T| |W| / N_px) to
// Q r = (I - S_T F_W)^{-1} r with ||f - Q r|| <= (1 - rho)^{-1} ||n||.

#pragma once

#include <optional>
#include <vector>

#include "qsr/limiting.hpp"
#include "qsr/qsignal.hpp"

namespace qsr {

struct RecoveryProblem {
    QSignal2D received;  // zero on T
    LimitingPair pair;   // T = missing region, W = band
    double noise_norm = 0.0;
    int max_iters = 0;
    double tol = 0.0;
    double rho = 0.0;
    bool guarantee = false;  // |T| * |W| < N_px, exact integer comparison
    std::optional<QSignal2D> truth;  // ground truth when simulated, for error tracking
};

struct RecoveryReport {
    QSignal2D recovered;
    int iterations_run = 0;
    std::vector<double> residual_history;    // ||s(n) - s(n-1)||
    std::vector<double> true_error_history;  // ||s(n) - f||, empty without ground truth
    double rho = 0.0;
    std::optional<double> error_bound_c;  // (1 - rho)^{-1} when rho < 1
    bool converged = false;
};

/// Strict discrete uniqueness / convergence-guarantee condition
/// |T| * |W| < N_px (integer arithmetic; the boundary case is excluded).
bool uniqueness_certificate(const LimitingPair& pair);

/// (1 - rho)^{-1} when the guarantee holds, nullopt otherwise.
std::optional<double> error_bound_c(const LimitingPair& pair);

/// Build a problem from an already-received signal. The received signal is
/// forced to zero on T (the model's definition). max_iters <= 0 and
/// tol <= 0 select the defaults: tol = 1e-9 * ||r|| and a budget of
/// 10 * ceil(log(1e-9)/log(rho)) iterations when rho < 1, else 10000.
RecoveryProblem make_problem(QSignal2D received, LimitingPair pair, double noise_norm = 0.0,
                             int max_iters = 0, double tol = 0.0);

/// r = (f + n) off T, 0 on T. Requires f W-bandlimited
/// (||f - F_W f|| < 1e-8), else throws "not-bandlimited". Records the
/// realized ||n|| and keeps f as ground truth for error tracking.
RecoveryProblem simulate_received(const QSignal2D& f, const LimitingPair& pair,
                                  const QSignal2D* noise = nullptr, int max_iters = 0,
                                  double tol = 0.0);

/// Run the iteration until the successive-difference norm drops below tol
/// or the budget runs out. Runs even without the guarantee; the report
/// flags non-convergence instead of refusing.
RecoveryReport recover(const RecoveryProblem& problem);

}  // namespace qsr
