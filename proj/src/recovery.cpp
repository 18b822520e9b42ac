#include "qsr/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace qsr {

namespace {

int default_max_iters(double rho, bool guarantee) {
    if (!guarantee) return 10000;
    if (rho <= 0.0) return 16;
    const double needed = std::log(1e-9) / std::log(rho);
    const double budget = 10.0 * std::ceil(needed);
    return static_cast<int>(std::clamp(budget, 16.0, 10000.0));
}

}  // namespace

bool uniqueness_certificate(const LimitingPair& pair) {
    return pair.t_mask().count() * pair.w_mask().count() < pair.n_px();
}

std::optional<double> error_bound_c(const LimitingPair& pair) {
    if (!uniqueness_certificate(pair)) return std::nullopt;
    return 1.0 / (1.0 - hs_norm(pair));
}

RecoveryProblem make_problem(QSignal2D received, LimitingPair pair, double noise_norm,
                             int max_iters, double tol) {
    if (received.rows() != pair.rows() || received.cols() != pair.cols())
        throw std::invalid_argument("shape: received signal differs from pair");
    // r(x) = 0 on T by definition of the model
    for (int r = 0; r < received.rows(); ++r)
        for (int c = 0; c < received.cols(); ++c)
            if (pair.t_mask().contains(r, c)) received.at(r, c) = Quaternion{};

    RecoveryProblem problem{std::move(received), std::move(pair), noise_norm,
                            0,  0.0, 0.0, false, std::nullopt};
    problem.rho = hs_norm(problem.pair);
    problem.guarantee = uniqueness_certificate(problem.pair);
    problem.tol = tol > 0.0 ? tol : 1e-9 * l2_norm(problem.received);
    problem.max_iters =
        max_iters > 0 ? max_iters : default_max_iters(problem.rho, problem.guarantee);
    return problem;
}

RecoveryProblem simulate_received(const QSignal2D& f, const LimitingPair& pair,
                                  const QSignal2D* noise, int max_iters, double tol) {
    if (f.rows() != pair.rows() || f.cols() != pair.cols())
        throw std::invalid_argument("shape: signal dimensions differ from pair");
    if (l2_norm(f - freq_limit(f, pair)) >= 1e-8)
        throw std::invalid_argument("not-bandlimited: ||f - F_W f|| >= 1e-8");

    QSignal2D observed = f;
    double noise_norm = 0.0;
    if (noise != nullptr) {
        observed = f + *noise;  // shape checked by operator+
        noise_norm = l2_norm(*noise);
    }
    RecoveryProblem problem =
        make_problem(std::move(observed), pair, noise_norm, max_iters, tol);
    problem.truth = f;
    return problem;
}

RecoveryReport recover(const RecoveryProblem& problem) {
    RecoveryReport report;
    report.rho = problem.rho;
    report.error_bound_c = error_bound_c(problem.pair);

    QSignal2D current = problem.received;  // s(0) = r
    for (int n = 1; n <= problem.max_iters; ++n) {
        QSignal2D next = problem.received + compose_st_fw(current, problem.pair);
        const double residual = l2_norm(next - current);
        report.residual_history.push_back(residual);
        current = std::move(next);
        report.iterations_run = n;
        if (problem.truth) report.true_error_history.push_back(l2_norm(current - *problem.truth));
        if (residual <= problem.tol) {
            report.converged = true;
            break;
        }
    }
    report.recovered = std::move(current);
    return report;
}

}  // namespace qsr
