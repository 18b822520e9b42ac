#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qsr/recovery.hpp"
#include "qsr/rng.hpp"
#include "qsr/synth_io.hpp"

using namespace qsr;

namespace {

// 8x8 setup with |T| = |W| = 4, rho = sqrt(16/64) = 0.5
LimitingPair half_rho_pair() {
    return LimitingPair(mask_from_spec(mask_spec::Block{3, 3, 2, 2}, 8, 8),
                        mask_from_spec(mask_spec::Block{0, 0, 2, 2}, 8, 8));
}

QSignal2D bandlimited_signal(std::uint64_t seed = 41) {
    return synth_bandlimited(8, 8, mask_spec::Block{0, 0, 2, 2}, seed);
}

}  // namespace

TEST_CASE("simulate_received") {
    const QSignal2D f = bandlimited_signal();

    const LimitingPair no_t(Mask(8, 8), mask_from_spec(mask_spec::Block{0, 0, 2, 2}, 8, 8));
    const RecoveryProblem clean = simulate_received(f, no_t);
    CHECK(max_abs_difference(clean.received, f) == 0.0);
    CHECK(clean.noise_norm == 0.0);

    const LimitingPair all_t(Mask::full(8, 8),
                             mask_from_spec(mask_spec::Block{0, 0, 2, 2}, 8, 8));
    CHECK(l2_norm(simulate_received(f, all_t).received) == 0.0);

    // Pythagoras: ||r||^2 = ||f+n||^2 - ||S_T(f+n)||^2
    const LimitingPair pair = half_rho_pair();
    const QSignal2D noise = synth_noise(8, 8, 0.05, 42);
    const RecoveryProblem noisy = simulate_received(f, pair, &noise);
    CHECK(noisy.noise_norm == doctest::Approx(0.05).epsilon(1e-12));
    const QSignal2D observed = f + noise;
    const double whole = l2_norm(observed) * l2_norm(observed);
    const double on_t = l2_norm(apply_mask(observed, pair.t_mask()));
    const double r2 = l2_norm(noisy.received) * l2_norm(noisy.received);
    CHECK(std::abs(r2 - (whole - on_t * on_t)) < 1e-9);

    // a signal that is not bandlimited is rejected
    QSignal2D off_band(8, 8);
    off_band.at(7, 7) = Quaternion::real(1.0);
    CHECK_THROWS_AS(simulate_received(off_band, pair), std::invalid_argument);
    CHECK_THROWS_AS(simulate_received(QSignal2D(4, 4), pair), std::invalid_argument);
}

TEST_CASE("noiseless fixed point") {
    const QSignal2D f = bandlimited_signal(43);
    const LimitingPair pair = half_rho_pair();
    const RecoveryProblem problem = simulate_received(f, pair);
    const QSignal2D rebuilt = problem.received + compose_st_fw(f, pair);
    CHECK(l2_norm(rebuilt - f) < 1e-9);
}

TEST_CASE("geometric convergence at rho = 0.5") {
    const QSignal2D f = bandlimited_signal(44);
    const LimitingPair pair = half_rho_pair();
    const double nf = l2_norm(f);

    // fixed 20-iteration run: per-iteration error bound rho^n ||f||
    const RecoveryProblem bounded = simulate_received(f, pair, nullptr, 20, 1e-30);
    CHECK(bounded.rho == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(bounded.guarantee);
    const RecoveryReport fixed = recover(bounded);
    REQUIRE(fixed.true_error_history.size() == 20);
    for (int n = 1; n <= 20; ++n) {
        CHECK(fixed.true_error_history[n - 1] <= std::pow(0.5, n) * nf * 1.01);
    }

    // default run: converges below the tolerance with tiny final error
    const RecoveryReport report = recover(simulate_received(f, pair));
    CHECK(report.converged);
    CHECK(*report.error_bound_c == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(l2_norm(report.recovered - f) < 1e-6);

    // residuals decay by at least the contraction ratio
    for (size_t n = 1; n < report.residual_history.size(); ++n) {
        CHECK(report.residual_history[n] <=
              0.5 * report.residual_history[n - 1] * (1.0 + 1e-6));
    }
}

TEST_CASE("error stays on the missing region in noiseless runs") {
    const QSignal2D f = bandlimited_signal(45);
    const LimitingPair pair = half_rho_pair();
    const RecoveryReport report = recover(simulate_received(f, pair));
    const QSignal2D err = report.recovered - f;
    const QSignal2D err_on_t = apply_mask(err, pair.t_mask());
    const double off_t = l2_norm(err - err_on_t);
    CHECK(off_t <= l2_norm(err_on_t) + 1e-12);
    CHECK(off_t == 0.0);  // off T every iterate equals r exactly
}

TEST_CASE("empty missing region recovers immediately") {
    const QSignal2D f = bandlimited_signal(46);
    const LimitingPair no_t(Mask(8, 8), mask_from_spec(mask_spec::Block{0, 0, 2, 2}, 8, 8));
    const RecoveryReport report = recover(simulate_received(f, no_t));
    CHECK(report.converged);
    CHECK(report.iterations_run == 1);
    CHECK(l2_norm(report.recovered - f) < 1e-12);
}

TEST_CASE("noisy recovery respects the amplification bound") {
    const QSignal2D f = bandlimited_signal(47);
    const LimitingPair pair = half_rho_pair();
    for (int draw = 0; draw < 10; ++draw) {
        const QSignal2D noise = synth_noise(8, 8, 0.01, 100 + draw);
        const RecoveryReport report = recover(simulate_received(f, pair, &noise));
        CHECK(l2_norm(report.recovered - f) <= 2.0 * 0.01 + 1e-6);
    }
}

TEST_CASE("uniqueness certificate uses exact integer arithmetic") {
    // the paper-scale boundary: 400x400, T = 5x5, W = 80x80 sits exactly on
    // the limit and is excluded by the strict inequality
    const LimitingPair boundary(
        mask_from_spec(mask_spec::Block{0, 0, 5, 5}, 400, 400),
        mask_from_spec(mask_spec::Block{0, 0, 80, 80}, 400, 400));
    CHECK(!uniqueness_certificate(boundary));
    CHECK(!error_bound_c(boundary).has_value());

    const LimitingPair inside(mask_from_spec(mask_spec::Block{0, 0, 4, 4}, 400, 400),
                              mask_from_spec(mask_spec::Block{0, 0, 80, 80}, 400, 400));
    CHECK(uniqueness_certificate(inside));

    const LimitingPair no_t(Mask(8, 8), Mask::full(8, 8));
    CHECK(uniqueness_certificate(no_t));
    CHECK(*error_bound_c(no_t) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK(*error_bound_c(half_rho_pair()) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("runs without the guarantee and reports it") {
    // |T| * |W| = 16 * 16 = 256 > 64
    const LimitingPair over(mask_from_spec(mask_spec::Block{0, 0, 4, 4}, 8, 8),
                            mask_from_spec(mask_spec::Block{0, 0, 4, 4}, 8, 8));
    const QSignal2D f = synth_bandlimited(8, 8, mask_spec::Block{0, 0, 4, 4}, 48);
    const RecoveryProblem problem = simulate_received(f, over, nullptr, 200);
    CHECK(!problem.guarantee);
    const RecoveryReport report = recover(problem);
    CHECK(report.iterations_run >= 1);
    CHECK(!report.error_bound_c.has_value());
}

TEST_CASE("degenerate one-column grid recovers like the 1D example") {
    // 40x1 grid: W = signed rows -2..2 (|W| = 5), T = 4 rows, 20 < 40
    const MaskSpec band = mask_spec::CenteredRect{2, 0};
    const QSignal2D f = synth_bandlimited(40, 1, band, 49);
    const LimitingPair pair(mask_from_spec(mask_spec::Block{18, 0, 4, 1}, 40, 1),
                            mask_from_spec(band, 40, 1));
    CHECK(uniqueness_certificate(pair));
    const RecoveryReport report = recover(simulate_received(f, pair));
    CHECK(report.converged);
    CHECK(l2_norm(report.recovered - f) < 1e-6);
}

TEST_CASE("make_problem zeroes the missing region") {
    const LimitingPair pair = half_rho_pair();
    QSignal2D r(8, 8);
    for (auto& q : r.data()) q = Quaternion::real(1.0);
    const RecoveryProblem problem = make_problem(r, pair);
    CHECK(l2_norm(apply_mask(problem.received, pair.t_mask())) == 0.0);
    CHECK(problem.max_iters > 0);
    CHECK(problem.tol > 0.0);
}
