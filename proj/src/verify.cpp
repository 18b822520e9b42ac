#include "qsr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "qsr/dqft.hpp"
#include "qsr/limiting.hpp"
#include "qsr/qsignal.hpp"
#include "qsr/rng.hpp"
#include "qsr/uncertainty.hpp"

namespace qsr {

namespace {

QSignal2D random_signal(int rows, int cols, SplitMix64& rng) {
    QSignal2D f(rows, cols);
    for (auto& q : f.data())
        q = {rng.symmetric(), rng.symmetric(), rng.symmetric(), rng.symmetric()};
    return f;
}

Mask random_mask(int rows, int cols, SplitMix64& rng) {
    const double density = 0.05 + 0.9 * rng.uniform();
    Mask m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng.uniform() < density) m.set(r, c, true);
    return m;
}

QSignal2D forward_hooked(const DqftPlan& plan, const QSignal2D& f, bool fault) {
    QSignal2D spectrum = plan.forward(f);
    if (fault) spectrum.at(0, 0).w += 1e-3;
    return spectrum;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::vector<PropertyResult> run_verify(const VerifyOptions& options) {
    if (options.rows <= 0 || options.cols <= 0 || options.rows > 16 || options.cols > 16)
        throw std::invalid_argument("spec: verify dims must lie in 1..16 per axis");

    std::vector<PropertyResult> results;
    const int rows = options.rows;
    const int cols = options.cols;
    const DqftPlan plan(rows, cols);
    const long trials = options.trials;
    const char* vacuous = "no trials (vacuous pass)";

    // Parseval and round-trip over random signals
    {
        SplitMix64 rng(options.seed);
        double worst_parseval = 0.0;
        double worst_roundtrip = 0.0;
        for (long t = 0; t < trials; ++t) {
            const QSignal2D f = random_signal(rows, cols, rng);
            const QSignal2D spectrum = forward_hooked(plan, f, options.inject_fault);
            const double nf = l2_norm(f);
            worst_parseval = std::max(worst_parseval, std::abs(l2_norm(spectrum) - nf) / nf);
            worst_roundtrip =
                std::max(worst_roundtrip, max_abs_difference(plan.inverse(spectrum), f));
        }
        results.push_back({"parseval_relative", worst_parseval < 1e-10, worst_parseval,
                           trials == 0 ? vacuous : "max |  ||Ff||-||f||  | / ||f||"});
        results.push_back({"roundtrip_max_abs", worst_roundtrip < 1e-10, worst_roundtrip,
                           trials == 0 ? vacuous : "max component error of F^-1 F f"});
    }

    // Fast path against the literal summation
    {
        SplitMix64 rng(options.seed ^ 0x5117ab1eull);
        const long n_naive = std::min<long>(trials, 50);
        double worst = 0.0;
        for (long t = 0; t < n_naive; ++t) {
            const QSignal2D f = random_signal(rows, cols, rng);
            worst = std::max(worst, max_abs_difference(plan.forward(f),
                                                       qft_naive(f, Direction::forward)));
        }
        results.push_back({"fast_vs_naive", worst < 1e-10, worst,
                           trials == 0 ? vacuous : "max component error over random signals"});
    }

    // Hilbert-Schmidt lemmas and the operator-norm bound on random mask pairs
    {
        SplitMix64 rng(options.seed ^ 0xd00dfeedull);
        const long n_pairs = std::min<long>(trials, 50);
        double worst_value = 0.0;
        double worst_commute = 0.0;
        double worst_op = -1.0;
        for (long t = 0; t < n_pairs; ++t) {
            const LimitingPair pair(random_mask(rows, cols, rng),
                                    random_mask(rows, cols, rng));
            const double closed = hs_norm(pair);
            const double brute_fs = hs_norm_brute(pair, CompositionOrder::fw_st);
            const double brute_sf = hs_norm_brute(pair, CompositionOrder::st_fw);
            worst_value = std::max(worst_value, std::abs(brute_fs - closed));
            worst_commute = std::max(worst_commute, std::abs(brute_fs - brute_sf));
            worst_op = std::max(worst_op, op_norm_estimate(pair, 25) - closed);
        }
        results.push_back({"hs_norm_closed_form", worst_value < 1e-9, worst_value,
                           trials == 0 ? vacuous
                                       : "max | brute HS - sqrt(|T||W|/N_px) |"});
        results.push_back({"hs_norm_order_free", worst_commute < 1e-9, worst_commute,
                           trials == 0 ? vacuous : "max | HS(F_W S_T) - HS(S_T F_W) |"});
        results.push_back({"op_norm_below_hs", worst_op <= 1e-9, worst_op,
                           trials == 0 ? vacuous : "max (power-iteration estimate - HS)"});
    }

    // Uncertainty bound Monte Carlo
    {
        SplitMix64 rng(options.seed ^ 0x7a11b0a7ull);
        double worst_margin = 1.0;
        for (long t = 0; t < trials; ++t) {
            const QSignal2D f = random_signal(rows, cols, rng);
            const LimitingPair pair(random_mask(rows, cols, rng),
                                    random_mask(rows, cols, rng));
            const auto check = check_uncertainty(concentration(f, pair));
            worst_margin = std::min(worst_margin, check.margin);
        }
        results.push_back({"uncertainty_bound", worst_margin >= -1e-9, worst_margin,
                           trials == 0 ? vacuous : "min (|T||W|/N_px - rhs) over trials"});
    }

    return results;
}

bool all_pass(const std::vector<PropertyResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const PropertyResult& r) { return r.pass; });
}

void write_verify_summary(const std::vector<PropertyResult>& results,
                          const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("io: cannot write " + path);
    out << "property,pass,worst,note\n";
    for (const auto& r : results)
        out << r.name << "," << (r.pass ? 1 : 0) << "," << format_double(r.worst) << ","
            << r.note << "\n";
    if (!out) throw std::runtime_error("io: write failed for " + path);
}

}  // namespace qsr
