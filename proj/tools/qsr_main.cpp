// qsr — right-sided quaternion Fourier transform experiments:
// bandlimited recovery runs, transform demos, property verification
// sweeps and kernel table dumps.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 missing convergence
// guarantee / failed checks.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsr/experiment.hpp"
#include "qsr/limiting.hpp"
#include "qsr/synth_io.hpp"
#include "qsr/verify.hpp"

namespace {

std::pair<int, int> parse_dims(const std::string& text) {
    const auto x = text.find('x');
    if (x == std::string::npos)
        throw std::invalid_argument("spec: dims must look like 8x8, got " + text);
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
}

std::pair<int, int> parse_cell(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("spec: cell must look like r,c, got " + text);
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int cmd_recover(const std::string& config_path, const std::string& seed_override,
                const std::string& out_override) {
    qsr::ExperimentConfig config = qsr::load_config(config_path);
    if (!seed_override.empty()) config.seed = std::stoull(seed_override);
    if (!out_override.empty()) config.out_dir = out_override;

    const qsr::ExperimentOutcome outcome = qsr::run_recover(config);
    const auto& rep = outcome.report;
    std::cout << "rho=" << format_double(outcome.rho)
              << " guarantee=" << (outcome.guarantee ? 1 : 0)
              << " iterations=" << rep.iterations_run
              << " converged=" << (rep.converged ? 1 : 0) << " final_residual="
              << (rep.residual_history.empty()
                      ? "none"
                      : format_double(rep.residual_history.back()))
              << " out=" << config.out_dir << "\n";
    return outcome.status;
}

int cmd_qft(const std::string& in_path, const std::string& out_path, bool inverse,
            const std::string& mode_name) {
    const qsr::QSignal2D f = qsr::image_to_qsignal(qsr::read_pnm(in_path));
    const qsr::QSignal2D g = inverse ? qsr::qft_inverse(f) : qsr::qft_forward(f);
    qsr::RenderMode mode = qsr::RenderMode::modulus;
    if (mode_name == "scalar") mode = qsr::RenderMode::scalar;
    if (mode_name == "vector") mode = qsr::RenderMode::vector;
    qsr::write_pnm(qsr::qsignal_to_image(g, mode), out_path);
    return 0;
}

int cmd_verify(const std::string& dims, long trials, std::uint64_t seed,
               const std::string& out_path, bool inject_fault) {
    qsr::VerifyOptions options;
    std::tie(options.rows, options.cols) = parse_dims(dims);
    options.trials = trials;
    options.seed = seed;
    options.inject_fault = inject_fault;
    if (trials == 0) std::cout << "warning: trials = 0, all checks pass vacuously\n";

    const auto results = qsr::run_verify(options);
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
                  << " worst=" << format_double(r.worst) << " (" << r.note << ")\n";
    }
    qsr::write_verify_summary(results, out_path);
    return qsr::all_pass(results) ? 0 : 2;
}

int cmd_kernel_band(const std::string& dims, const std::string& band,
                    const std::string& t_cell, const std::string& out_path) {
    const auto [rows, cols] = parse_dims(dims);
    const auto [t_row, t_col] = parse_cell(t_cell);
    const qsr::Mask w = qsr::mask_from_spec(qsr::parse_mask_spec(band), rows, cols);
    const qsr::LimitingPair pair(qsr::Mask::full(rows, cols), w);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("io: cannot write " + out_path);
    out << "x_row,x_col,w,x,y,z\n";
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const qsr::Quaternion k = qsr::kernel_eval(pair, t_row, t_col, r, c);
            out << r << "," << c << "," << format_double(k.w) << "," << format_double(k.x)
                << "," << format_double(k.y) << "," << format_double(k.z) << "\n";
        }
    }
    return 0;
}

int cmd_kernel_disc(double radius, double extent, double step, bool corrected,
                    const std::string& out_path) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("io: cannot write " + out_path);
    out << "x1,x2,w,x,y,z\n";
    for (double x1 = -extent; x1 <= extent + 1e-12; x1 += step) {
        for (double x2 = -extent; x2 <= extent + 1e-12; x2 += step) {
            const qsr::Quaternion k =
                qsr::kernel_disc(radius, 0.0, 0.0, x1, x2, corrected);
            out << format_double(x1) << "," << format_double(x2) << ","
                << format_double(k.w) << "," << format_double(k.x) << ","
                << format_double(k.y) << "," << format_double(k.z) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"right-sided quaternion Fourier transform signal recovery toolkit"};
    app.require_subcommand(1);

    auto* recover = app.add_subcommand("recover", "run a bandlimited recovery experiment");
    std::string config_path;
    std::string seed_override;
    std::string out_override;
    recover->add_option("--config", config_path, "experiment config file")->required();
    recover->add_option("--seed", seed_override, "override the config seed");
    recover->add_option("--out", out_override, "override the output directory");

    auto* qft = app.add_subcommand("qft", "transform a PGM/PPM image");
    std::string in_path;
    std::string out_path;
    bool inverse = false;
    std::string mode_name = "modulus";
    qft->add_option("--in", in_path, "input image")->required();
    qft->add_option("--out", out_path, "output image")->required();
    qft->add_flag("--inverse", inverse, "apply the inverse transform");
    qft->add_option("--mode", mode_name, "render mode: scalar|vector|modulus")
        ->check(CLI::IsMember({"scalar", "vector", "modulus"}));

    auto* verify = app.add_subcommand("verify", "run the lemma/theorem property sweeps");
    std::string dims = "8x8";
    long trials = 1000;
    std::uint64_t seed = 1;
    std::string verify_out = "verify_summary.csv";
    bool inject_fault = false;
    verify->add_option("--dims", dims, "grid dims RxC, at most 16x16");
    verify->add_option("--trials", trials, "Monte-Carlo trial count")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--out", verify_out, "summary CSV path");
    verify->add_flag("--inject-fault", inject_fault,
                     "test hook: corrupt the transform to exercise failure detection");

    auto* kernel = app.add_subcommand("kernel", "dump k(t, x) tables");
    std::string kernel_dims = "8x8";
    std::string band;
    std::string t_cell = "0,0";
    std::string kernel_out;
    double disc_radius = 0.0;
    double extent = 3.0;
    double step = 0.5;
    bool corrected = false;
    kernel->add_option("--dims", kernel_dims, "grid dims RxC for the discrete kernel");
    kernel->add_option("--band", band, "frequency set W (mask spec)");
    kernel->add_option("--t", t_cell, "fixed t cell r,c");
    kernel->add_option("--out", kernel_out, "output CSV")->required();
    kernel->add_option("--disc-radius", disc_radius,
                       "dump the continuous disc-band kernel instead");
    kernel->add_option("--extent", extent, "offset range for the disc kernel");
    kernel->add_option("--step", step, "offset step for the disc kernel");
    kernel->add_flag("--corrected", corrected,
                     "use the radial upper limit = radius instead of the printed 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(recover))
            return cmd_recover(config_path, seed_override, out_override);
        if (app.got_subcommand(qft)) return cmd_qft(in_path, out_path, inverse, mode_name);
        if (app.got_subcommand(verify))
            return cmd_verify(dims, trials, seed, verify_out, inject_fault);
        if (app.got_subcommand(kernel)) {
            if (disc_radius > 0.0)
                return cmd_kernel_disc(disc_radius, extent, step, corrected, kernel_out);
            if (band.empty())
                throw std::invalid_argument("spec: kernel needs --band or --disc-radius");
            return cmd_kernel_band(kernel_dims, band, t_cell, kernel_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
