#include "qsr/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsr/synth_io.hpp"

namespace qsr {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

int to_int(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        const int v = std::stoi(trim(s), &pos);
        if (pos != trim(s).size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument(std::string("spec: bad integer for ") + what + ": " + s);
    }
}

double to_double(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        const double v = std::stod(trim(s), &pos);
        if (pos != trim(s).size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument(std::string("spec: bad number for ") + what + ": " + s);
    }
}

}  // namespace

MaskSpec parse_mask_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("spec: mask spec needs kind:args, got " + text);
    const std::string kind = trim(text.substr(0, colon));
    const std::string args = trim(text.substr(colon + 1));

    if (kind == "block") {
        const auto p = split(args, ',');
        if (p.size() != 4) throw std::invalid_argument("spec: block needs r0,c0,h,w");
        return mask_spec::Block{to_int(p[0], "block"), to_int(p[1], "block"),
                                to_int(p[2], "block"), to_int(p[3], "block")};
    }
    if (kind == "centered-rect") {
        const auto p = split(args, ',');
        if (p.size() != 2)
            throw std::invalid_argument("spec: centered-rect needs half_rows,half_cols");
        return mask_spec::CenteredRect{to_int(p[0], "centered-rect"),
                                       to_int(p[1], "centered-rect")};
    }
    if (kind == "disc") {
        const auto p = split(args, ',');
        if (p.size() != 3) throw std::invalid_argument("spec: disc needs row,col,radius");
        return mask_spec::Disc{to_int(p[0], "disc"), to_int(p[1], "disc"),
                               to_double(p[2], "disc")};
    }
    if (kind == "explicit") {
        mask_spec::Explicit e;
        if (!args.empty()) {
            for (const auto& cell : split(args, ';')) {
                const auto p = split(cell, ',');
                if (p.size() != 2)
                    throw std::invalid_argument("spec: explicit cells are r,c pairs");
                e.cells.emplace_back(to_int(p[0], "explicit"), to_int(p[1], "explicit"));
            }
        }
        return e;
    }
    throw std::invalid_argument("spec: unknown mask kind " + kind);
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("io: cannot open config " + path);

    ExperimentConfig config;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("spec: config line " + std::to_string(lineno) +
                                        " is not key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "rows") {
            config.rows = to_int(value, "rows");
        } else if (key == "cols") {
            config.cols = to_int(value, "cols");
        } else if (key == "band") {
            config.band = parse_mask_spec(value);
        } else if (key == "missing") {
            config.missing = parse_mask_spec(value);
        } else if (key == "noise") {
            config.noise = to_double(value, "noise");
        } else if (key == "seed") {
            config.seed = static_cast<std::uint64_t>(std::stoull(value));
        } else if (key == "max_iters") {
            config.max_iters = to_int(value, "max_iters");
        } else if (key == "tol") {
            config.tol = to_double(value, "tol");
        } else if (key == "input") {
            config.input = value;
        } else if (key == "out") {
            config.out_dir = value;
        } else {
            throw std::invalid_argument("spec: unknown config key " + key);
        }
    }
    return config;
}

ExperimentOutcome run_recover(const ExperimentConfig& config) {
    if (!config.band || !config.missing)
        throw std::invalid_argument("spec: config must set band and missing");

    int rows = config.rows;
    int cols = config.cols;
    QSignal2D base;
    RenderMode mode = RenderMode::vector;
    if (!config.input.empty()) {
        const ImageBuffer img = read_pnm(config.input);
        base = image_to_qsignal(img);
        rows = img.rows;
        cols = img.cols;
        mode = img.channels == 3 ? RenderMode::vector : RenderMode::scalar;
    } else {
        base = synth_texture(rows, cols, *config.band, config.seed);
    }

    const QSignal2D original = bandlimit_project(base, *config.band);
    LimitingPair pair(mask_from_spec(*config.missing, rows, cols),
                      mask_from_spec(*config.band, rows, cols));

    RecoveryProblem problem = [&] {
        if (config.noise > 0.0) {
            const QSignal2D noise =
                synth_noise(rows, cols, config.noise, config.seed ^ 0x6e015eull);
            return simulate_received(original, pair, &noise, config.max_iters, config.tol);
        }
        return simulate_received(original, pair, nullptr, config.max_iters, config.tol);
    }();

    ExperimentOutcome outcome;
    outcome.rho = problem.rho;
    outcome.guarantee = problem.guarantee;
    outcome.report = recover(problem);
    outcome.status = (outcome.guarantee && outcome.report.converged) ? 0 : 2;

    std::filesystem::create_directories(config.out_dir);
    const std::string ext = mode == RenderMode::vector ? ".ppm" : ".pgm";
    auto emit = [&](const std::string& name, const ImageBuffer& img) {
        const std::string path = config.out_dir + "/" + name;
        write_pnm(img, path);
        outcome.artifacts.push_back(path);
    };
    emit("original" + ext, qsignal_to_image(original, mode));
    emit("received" + ext, qsignal_to_image(problem.received, mode));
    emit("recovered" + ext, qsignal_to_image(outcome.report.recovered, mode));
    emit("error_map.pgm",
         qsignal_to_image(outcome.report.recovered - original, RenderMode::modulus));
    const std::string metrics_path = config.out_dir + "/metrics.csv";
    write_metrics(outcome.report, metrics_path);
    outcome.artifacts.push_back(metrics_path);
    return outcome;
}

}  // namespace qsr
