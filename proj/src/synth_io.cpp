#include "qsr/synth_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "qsr/dqft.hpp"
#include "qsr/rng.hpp"

namespace qsr {

namespace {

int next_header_int(std::istream& in, const std::string& path) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (!std::isspace(c)) {
            break;
        }
        c = in.get();
    }
    if (c == EOF) throw std::runtime_error("io: truncated header in " + path);
    long value = 0;
    bool any = false;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        any = true;
        c = in.get();
    }
    if (!any || value > 1 << 30)
        throw std::runtime_error("io: malformed header field in " + path);
    return static_cast<int>(value);
}

double fetch(const std::vector<std::uint16_t>& s, size_t idx, double maxval) {
    return static_cast<double>(s[idx]) / maxval;
}

std::uint16_t quantize(double v, int maxval) {
    const double clamped = std::clamp(v, 0.0, 1.0);
    return static_cast<std::uint16_t>(std::lround(clamped * maxval));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ImageBuffer read_pnm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("io: cannot open " + path);
    const int m0 = in.get();
    const int m1 = in.get();
    if (m0 != 'P' || (m1 != '5' && m1 != '6'))
        throw std::runtime_error("io: not a binary PGM/PPM file: " + path);

    ImageBuffer img;
    img.channels = (m1 == '6') ? 3 : 1;
    img.cols = next_header_int(in, path);
    img.rows = next_header_int(in, path);
    img.maxval = next_header_int(in, path);
    if (img.rows <= 0 || img.cols <= 0 || img.maxval <= 0 || img.maxval > 65535)
        throw std::runtime_error("io: bad dimensions or maxval in " + path);
    // the header tokenizer consumed the single whitespace before the raster

    const size_t n = static_cast<size_t>(img.rows) * img.cols * img.channels;
    const int bytes_per = img.maxval > 255 ? 2 : 1;
    std::vector<char> raw(n * bytes_per);
    in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (static_cast<size_t>(in.gcount()) != raw.size())
        throw std::runtime_error("io: truncated raster in " + path);

    img.samples.resize(n);
    for (size_t s = 0; s < n; ++s) {
        if (bytes_per == 1) {
            img.samples[s] = static_cast<std::uint8_t>(raw[s]);
        } else {
            const auto hi = static_cast<std::uint8_t>(raw[2 * s]);
            const auto lo = static_cast<std::uint8_t>(raw[2 * s + 1]);
            img.samples[s] = static_cast<std::uint16_t>((hi << 8) | lo);
        }
    }
    return img;
}

void write_pnm(const ImageBuffer& img, const std::string& path) {
    if (img.channels != 1 && img.channels != 3)
        throw std::invalid_argument("spec: channels must be 1 or 3");
    if (img.maxval <= 0 || img.maxval > 65535)
        throw std::invalid_argument("spec: maxval out of range");
    if (img.samples.size() != static_cast<size_t>(img.rows) * img.cols * img.channels)
        throw std::invalid_argument("shape: sample count mismatch");

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("io: cannot write " + path);
    out << (img.channels == 3 ? "P6" : "P5") << "\n"
        << img.cols << " " << img.rows << "\n"
        << img.maxval << "\n";
    const int bytes_per = img.maxval > 255 ? 2 : 1;
    std::vector<char> raw(img.samples.size() * bytes_per);
    for (size_t s = 0; s < img.samples.size(); ++s) {
        if (bytes_per == 1) {
            raw[s] = static_cast<char>(img.samples[s] & 0xff);
        } else {
            raw[2 * s] = static_cast<char>((img.samples[s] >> 8) & 0xff);
            raw[2 * s + 1] = static_cast<char>(img.samples[s] & 0xff);
        }
    }
    out.write(raw.data(), static_cast<std::streamsize>(raw.size()));
    if (!out) throw std::runtime_error("io: write failed for " + path);
}

QSignal2D image_to_qsignal(const ImageBuffer& img) {
    if (img.channels != 1 && img.channels != 3)
        throw std::invalid_argument("spec: unsupported channel count");
    QSignal2D f(img.rows, img.cols);
    const double maxval = img.maxval;
    for (int r = 0; r < img.rows; ++r) {
        for (int c = 0; c < img.cols; ++c) {
            const size_t base = (static_cast<size_t>(r) * img.cols + c) * img.channels;
            if (img.channels == 1) {
                f.at(r, c) = Quaternion::real(fetch(img.samples, base, maxval));
            } else {
                f.at(r, c) = {0.0, fetch(img.samples, base, maxval),
                              fetch(img.samples, base + 1, maxval),
                              fetch(img.samples, base + 2, maxval)};
            }
        }
    }
    return f;
}

ImageBuffer qsignal_to_image(const QSignal2D& f, RenderMode mode, int maxval) {
    ImageBuffer img;
    img.rows = f.rows();
    img.cols = f.cols();
    img.channels = (mode == RenderMode::vector) ? 3 : 1;
    img.maxval = maxval;
    img.samples.resize(static_cast<size_t>(img.rows) * img.cols * img.channels);
    for (int r = 0; r < img.rows; ++r) {
        for (int c = 0; c < img.cols; ++c) {
            const Quaternion& q = f.at(r, c);
            const size_t base = (static_cast<size_t>(r) * img.cols + c) * img.channels;
            switch (mode) {
                case RenderMode::scalar:
                    img.samples[base] = quantize(q.w, maxval);
                    break;
                case RenderMode::modulus:
                    img.samples[base] = quantize(modulus(q), maxval);
                    break;
                case RenderMode::vector:
                    img.samples[base] = quantize(q.x, maxval);
                    img.samples[base + 1] = quantize(q.y, maxval);
                    img.samples[base + 2] = quantize(q.z, maxval);
                    break;
            }
        }
    }
    return img;
}

QSignal2D bandlimit_project(const QSignal2D& f, const MaskSpec& band) {
    const Mask w = mask_from_spec(band, f.rows(), f.cols());
    const DqftPlan plan(f.rows(), f.cols());
    return plan.inverse(apply_mask(plan.forward(f), w));
}

QSignal2D synth_bandlimited(int rows, int cols, const MaskSpec& band, std::uint64_t seed) {
    const Mask w = mask_from_spec(band, rows, cols);
    if (w.count() == 0)
        throw std::invalid_argument("spec: empty band cannot give a unit-norm signal");
    SplitMix64 rng(seed);
    QSignal2D spectrum(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (!w.contains(r, c)) continue;
            spectrum.at(r, c) = {rng.symmetric(), rng.symmetric(), rng.symmetric(),
                                 rng.symmetric()};
        }
    }
    const QSignal2D f = DqftPlan(rows, cols).inverse(spectrum);
    return (1.0 / l2_norm(f)) * f;
}

QSignal2D synth_texture(int rows, int cols, const MaskSpec& band, std::uint64_t seed) {
    QSignal2D f = synth_bandlimited(rows, cols, band, seed);
    const double peak = max_abs_component(f);
    for (auto& q : f.data()) {
        q *= 0.45 / peak;
        q += Quaternion{0.5, 0.5, 0.5, 0.5};
    }
    return f;
}

QSignal2D synth_noise(int rows, int cols, double target_norm, std::uint64_t seed) {
    QSignal2D n(rows, cols);
    if (target_norm <= 0.0) return n;
    SplitMix64 rng(seed);
    for (auto& q : n.data())
        q = {rng.symmetric(), rng.symmetric(), rng.symmetric(), rng.symmetric()};
    return (target_norm / l2_norm(n)) * n;
}

void write_metrics(const RecoveryReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("io: cannot write " + path);
    out << "iter,residual,true_error\n";
    for (size_t n = 0; n < report.residual_history.size(); ++n) {
        out << (n + 1) << "," << format_double(report.residual_history[n]) << ",";
        if (n < report.true_error_history.size())
            out << format_double(report.true_error_history[n]);
        else
            out << "nan";
        out << "\n";
    }
    out << "# rho=" << format_double(report.rho) << ",c_bound="
        << (report.error_bound_c ? format_double(*report.error_bound_c) : std::string("none"))
        << ",converged=" << (report.converged ? 1 : 0)
        << ",iterations_run=" << report.iterations_run << "\n";
    if (!out) throw std::runtime_error("io: write failed for " + path);
}

}  // namespace qsr
