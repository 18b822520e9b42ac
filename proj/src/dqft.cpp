#include "qsr/dqft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 FFT with kernel e^{sign * 2pi i nk/N}.
void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const size_t n = a.size();
    if (n < 2) return;
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * kTwoPi / static_cast<double>(len);
        const std::complex<double> step(std::cos(ang), std::sin(ang));
        for (size_t base = 0; base < n; base += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                const auto u = a[base + k];
                const auto v = a[base + k + len / 2] * w;
                a[base + k] = u + v;
                a[base + k + len / 2] = u - v;
                w *= step;
            }
        }
    }
}

// Direct summation with the precomputed e^{-2pi i t/N} table.
void dft_direct(std::vector<std::complex<double>>& a, int sign,
                const std::vector<std::complex<double>>& table) {
    const long n = static_cast<long>(a.size());
    if (n < 2) return;
    std::vector<std::complex<double>> out(a.size());
    for (long m = 0; m < n; ++m) {
        std::complex<double> acc(0.0, 0.0);
        for (long k = 0; k < n; ++k) {
            const auto tw = table[static_cast<size_t>((k * m) % n)];
            acc += a[static_cast<size_t>(k)] * (sign < 0 ? tw : std::conj(tw));
        }
        out[static_cast<size_t>(m)] = acc;
    }
    a.swap(out);
}

std::vector<std::complex<double>> make_table(int n) {
    std::vector<std::complex<double>> table(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) {
        const double ang = -kTwoPi * t / n;
        table[static_cast<size_t>(t)] = {std::cos(ang), std::sin(ang)};
    }
    return table;
}

}  // namespace

DqftPlan::DqftPlan(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      rows_pow2_(is_pow2(rows)),
      cols_pow2_(is_pow2(cols)) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("shape: plan dimensions must be positive");
    if (!rows_pow2_) tw_rows_ = make_table(rows);
    if (!cols_pow2_) tw_cols_ = make_table(cols);
}

void DqftPlan::line_dft(std::vector<std::complex<double>>& line, int sign, int axis) const {
    if (axis == 1) {
        if (rows_pow2_)
            fft_pow2(line, sign);
        else
            dft_direct(line, sign, tw_rows_);
    } else {
        if (cols_pow2_)
            fft_pow2(line, sign);
        else
            dft_direct(line, sign, tw_cols_);
    }
}

void DqftPlan::stage_i(QSignal2D& g, int sign) const {
    const double scale = 1.0 / std::sqrt(static_cast<double>(rows_));
    std::vector<std::complex<double>> u(static_cast<size_t>(rows_));
    std::vector<std::complex<double>> v(static_cast<size_t>(rows_));
    for (int c = 0; c < cols_; ++c) {
        for (int r = 0; r < rows_; ++r) {
            const Quaternion& q = g.at(r, c);
            u[static_cast<size_t>(r)] = {q.w, q.x};  // a = w + x i
            v[static_cast<size_t>(r)] = {q.y, q.z};  // b = y + z i, f = a + b j
        }
        line_dft(u, sign, 1);
        line_dft(v, -sign, 1);  // j e^{-i t} = e^{+i t} j
        for (int r = 0; r < rows_; ++r) {
            g.at(r, c) = {scale * u[static_cast<size_t>(r)].real(),
                          scale * u[static_cast<size_t>(r)].imag(),
                          scale * v[static_cast<size_t>(r)].real(),
                          scale * v[static_cast<size_t>(r)].imag()};
        }
    }
}

void DqftPlan::stage_j(QSignal2D& g, int sign) const {
    const double scale = 1.0 / std::sqrt(static_cast<double>(cols_));
    std::vector<std::complex<double>> u(static_cast<size_t>(cols_));
    std::vector<std::complex<double>> v(static_cast<size_t>(cols_));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            const Quaternion& q = g.at(r, c);
            u[static_cast<size_t>(c)] = {q.w, q.y};   // c = w + y j
            v[static_cast<size_t>(c)] = {q.x, -q.z};  // d = x - z j, g = c + d i
        }
        line_dft(u, sign, 2);
        line_dft(v, -sign, 2);  // i e^{-j t} = e^{+j t} i
        for (int c = 0; c < cols_; ++c) {
            g.at(r, c) = {scale * u[static_cast<size_t>(c)].real(),
                          scale * v[static_cast<size_t>(c)].real(),
                          scale * u[static_cast<size_t>(c)].imag(),
                          -scale * v[static_cast<size_t>(c)].imag()};
        }
    }
}

QSignal2D DqftPlan::forward(const QSignal2D& f) const {
    if (f.rows() != rows_ || f.cols() != cols_)
        throw std::invalid_argument("shape: signal does not match plan");
    QSignal2D g = f;
    stage_i(g, -1);
    stage_j(g, -1);
    return g;
}

QSignal2D DqftPlan::inverse(const QSignal2D& spectrum) const {
    if (spectrum.rows() != rows_ || spectrum.cols() != cols_)
        throw std::invalid_argument("shape: signal does not match plan");
    QSignal2D g = spectrum;
    stage_j(g, +1);
    stage_i(g, +1);
    return g;
}

QSignal2D qft_forward(const QSignal2D& f) { return DqftPlan(f.rows(), f.cols()).forward(f); }

QSignal2D qft_inverse(const QSignal2D& spectrum) {
    return DqftPlan(spectrum.rows(), spectrum.cols()).inverse(spectrum);
}

QSignal2D qft_naive(const QSignal2D& f, Direction direction) {
    const int n1 = f.rows();
    const int n2 = f.cols();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n1) * n2);
    QSignal2D out(n1, n2);
    for (int m1 = 0; m1 < n1; ++m1) {
        for (int m2 = 0; m2 < n2; ++m2) {
            Quaternion acc{};
            for (int x1 = 0; x1 < n1; ++x1) {
                const double a1 = kTwoPi * x1 * m1 / n1;
                for (int x2 = 0; x2 < n2; ++x2) {
                    const double a2 = kTwoPi * x2 * m2 / n2;
                    if (direction == Direction::forward)
                        acc += f.at(x1, x2) * exp_i(-a1) * exp_j(-a2);
                    else
                        acc += f.at(x1, x2) * exp_j(a2) * exp_i(a1);
                }
            }
            out.at(m1, m2) = scale * acc;
        }
    }
    return out;
}

}  // namespace qsr
