#include "qsr/limiting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_pair_shape(const QSignal2D& f, const LimitingPair& pair) {
    if (f.rows() != pair.rows() || f.cols() != pair.cols())
        throw std::invalid_argument("shape: signal dimensions differ from pair");
}

// e^{-i 2pi a/N} and e^{-j 2pi a/N} lookup tables indexed by a mod N.
struct KernelTables {
    std::vector<Quaternion> ei;  // rows axis, {1,i} plane
    std::vector<Quaternion> ej;  // cols axis, {1,j} plane
    std::vector<std::pair<int, int>> w_cells;

    explicit KernelTables(const LimitingPair& pair) {
        const int n1 = pair.rows();
        const int n2 = pair.cols();
        ei.reserve(static_cast<size_t>(n1));
        for (int a = 0; a < n1; ++a) ei.push_back(exp_i(-kTwoPi * a / n1));
        ej.reserve(static_cast<size_t>(n2));
        for (int a = 0; a < n2; ++a) ej.push_back(exp_j(-kTwoPi * a / n2));
        for (int r = 0; r < n1; ++r)
            for (int c = 0; c < n2; ++c)
                if (pair.w_mask().contains(r, c)) w_cells.emplace_back(r, c);
    }

    Quaternion raw(int n1, int n2, long n_px, int t_row, int t_col, int x_row,
                   int x_col) const {
        Quaternion acc{};
        for (const auto& [m1, m2] : w_cells) {
            const auto& e_t1 = ei[static_cast<size_t>((static_cast<long>(t_row) * m1) % n1)];
            const auto& e_t2 = ej[static_cast<size_t>((static_cast<long>(t_col) * m2) % n2)];
            const auto& e_x2 = ej[static_cast<size_t>((static_cast<long>(x_col) * m2) % n2)];
            const auto& e_x1 = ei[static_cast<size_t>((static_cast<long>(x_row) * m1) % n1)];
            acc += e_t1 * e_t2 * conj(e_x2) * conj(e_x1);
        }
        return (1.0 / static_cast<double>(n_px)) * acc;
    }
};

void check_cell(const LimitingPair& pair, int r, int c, const char* which) {
    if (r < 0 || c < 0 || r >= pair.rows() || c >= pair.cols())
        throw std::out_of_range(std::string("index: ") + which + " cell outside grid");
}

double sinc_omega(double omega, double u) {
    if (u == 0.0) return omega / std::numbers::pi;
    return std::sin(omega * u) / (std::numbers::pi * u);
}

}  // namespace

LimitingPair::LimitingPair(Mask t_mask, Mask w_mask)
    : t_mask_(std::move(t_mask)),
      w_mask_(std::move(w_mask)),
      plan_(t_mask_.rows(), t_mask_.cols()) {
    if (!t_mask_.same_shape(w_mask_))
        throw std::invalid_argument("shape: T and W masks differ in dimensions");
}

QSignal2D space_limit(const QSignal2D& f, const LimitingPair& pair) {
    require_pair_shape(f, pair);
    return apply_mask(f, pair.t_mask());
}

QSignal2D freq_limit(const QSignal2D& f, const LimitingPair& pair) {
    require_pair_shape(f, pair);
    return pair.plan().inverse(apply_mask(pair.plan().forward(f), pair.w_mask()));
}

QSignal2D compose_st_fw(const QSignal2D& f, const LimitingPair& pair) {
    return apply_mask(freq_limit(f, pair), pair.t_mask());
}

Quaternion kernel_eval(const LimitingPair& pair, int t_row, int t_col, int x_row,
                       int x_col) {
    check_cell(pair, t_row, t_col, "t");
    check_cell(pair, x_row, x_col, "x");
    if (!pair.t_mask().contains(t_row, t_col)) return {};
    return kernel_eval_raw(pair, t_row, t_col, x_row, x_col);
}

Quaternion kernel_eval_raw(const LimitingPair& pair, int t_row, int t_col, int x_row,
                           int x_col) {
    check_cell(pair, t_row, t_col, "t");
    check_cell(pair, x_row, x_col, "x");
    const KernelTables tables(pair);
    return tables.raw(pair.rows(), pair.cols(), pair.n_px(), t_row, t_col, x_row, x_col);
}

Quaternion kernel_rect_sinc(const LimitingPair& pair, int t_row, int t_col, int x_row,
                            int x_col) {
    check_cell(pair, t_row, t_col, "t");
    check_cell(pair, x_row, x_col, "x");
    const Mask& w = pair.w_mask();
    if (w.count() == 0)
        throw std::invalid_argument("spec: W is empty, not a centered rectangle");
    int h1 = 0;
    int h2 = 0;
    for (int r = 0; r < w.rows(); ++r)
        for (int c = 0; c < w.cols(); ++c)
            if (w.contains(r, c)) {
                h1 = std::max(h1, std::abs(signed_index(r, w.rows())));
                h2 = std::max(h2, std::abs(signed_index(c, w.cols())));
            }
    if (w.count() != static_cast<long>(2 * h1 + 1) * (2 * h2 + 1))
        throw std::invalid_argument("spec: W is not a centered rectangle");
    const double omega1 = (2 * h1 + 1) * std::numbers::pi / pair.rows();
    const double omega2 = (2 * h2 + 1) * std::numbers::pi / pair.cols();
    const double value = sinc_omega(omega1, t_row - x_row) * sinc_omega(omega2, t_col - x_col);
    return Quaternion::real(value);
}

Quaternion kernel_disc(double radius, double t1, double t2, double x1, double x2,
                       bool corrected_upper_limit) {
    const double upper = corrected_upper_limit ? radius : 1.0;
    auto quadrature = [&](int n_theta, int n_rho) {
        Quaternion acc{};
        const double h_rho = upper / n_rho;
        for (int it = 0; it < n_theta; ++it) {
            const double theta = kTwoPi * it / n_theta;
            const double ct = std::cos(theta);
            const double st = std::sin(theta);
            Quaternion radial{};
            for (int ir = 0; ir <= n_rho; ++ir) {
                const double rho = h_rho * ir;
                // Simpson weights 1,4,2,...,4,1
                const double wgt = (ir == 0 || ir == n_rho) ? 1.0 : (ir % 2 == 1 ? 4.0 : 2.0);
                const Quaternion term = exp_i(-t1 * rho * ct) * exp_j((x2 - t2) * rho * st) *
                                        exp_i(x1 * rho * ct) * rho;
                radial += wgt * term;
            }
            acc += (h_rho / 3.0) * radial;
        }
        return (kTwoPi / n_theta) * (1.0 / (kTwoPi * kTwoPi)) * acc;
    };

    int n_theta = 32;
    int n_rho = 32;
    Quaternion prev = quadrature(n_theta, n_rho);
    while (n_theta < 4096) {
        n_theta *= 2;
        n_rho *= 2;
        const Quaternion next = quadrature(n_theta, n_rho);
        if (modulus(next - prev) < 1e-8) return next;
        prev = next;
    }
    return prev;
}

double hs_norm(const LimitingPair& pair) {
    return std::sqrt(static_cast<double>(pair.t_mask().count()) * pair.w_mask().count() /
                     static_cast<double>(pair.n_px()));
}

double hs_norm_brute(const LimitingPair& pair, CompositionOrder order) {
    const KernelTables tables(pair);
    const int n1 = pair.rows();
    const int n2 = pair.cols();
    const long n_px = pair.n_px();
    double acc = 0.0;
    for (int tr = 0; tr < n1; ++tr) {
        for (int tc = 0; tc < n2; ++tc) {
            if (order == CompositionOrder::fw_st && !pair.t_mask().contains(tr, tc)) continue;
            for (int xr = 0; xr < n1; ++xr) {
                for (int xc = 0; xc < n2; ++xc) {
                    if (order == CompositionOrder::st_fw && !pair.t_mask().contains(xr, xc))
                        continue;
                    acc += modulus_sq(tables.raw(n1, n2, n_px, tr, tc, xr, xc));
                }
            }
        }
    }
    return std::sqrt(acc);
}

double op_norm_estimate(const LimitingPair& pair, int iterations) {
    if (iterations < 1) throw std::invalid_argument("spec: iterations must be positive");
    QSignal2D v(pair.rows(), pair.cols());
    long idx = 0;
    for (auto& q : v.data()) {
        q.w = 1.0 + 1e-3 * ((4 * idx + 0) % 17) / 17.0;
        q.x = 1.0 + 1e-3 * ((4 * idx + 1) % 17) / 17.0;
        q.y = 1.0 + 1e-3 * ((4 * idx + 2) % 17) / 17.0;
        q.z = 1.0 + 1e-3 * ((4 * idx + 3) % 17) / 17.0;
        ++idx;
    }
    v = (1.0 / l2_norm(v)) * v;

    double sigma = 0.0;
    for (int it = 0; it < iterations; ++it) {
        const QSignal2D u = compose_st_fw(v, pair);        // A v
        sigma = l2_norm(u);                                // ||A v|| with ||v|| = 1
        QSignal2D w = freq_limit(space_limit(u, pair), pair);  // A* u
        const double nw = l2_norm(w);
        if (nw < 1e-300) return sigma;
        v = (1.0 / nw) * w;
    }
    return sigma;
}

}  // namespace qsr
