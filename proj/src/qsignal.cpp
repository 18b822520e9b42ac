#include "qsr/qsignal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace qsr {

namespace {

void require_same_shape(const QSignal2D& a, const QSignal2D& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("shape: signal dimensions differ");
}

}  // namespace

QSignal2D::QSignal2D(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("shape: dimensions must be positive");
    data_.assign(static_cast<size_t>(rows) * cols, Quaternion{});
}

QSignal2D operator+(const QSignal2D& a, const QSignal2D& b) {
    require_same_shape(a, b);
    QSignal2D out = a;
    for (size_t n = 0; n < out.data().size(); ++n) out.data()[n] += b.data()[n];
    return out;
}

QSignal2D operator-(const QSignal2D& a, const QSignal2D& b) {
    require_same_shape(a, b);
    QSignal2D out = a;
    for (size_t n = 0; n < out.data().size(); ++n) out.data()[n] -= b.data()[n];
    return out;
}

QSignal2D operator*(double s, const QSignal2D& f) {
    QSignal2D out = f;
    for (auto& q : out.data()) q *= s;
    return out;
}

double l2_norm(const QSignal2D& f) {
    double acc = 0.0;
    for (const auto& q : f.data()) acc += modulus_sq(q);
    return std::sqrt(acc);
}

Quaternion inner_product(const QSignal2D& f, const QSignal2D& g) {
    require_same_shape(f, g);
    Quaternion acc{};
    for (size_t n = 0; n < f.data().size(); ++n) acc += f.data()[n] * conj(g.data()[n]);
    return acc;
}

double max_abs_component(const QSignal2D& f) {
    double m = 0.0;
    for (const auto& q : f.data()) {
        m = std::max({m, std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
    }
    return m;
}

double max_abs_difference(const QSignal2D& a, const QSignal2D& b) {
    require_same_shape(a, b);
    return max_abs_component(a - b);
}

Mask::Mask(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("shape: dimensions must be positive");
    members_.assign(static_cast<size_t>(rows) * cols, 0);
}

Mask Mask::full(int rows, int cols) {
    Mask m(rows, cols);
    for (auto& cell : m.members_) cell = 1;
    m.count_ = m.n_px();
    return m;
}

void Mask::set(int r, int c, bool member) {
    auto& cell = members_[static_cast<size_t>(r) * cols_ + c];
    count_ += (member ? 1 : 0) - (cell != 0 ? 1 : 0);
    cell = member ? 1 : 0;
}

QSignal2D apply_mask(const QSignal2D& f, const Mask& m) {
    if (f.rows() != m.rows() || f.cols() != m.cols())
        throw std::invalid_argument("shape: mask dimensions differ from signal");
    QSignal2D out(f.rows(), f.cols());
    for (int r = 0; r < f.rows(); ++r)
        for (int c = 0; c < f.cols(); ++c)
            if (m.contains(r, c)) out.at(r, c) = f.at(r, c);
    return out;
}

namespace {

struct SpecBuilder {
    int rows;
    int cols;

    Mask operator()(const mask_spec::Block& b) const {
        if (b.height < 0 || b.width < 0 || b.row0 < 0 || b.col0 < 0 ||
            b.row0 + b.height > rows || b.col0 + b.width > cols)
            throw std::invalid_argument("spec: block does not fit grid");
        Mask m(rows, cols);
        for (int r = b.row0; r < b.row0 + b.height; ++r)
            for (int c = b.col0; c < b.col0 + b.width; ++c) m.set(r, c, true);
        return m;
    }

    Mask operator()(const mask_spec::CenteredRect& cr) const {
        if (cr.half_rows < 0 || cr.half_cols < 0)
            throw std::invalid_argument("spec: centered-rect halves must be nonnegative");
        Mask m(rows, cols);
        for (int r = 0; r < rows; ++r) {
            if (std::abs(signed_index(r, rows)) > cr.half_rows) continue;
            for (int c = 0; c < cols; ++c)
                if (std::abs(signed_index(c, cols)) <= cr.half_cols) m.set(r, c, true);
        }
        return m;
    }

    Mask operator()(const mask_spec::Disc& d) const {
        const int reach = static_cast<int>(std::ceil(d.radius));
        if (d.radius < 0.0 || d.center_row - reach < 0 || d.center_col - reach < 0 ||
            d.center_row + reach >= rows || d.center_col + reach >= cols)
            throw std::invalid_argument("spec: disc does not fit grid");
        Mask m(rows, cols);
        for (int r = d.center_row - reach; r <= d.center_row + reach; ++r) {
            for (int c = d.center_col - reach; c <= d.center_col + reach; ++c) {
                const double dr = r - d.center_row;
                const double dc = c - d.center_col;
                if (std::sqrt(dr * dr + dc * dc) <= d.radius) m.set(r, c, true);
            }
        }
        return m;
    }

    Mask operator()(const mask_spec::Explicit& e) const {
        Mask m(rows, cols);
        for (const auto& [r, c] : e.cells) {
            if (r < 0 || c < 0 || r >= rows || c >= cols)
                throw std::invalid_argument("spec: explicit cell outside grid");
            m.set(r, c, true);
        }
        return m;
    }
};

}  // namespace

Mask mask_from_spec(const MaskSpec& spec, int rows, int cols) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("spec: grid dimensions must be positive");
    return std::visit(SpecBuilder{rows, cols}, spec);
}

}  // namespace qsr
