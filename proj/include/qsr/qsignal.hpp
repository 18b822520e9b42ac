// 2D quaternion-valued signals, boolean masks over the grid, and the
// L2-style norms and inner products used throughout the library.
//
// Norms are plain unnormalized sums over cells; the transform carries the
// unitary normalization so Parseval holds exactly.

#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "qsr/quaternion.hpp"

namespace qsr {

class QSignal2D {
public:
    QSignal2D() = default;
    QSignal2D(int rows, int cols);  // zero-filled; throws "shape" on nonpositive dims

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long size() const { return static_cast<long>(rows_) * cols_; }

    Quaternion& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Quaternion& at(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    std::vector<Quaternion>& data() { return data_; }
    const std::vector<Quaternion>& data() const { return data_; }

    bool same_shape(const QSignal2D& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Quaternion> data_;
};

QSignal2D operator+(const QSignal2D& a, const QSignal2D& b);  // throws "shape"
QSignal2D operator-(const QSignal2D& a, const QSignal2D& b);  // throws "shape"
QSignal2D operator*(double s, const QSignal2D& f);

/// sqrt(sum |f[n]|^2) over all cells, no normalization.
double l2_norm(const QSignal2D& f);

/// <f, g> = sum f[n] * conj(g[n]); <f, f> is real and equals l2_norm^2.
Quaternion inner_product(const QSignal2D& f, const QSignal2D& g);  // throws "shape"

/// Largest absolute component over all cells.
double max_abs_component(const QSignal2D& f);

/// Largest per-component absolute difference; shapes must match.
double max_abs_difference(const QSignal2D& a, const QSignal2D& b);

// A measurable set on the grid: boolean membership plus its pixel count.
class Mask {
public:
    Mask() = default;
    Mask(int rows, int cols);  // empty set
    static Mask full(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long count() const { return count_; }
    long n_px() const { return static_cast<long>(rows_) * cols_; }

    bool contains(int r, int c) const {
        return members_[static_cast<size_t>(r) * cols_ + c] != 0;
    }
    void set(int r, int c, bool member);

    bool same_shape(const Mask& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> members_;
    long count_ = 0;
};

/// Cell kept where the mask is a member, zero otherwise. Idempotent.
QSignal2D apply_mask(const QSignal2D& f, const Mask& m);  // throws "shape"

// Concrete encodings of grid subsets. "centered-rect" is interpreted on
// signed frequency indices (see signed_index); the others use natural
// row/column indices.
namespace mask_spec {

struct Block {
    int row0 = 0;
    int col0 = 0;
    int height = 0;
    int width = 0;
};

struct CenteredRect {
    int half_rows = 0;
    int half_cols = 0;
};

struct Disc {
    int center_row = 0;
    int center_col = 0;
    double radius = 0.0;
};

struct Explicit {
    std::vector<std::pair<int, int>> cells;
};

}  // namespace mask_spec

using MaskSpec = std::variant<mask_spec::Block, mask_spec::CenteredRect, mask_spec::Disc,
                              mask_spec::Explicit>;

/// Natural index m in [0, n) read as a signed frequency: m - n*[m >= n/2].
inline int signed_index(int m, int n) { return m < (n + 1) / 2 ? m : m - n; }

Mask mask_from_spec(const MaskSpec& spec, int rows, int cols);  // throws "spec"

}  // namespace qsr
