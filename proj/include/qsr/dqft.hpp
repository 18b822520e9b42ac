// Discrete right-sided quaternion Fourier transform.
//
// Forward:  F[m1,m2] = (1/sqrt(N1*N2)) sum_n f[n1,n2] e^{-i 2pi n1 m1/N1} e^{-j 2pi n2 m2/N2}
// Inverse:  f[n1,n2] = (1/sqrt(N1*N2)) sum_m F[m1,m2] e^{+j 2pi n2 m2/N2} e^{+i 2pi n1 m1/N1}
//
// Both kernels multiply from the right, i-kernel innermost on the forward
// side and outermost on the inverse side; the order matters because the
// algebra is non-commutative. Normalization is unitary per direction, so
// the transform preserves the l2 norm exactly (up to round-off).
//
// The fast path splits each axis into two complex 1D transforms:
//   f = a + b j,  a,b in span{1,i}:  f e^{-i t} = a e^{-i t} + (b e^{+i t}) j
//   g = c + d i,  c,d in span{1,j}:  g e^{-j t} = c e^{-j t} + (d e^{+j t}) i
// Power-of-two lengths use an in-place radix-2 FFT, anything else a direct
// table-driven summation. Correctness is defined by agreement with
// qft_naive, the literal evaluation of the defining sums.

#pragma once

#include <complex>
#include <vector>

#include "qsr/qsignal.hpp"

namespace qsr {

enum class Direction { forward, inverse };

class DqftPlan {
public:
    DqftPlan(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    QSignal2D forward(const QSignal2D& f) const;
    QSignal2D inverse(const QSignal2D& spectrum) const;

private:
    // Right-multiplication Fourier stage in the given unit's plane along one
    // axis; sign is the exponent sign of the commuting component's kernel.
    void stage_i(QSignal2D& g, int sign) const;  // axis 1 (rows)
    void stage_j(QSignal2D& g, int sign) const;  // axis 2 (cols)

    void line_dft(std::vector<std::complex<double>>& line, int sign, int axis) const;

    int rows_;
    int cols_;
    bool rows_pow2_;
    bool cols_pow2_;
    // e^{-2pi i t/N} tables indexed by t = (n*m) mod N, for the direct path
    std::vector<std::complex<double>> tw_rows_;
    std::vector<std::complex<double>> tw_cols_;
};

QSignal2D qft_forward(const QSignal2D& f);
QSignal2D qft_inverse(const QSignal2D& spectrum);

/// Literal quadruple-loop evaluation of the defining sum, quaternion
/// products in written order. Quadratic in the pixel count; test scale only.
QSignal2D qft_naive(const QSignal2D& f, Direction direction);

}  // namespace qsr
