// Space-limiting S_T, frequency-limiting F_W, their composition, the
// explicit kernel of F_W S_T, Hilbert-Schmidt norms and a power-iteration
// operator-norm estimate.
//
// With the unitary transform normalization the discrete Hilbert-Schmidt
// identity reads ||F_W S_T||_HS = sqrt(|T| |W| / N_px), and every
// |T||W| < 1 condition from the continuous setting becomes
// |T| * |W| < N_px.

#pragma once

#include "qsr/dqft.hpp"
#include "qsr/qsignal.hpp"

namespace qsr {

// A spatial set T, a frequency set W on the same grid, and the transform
// plan they share.
class LimitingPair {
public:
    LimitingPair(Mask t_mask, Mask w_mask);  // throws "shape" if grids differ

    const Mask& t_mask() const { return t_mask_; }
    const Mask& w_mask() const { return w_mask_; }
    const DqftPlan& plan() const { return plan_; }

    int rows() const { return t_mask_.rows(); }
    int cols() const { return t_mask_.cols(); }
    long n_px() const { return t_mask_.n_px(); }

private:
    Mask t_mask_;
    Mask w_mask_;
    DqftPlan plan_;
};

/// (S_T f)(x) = chi_T(x) f(x). Orthogonal projection.
QSignal2D space_limit(const QSignal2D& f, const LimitingPair& pair);

/// F_W f = inverse(chi_W * forward(f)). Orthogonal projection onto
/// W-bandlimited signals.
QSignal2D freq_limit(const QSignal2D& f, const LimitingPair& pair);

/// S_T F_W f — the recovery iteration operator.
QSignal2D compose_st_fw(const QSignal2D& f, const LimitingPair& pair);

/// Kernel of F_W S_T:
///   k(t, x) = (1/N_px) sum_{w in W} e^{-i t1 w1} e^{-j t2 w2} e^{+j x2 w2} e^{+i x1 w1}
/// for t in T, zero otherwise; w_a = 2pi m_a / N_a. Satisfies
/// conj(k(t,x)) = k(x,t) for t, x in T.
Quaternion kernel_eval(const LimitingPair& pair, int t_row, int t_col, int x_row,
                       int x_col);  // throws std::out_of_range

/// Same sum without the t-in-T gate (the raw integrand of the composition;
/// S_T F_W f(x) = chi_T(x) sum_t f[t] kernel_eval_raw(t, x) over the whole grid).
Quaternion kernel_eval_raw(const LimitingPair& pair, int t_row, int t_col, int x_row,
                           int x_col);

/// Continuous-form separable sinc kernel for a centered-rect W, evaluated at
/// the offset t - x with Omega_a = (2*half_a + 1) * pi / N_a. Analytic
/// cross-check of kernel_eval in the large-grid limit; throws "spec" when
/// the pair's W is not a centered rectangle.
Quaternion kernel_rect_sinc(const LimitingPair& pair, int t_row, int t_col, int x_row,
                            int x_col);

/// Disc-band kernel of the continuous-domain example, quadrature of
///   (1/(2pi)^2) int_0^{2pi} int_0^U e^{-i t1 r cos h} e^{j (x2-t2) r sin h}
///                                   e^{i x1 r cos h} r dr dh.
/// The printed formula fixes the radial upper limit U = 1, which makes the
/// value independent of `radius`; pass corrected_upper_limit = true for the
/// likely-intended U = radius. Quadrature is refined until doubling the
/// resolution moves the result by less than 1e-8.
Quaternion kernel_disc(double radius, double t1, double t2, double x1, double x2,
                       bool corrected_upper_limit = false);

/// Closed form sqrt(|T| |W| / N_px).
double hs_norm(const LimitingPair& pair);

enum class CompositionOrder { fw_st, st_fw };

/// Brute-force kernel summation of the Hilbert-Schmidt norm; the
/// independent check of the closed form on small grids.
double hs_norm_brute(const LimitingPair& pair, CompositionOrder order);

/// Power-iteration estimate of ||S_T F_W|| over the real-linear structure;
/// converges from below and never exceeds hs_norm beyond round-off.
double op_norm_estimate(const LimitingPair& pair, int iterations);

}  // namespace qsr
