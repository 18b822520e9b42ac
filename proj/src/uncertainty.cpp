#include "qsr/uncertainty.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsr {

ConcentrationReport concentration(const QSignal2D& f, const LimitingPair& pair) {
    if (f.rows() != pair.rows() || f.cols() != pair.cols())
        throw std::invalid_argument("shape: signal dimensions differ from pair");
    const double norm = l2_norm(f);
    if (norm == 0.0) throw std::invalid_argument("degenerate: zero signal");
    const QSignal2D unit = (1.0 / norm) * f;

    ConcentrationReport rep;
    rep.eps_t = l2_norm(unit - apply_mask(unit, pair.t_mask()));
    const QSignal2D spectrum = pair.plan().forward(unit);
    rep.eps_w = l2_norm(spectrum - apply_mask(spectrum, pair.w_mask()));
    rep.t_count = pair.t_mask().count();
    rep.w_count = pair.w_mask().count();
    rep.n_px = pair.n_px();
    rep.bound_lhs = static_cast<double>(rep.t_count) * rep.w_count / rep.n_px;
    const double slack = std::max(0.0, 1.0 - rep.eps_t - rep.eps_w);
    rep.bound_rhs = slack * slack;
    return rep;
}

UncertaintyCheck check_uncertainty(const ConcentrationReport& report) {
    const double margin = report.bound_lhs - report.bound_rhs;
    return {margin >= -1e-9, margin};
}

bool corollary_support(const QSignal2D& f, const LimitingPair& pair) {
    const ConcentrationReport rep = concentration(f, pair);
    if (rep.eps_t >= 1e-10 || rep.eps_w >= 1e-10) return true;
    return rep.t_count * rep.w_count >= rep.n_px;
}

}  // namespace qsr
