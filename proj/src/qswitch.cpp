#include "ico/qswitch.hpp"

#include <cmath>

namespace ico {

Matrix ControlState::rho() const {
    Eigen::Vector2cd psi(std::sqrt(alpha), std::sqrt(1.0 - alpha));
    return psi * psi.adjoint();
}

DensityOperator switch_apply(const KrausChannel& n1, const KrausChannel& n2,
                             const ControlState& ctrl,
                             const DensityOperator& rho) {
    const int d = rho.dim();
    if (n1.dim() != d || n2.dim() != d)
        throw DimensionError("switch_apply: channel/system dimension mismatch");

    Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;

    const Matrix input = tensor(ctrl.rho(), rho.matrix());
    Matrix out = Matrix::Zero(2 * d, 2 * d);
    for (const Matrix& k2 : n2.kraus_ops()) {
        for (const Matrix& k1 : n1.kraus_ops()) {
            Matrix w = tensor(p0, k2 * k1) + tensor(p1, k1 * k2);
            out += w * input * w.adjoint();
        }
    }
    return DensityOperator(std::move(out));
}

DensityOperator closed_form_ico(const ThermalSpec& spec,
                                const DensityOperator& rho, double alpha) {
    const int d = spec.dim();
    if (rho.dim() != d)
        throw DimensionError("closed_form_ico: dimension mismatch");
    if (alpha < 0.0 || alpha > 1.0)
        throw std::invalid_argument("closed_form_ico: alpha must be in [0,1]");

    const Matrix t = thermal_state(spec).matrix();
    const Matrix trt = t * rho.matrix() * t;
    const double c = std::sqrt(alpha * (1.0 - alpha));

    Matrix diag = Matrix::Zero(2, 2), off = Matrix::Zero(2, 2);
    diag(0, 0) = alpha;
    diag(1, 1) = 1.0 - alpha;
    off(0, 1) = off(1, 0) = 1.0;

    return DensityOperator(tensor(diag, t) + c * tensor(off, trt));
}

SwitchOutcome measure_control_pm(const DensityOperator& joint) {
    const int total = joint.dim();
    if (total % 2 != 0)
        throw DimensionError("measure_control_pm: joint dim must be even");
    const int d = total / 2;

    // <pm| x I applied on the control-first joint: quarter blocks of size d.
    const Matrix& m = joint.matrix();
    const Matrix b00 = m.topLeftCorner(d, d);
    const Matrix b01 = m.topRightCorner(d, d);
    const Matrix b10 = m.bottomLeftCorner(d, d);
    const Matrix b11 = m.bottomRightCorner(d, d);

    const Matrix plus_block = 0.5 * (b00 + b01 + b10 + b11);
    const Matrix minus_block = 0.5 * (b00 - b01 - b10 + b11);

    SwitchOutcome out{joint};
    out.p_plus = plus_block.trace().real();
    out.p_minus = minus_block.trace().real();
    if (out.p_plus >= kDegenerateBranchTol)
        out.rho_plus = DensityOperator(plus_block / out.p_plus);
    if (out.p_minus >= kDegenerateBranchTol)
        out.rho_minus = DensityOperator(minus_block / out.p_minus);
    return out;
}

}  // namespace ico
