#pragma once

#include <optional>

#include "ico/channels.hpp"

namespace ico {

/// Control qubit |psi_c> = sqrt(alpha)|0> + sqrt(1-alpha)|1>.
struct ControlState {
    double alpha;

    explicit ControlState(double a) : alpha(a) {
        if (a < 0.0 || a > 1.0)
            throw std::invalid_argument("ControlState: alpha must be in [0,1]");
    }

    /// Pure-state density operator |psi_c><psi_c|.
    Matrix rho() const;
};

/// Probability below which a measurement branch is treated as absent.
inline constexpr double kDegenerateBranchTol = 1e-14;

/// Result of measuring the control qubit in the |+>/|-> basis.
/// Branch states are absent when the branch probability is degenerate.
struct SwitchOutcome {
    DensityOperator joint;
    double p_plus = 0.0;
    double p_minus = 0.0;
    std::optional<DensityOperator> rho_plus;
    std::optional<DensityOperator> rho_minus;
};

/// Quantum SWITCH of two channels on a shared system, coherently controlled:
/// sum_ij W_ij (rho_c x rho) W_ij^dag with
/// W_ij = |0><0|_c x K2_i K1_j + |1><1|_c x K1_j K2_i.
/// Output is ordered control-first.
DensityOperator switch_apply(const KrausChannel& n1, const KrausChannel& n2,
                             const ControlState& ctrl,
                             const DensityOperator& rho);

/// Closed-form output of the SWITCH of two identical thermalizing channels:
/// (alpha|0><0| + (1-alpha)|1><1|) x T
///   + sqrt(alpha(1-alpha)) (|0><1| + |1><0|) x T rho T.
DensityOperator closed_form_ico(const ThermalSpec& spec,
                                const DensityOperator& rho, double alpha);

/// Projects the control qubit of a control-first joint state onto |+>/|->.
SwitchOutcome measure_control_pm(const DensityOperator& joint);

}  // namespace ico
