#pragma once

#include "ico/qswitch.hpp"

namespace ico {

/// Controlled-SWAP circuit on control x system x env1 x env2 whose
/// control/system marginal reproduces the SWITCH of two thermalizing
/// channels.
struct DilationCircuit {
    int d;           // system and environment dimension
    Matrix unitary;  // size 2*d^3, unitary within kValidityTol
};

/// Gate sequence, left to right: [ctrl=1] SWAP(sys,env1), [ctrl=1]
/// SWAP(sys,env2), [ctrl=0] SWAP(sys,env2), [ctrl=0] SWAP(sys,env1).
DilationCircuit build_dilation(int d);

/// Conjugates rho_c x rho x T x T by the dilation unitary and traces out
/// both environments; returns the control x system marginal.
DensityOperator run_dilation(const ControlState& ctrl,
                             const DensityOperator& rho,
                             const ThermalSpec& spec);

}  // namespace ico
