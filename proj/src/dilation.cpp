#include "ico/dilation.hpp"

#include <array>
#include <map>
#include <mutex>

namespace ico {

namespace {

// Controlled SWAP of two of the three d-level wires, active when the
// control qubit equals `ctrl_value`. Wire indices: 0 = sys, 1 = env1,
// 2 = env2.
Matrix controlled_swap(int d, int ctrl_value, int wire_a, int wire_b) {
    const Eigen::Index dim = 2 * d * d * d;
    Matrix u = Matrix::Zero(dim, dim);
    std::array<int, 3> w{};
    for (int c = 0; c < 2; ++c) {
        for (w[0] = 0; w[0] < d; ++w[0])
            for (w[1] = 0; w[1] < d; ++w[1])
                for (w[2] = 0; w[2] < d; ++w[2]) {
                    std::array<int, 3> v = w;
                    if (c == ctrl_value) std::swap(v[wire_a], v[wire_b]);
                    const Eigen::Index col = ((c * d + w[0]) * d + w[1]) * d + w[2];
                    const Eigen::Index row = ((c * d + v[0]) * d + v[1]) * d + v[2];
                    u(row, col) = 1.0;
                }
    }
    return u;
}

}  // namespace

DilationCircuit build_dilation(int d) {
    if (d < 2) throw std::invalid_argument("build_dilation: d must be >= 2");
    const Matrix g1 = controlled_swap(d, 1, 0, 1);
    const Matrix g2 = controlled_swap(d, 1, 0, 2);
    const Matrix g3 = controlled_swap(d, 0, 0, 2);
    const Matrix g4 = controlled_swap(d, 0, 0, 1);
    return DilationCircuit{d, g4 * g3 * g2 * g1};
}

DensityOperator run_dilation(const ControlState& ctrl,
                             const DensityOperator& rho,
                             const ThermalSpec& spec) {
    const int d = spec.dim();
    if (rho.dim() != d)
        throw DimensionError("run_dilation: dimension mismatch");

    // The unitary only depends on d; cache it behind a read-only handle.
    static std::mutex cache_mutex;
    static std::map<int, DilationCircuit> cache;
    const Matrix* unitary;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(d);
        if (it == cache.end()) it = cache.emplace(d, build_dilation(d)).first;
        unitary = &it->second.unitary;
    }

    const Matrix t = thermal_state(spec).matrix();
    const Matrix input = tensor(tensor(ctrl.rho(), rho.matrix()), tensor(t, t));
    const Matrix output = (*unitary) * input * unitary->adjoint();
    return DensityOperator(
        partial_trace(output, {2, d, d, d}, {0, 1}));
}

}  // namespace ico
