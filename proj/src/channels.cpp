#include "ico/channels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ico {

ThermalSpec ThermalSpec::qubit(double beta, double delta) {
    if (beta < 0.0) throw std::invalid_argument("ThermalSpec: beta must be >= 0");
    if (delta <= 0.0) throw std::invalid_argument("ThermalSpec: delta must be > 0");
    return ThermalSpec{beta, false, {0.0, delta}};
}

ThermalSpec ThermalSpec::qubit_ground(double delta) {
    if (delta <= 0.0) throw std::invalid_argument("ThermalSpec: delta must be > 0");
    return ThermalSpec{0.0, true, {0.0, delta}};
}

ThermalSpec ThermalSpec::levels(double beta, std::vector<double> energies) {
    if (beta < 0.0) throw std::invalid_argument("ThermalSpec: beta must be >= 0");
    if (energies.size() < 2)
        throw std::invalid_argument("ThermalSpec: need at least two levels");
    return ThermalSpec{beta, false, std::move(energies)};
}

double ThermalSpec::r() const {
    if (zero_temperature) return 0.0;
    return std::exp(-beta * delta());
}

double ThermalSpec::partition() const {
    if (zero_temperature) return 1.0;
    double z = 0.0;
    for (double e : energies) z += std::exp(-beta * (e - energies.front()));
    return z;
}

KrausChannel::KrausChannel(int dim, std::vector<Matrix> kraus_ops)
    : dim_(dim), ops_(std::move(kraus_ops)) {
    if (dim_ < 1) throw DimensionError("KrausChannel: dim must be positive");
    if (ops_.empty()) throw DimensionError("KrausChannel: empty Kraus list");
    Matrix acc = Matrix::Zero(dim_, dim_);
    for (const Matrix& k : ops_) {
        if (k.rows() != dim_ || k.cols() != dim_)
            throw DimensionError("KrausChannel: Kraus operator has wrong shape");
        acc += k.adjoint() * k;
    }
    const double dev = (acc - Matrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
    if (dev > kValidityTol) {
        std::ostringstream os;
        os << "KrausChannel: completeness violated, max |sum K^dag K - I| = " << dev;
        throw std::invalid_argument(os.str());
    }
}

DensityOperator KrausChannel::apply(const DensityOperator& rho) const {
    if (rho.dim() != dim_)
        throw DimensionError("KrausChannel::apply: dimension mismatch");
    Matrix out = Matrix::Zero(dim_, dim_);
    for (const Matrix& k : ops_) out += k * rho.matrix() * k.adjoint();
    return DensityOperator(std::move(out));
}

std::vector<Matrix> orthogonal_unitary_basis(int d) {
    if (d < 2) throw std::invalid_argument("orthogonal_unitary_basis: d must be >= 2");
    std::vector<Matrix> basis;
    basis.reserve(static_cast<std::size_t>(d) * d);
    if (d == 2) {
        Matrix I = Matrix::Identity(2, 2);
        Matrix X(2, 2), Y(2, 2), Z(2, 2);
        X << 0, 1, 1, 0;
        Y << 0, Complex(0, -1), Complex(0, 1), 0;
        Z << 1, 0, 0, -1;
        basis = {I, X, Y, Z};
        return basis;
    }
    // Heisenberg-Weyl: shift X|k> = |k+1 mod d>, clock Z|k> = w^k|k>.
    Matrix X = Matrix::Zero(d, d), Z = Matrix::Zero(d, d);
    const double theta = 2.0 * std::numbers::pi / d;
    for (int k = 0; k < d; ++k) {
        X((k + 1) % d, k) = 1.0;
        Z(k, k) = std::polar(1.0, theta * k);
    }
    Matrix Xa = Matrix::Identity(d, d);
    for (int a = 0; a < d; ++a) {
        Matrix U = Xa;
        for (int b = 0; b < d; ++b) {
            basis.push_back(U);
            U = U * Z;
        }
        Xa = X * Xa;
    }
    return basis;
}

KrausChannel depolarizing(int d) {
    std::vector<Matrix> ops;
    for (const Matrix& u : orthogonal_unitary_basis(d))
        ops.push_back(u / static_cast<double>(d));
    return KrausChannel(d, std::move(ops));
}

DensityOperator thermal_state(const ThermalSpec& spec) {
    const int d = spec.dim();
    Matrix t = Matrix::Zero(d, d);
    if (spec.zero_temperature) {
        // all weight on the lowest level(s); ties split uniformly
        double emin = spec.energies.front();
        for (double e : spec.energies) emin = std::min(emin, e);
        int degeneracy = 0;
        for (double e : spec.energies)
            if (e == emin) ++degeneracy;
        for (int j = 0; j < d; ++j)
            if (spec.energies[j] == emin) t(j, j) = 1.0 / degeneracy;
        return DensityOperator(std::move(t));
    }
    const double z = spec.partition();
    for (int j = 0; j < d; ++j)
        t(j, j) = std::exp(-spec.beta * (spec.energies[j] - spec.energies.front())) / z;
    return DensityOperator(std::move(t));
}

KrausChannel thermalizing(const ThermalSpec& spec) {
    const int d = spec.dim();
    const DensityOperator t = thermal_state(spec);
    Matrix a = Matrix::Zero(d, d);  // A = sqrt(T), entrywise on the diagonal
    for (int j = 0; j < d; ++j) a(j, j) = std::sqrt(t.population(j));
    const double scale = std::sqrt(1.0 / d);
    std::vector<Matrix> ops;
    for (const Matrix& u : orthogonal_unitary_basis(d))
        ops.push_back(scale * a * u);
    return KrausChannel(d, std::move(ops));
}

DensityOperator classical_thermalize(const DensityOperator& rho,
                                     const ThermalSpec& spec) {
    if (rho.dim() != spec.dim())
        throw DimensionError("classical_thermalize: dimension mismatch");
    return thermal_state(spec);
}

}  // namespace ico
