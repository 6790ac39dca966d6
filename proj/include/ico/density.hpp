#pragma once

#include <span>
#include <string>

#include "ico/linalg.hpp"

namespace ico {

/// Absolute tolerance for physical-validity checks.
inline constexpr double kValidityTol = 1e-10;

enum class ValidityFailure { NotHermitian, NotUnitTrace, NotPositive };

struct ValidationError : std::runtime_error {
    ValidityFailure kind;
    ValidationError(ValidityFailure k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
};

/// A unit-trace, Hermitian, positive-semidefinite matrix.
///
/// Construction validates all three invariants at kValidityTol; the wrapped
/// matrix is immutable afterwards.
class DensityOperator {
public:
    explicit DensityOperator(Matrix m);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& matrix() const { return m_; }
    Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

    /// Population of level j (real part of the diagonal entry).
    double population(Eigen::Index j) const { return m_(j, j).real(); }

    /// Reduced density operator over the kept subsystems.
    DensityOperator reduce(std::span<const int> dims,
                           std::span<const int> keep) const;
    DensityOperator reduce(std::initializer_list<int> dims,
                           std::initializer_list<int> keep) const {
        return reduce(std::span<const int>(dims.begin(), dims.size()),
                      std::span<const int>(keep.begin(), keep.size()));
    }

private:
    Matrix m_;
};

/// Validates and wraps; alias for the DensityOperator constructor kept for
/// call sites that read better as a check.
inline DensityOperator validate_density(Matrix m) {
    return DensityOperator(std::move(m));
}

/// -sum p ln p in nats, with 0 ln 0 = 0. Entries must be >= -kValidityTol
/// and sum to 1 within kValidityTol; small negatives are clamped to 0.
double shannon_entropy(std::span<const double> p);
inline double shannon_entropy(std::initializer_list<double> p) {
    return shannon_entropy(std::span<const double>(p.begin(), p.size()));
}

}  // namespace ico
