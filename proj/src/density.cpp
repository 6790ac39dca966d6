#include "ico/density.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace ico {

DensityOperator::DensityOperator(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1)
        throw DimensionError("DensityOperator: matrix must be square and non-empty");

    const double herm_dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > kValidityTol) {
        std::ostringstream os;
        os << "NotHermitian: max |m - m^dag| = " << herm_dev;
        throw ValidationError(ValidityFailure::NotHermitian, os.str());
    }

    const double tr_dev = std::abs(m_.trace() - Complex(1.0, 0.0));
    if (tr_dev > kValidityTol) {
        std::ostringstream os;
        os << "NotUnitTrace: |trace - 1| = " << tr_dev;
        throw ValidationError(ValidityFailure::NotUnitTrace, os.str());
    }

    Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
    const double min_ev = es.eigenvalues().minCoeff();
    if (min_ev < -kValidityTol) {
        std::ostringstream os;
        os << "NotPositive: min eigenvalue = " << min_ev;
        throw ValidationError(ValidityFailure::NotPositive, os.str());
    }
}

DensityOperator DensityOperator::reduce(std::span<const int> dims,
                                        std::span<const int> keep) const {
    return DensityOperator(partial_trace(m_, dims, keep));
}

double shannon_entropy(std::span<const double> p) {
    double sum = 0.0;
    for (double x : p) {
        if (x < -kValidityTol)
            throw std::invalid_argument("shannon_entropy: negative probability");
        sum += x;
    }
    if (std::abs(sum - 1.0) > kValidityTol)
        throw std::invalid_argument("shannon_entropy: probabilities do not sum to 1");
    double s = 0.0;
    for (double x : p) {
        if (x <= 0.0) continue;  // clamp small negatives, 0 ln 0 = 0
        s -= x * std::log(x);
    }
    return s;
}

}  // namespace ico
