#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace ico {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Thrown when operand dimensions are incompatible.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Kronecker product with row-major block convention:
/// result((i*rb + k), (j*cb + l)) = a(i,j) * b(k,l).
Matrix tensor(const Matrix& a, const Matrix& b);

/// Partial trace of an operator on a tensor-product space.
/// `dims` are the subsystem dimensions in tensor order; `keep` lists the
/// (zero-based) subsystems to retain, in their original order.
Matrix partial_trace(const Matrix& m, std::span<const int> dims,
                     std::span<const int> keep);

inline Matrix partial_trace(const Matrix& m, std::initializer_list<int> dims,
                            std::initializer_list<int> keep) {
    return partial_trace(m, std::span<const int>(dims.begin(), dims.size()),
                         std::span<const int>(keep.begin(), keep.size()));
}

}  // namespace ico
