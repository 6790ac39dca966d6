#include "ico/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace ico {

Matrix tensor(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

Matrix partial_trace(const Matrix& m, std::span<const int> dims,
                     std::span<const int> keep) {
    if (m.rows() != m.cols()) throw DimensionError("partial_trace: non-square input");
    Eigen::Index total = 1;
    for (int d : dims) {
        if (d < 1) throw DimensionError("partial_trace: non-positive subsystem dim");
        total *= d;
    }
    if (total != m.rows())
        throw DimensionError("partial_trace: product of dims does not match matrix size");
    if (keep.empty()) throw DimensionError("partial_trace: empty keep set");
    for (int k : keep)
        if (k < 0 || static_cast<std::size_t>(k) >= dims.size())
            throw DimensionError("partial_trace: keep index out of range");
    if (!std::is_sorted(keep.begin(), keep.end()) ||
        std::adjacent_find(keep.begin(), keep.end()) != keep.end())
        throw DimensionError("partial_trace: keep set must be strictly increasing");

    std::vector<int> traced;
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (std::find(keep.begin(), keep.end(), static_cast<int>(k)) == keep.end())
            traced.push_back(static_cast<int>(k));

    Eigen::Index kd = 1;
    for (int k : keep) kd *= dims[k];
    Eigen::Index td = 1;
    for (int k : traced) td *= dims[k];

    const std::size_t n = dims.size();
    std::vector<int> dig_row(n), dig_col(n);
    std::vector<int> kdig(keep.size()), tdig(traced.size());

    Matrix out = Matrix::Zero(kd, kd);
    for (Eigen::Index kr = 0; kr < kd; ++kr) {
        {
            Eigen::Index f = kr;
            for (std::size_t i = keep.size(); i-- > 0;) {
                kdig[i] = static_cast<int>(f % dims[keep[i]]);
                f /= dims[keep[i]];
            }
        }
        for (Eigen::Index kc = 0; kc < kd; ++kc) {
            std::vector<int> cdig(keep.size());
            Eigen::Index f = kc;
            for (std::size_t i = keep.size(); i-- > 0;) {
                cdig[i] = static_cast<int>(f % dims[keep[i]]);
                f /= dims[keep[i]];
            }
            Complex acc = 0.0;
            for (Eigen::Index t = 0; t < td; ++t) {
                Eigen::Index g = t;
                for (std::size_t i = traced.size(); i-- > 0;) {
                    tdig[i] = static_cast<int>(g % dims[traced[i]]);
                    g /= dims[traced[i]];
                }
                for (std::size_t s = 0; s < keep.size(); ++s) {
                    dig_row[keep[s]] = kdig[s];
                    dig_col[keep[s]] = cdig[s];
                }
                for (std::size_t s = 0; s < traced.size(); ++s) {
                    dig_row[traced[s]] = tdig[s];
                    dig_col[traced[s]] = tdig[s];
                }
                Eigen::Index row = 0, col = 0;
                for (std::size_t s = 0; s < n; ++s) {
                    row = row * dims[s] + dig_row[s];
                    col = col * dims[s] + dig_col[s];
                }
                acc += m(row, col);
            }
            out(kr, kc) = acc;
        }
    }
    return out;
}

}  // namespace ico
