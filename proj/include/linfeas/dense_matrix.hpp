#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "linfeas/vec.hpp"

namespace linfeas {

// Dense row-major matrix of doubles. Problem data (matrices) stay in double;
// solver vectors may use a wider Real, so the apply routines are templated on
// the accumulator type.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        require(a_.size() == rows_ * cols_, "DenseMatrix: entry count != rows*cols");
        for (double v : a_)
            if (!std::isfinite(v)) throw std::invalid_argument("DenseMatrix: non-finite entry");
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const double* row_ptr(std::size_t i) const { return &a_[i * cols_]; }
    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

    DenseMatrix transposed() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // y = A x, accumulated in Real
    template <class Real>
    Vec<Real> apply(const Vec<Real>& x) const {
        require(x.size() == cols_, "DenseMatrix::apply: dimension mismatch");
        Vec<Real> y(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            const double* ai = row_ptr(i);
            Real s = 0;
            for (std::size_t j = 0; j < cols_; ++j) s += Real(ai[j]) * x[j];
            y[i] = s;
        }
        return y;
    }

    // y = A^T x
    template <class Real>
    Vec<Real> apply_transposed(const Vec<Real>& x) const {
        require(x.size() == rows_, "DenseMatrix::apply_transposed: dimension mismatch");
        Vec<Real> y(cols_, Real(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            const double* ai = row_ptr(i);
            Real xi = x[i];
            for (std::size_t j = 0; j < cols_; ++j) y[j] += Real(ai[j]) * xi;
        }
        return y;
    }

    double frobenius_norm() const {
        double s = 0;
        for (double v : a_) s += v * v;
        return std::sqrt(s);
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

}  // namespace linfeas
