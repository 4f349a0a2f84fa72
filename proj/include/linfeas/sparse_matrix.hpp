#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linfeas/dense_matrix.hpp"
#include "linfeas/vec.hpp"

namespace linfeas {

// Row-wise sparse matrix: each row keeps (column, value) pairs with strictly
// increasing column indices. Row-action sweeps read one row at a time, so the
// per-row layout keeps them cache friendly.
class SparseRowMatrix {
public:
    using Entry = std::pair<std::size_t, double>;

    SparseRowMatrix() = default;
    SparseRowMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), row_data_(rows) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const std::vector<Entry>& row(std::size_t i) const { return row_data_[i]; }

    // Entries must be pushed with increasing column index within each row.
    void push_entry(std::size_t i, std::size_t j, double v) {
        require(i < rows_ && j < cols_, "SparseRowMatrix: index out of range");
        if (!std::isfinite(v)) throw std::invalid_argument("SparseRowMatrix: non-finite value");
        if (v == 0.0) return;
        auto& r = row_data_[i];
        if (!r.empty() && r.back().first >= j)
            throw std::invalid_argument("SparseRowMatrix: columns not strictly increasing");
        r.emplace_back(j, v);
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& r : row_data_) n += r.size();
        return n;
    }

    template <class Real>
    Real row_dot(std::size_t i, const Vec<Real>& x) const {
        Real s = 0;
        for (const auto& [j, v] : row_data_[i]) s += Real(v) * x[j];
        return s;
    }

    double row_norm_sq(std::size_t i) const {
        double s = 0;
        for (const auto& e : row_data_[i]) s += e.second * e.second;
        return s;
    }

    // x += alpha * row_i
    template <class Real>
    void row_axpy(std::size_t i, Real alpha, Vec<Real>& x) const {
        for (const auto& [j, v] : row_data_[i]) x[j] += alpha * Real(v);
    }

    DenseMatrix to_dense() const {
        DenseMatrix d(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (const auto& [j, v] : row_data_[i]) d(i, j) = v;
        return d;
    }

    static SparseRowMatrix from_dense(const DenseMatrix& d, double drop_tol = 0.0) {
        SparseRowMatrix s(d.rows(), d.cols());
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                if (std::abs(d(i, j)) > drop_tol) s.push_entry(i, j, d(i, j));
        return s;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<Entry>> row_data_;
};

template <class Real>
Vec<Real> spmv(const SparseRowMatrix& m, const Vec<Real>& x) {
    require(x.size() == m.cols(), "spmv: dimension mismatch");
    Vec<Real> y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) y[i] = m.row_dot(i, x);
    return y;
}

}  // namespace linfeas
