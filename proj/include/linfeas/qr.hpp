#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "linfeas/dense_matrix.hpp"
#include "linfeas/vec.hpp"

namespace linfeas {

// Thin QR factors of a tall full-rank matrix (n x m, n >= m):
//   input = q_thin * r_upper,  q_thin n x m with orthonormal columns,
//   r_upper m x m upper triangular with nonzero diagonal.
struct QRFactors {
    DenseMatrix q_thin;
    DenseMatrix r_upper;

    std::size_t tall_dim() const { return q_thin.rows(); }
    std::size_t thin_dim() const { return q_thin.cols(); }

    // Solve r_upper^T y = rhs (forward substitution), accumulating in Real.
    template <class Real>
    Vec<Real> solve_rt(const Vec<Real>& rhs) const {
        std::size_t m = thin_dim();
        require(rhs.size() == m, "QRFactors::solve_rt: dimension mismatch");
        Vec<Real> y(m);
        for (std::size_t i = 0; i < m; ++i) {
            Real s = rhs[i];
            for (std::size_t k = 0; k < i; ++k) s -= Real(r_upper(k, i)) * y[k];
            y[i] = s / Real(r_upper(i, i));
        }
        return y;
    }

    // Solve r_upper y = rhs (back substitution).
    template <class Real>
    Vec<Real> solve_r(const Vec<Real>& rhs) const {
        std::size_t m = thin_dim();
        require(rhs.size() == m, "QRFactors::solve_r: dimension mismatch");
        Vec<Real> y(m);
        for (std::size_t i = m; i-- > 0;) {
            Real s = rhs[i];
            for (std::size_t k = i + 1; k < m; ++k) s -= Real(r_upper(i, k)) * y[k];
            y[i] = s / Real(r_upper(i, i));
        }
        return y;
    }
};

// Householder QR of an n x m matrix with n >= m and full column rank.
// A diagonal of R below 1e-12 times the largest diagonal magnitude is treated
// as rank deficiency.
inline QRFactors qr_factor(const DenseMatrix& input) {
    const std::size_t n = input.rows(), m = input.cols();
    require(m >= 1 && n >= m, "qr_factor: need n >= m >= 1");

    // Column-major workspace: contiguous columns make the reflector loops
    // stream through memory.
    std::vector<double> w(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) w[j * n + i] = input(i, j);

    DenseMatrix r(m, m);
    std::vector<double> beta(m, 0.0);

    for (std::size_t k = 0; k < m; ++k) {
        double* ck = &w[k * n];
        double nrm = 0.0;
        for (std::size_t i = k; i < n; ++i) nrm += ck[i] * ck[i];
        nrm = std::sqrt(nrm);
        const double alpha = ck[k] >= 0.0 ? -nrm : nrm;
        r(k, k) = alpha;
        ck[k] -= alpha;
        double vtv = 0.0;
        for (std::size_t i = k; i < n; ++i) vtv += ck[i] * ck[i];
        beta[k] = vtv > 0.0 ? 2.0 / vtv : 0.0;
        for (std::size_t j = k + 1; j < m; ++j) {
            double* cj = &w[j * n];
            double s = 0.0;
            for (std::size_t i = k; i < n; ++i) s += ck[i] * cj[i];
            s *= beta[k];
            for (std::size_t i = k; i < n; ++i) cj[i] -= s * ck[i];
            r(k, j) = cj[k];
        }
    }

    double max_diag = 0.0;
    for (std::size_t k = 0; k < m; ++k) max_diag = std::max(max_diag, std::abs(r(k, k)));
    for (std::size_t k = 0; k < m; ++k) {
        if (std::abs(r(k, k)) <= 1e-12 * max_diag)
            throw std::runtime_error("qr_factor: rank deficient at column " + std::to_string(k));
    }

    // Thin Q: apply the stored reflectors to the first m identity columns.
    QRFactors f;
    f.q_thin = DenseMatrix(n, m);
    f.r_upper = std::move(r);
    std::vector<double> e(n);
    for (std::size_t j = 0; j < m; ++j) {
        std::fill(e.begin(), e.end(), 0.0);
        e[j] = 1.0;
        for (std::size_t k = std::min(j + 1, m); k-- > 0;) {
            const double* ck = &w[k * n];
            double s = 0.0;
            for (std::size_t i = k; i < n; ++i) s += ck[i] * e[i];
            s *= beta[k];
            for (std::size_t i = k; i < n; ++i) e[i] -= s * ck[i];
        }
        for (std::size_t i = 0; i < n; ++i) f.q_thin(i, j) = e[i];
    }
    return f;
}

}  // namespace linfeas
