#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "linfeas/dense_matrix.hpp"
#include "linfeas/sparse_matrix.hpp"
#include "linfeas/vec.hpp"

namespace linfeas {

// Uniform row access for the row-action loops; dense rows enumerate every
// column, sparse rows only their support.
namespace rowaccess {

inline double row_dot(const DenseMatrix& a, std::size_t i, const Vec<double>& x) {
    const double* ai = a.row_ptr(i);
    double s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += ai[j] * x[j];
    return s;
}

inline double row_dot(const SparseRowMatrix& a, std::size_t i, const Vec<double>& x) {
    return a.row_dot(i, x);
}

inline void row_axpy(const DenseMatrix& a, std::size_t i, double alpha, Vec<double>& x) {
    const double* ai = a.row_ptr(i);
    for (std::size_t j = 0; j < a.cols(); ++j) x[j] += alpha * ai[j];
}

inline void row_axpy(const SparseRowMatrix& a, std::size_t i, double alpha, Vec<double>& x) {
    a.row_axpy(i, alpha, x);
}

inline double row_norm_sq(const DenseMatrix& a, std::size_t i) {
    const double* ai = a.row_ptr(i);
    double s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += ai[j] * ai[j];
    return s;
}

inline double row_norm_sq(const SparseRowMatrix& a, std::size_t i) { return a.row_norm_sq(i); }

}  // namespace rowaccess

/// State of the regularized row-action iteration minimizing
/// sigma^2 |b - A x|^2 + |x|^2. Both x and the dual-ish vector u start at
/// zero; rows are visited cyclically in ascending order.
struct ArtState {
    Vec<double> x;  // length N
    Vec<double> u;  // length M
    std::size_t n = 0;
    double sigma = 5.0;
    double lambda = 0.05;

    ArtState(std::size_t n_cols, std::size_t m_rows, double sigma_, double lambda_)
        : x(n_cols, 0.0), u(m_rows, 0.0), sigma(sigma_), lambda(lambda_) {
        require(sigma > 0.0, "ArtState: sigma must be positive");
        require(lambda > 0.0 && lambda < 2.0, "ArtState: lambda outside (0,2)");
    }
};

/// One row-action update on row j = n mod M:
///   gamma = lambda (sigma (b_j - a_j.x) - u_j) / (1 + sigma^2 |a_j|^2)
///   u_j  += gamma
///   x    += sigma gamma a_j
/// Touches exactly one component of u and only the support of row j in x.
template <class Matrix>
void art_step(ArtState& st, const Matrix& a, const Vec<double>& b,
              const Vec<double>& row_norms_sq) {
    const std::size_t m = b.size();
    const std::size_t j = st.n % m;
    const double r = b[j] - rowaccess::row_dot(a, j, st.x);
    const double gamma =
        st.lambda * (st.sigma * r - st.u[j]) / (1.0 + st.sigma * st.sigma * row_norms_sq[j]);
    st.u[j] += gamma;
    rowaccess::row_axpy(a, j, st.sigma * gamma, st.x);
    ++st.n;
}

// spmv over either matrix kind
inline Vec<double> spmv_like(const DenseMatrix& a, const Vec<double>& x) { return a.apply(x); }
inline Vec<double> spmv_like(const SparseRowMatrix& a, const Vec<double>& x) { return spmv(a, x); }

template <class Matrix>
double art_objective(const Matrix& a, const Vec<double>& b, const Vec<double>& x, double sigma) {
    Vec<double> ax = spmv_like(a, x);
    double s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const double d = b[i] - ax[i];
        s += d * d;
    }
    return sigma * sigma * s + norm_sq(x);
}

struct ArtRun {
    Vec<double> x;
    Vec<double> u;
    // objective value before any step (index 0) and after each full cycle
    std::vector<double> objectives;
};

/// Run `cycles` full passes (M row steps each) of the regularized iteration.
template <class Matrix>
ArtRun art_solve(const Matrix& a, const Vec<double>& b, double sigma, double lambda,
                 std::size_t cycles) {
    require(cycles >= 1, "art_solve: cycles must be >= 1");
    require(b.size() == a.rows(), "art_solve: rhs length mismatch");
    const std::size_t m = a.rows();

    Vec<double> norms(m);
    for (std::size_t i = 0; i < m; ++i) norms[i] = rowaccess::row_norm_sq(a, i);

    ArtState st(a.cols(), m, sigma, lambda);
    ArtRun run;
    run.objectives.reserve(cycles + 1);
    run.objectives.push_back(art_objective(a, b, st.x, sigma));
    for (std::size_t c = 0; c < cycles; ++c) {
        for (std::size_t k = 0; k < m; ++k) art_step(st, a, b, norms);
        run.objectives.push_back(art_objective(a, b, st.x, sigma));
    }
    run.x = std::move(st.x);
    run.u = std::move(st.u);
    return run;
}

}  // namespace linfeas
