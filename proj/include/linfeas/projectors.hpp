#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <type_traits>

#include "linfeas/dense_matrix.hpp"
#include "linfeas/qr.hpp"
#include "linfeas/vec.hpp"

namespace linfeas {

/// Euclidean projector onto the affine subspace {x : A x = b}, applied through
/// thin QR factors of A^T:  x  ->  x - Q (R^T)^{-1} (A x - b).
///
/// When Real is wider than double the correction is repeated on the remaining
/// residual (iterative refinement): the double-precision factors act as the
/// solver while accuracy comes from the Real-accumulated residuals. Two passes
/// push the residual to the rounding floor of Real.
template <class Real>
class AffineProjector {
public:
    AffineProjector() = default;

    AffineProjector(DenseMatrix a, Vec<Real> b)
        : a_(std::move(a)), b_(std::move(b)), factors_(qr_factor(a_.transposed())) {
        require(b_.size() == a_.rows(), "AffineProjector: b length != row count");
    }

    AffineProjector(DenseMatrix a, Vec<Real> b, QRFactors factors)
        : a_(std::move(a)), b_(std::move(b)), factors_(std::move(factors)) {
        require(b_.size() == a_.rows(), "AffineProjector: b length != row count");
        require(factors_.tall_dim() == a_.cols() && factors_.thin_dim() == a_.rows(),
                "AffineProjector: factor shape mismatch");
    }

    std::size_t dim() const { return a_.cols(); }
    std::size_t constraints() const { return a_.rows(); }
    const DenseMatrix& matrix() const { return a_; }
    const Vec<Real>& rhs() const { return b_; }
    const QRFactors& factors() const { return factors_; }

    static constexpr int refine_passes = std::is_same_v<Real, double> ? 1 : 2;

    Vec<Real> residual(const Vec<Real>& x) const {
        Vec<Real> r = a_.apply(x);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b_[i];
        return r;
    }

    Real residual_inf(const Vec<Real>& x) const { return norm_inf(residual(x)); }

    Vec<Real> project(const Vec<Real>& x) const {
        require(x.size() == dim(), "AffineProjector::project: dimension mismatch");
        Vec<Real> z = x;
        for (int pass = 0; pass < refine_passes; ++pass) {
            Vec<Real> y = factors_.solve_rt(residual(z));
            // z -= Q y
            const DenseMatrix& q = factors_.q_thin;
            for (std::size_t i = 0; i < z.size(); ++i) {
                const double* qi = q.row_ptr(i);
                Real s = 0;
                for (std::size_t k = 0; k < y.size(); ++k) s += Real(qi[k]) * y[k];
                z[i] -= s;
            }
            // |Q y| = |y|: while the correction is still large the double
            // factors are already accurate enough, so skip the extra pass.
            if (norm_sq(y) > Real(1e-8) * (Real(1) + norm_sq(z))) break;
        }
        return z;
    }

private:
    DenseMatrix a_;
    Vec<Real> b_;
    QRFactors factors_;
};

template <class Real>
Vec<Real> project_affine(const AffineProjector<Real>& p, const Vec<Real>& x) {
    return p.project(x);
}

/// Componentwise clipping onto the box {x : lower <= x <= upper}.
/// Bounds may be +-infinity; such components pass through unchanged.
class BoxProjector {
public:
    BoxProjector() = default;

    BoxProjector(Vec<double> lower, Vec<double> upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {
        require(lower_.size() == upper_.size(), "BoxProjector: bound length mismatch");
        for (std::size_t i = 0; i < lower_.size(); ++i)
            require(lower_[i] <= upper_[i], "BoxProjector: lower > upper");
    }

    static BoxProjector uniform(std::size_t n, double lo, double hi) {
        return BoxProjector(Vec<double>(n, lo), Vec<double>(n, hi));
    }

    std::size_t dim() const { return lower_.size(); }
    const Vec<double>& lower() const { return lower_; }
    const Vec<double>& upper() const { return upper_; }

    template <class Real>
    Vec<Real> project(const Vec<Real>& x) const {
        require(x.size() == dim(), "BoxProjector::project: dimension mismatch");
        Vec<Real> z = x;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (z[i] < Real(lower_[i])) z[i] = Real(lower_[i]);
            if (z[i] > Real(upper_[i])) z[i] = Real(upper_[i]);
        }
        return z;
    }

    template <class Real>
    bool contains(const Vec<Real>& x) const {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] < Real(lower_[i]) || x[i] > Real(upper_[i])) return false;
        return true;
    }

private:
    Vec<double> lower_, upper_;
};

template <class Real>
Vec<Real> project_box(const BoxProjector& p, const Vec<Real>& x) {
    return p.project(x);
}

}  // namespace linfeas
