#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace linfeas {

template <class Real>
using Vec = std::vector<Real>;

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

template <class Real>
Real dot(const Vec<Real>& a, const Vec<Real>& b) {
    require(a.size() == b.size(), "dot: length mismatch");
    Real s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <class Real>
Real norm_sq(const Vec<Real>& a) {
    Real s = 0;
    for (const Real& v : a) s += v * v;
    return s;
}

template <class Real>
Real norm2(const Vec<Real>& a) {
    return std::sqrt(norm_sq(a));
}

template <class Real>
Real norm_inf(const Vec<Real>& a) {
    Real m = 0;
    for (const Real& v : a) m = std::max(m, std::abs(v));
    return m;
}

// y += alpha * x
template <class Real>
void axpy(Real alpha, const Vec<Real>& x, Vec<Real>& y) {
    require(x.size() == y.size(), "axpy: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

template <class Real>
Real dist_sq(const Vec<Real>& a, const Vec<Real>& b) {
    require(a.size() == b.size(), "dist_sq: length mismatch");
    Real s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Real d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

template <class Real>
Real dist2(const Vec<Real>& a, const Vec<Real>& b) {
    return std::sqrt(dist_sq(a, b));
}

template <class Real>
bool all_finite(const Vec<Real>& a) {
    for (const Real& v : a)
        if (!std::isfinite((double)v)) return false;
    return true;
}

}  // namespace linfeas
