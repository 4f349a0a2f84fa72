#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linfeas/vec.hpp"

namespace linfeas {

/// One interval row  lower <= a.x <= upper. The row is kept sparse
/// ((column, value) pairs, increasing columns); a dense row simply lists every
/// column. The squared norm is cached once so row-action sweeps never
/// recompute it.
struct SlabConstraint {
    std::vector<std::pair<std::size_t, double>> row;
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
    double row_norm_sq = 0.0;

    SlabConstraint() = default;

    SlabConstraint(std::vector<std::pair<std::size_t, double>> entries, double lo, double hi)
        : row(std::move(entries)), lower(lo), upper(hi) {
        if (!(lower <= upper)) throw std::invalid_argument("SlabConstraint: lower > upper");
        if (!std::isfinite(lower) && !std::isfinite(upper))
            throw std::invalid_argument("SlabConstraint: both bounds infinite");
        for (const auto& [j, v] : row) row_norm_sq += v * v;
        if (row_norm_sq <= 0.0) throw std::invalid_argument("SlabConstraint: zero row");
    }

    static SlabConstraint dense(const Vec<double>& a, double lo, double hi) {
        std::vector<std::pair<std::size_t, double>> e;
        e.reserve(a.size());
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[j] != 0.0) e.emplace_back(j, a[j]);
        return SlabConstraint(std::move(e), lo, hi);
    }

    double dot(const Vec<double>& x) const {
        double s = 0;
        for (const auto& [j, v] : row) s += v * x[j];
        return s;
    }

    bool two_sided() const { return std::isfinite(lower) && std::isfinite(upper); }
};

/// Signed violation of the slab at x: 0 when lower <= a.x <= upper, otherwise
/// the signed distance of a.x beyond the nearer violated bound.
inline double slab_residual(const SlabConstraint& s, const Vec<double>& x) {
    const double ax = s.dot(x);
    if (ax > s.upper) return ax - s.upper;
    if (ax < s.lower) return ax - s.lower;
    return 0.0;
}

inline bool slab_satisfied(const SlabConstraint& s, const Vec<double>& x, double tol_scale) {
    const double ax = s.dot(x);
    if (ax > s.upper + tol_scale * (1.0 + std::abs(s.upper))) return false;
    if (ax < s.lower - tol_scale * (1.0 + std::abs(s.lower))) return false;
    return true;
}

/// Row-action step for interval constraints, three-zone rule. With
/// m = (lower+upper)/2, delta = (upper-lower)/2 and u = a.x - m:
///   |u| <= delta          no move,
///   delta < |u| <= 3delta reflect across the nearer bounding hyperplane,
///   |u| > 3delta          project onto the median hyperplane a.x = m.
/// Both moving cases land inside the slab. A one-sided slab (half-space) gets
/// the orthogonal projection onto its bounding hyperplane scaled by relax.
inline Vec<double> art3_step(const SlabConstraint& s, const Vec<double>& x, double relax) {
    if (s.row_norm_sq <= 0.0) throw std::runtime_error("art3_step: zero row norm");
    const double ax = s.dot(x);
    Vec<double> z = x;

    if (!s.two_sided()) {
        double overshoot = 0.0;
        if (std::isfinite(s.upper) && ax > s.upper) overshoot = ax - s.upper;
        else if (std::isfinite(s.lower) && ax < s.lower) overshoot = ax - s.lower;
        if (overshoot == 0.0) return z;
        const double step = -relax * overshoot / s.row_norm_sq;
        for (const auto& [j, v] : s.row) z[j] += step * v;
        return z;
    }

    const double m = 0.5 * (s.lower + s.upper);
    const double delta = 0.5 * (s.upper - s.lower);
    const double u = ax - m;
    if (std::abs(u) <= delta) return z;

    double step;
    if (std::abs(u) <= 3.0 * delta) {
        const double bound = u > 0.0 ? s.upper : s.lower;
        step = -2.0 * (ax - bound) / s.row_norm_sq;
    } else {
        step = -u / s.row_norm_sq;
    }
    for (const auto& [j, v] : s.row) z[j] += step * v;
    return z;
}

}  // namespace linfeas
