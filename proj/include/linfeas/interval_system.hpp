#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "linfeas/projectors.hpp"
#include "linfeas/slab.hpp"
#include "linfeas/vec.hpp"

namespace linfeas {

/// Interval system  c <= A x <= d  held as a list of slabs. An optional
/// variable box is folded in as extra unit-row slabs appended after the matrix
/// rows, so every row-action solver sees a single flat row list.
struct IntervalSystem {
    std::vector<SlabConstraint> rows;
    std::size_t dim = 0;
    std::optional<BoxProjector> variable_box;

    IntervalSystem() = default;
    explicit IntervalSystem(std::size_t n) : dim(n) {}

    void add_row(SlabConstraint s) { rows.push_back(std::move(s)); }

    void set_variable_box(BoxProjector box) {
        require(box.dim() == dim, "IntervalSystem: box dimension mismatch");
        variable_box = std::move(box);
    }

    // Matrix rows followed by the box rows (one unit slab per variable with at
    // least one finite bound).
    std::vector<SlabConstraint> all_slabs() const {
        std::vector<SlabConstraint> out = rows;
        if (variable_box) {
            const auto& lo = variable_box->lower();
            const auto& hi = variable_box->upper();
            for (std::size_t j = 0; j < dim; ++j) {
                if (!std::isfinite(lo[j]) && !std::isfinite(hi[j])) continue;
                out.push_back(SlabConstraint({{j, 1.0}}, lo[j], hi[j]));
            }
        }
        return out;
    }

    bool satisfied(const Vec<double>& x, double tol_scale) const {
        for (const auto& s : rows)
            if (!slab_satisfied(s, x, tol_scale)) return false;
        if (variable_box) {
            const auto& lo = variable_box->lower();
            const auto& hi = variable_box->upper();
            for (std::size_t j = 0; j < dim; ++j) {
                if (x[j] > hi[j] + tol_scale * (1.0 + std::abs(hi[j]))) return false;
                if (x[j] < lo[j] - tol_scale * (1.0 + std::abs(lo[j]))) return false;
            }
        }
        return true;
    }
};

}  // namespace linfeas
