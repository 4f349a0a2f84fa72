#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "linfeas/interval_system.hpp"
#include "linfeas/slab.hpp"
#include "linfeas/vec.hpp"

namespace linfeas {

enum class Art3Status { Feasible, SweepLimit };

struct Art3Result {
    Vec<double> x;
    Art3Status status = Art3Status::SweepLimit;
    std::size_t sweeps_used = 0;
};

inline constexpr double kArt3VerifyTol = 1e-9;

/// Row-action solver for interval systems with sweep control:
/// keep an active list (initially all rows, ascending index); visiting an
/// active row drops it when satisfied, otherwise applies art3_step and keeps
/// it. When the list empties, re-verify every row against the raw system; if
/// all hold, stop feasible, else restore the full list and continue. One sweep
/// is one pass over the current active list.
inline Art3Result art3plus_solve(const IntervalSystem& system, const Vec<double>& x0,
                                 double lambda, std::size_t max_sweeps) {
    require(max_sweeps >= 1, "art3plus_solve: max_sweeps must be >= 1");
    require(x0.size() == system.dim, "art3plus_solve: x0 dimension mismatch");

    const std::vector<SlabConstraint> slabs = system.all_slabs();
    Art3Result res;
    res.x = x0;

    auto verified = [&]() {
        for (const auto& s : slabs)
            if (!slab_satisfied(s, res.x, kArt3VerifyTol)) return false;
        return true;
    };

    if (verified()) {
        res.status = Art3Status::Feasible;
        res.sweeps_used = 0;
        return res;
    }

    std::vector<std::size_t> active(slabs.size());
    std::iota(active.begin(), active.end(), std::size_t{0});

    for (std::size_t sweep = 1; sweep <= max_sweeps; ++sweep) {
        std::vector<std::size_t> still_active;
        still_active.reserve(active.size());
        for (std::size_t idx : active) {
            const SlabConstraint& s = slabs[idx];
            if (slab_residual(s, res.x) == 0.0) continue;  // satisfied: dropped for good
            res.x = art3_step(s, res.x, lambda);
            still_active.push_back(idx);
        }
        active = std::move(still_active);
        res.sweeps_used = sweep;
        if (active.empty()) {
            if (verified()) {
                res.status = Art3Status::Feasible;
                return res;
            }
            active.resize(slabs.size());
            std::iota(active.begin(), active.end(), std::size_t{0});
        }
    }
    res.status = Art3Status::SweepLimit;
    return res;
}

}  // namespace linfeas
