#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linfeas/art3plus.hpp"
#include "linfeas/interval_system.hpp"
#include "linfeas/vec.hpp"

namespace linfeas {

/// Linear program  minimize a.x  subject to an interval system (matrix rows
/// plus variable box). Solved by bisection on an objective bound, re-solving
/// feasibility with the row-action solver at each probe.
struct LpProblem {
    Vec<double> objective;
    IntervalSystem system;
    std::optional<std::pair<double, double>> bracket;
    double tol = 1e-6;  // relative bisection tolerance

    void validate() const {
        require(objective.size() == system.dim, "LpProblem: objective dimension mismatch");
        require(norm_sq(objective) > 0.0, "LpProblem: objective is zero");
        if (bracket) require(bracket->first <= bracket->second, "LpProblem: bracket lo > hi");
    }
};

/// The feasibility problem with the extra constraint a.x <= objective_bound.
inline IntervalSystem augment(const LpProblem& p, double objective_bound) {
    IntervalSystem s = p.system;
    s.add_row(SlabConstraint::dense(p.objective, -std::numeric_limits<double>::infinity(),
                                    objective_bound));
    return s;
}

struct LpProbe {
    std::size_t probe = 0;
    double bound = std::numeric_limits<double>::infinity();
    Art3Status status = Art3Status::SweepLimit;
    double value = std::numeric_limits<double>::quiet_NaN();  // a.x of the found point
    std::size_t sweeps = 0;
};

struct LpResult {
    Vec<double> x_best;
    double value_best = std::numeric_limits<double>::quiet_NaN();
    std::vector<LpProbe> trace;
};

namespace detail {

// Lower bound on a.x over the variable box; needs every bound finite where
// the objective has a nonzero coefficient.
inline double objective_floor(const LpProblem& p) {
    if (!p.system.variable_box)
        throw std::runtime_error("art3plus_o: bracket required (no variable box)");
    const auto& lo = p.system.variable_box->lower();
    const auto& hi = p.system.variable_box->upper();
    double s = 0.0;
    for (std::size_t j = 0; j < p.objective.size(); ++j) {
        const double a = p.objective[j];
        if (a == 0.0) continue;
        if (!std::isfinite(lo[j]) || !std::isfinite(hi[j]))
            throw std::runtime_error("art3plus_o: bracket required (unbounded variable)");
        s += std::min(a * lo[j], a * hi[j]);
    }
    return s;
}

}  // namespace detail

/// Bisection driver. The first probe solves the unaugmented system; its
/// objective value seeds hi, the bracket (or the variable-box floor) seeds lo.
/// A feasible probe pulls hi down to the value actually achieved; a
/// sweep-limited probe raises lo to the midpoint. Stops when the bracket is
/// narrower than tol * (1 + |hi|).
inline LpResult art3plus_o(const LpProblem& p, double lambda, std::size_t sweep_cap) {
    p.validate();
    LpResult res;

    Vec<double> start(p.system.dim, 0.0);
    Art3Result base = art3plus_solve(p.system, start, lambda, sweep_cap);
    if (base.status != Art3Status::Feasible)
        throw std::runtime_error("art3plus_o: no feasible start");

    double hi = 0.0;
    for (std::size_t j = 0; j < p.objective.size(); ++j) hi += p.objective[j] * base.x[j];
    double lo = p.bracket ? p.bracket->first : detail::objective_floor(p);

    res.x_best = base.x;
    res.value_best = hi;
    res.trace.push_back(
        {0, std::numeric_limits<double>::infinity(), base.status, hi, base.sweeps_used});

    std::size_t probe = 1;
    while (hi - lo > p.tol * (1.0 + std::abs(hi))) {
        const double mid = 0.5 * (lo + hi);
        IntervalSystem aug = augment(p, mid);
        Art3Result r = art3plus_solve(aug, res.x_best, lambda, sweep_cap);
        LpProbe entry;
        entry.probe = probe++;
        entry.bound = mid;
        entry.status = r.status;
        entry.sweeps = r.sweeps_used;
        if (r.status == Art3Status::Feasible) {
            double v = 0.0;
            for (std::size_t j = 0; j < p.objective.size(); ++j) v += p.objective[j] * r.x[j];
            entry.value = v;
            res.x_best = std::move(r.x);
            res.value_best = v;
            hi = v;
        } else {
            lo = mid;
        }
        res.trace.push_back(entry);
    }
    return res;
}

}  // namespace linfeas
