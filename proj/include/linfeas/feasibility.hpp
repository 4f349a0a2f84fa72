#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linfeas/projectors.hpp"
#include "linfeas/vec.hpp"

namespace linfeas {

enum class Method { POCS, PPM, EAPM, EPPM };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::POCS: return "POCS";
        case Method::PPM: return "PPM";
        case Method::EAPM: return "EAPM";
        case Method::EPPM: return "EPPM";
    }
    return "?";
}

inline Method method_from_name(const std::string& s) {
    if (s == "POCS" || s == "pocs") return Method::POCS;
    if (s == "PPM" || s == "ppm") return Method::PPM;
    if (s == "EAPM" || s == "eapm") return Method::EAPM;
    if (s == "EPPM" || s == "eppm") return Method::EPPM;
    throw std::invalid_argument("unknown method '" + s + "'");
}

enum class SolveStatus { Converged, IterationLimit };

struct SolverConfig {
    Method method = Method::POCS;
    double relax_rho = 1.9;     // EAPM extrapolated relaxation, (0,2)
    double relax_chi = 1.9;     // EPPM extrapolated relaxation, (0,2)
    double fixed_lambda = 1.0;  // POCS/PPM relaxation
    std::size_t max_iters = 500;
    // Stop once the normalized proximity falls to stop_db. The plunge of the
    // extrapolated methods bottoms out around -270 dB even in exact
    // arithmetic (the iterate enters the box and the extrapolation factor
    // collapses to 1), so the stopping floor sits above that with margin.
    double stop_db = -250.0;
    double membership_tol = 1e-10;

    void validate() const {
        require(relax_rho > 0.0 && relax_rho < 2.0, "SolverConfig: rho outside (0,2)");
        require(relax_chi > 0.0 && relax_chi < 2.0, "SolverConfig: chi outside (0,2)");
        require(fixed_lambda > 0.0, "SolverConfig: lambda must be positive");
        require(max_iters >= 1, "SolverConfig: max_iters must be >= 1");
    }
};

/// Floor reported when the proximity numerator underflows to exactly zero.
inline constexpr double kProximityFloorDb = -400.0;

template <class Real>
struct TwoSetProblem {
    AffineProjector<Real> affine;
    BoxProjector box;
    std::optional<Vec<Real>> known_feasible;

    std::size_t dim() const { return affine.dim(); }
};

struct TraceEntry {
    std::size_t iter = 0;
    double proximity_db = 0.0;
    double k_or_l = 1.0;  // extrapolation factor used by the step that produced this iterate
    double wall_s = 0.0;
    double dist_feas = std::numeric_limits<double>::quiet_NaN();
};

struct IterationTrace {
    std::vector<TraceEntry> entries;
    std::vector<std::size_t> cancellations;  // EPPM zero-denominator events

    std::size_t iterations() const { return entries.empty() ? 0 : entries.size() - 1; }

    // First iteration at which the proximity reaches `db`, or nullopt.
    std::optional<std::size_t> first_at_or_below(double db) const {
        for (const auto& e : entries)
            if (e.proximity_db <= db) return e.iter;
        return std::nullopt;
    }
};

template <class Real>
struct SolveResult {
    Vec<Real> x;
    IterationTrace trace;
    SolveStatus status = SolveStatus::IterationLimit;
    // max over EAPM iterates of |A x - b|_inf / (1 + |b|_inf); 0 for others
    double max_affine_residual_scaled = 0.0;
};

template <class Real>
Real proximity_raw(const TwoSetProblem<Real>& pb, const Vec<Real>& x) {
    return dist_sq(pb.affine.project(x), x) + dist_sq(pb.box.project(x), x);
}

/// Normalized proximity in decibels:
///   10 log10( (|P1 x - x|^2 + |P2 x - x|^2) / (|P1 x0 - x0|^2 + |P2 x0 - x0|^2) ).
/// Returns the -400 dB floor when the numerator is exactly zero.
template <class Real>
double proximity_db(const TwoSetProblem<Real>& pb, const Vec<Real>& x, const Vec<Real>& x0) {
    Real den = proximity_raw(pb, x0);
    if (den == Real(0)) throw std::runtime_error("proximity_db: zero denominator (x0 feasible)");
    Real num = proximity_raw(pb, x);
    if (num == Real(0)) return kProximityFloorDb;
    return double(Real(10) * std::log10(num / den));
}

template <class Real>
Vec<Real> step_pocs(const TwoSetProblem<Real>& pb, const Vec<Real>& x, double lambda) {
    require(lambda > 0.0, "step_pocs: lambda must be positive");
    Vec<Real> t = pb.affine.project(pb.box.project(x));
    Vec<Real> z = x;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += Real(lambda) * (t[i] - z[i]);
    return z;
}

template <class Real>
Vec<Real> step_ppm(const TwoSetProblem<Real>& pb, const Vec<Real>& x, double lambda) {
    require(lambda > 0.0, "step_ppm: lambda must be positive");
    Vec<Real> p1 = pb.affine.project(x);
    Vec<Real> p2 = pb.box.project(x);
    Vec<Real> z = x;
    for (std::size_t i = 0; i < z.size(); ++i)
        z[i] += Real(lambda) * ((p1[i] + p2[i]) / Real(2) - z[i]);
    return z;
}

/// Extrapolated alternating step. Requires x in S1 (within membership_tol,
/// measured as |A x - b|_inf relative to 1 + |b|_inf); the result stays in S1.
/// K = |P2 x - x|^2 / |P1 P2 x - x|^2 when x is outside the box, else 1.
template <class Real>
std::pair<Vec<Real>, double> step_eapm(const TwoSetProblem<Real>& pb, const Vec<Real>& x,
                                       double rho, double membership_tol = 1e-10) {
    require(rho > 0.0 && rho < 2.0, "step_eapm: rho outside (0,2)");
    const Real scale = Real(1) + norm_inf(pb.affine.rhs());
    if (pb.affine.residual_inf(x) > Real(membership_tol) * scale)
        throw std::invalid_argument("step_eapm: x is not in the affine set");

    Vec<Real> p2 = pb.box.project(x);
    Real d2 = dist_sq(p2, x);
    Vec<Real> t = pb.affine.project(p2);
    Real dt = dist_sq(t, x);

    Real k = 1;
    if (d2 != Real(0)) {
        if (dt == Real(0)) return {x, 1.0};  // displacement fully cancelled: already at the limit
        if (dt >= Real(1e-28)) k = d2 / dt;
    }
    Vec<Real> z = x;
    const Real step = Real(rho) * k;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += step * (t[i] - z[i]);
    return {z, double(k)};
}

template <class Real>
struct EppmStep {
    Vec<Real> x;
    double factor = 1.0;
    bool cancelled = false;  // zero denominator with x infeasible
};

/// Extrapolated parallel step.
/// L = 2 (|P1 x - x|^2 + |P2 x - x|^2) / |P1 x + P2 x - 2x|^2 off the
/// intersection, else 1. An exactly-zero denominator with x infeasible means
/// the two displacements cancel; the step falls back to the midpoint with
/// L = 1 and reports the event.
template <class Real>
EppmStep<Real> step_eppm(const TwoSetProblem<Real>& pb, const Vec<Real>& x, double chi) {
    require(chi > 0.0 && chi < 2.0, "step_eppm: chi outside (0,2)");
    Vec<Real> p1 = pb.affine.project(x);
    Vec<Real> p2 = pb.box.project(x);
    Real d1 = dist_sq(p1, x);
    Real d2 = dist_sq(p2, x);

    EppmStep<Real> out;
    if (d1 + d2 == Real(0)) {
        out.x = x;
        return out;
    }
    Real den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Real d = p1[i] + p2[i] - Real(2) * x[i];
        den += d * d;
    }
    Real l = 1;
    if (den == Real(0)) {
        out.cancelled = true;
    } else {
        l = Real(2) * (d1 + d2) / den;
    }
    out.x = x;
    const Real step = Real(chi) * l;
    for (std::size_t i = 0; i < x.size(); ++i)
        out.x[i] += step * ((p1[i] + p2[i]) / Real(2) - x[i]);
    out.factor = double(l);
    return out;
}

/// Run the configured method from x0 = P1 0 until the proximity reaches
/// stop_db or max_iters is exhausted. The trace carries one entry per iterate
/// including iteration 0 (whose proximity is 0 dB by normalization).
template <class Real>
SolveResult<Real> solve(const TwoSetProblem<Real>& pb, const SolverConfig& cfg) {
    cfg.validate();
    using clock = std::chrono::steady_clock;

    SolveResult<Real> res;
    Vec<Real> x = pb.affine.project(Vec<Real>(pb.dim(), Real(0)));

    const Real b_scale = Real(1) + norm_inf(pb.affine.rhs());
    auto dist_to_feasible = [&](const Vec<Real>& v) {
        if (!pb.known_feasible) return std::numeric_limits<double>::quiet_NaN();
        return double(dist2(v, *pb.known_feasible));
    };
    auto record_eapm_residual = [&](const Vec<Real>& v) {
        if (cfg.method != Method::EAPM) return;
        double r = double(pb.affine.residual_inf(v) / b_scale);
        res.max_affine_residual_scaled = std::max(res.max_affine_residual_scaled, r);
    };

    const Real p0 = proximity_raw(pb, x);
    res.trace.entries.push_back({0, 0.0, 1.0, 0.0, dist_to_feasible(x)});
    record_eapm_residual(x);
    if (p0 == Real(0)) {
        res.x = std::move(x);
        res.status = SolveStatus::Converged;
        return res;
    }

    for (std::size_t n = 1; n <= cfg.max_iters; ++n) {
        double factor = 1.0;
        auto t0 = clock::now();
        switch (cfg.method) {
            case Method::POCS:
                x = step_pocs(pb, x, cfg.fixed_lambda);
                break;
            case Method::PPM:
                x = step_ppm(pb, x, cfg.fixed_lambda);
                break;
            case Method::EAPM: {
                auto [z, k] = step_eapm(pb, x, cfg.relax_rho, cfg.membership_tol);
                x = std::move(z);
                factor = k;
                break;
            }
            case Method::EPPM: {
                auto st = step_eppm(pb, x, cfg.relax_chi);
                x = std::move(st.x);
                factor = st.factor;
                if (st.cancelled) res.trace.cancellations.push_back(n);
                break;
            }
        }
        const double wall = std::chrono::duration<double>(clock::now() - t0).count();

        const Real num = proximity_raw(pb, x);
        const double db =
            num == Real(0) ? kProximityFloorDb : double(Real(10) * std::log10(num / p0));
        res.trace.entries.push_back({n, db, factor, wall, dist_to_feasible(x)});
        record_eapm_residual(x);
        if (db <= cfg.stop_db) {
            res.x = std::move(x);
            res.status = SolveStatus::Converged;
            return res;
        }
    }
    res.x = std::move(x);
    res.status = SolveStatus::IterationLimit;
    return res;
}

}  // namespace linfeas
