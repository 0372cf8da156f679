#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hsgn/model.hpp"

namespace hsgn {

/** Adaptive embedded Runge-Kutta configuration. Defaults suit production
 *  runs; convergence studies tighten the tolerances to 1e-10. */
struct IntegratorConfig {
    double abs_tol = 1e-6;
    double rel_tol = 1e-6;
    double dt_initial = 0.0; // <= 0: estimate from the initial tendency
    double dt_max = std::numeric_limits<double>::infinity();
    double safety = 0.9;
    double growth_cap = 5.0;   // accepted-step growth clamp
    double shrink_floor = 0.2; // accepted-step shrink clamp
    std::int64_t max_steps = 50000000;
    double fixed_dt = 0.0; // > 0: fixed-step mode, controller disabled
    double h_floor = 1e-12;
};

/** Integration outcome: final state, counters, and an abort marker carrying
 *  the last valid state when the run could not finish. */
struct SolutionRecord {
    StateField q;
    double t = 0.0;
    std::int64_t accepted = 0;
    std::int64_t rejected = 0;
    std::int64_t rhs_evals = 0;       // stage evaluations: 3*(accepted+rejected)+1
    std::int64_t rhs_evals_setup = 0; // extra evaluations of the step-size estimate
    bool aborted = false;
    std::string abort_reason;
};

using RhsFn = std::function<void(double, const StateField&, StateField&)>;

/** Called after each accepted step with the new time, the new state, and the
 *  tendency at that state (free through the first-same-as-last stage). Also
 *  called once for the initial state before stepping. */
using AcceptObserver = std::function<void(double, const StateField&, const StateField&)>;

namespace detail {

inline void copy_state(const StateField& src, StateField& dst) {
    auto s = src.fields();
    auto d = dst.fields();
    for (int f = 0; f < StateField::n_fields; ++f)
        *d[f] = *s[f];
}

/** out = a + c1*k1 */
inline void state_add1(const StateField& a, double c1, const StateField& k1,
                       StateField& out) {
    auto pa = a.fields();
    auto p1 = k1.fields();
    auto po = out.fields();
    for (int f = 0; f < StateField::n_fields; ++f) {
        const double* xa = pa[f]->data();
        const double* x1 = p1[f]->data();
        double* xo = po[f]->data();
        const std::int64_t n = static_cast<std::int64_t>(pa[f]->size());
#pragma omp parallel for schedule(static)
        for (std::int64_t k = 0; k < n; ++k)
            xo[k] = xa[k] + c1 * x1[k];
    }
}

/** out = a + c1*k1 + c2*k2 + c3*k3 */
inline void state_add3(const StateField& a, double c1, const StateField& k1, double c2,
                       const StateField& k2, double c3, const StateField& k3,
                       StateField& out) {
    auto pa = a.fields();
    auto p1 = k1.fields();
    auto p2 = k2.fields();
    auto p3 = k3.fields();
    auto po = out.fields();
    for (int f = 0; f < StateField::n_fields; ++f) {
        const double* xa = pa[f]->data();
        const double* x1 = p1[f]->data();
        const double* x2 = p2[f]->data();
        const double* x3 = p3[f]->data();
        double* xo = po[f]->data();
        const std::int64_t n = static_cast<std::int64_t>(pa[f]->size());
#pragma omp parallel for schedule(static)
        for (std::int64_t k = 0; k < n; ++k)
            xo[k] = xa[k] + c1 * x1[k] + c2 * x2[k] + c3 * x3[k];
    }
}

/** Weighted RMS of the embedded error estimate
 *      e = dt (d1 k1 + d2 k2 + d3 k3 + d4 k4)
 *  with per-entry weight abs_tol + rel_tol * max(|y|, |y_new|); also reports
 *  the minimum depth of the candidate state. Serial and deterministic. */
inline std::pair<double, double>
error_norm_and_min_h(double dt, const StateField& k1, const StateField& k2,
                     const StateField& k3, const StateField& k4, const StateField& y,
                     const StateField& ynew, double abs_tol, double rel_tol) {
    static constexpr double d1 = -5.0 / 72.0, d2 = 1.0 / 12.0, d3 = 1.0 / 9.0,
                            d4 = -1.0 / 8.0;
    auto p1 = k1.fields();
    auto p2 = k2.fields();
    auto p3 = k3.fields();
    auto p4 = k4.fields();
    auto py = y.fields();
    auto pn = ynew.fields();
    double sum = 0.0, comp = 0.0;
    std::size_t count = 0;
    double min_h = std::numeric_limits<double>::infinity();
    for (int f = 0; f < StateField::n_fields; ++f) {
        const double* x1 = p1[f]->data();
        const double* x2 = p2[f]->data();
        const double* x3 = p3[f]->data();
        const double* x4 = p4[f]->data();
        const double* xy = py[f]->data();
        const double* xn = pn[f]->data();
        const std::size_t n = p1[f]->size();
        count += n;
        for (std::size_t k = 0; k < n; ++k) {
            const double e =
                dt * (d1 * x1[k] + d2 * x2[k] + d3 * x3[k] + d4 * x4[k]);
            const double scale =
                abs_tol + rel_tol * std::max(std::abs(xy[k]), std::abs(xn[k]));
            const double r = e / scale;
            const double term = r * r - comp;
            const double t = sum + term;
            comp = (t - sum) - term;
            sum = t;
            if (f == 0)
                min_h = std::min(min_h, xn[k]);
        }
    }
    return {std::sqrt(sum / static_cast<double>(count)), min_h};
}

inline double weighted_rms(const StateField& x, const StateField& ref, double abs_tol,
                           double rel_tol) {
    auto px = x.fields();
    auto pr = ref.fields();
    double sum = 0.0;
    std::size_t count = 0;
    for (int f = 0; f < StateField::n_fields; ++f) {
        const double* xx = px[f]->data();
        const double* xr = pr[f]->data();
        const std::size_t n = px[f]->size();
        count += n;
        for (std::size_t k = 0; k < n; ++k) {
            const double w = abs_tol + rel_tol * std::abs(xr[k]);
            const double r = xx[k] / w;
            sum += r * r;
        }
    }
    return std::sqrt(sum / static_cast<double>(count));
}

} // namespace detail

/** Startup step size in the spirit of Hairer-Norsett-Wanner: probe the
 *  tendency magnitude and its first variation with one Euler step. A zero
 *  tendency yields dt_max. Requires f0 = f(t0, q0), which the caller already
 *  has; performs at most one extra tendency evaluation (counted in evals). */
template <class F>
double estimate_initial_dt(F&& f, const StateField& q0, double t0, const StateField& f0,
                           const IntegratorConfig& cfg, double dt_span,
                           std::int64_t& evals) {
    const double dt_cap = std::min(cfg.dt_max, dt_span);
    const double d0 = detail::weighted_rms(q0, q0, cfg.abs_tol, cfg.rel_tol);
    const double d1 = detail::weighted_rms(f0, q0, cfg.abs_tol, cfg.rel_tol);
    if (d1 == 0.0)
        return dt_cap;
    double h0 = (d0 >= 1e-5 && d1 >= 1e-5) ? 0.01 * d0 / d1 : 1e-6;
    h0 = std::min(h0, dt_cap);

    StateField q1(q0), f1(q0);
    detail::state_add1(q0, h0, f0, q1);
    double d2 = 0.0;
    bool probed = false;
    try {
        f(t0 + h0, q1, f1);
        ++evals;
        StateField diff(q0);
        detail::state_add1(f1, -1.0, f0, diff);
        d2 = detail::weighted_rms(diff, q0, cfg.abs_tol, cfg.rel_tol) / h0;
        probed = true;
    } catch (const depth_error&) {
        // Euler probe left the admissible set; fall back to the magnitude scale.
    }
    double h1;
    const double dmax = std::max(d1, d2);
    if (!probed || dmax <= 1e-15)
        h1 = std::max(1e-6, h0 * 1e-3);
    else
        h1 = std::pow(0.01 / dmax, 1.0 / 3.0);
    return std::min({100.0 * h0, h1, dt_cap});
}

/** Adaptive third-order Runge-Kutta solve with a second-order embedded error
 *  estimate (Bogacki-Shampine 3(2)), first-same-as-last stage reuse, and a
 *  PI step controller. Linear invariants of the tendency are preserved up to
 *  roundoff because every update is a fixed linear combination of stages. */
template <class F>
SolutionRecord adaptive_solve(F&& f, const StateField& q0, double t0, double t_final,
                              const IntegratorConfig& cfg,
                              const AcceptObserver& on_accept = {}) {
    SolutionRecord rec;
    rec.q = q0;
    rec.t = t0;
    if (!(t_final > t0)) {
        if (t_final == t0)
            return rec;
        rec.aborted = true;
        rec.abort_reason = "t_final precedes t0";
        return rec;
    }

    StateField y = q0;
    StateField k1(q0), k2(q0), k3(q0), k4(q0), ytmp(q0), ynew(q0);

    double t = t0;
    auto fail = [&](const std::string& why) {
        rec.q = y;
        rec.t = t;
        rec.aborted = true;
        rec.abort_reason = why;
    };

    try {
        f(t, y, k1);
        ++rec.rhs_evals;
    } catch (const depth_error& e) {
        fail(std::string("initial tendency: ") + e.what());
        return rec;
    }

    double dt;
    if (cfg.fixed_dt > 0.0)
        dt = cfg.fixed_dt;
    else if (cfg.dt_initial > 0.0)
        dt = std::min(cfg.dt_initial, std::min(cfg.dt_max, t_final - t0));
    else {
        std::int64_t setup_evals = 0;
        dt = estimate_initial_dt(f, y, t, k1, cfg, t_final - t0, setup_evals);
        rec.rhs_evals_setup = setup_evals;
        rec.rhs_evals += setup_evals;
    }

    if (on_accept)
        on_accept(t, y, k1);

    const double order_exp = 1.0 / 3.0;
    double err_prev = 1.0;
    const double tiny = 4.0 * std::numeric_limits<double>::epsilon();

    while (t < t_final - tiny * std::max(1.0, std::abs(t_final))) {
        if (rec.accepted + rec.rejected >= cfg.max_steps) {
            fail("step budget exhausted at t = " + std::to_string(t));
            return rec;
        }
        const bool clipped = dt >= t_final - t;
        if (clipped)
            dt = t_final - t;
        if (!(dt > tiny * std::max(1.0, std::abs(t)))) {
            fail("step size underflow at t = " + std::to_string(t));
            return rec;
        }

        bool stage_ok = true;
        try {
            detail::state_add1(y, 0.5 * dt, k1, ytmp);
            f(t + 0.5 * dt, ytmp, k2);
            ++rec.rhs_evals;
            detail::state_add1(y, 0.75 * dt, k2, ytmp);
            f(t + 0.75 * dt, ytmp, k3);
            ++rec.rhs_evals;
            detail::state_add3(y, dt * (2.0 / 9.0), k1, dt * (1.0 / 3.0), k2,
                               dt * (4.0 / 9.0), k3, ynew);
            f(t + dt, ynew, k4);
            ++rec.rhs_evals;
        } catch (const depth_error&) {
            stage_ok = false;
        }

        if (!stage_ok) {
            if (cfg.fixed_dt > 0.0) {
                fail("non-positive depth in fixed-step mode at t = " + std::to_string(t));
                return rec;
            }
            ++rec.rejected;
            dt *= 0.25;
            continue;
        }

        double err = 0.0;
        double min_h = std::numeric_limits<double>::infinity();
        if (cfg.fixed_dt > 0.0) {
            for (std::size_t k = 0; k < ynew.h.size(); ++k)
                min_h = std::min(min_h, ynew.h[k]);
        } else {
            const auto en = detail::error_norm_and_min_h(dt, k1, k2, k3, k4, y, ynew,
                                                         cfg.abs_tol, cfg.rel_tol);
            err = en.first;
            min_h = en.second;
        }

        const bool accept = cfg.fixed_dt > 0.0 || err <= 1.0; // NaN rejects
        if (accept) {
            if (min_h <= cfg.h_floor) {
                fail("depth reached the floor " + std::to_string(cfg.h_floor) +
                     " during the step to t = " + std::to_string(t + dt));
                return rec;
            }
            std::swap(y, ynew);
            std::swap(k1, k4); // first-same-as-last: tendency at the new state
            t = clipped ? t_final : t + dt;
            ++rec.accepted;
            if (cfg.fixed_dt <= 0.0) {
                double fac;
                if (err == 0.0)
                    fac = cfg.growth_cap;
                else
                    fac = cfg.safety * std::pow(err, -0.7 * order_exp) *
                          std::pow(err_prev, 0.4 * order_exp);
                fac = std::clamp(fac, cfg.shrink_floor, cfg.growth_cap);
                dt = std::min(dt * fac, cfg.dt_max);
                err_prev = std::max(err, 1e-10);
            }
            if (on_accept)
                on_accept(t, y, k1);
        } else {
            ++rec.rejected;
            const double fac = std::isfinite(err)
                                   ? std::clamp(cfg.safety * std::pow(err, -order_exp),
                                                0.1, 0.9)
                                   : 0.1;
            dt *= fac;
        }
    }

    rec.q = y;
    rec.t = t;
    return rec;
}

} // namespace hsgn
