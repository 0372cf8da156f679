#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsgn/analysis.hpp"
#include "hsgn/manufactured_generated.hpp"
#include "hsgn/model.hpp"
#include "hsgn/rhs.hpp"
#include "hsgn/time_integration.hpp"

namespace hsgn {

/** Complete description of a runnable experiment: domain, physics, initial
 *  surface and velocities, optional exact solution and source terms, and
 *  default recording locations. Resolution is chosen at preparation time. */
struct ScenarioSpec {
    std::string name;
    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    int nx_default = 64, ny_default = 64;
    BoundaryKind kind_x = BoundaryKind::periodic;
    BoundaryKind kind_y = BoundaryKind::periodic;
    double g = 9.81;
    double lambda = 500.0;
    double t0 = 0.0;
    double t_final = 1.0;

    std::function<double(double, double)> bathymetry; // b(x, y); empty = flat
    std::function<double(double, double)> h0;         // initial depth
    std::function<double(double, double)> u0;         // initial x velocity
    std::function<double(double, double)> v0;         // initial y velocity

    /** Fills all five fields with the exact solution at time t (optional). */
    std::function<void(double, const Grid2D&, StateField&)> exact;
    std::vector<std::string> exact_vars; // variables meaningful for comparison

    /** Pointwise source terms (S_h, S_u, S_v, S_w, S_eta)(t, x, y). */
    std::function<std::array<double, 5>(double, double, double)> source;

    std::vector<std::array<double, 2>> gauges;
    std::vector<double> snapshot_times;
};

/** Scenario materialized on a concrete grid, ready to integrate. */
struct PreparedRun {
    Grid2D grid;
    RhsContext ctx;
    StateField q0;
};

inline PreparedRun prepare_run(const ScenarioSpec& spec, int nx, int ny) {
    PreparedRun run;
    run.grid = make_grid(spec.x_min, spec.x_max, spec.y_min, spec.y_max, nx, ny,
                         spec.kind_x, spec.kind_y);
    PhysSetup phys;
    phys.g = spec.g;
    phys.lambda = spec.lambda;
    phys.b = spec.bathymetry ? run.grid.sample(spec.bathymetry)
                             : Field2D(nx, ny, 0.0);
    run.ctx = make_rhs_context(run.grid, phys);
    if (spec.source) {
        const Grid2D grid = run.grid;
        auto source = spec.source;
        run.ctx.source = [grid, source](double t, StateField& tend) {
            add_manufactured_sources(tend, t, grid, source);
        };
    }
    run.q0 = StateField(run.grid);
    run.q0.h = run.grid.sample(spec.h0);
    run.q0.u = spec.u0 ? run.grid.sample(spec.u0) : Field2D(nx, ny, 0.0);
    run.q0.v = spec.v0 ? run.grid.sample(spec.v0) : Field2D(nx, ny, 0.0);
    init_auxiliary(run.q0, run.ctx.op_x, run.ctx.op_y, run.ctx.phys.b);
    return run;
}

inline PreparedRun prepare_run(const ScenarioSpec& spec) {
    return prepare_run(spec, spec.nx_default, spec.ny_default);
}

// ---------------------------------------------------------------- solitary wave

/** Solitary-wave profile parameters over flat bathymetry:
 *  h = h_inf + A sech^2(kappa (x - C t)), u = C (1 - h_inf / h). */
struct SolitonShape {
    double h_inf, amplitude, g;
    double epsilon, kappa, speed;
};

inline SolitonShape soliton_shape(double h_inf, double amplitude, double g) {
    if (!(h_inf > 0.0) || !(amplitude > 0.0))
        throw std::invalid_argument("soliton_shape: need h_inf > 0 and amplitude > 0");
    SolitonShape s;
    s.h_inf = h_inf;
    s.amplitude = amplitude;
    s.g = g;
    s.epsilon = amplitude / h_inf;
    s.kappa = std::sqrt(3.0 * s.epsilon / (4.0 * h_inf * h_inf * (1.0 + s.epsilon)));
    s.speed = std::sqrt(g * h_inf * (1.0 + s.epsilon));
    return s;
}

inline double soliton_depth(const SolitonShape& s, double xi) {
    const double c = 1.0 / std::cosh(s.kappa * xi);
    return s.h_inf + s.amplitude * c * c;
}

inline double soliton_velocity(const SolitonShape& s, double xi) {
    return s.speed * (1.0 - s.h_inf / soliton_depth(s, xi));
}

/** Reduces xi into [-L/2, L/2) for periodic traversal comparisons. */
inline double periodic_wrap(double xi, double L) {
    return xi - L * std::round(xi / L);
}

/** Solitary wave propagating along one axis of a periodic domain; the exact
 *  translated profile is available for h and u (and the transverse velocity,
 *  which stays zero). direction is +1 or -1 along the chosen axis. */
inline ScenarioSpec soliton_1d(double h_inf = 1.0, double amplitude = 0.2,
                               double g = 9.81, double center = 0.0,
                               int direction = +1, int axis = 0,
                               double half_length = 30.0) {
    const SolitonShape s = soliton_shape(h_inf, amplitude, g);
    const double L = 2.0 * half_length;
    ScenarioSpec spec;
    spec.name = "soliton";
    spec.x_min = -half_length;
    spec.x_max = half_length;
    spec.y_min = -half_length;
    spec.y_max = half_length;
    spec.g = g;
    spec.lambda = 30000.0;
    spec.t_final = L / s.speed; // one full traversal
    const double dir = direction >= 0 ? 1.0 : -1.0;
    if (axis == 0) {
        spec.nx_default = 200;
        spec.ny_default = 4;
        spec.h0 = [s, center](double x, double) { return soliton_depth(s, x - center); };
        spec.u0 = [s, center, dir](double x, double) {
            return dir * soliton_velocity(s, x - center);
        };
    } else {
        spec.nx_default = 4;
        spec.ny_default = 200;
        spec.h0 = [s, center](double, double y) { return soliton_depth(s, y - center); };
        spec.v0 = [s, center, dir](double, double y) {
            return dir * soliton_velocity(s, y - center);
        };
    }
    spec.exact_vars = axis == 0 ? std::vector<std::string>{"h", "u"}
                                : std::vector<std::string>{"h", "v"};
    spec.exact = [s, center, dir, axis, L](double t, const Grid2D& grid, StateField& out) {
        for (int j = 0; j < grid.ny; ++j) {
            for (int i = 0; i < grid.nx; ++i) {
                const double pos = axis == 0 ? grid.x(i) : grid.y(j);
                const double xi = periodic_wrap(pos - center - dir * s.speed * t, L);
                const double h = soliton_depth(s, xi);
                const double vel = dir * s.speed * (1.0 - s.h_inf / h);
                out.h(i, j) = h;
                out.u(i, j) = axis == 0 ? vel : 0.0;
                out.v(i, j) = axis == 0 ? 0.0 : vel;
                out.w(i, j) = 0.0;
                out.eta(i, j) = h;
            }
        }
    };
    return spec;
}

// ------------------------------------------------------------- manufactured

/** Smooth time-periodic forced problem on [-1,1]^2 with known exact solution;
 *  the sources come from pushing that solution through the model equations
 *  (see scripts/generate_manufactured.py). Works with either boundary kind. */
inline ScenarioSpec manufactured_solution(BoundaryKind kind = BoundaryKind::periodic,
                                          double g = 9.81, double lambda = 500.0) {
    ScenarioSpec spec;
    spec.name = "manufactured";
    spec.x_min = -1.0;
    spec.x_max = 1.0;
    spec.y_min = -1.0;
    spec.y_max = 1.0;
    spec.nx_default = 64;
    spec.ny_default = 64;
    spec.kind_x = kind;
    spec.kind_y = kind;
    spec.g = g;
    spec.lambda = lambda;
    spec.t_final = 1.0;
    spec.bathymetry = [](double x, double y) {
        return manufactured::bathymetry1(x, y)[0];
    };
    spec.h0 = [](double x, double y) { return manufactured::exact_state(0.0, x, y)[0]; };
    spec.u0 = [](double x, double y) { return manufactured::exact_state(0.0, x, y)[1]; };
    spec.v0 = [](double x, double y) { return manufactured::exact_state(0.0, x, y)[2]; };
    spec.source = [g](double t, double x, double y) {
        return manufactured::source_terms(t, x, y, g);
    };
    spec.exact_vars = {"h", "u", "v", "w", "eta"};
    spec.exact = [](double t, const Grid2D& grid, StateField& out) {
        for (int j = 0; j < grid.ny; ++j) {
            for (int i = 0; i < grid.nx; ++i) {
                const auto q = manufactured::exact_state(t, grid.x(i), grid.y(j));
                out.h(i, j) = q[0];
                out.u(i, j) = q[1];
                out.v(i, j) = q[2];
                out.w(i, j) = q[3];
                out.eta(i, j) = q[4];
            }
        }
    };
    return spec;
}

// ------------------------------------------------------------------ Dingemans

/** Linear dispersion of the full water-wave problem: solves
 *  omega^2 = g k tanh(k d) for k by Newton iteration. */
inline double dispersion_wavenumber(double omega, double depth, double g) {
    double k = omega / std::sqrt(g * depth); // long-wave guess
    for (int it = 0; it < 100; ++it) {
        const double th = std::tanh(k * depth);
        const double f = g * k * th - omega * omega;
        const double df = g * th + g * k * depth * (1.0 - th * th);
        const double step = f / df;
        k -= step;
        if (std::abs(step) <= 1e-15 * k)
            break;
    }
    return k;
}

/** Wave propagation over a trapezoidal submerged bar: still depth 0.8 with a
 *  tapered sinusoidal wave train whose wavenumber and depth-averaged velocity
 *  follow linear wave theory. Gauge placement matches the laboratory layout. */
inline ScenarioSpec dingemans(double amplitude = 0.02, double wave_period = 2.02,
                              double x_offset = 0.0, double n_waves = 20.0,
                              double g = 9.81) {
    const double depth = 0.8;
    const double omega = 2.0 * M_PI / wave_period;
    const double k = dispersion_wavenumber(omega, depth, g);
    const double c = omega / k;
    const double wavelength = 2.0 * M_PI / k;
    const double window_lo = x_offset - n_waves * wavelength;
    const double window_hi = x_offset;

    ScenarioSpec spec;
    spec.name = "dingemans";
    spec.x_min = -138.0;
    spec.x_max = 46.0;
    spec.y_min = -138.0;
    spec.y_max = 46.0;
    spec.nx_default = 3680; // dx = 0.05
    spec.ny_default = 4;
    spec.g = g;
    spec.t_final = 60.0;
    spec.bathymetry = [](double x, double) {
        if (x >= 11.01 && x < 23.04)
            return 0.6 * (x - 11.01) / 12.03;
        if (x >= 23.04 && x < 27.04)
            return 0.6;
        if (x >= 27.04 && x < 33.07)
            return 0.6 * (33.07 - x) / 6.03;
        return 0.0;
    };
    auto elevation = [=](double x) {
        if (x <= window_lo || x >= window_hi)
            return 0.0;
        double envelope = 1.0;
        if (x < window_lo + wavelength)
            envelope = 0.5 * (1.0 - std::cos(M_PI * (x - window_lo) / wavelength));
        else if (x > window_hi - wavelength)
            envelope = 0.5 * (1.0 - std::cos(M_PI * (window_hi - x) / wavelength));
        return amplitude * envelope * std::sin(k * (x - x_offset));
    };
    auto bath = spec.bathymetry;
    spec.h0 = [=](double x, double y) { return depth + elevation(x) - bath(x, y); };
    spec.u0 = [=](double x, double) { return c * elevation(x) / depth; };
    const double y_mid = -46.0;
    spec.gauges = {{3.04, y_mid},  {9.44, y_mid},  {20.04, y_mid},
                   {26.04, y_mid}, {30.44, y_mid}, {37.04, y_mid}};
    return spec;
}

// ----------------------------------------------------------- wave interactions

/** Two counter-propagating solitary waves set up to collide head on; the
 *  laboratory comparison starts the clock at t0 = 18.5 s. */
inline ScenarioSpec head_on_collision(double amplitude_right = 0.01077,
                                      double amplitude_left = 0.01195,
                                      double center_right = 0.4,
                                      double center_left = 1.195,
                                      double h_inf = 0.05, double g = 9.81) {
    const SolitonShape s1 = soliton_shape(h_inf, amplitude_right, g);
    const SolitonShape s2 = soliton_shape(h_inf, amplitude_left, g);
    ScenarioSpec spec;
    spec.name = "head_on_collision";
    spec.x_min = -10.0;
    spec.x_max = 10.0;
    spec.y_min = -10.0;
    spec.y_max = 10.0;
    spec.nx_default = 400; // dx = 0.05
    spec.ny_default = 4;
    spec.g = g;
    spec.t0 = 18.5;
    spec.t_final = 21.5;
    spec.h0 = [=](double x, double) {
        return h_inf + amplitude_right * std::pow(1.0 / std::cosh(s1.kappa * (x - center_right)), 2) +
               amplitude_left * std::pow(1.0 / std::cosh(s2.kappa * (x - center_left)), 2);
    };
    spec.u0 = [=](double x, double) {
        const double h1 = soliton_depth(s1, x - center_right);
        const double h2 = soliton_depth(s2, x - center_left);
        return s1.speed * (1.0 - h_inf / h1) - s2.speed * (1.0 - h_inf / h2);
    };
    return spec;
}

/** Solitary wave running against a reflecting wall at x = 0. Snapshot times
 *  follow the laboratory timing t = t_star sqrt(h_inf / g). */
inline ScenarioSpec wall_reflection(double amplitude = 0.075, double h_inf = 1.0,
                                    double g = 9.81, double center = -50.0) {
    const SolitonShape s = soliton_shape(h_inf, amplitude, g);
    ScenarioSpec spec;
    spec.name = "wall_reflection";
    spec.x_min = -100.0;
    spec.x_max = 0.0;
    spec.y_min = -50.0;
    spec.y_max = 50.0;
    spec.nx_default = 501; // dx = 0.2
    spec.ny_default = 4;
    spec.kind_x = BoundaryKind::bounded;
    spec.kind_y = BoundaryKind::periodic;
    spec.g = g;
    spec.t_final = 110.0 / s.speed;
    spec.h0 = [s, center](double x, double) { return soliton_depth(s, x - center); };
    spec.u0 = [s, center](double x, double) { return soliton_velocity(s, x - center); };
    const double scale = std::sqrt(h_inf / g);
    std::vector<double> t_star;
    if (std::abs(amplitude - 0.075) < 1e-12)
        t_star = {24.0, 45.0, 48.0, 53.0, 90.0};
    else if (std::abs(amplitude - 0.65) < 1e-12)
        t_star = {0.0, 28.0, 38.0, 42.0, 70.0};
    for (double ts : t_star)
        spec.snapshot_times.push_back(ts * scale);
    spec.gauges = {{0.0, 0.0}};
    return spec;
}

/** Solitary wave front passing over a submerged Gaussian bump, genuinely
 *  two-dimensional; runs with periodic or fully reflecting boundaries. */
inline ScenarioSpec gaussian_obstacle(double amplitude = 0.0365, double h_inf = 0.2,
                                      BoundaryKind kind = BoundaryKind::periodic,
                                      double g = 9.81) {
    const SolitonShape s = soliton_shape(h_inf, amplitude, g);
    ScenarioSpec spec;
    spec.name = "gaussian_obstacle";
    spec.x_min = -5.0;
    spec.x_max = 35.0;
    spec.y_min = -10.0;
    spec.y_max = 10.0;
    spec.nx_default = kind == BoundaryKind::periodic ? 200 : 201; // dx = 0.2
    spec.ny_default = kind == BoundaryKind::periodic ? 100 : 101;
    spec.kind_x = kind;
    spec.kind_y = kind;
    spec.g = g;
    spec.t_final = 12.0;
    spec.bathymetry = [](double x, double y) {
        return 0.1 * std::exp(-0.5 * (x * x + y * y));
    };
    auto bath = spec.bathymetry;
    spec.h0 = [=](double x, double y) {
        const double c = 1.0 / std::cosh(s.kappa * (x + 3.0));
        return h_inf + amplitude * c * c - bath(x, y);
    };
    spec.u0 = [=](double x, double) { return soliton_velocity(s, x + 3.0); };
    spec.snapshot_times = {12.0};
    return spec;
}

// ------------------------------------------------------------ dam break / bores

/** Smoothed dam-break initial data and the shallow-water predictions used to
 *  judge the dispersive-shock structure it develops. */
inline ScenarioSpec riemann_setup(double h_left = 1.8, double h_right = 1.0,
                                  double g = 9.81) {
    ScenarioSpec spec;
    spec.name = "riemann";
    spec.x_min = -600.0;
    spec.x_max = 600.0;
    spec.y_min = -600.0;
    spec.y_max = 600.0;
    spec.nx_default = 2001; // dx = 0.6
    spec.ny_default = 4;
    spec.kind_x = BoundaryKind::bounded; // far states differ; walls stay inert
    spec.kind_y = BoundaryKind::periodic;
    spec.g = g;
    spec.t_final = 47.434;
    spec.h0 = [=](double x, double) {
        return h_right + 0.5 * (h_left - h_right) * (1.0 - std::tanh(0.5 * x));
    };
    spec.snapshot_times = {47.434};
    return spec;
}

struct RiemannPredictions {
    double h_star;  // plateau depth between the two wave fans
    double u_star;  // plateau velocity
    double a_plus;  // leading-wave amplitude above the right state
    double h_crest; // leading-wave crest depth
};

/** Plateau state from the shallow-water Riemann invariants and the
 *  leading-wave amplitude from the weakly nonlinear modulation result. */
inline RiemannPredictions riemann_predictions(double h_left, double h_right, double g) {
    RiemannPredictions p;
    const double sl = std::sqrt(h_left), sr = std::sqrt(h_right);
    p.h_star = 0.25 * (sl + sr) * (sl + sr);
    p.u_star = 2.0 * (std::sqrt(g * p.h_star) - std::sqrt(g * h_right));
    const double delta0 = std::abs(h_left - h_right);
    p.a_plus = delta0 - delta0 * delta0 / 12.0;
    p.h_crest = h_right + p.a_plus;
    return p;
}

/** Froude number of an undular bore of relative strength eps. */
inline double froude_number(double eps) {
    return std::sqrt((1.0 + eps) * (1.0 + 0.5 * eps));
}

/** Smoothed bore front in depth and velocity entering still water, the
 *  classical Favre-wave setup. The jump conditions tie the velocity jump to
 *  the depth jump; eps = jump/h0 sets the bore strength. */
inline ScenarioSpec favre_setup(double eps = 0.1, double h0 = 1.0, double x0 = 0.0,
                                double alpha = 1.0, double g = 9.81) {
    const double dh = eps * h0;
    const double h1 = h0 + dh;
    const double du = std::sqrt(g * (h1 + h0) / (2.0 * h0 * h1)) * dh;
    ScenarioSpec spec;
    spec.name = "favre";
    spec.x_min = -150.0;
    spec.x_max = 150.0;
    spec.y_min = -150.0;
    spec.y_max = 150.0;
    spec.nx_default = 1000; // dx = 0.3 desk default; the study uses 0.075
    spec.ny_default = 4;
    spec.g = g;
    spec.t_final = 30.0;
    spec.h0 = [=](double x, double) {
        return h0 + 0.5 * dh * (1.0 - std::tanh((x - x0) / alpha));
    };
    spec.u0 = [=](double x, double) {
        return 0.5 * du * (1.0 - std::tanh((x - x0) / alpha));
    };
    return spec;
}

// ------------------------------------------------------------------ flat water

/** Still water over a flat bottom; every tendency must vanish. */
inline ScenarioSpec still_water(double depth = 1.0, double g = 9.81) {
    ScenarioSpec spec;
    spec.name = "still_water";
    spec.x_min = -5.0;
    spec.x_max = 5.0;
    spec.y_min = -5.0;
    spec.y_max = 5.0;
    spec.g = g;
    spec.t_final = 10.0;
    spec.h0 = [=](double, double) { return depth; };
    return spec;
}

/** Flat surface over a submerged Gaussian bump; the well-balanced property
 *  keeps the state steady. */
inline ScenarioSpec lake_at_rest(double depth = 1.0, double bump_amplitude = 0.1,
                                 double bump_width = 1.0, double g = 9.81,
                                 BoundaryKind kind = BoundaryKind::periodic) {
    ScenarioSpec spec;
    spec.name = "lake_at_rest";
    spec.x_min = -5.0;
    spec.x_max = 5.0;
    spec.y_min = -5.0;
    spec.y_max = 5.0;
    spec.kind_x = kind;
    spec.kind_y = kind;
    spec.g = g;
    spec.t_final = 10.0;
    const double iw2 = 1.0 / (bump_width * bump_width);
    spec.bathymetry = [=](double x, double y) {
        return bump_amplitude * std::exp(-0.5 * (x * x + y * y) * iw2);
    };
    auto bath = spec.bathymetry;
    spec.h0 = [=](double x, double y) { return depth - bath(x, y); };
    return spec;
}

// ---------------------------------------------------------- convergence studies

/** Problem instance for one rung of a refinement study. */
struct StudyCase {
    Grid2D grid;
    RhsContext ctx;
    StateField q0;
    double t0 = 0.0;
    double t_final = 1.0;
    std::function<void(double, const Grid2D&, StateField&)> exact;
    std::vector<std::string> variables;
};

inline StudyCase study_case_from(const ScenarioSpec& spec, int nx, int ny) {
    if (!spec.exact)
        throw std::invalid_argument("study_case_from: scenario '" + spec.name +
                                    "' has no exact solution");
    PreparedRun run = prepare_run(spec, nx, ny);
    StudyCase c;
    c.grid = run.grid;
    c.ctx = std::move(run.ctx);
    c.q0 = std::move(run.q0);
    c.t0 = spec.t0;
    c.t_final = spec.t_final;
    c.exact = spec.exact;
    c.variables = spec.exact_vars;
    return c;
}

/** Integrates each rung at tight tolerance and tabulates errors and rates.
 *  Convergence studies pin the tolerances to 1e-10 so the spatial error
 *  dominates. A rung that aborts gets NaN errors and a failure note in the
 *  status column; rates involving it stay NaN. */
inline ConvergenceTable
run_convergence_study(const std::function<StudyCase(int)>& family,
                      const std::vector<int>& resolutions,
                      IntegratorConfig cfg = {}) {
    if (resolutions.size() < 2)
        throw std::invalid_argument("run_convergence_study: need at least 2 resolutions");
    for (std::size_t r = 1; r < resolutions.size(); ++r)
        if (resolutions[r] <= resolutions[r - 1])
            throw std::invalid_argument(
                "run_convergence_study: resolutions must be strictly increasing");
    const double nan = std::numeric_limits<double>::quiet_NaN();
    ConvergenceTable table;
    for (std::size_t r = 0; r < resolutions.size(); ++r) {
        StudyCase c = family(resolutions[r]);
        if (table.variables.empty())
            table.variables = c.variables;
        const RhsContext& ctx = c.ctx;
        SolutionRecord rec = adaptive_solve(
            [&ctx](double t, const StateField& q, StateField& out) { rhs(ctx, t, q, out); },
            c.q0, c.t0, c.t_final, cfg);
        table.resolution.push_back(resolutions[r]);
        table.dx.push_back(c.grid.dx);
        if (rec.aborted) {
            table.errors.emplace_back(table.variables.size(), nan);
            table.rates.emplace_back(table.variables.size(), nan);
            table.status.push_back("failed: " + rec.abort_reason);
            continue;
        }
        StateField ref(c.grid);
        c.exact(rec.t, c.grid, ref);
        std::vector<double> errs;
        for (const std::string& var : table.variables) {
            const Field2D* num = nullptr;
            const Field2D* ex = nullptr;
            auto qn = rec.q.fields();
            auto qe = ref.fields();
            for (int f = 0; f < StateField::n_fields; ++f) {
                if (var == StateField::names()[f]) {
                    num = qn[f];
                    ex = qe[f];
                }
            }
            if (!num)
                throw std::invalid_argument("run_convergence_study: unknown variable " + var);
            errs.push_back(discrete_l2_error(ctx.op_x.mass, ctx.op_y.mass, *num, *ex));
        }
        table.errors.push_back(errs);
        std::vector<double> rates(errs.size(), nan);
        if (r > 0 && table.status.back() == "ok") {
            for (std::size_t v = 0; v < errs.size(); ++v)
                rates[v] = eoc(table.errors[r - 1][v], errs[v], table.dx[r - 1],
                               table.dx[r]);
        }
        table.rates.push_back(rates);
        table.status.push_back("ok");
    }
    return table;
}

// ------------------------------------------------------------------- registry

/** Builds a scenario by name with numeric parameter overrides; unknown names
 *  or parameters are rejected so configuration typos fail loudly. */
inline ScenarioSpec make_scenario(const std::string& name,
                                  const std::map<std::string, double>& params = {}) {
    auto get = [&params](const char* key, double fallback) {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    };
    auto check_keys = [&params, &name](std::initializer_list<const char*> allowed) {
        for (const auto& [key, value] : params) {
            (void)value;
            bool ok = false;
            for (const char* a : allowed)
                if (key == a)
                    ok = true;
            if (!ok)
                throw std::invalid_argument("scenario '" + name +
                                            "': unknown parameter '" + key + "'");
        }
    };
    if (name == "soliton") {
        check_keys({"h_inf", "amplitude", "g", "center", "direction", "axis",
                    "half_length", "lambda"});
        ScenarioSpec s = soliton_1d(get("h_inf", 1.0), get("amplitude", 0.2),
                                    get("g", 9.81), get("center", 0.0),
                                    static_cast<int>(get("direction", 1.0)),
                                    static_cast<int>(get("axis", 0.0)),
                                    get("half_length", 30.0));
        s.lambda = get("lambda", s.lambda);
        return s;
    }
    if (name == "manufactured") {
        check_keys({"g", "lambda", "bounded"});
        return manufactured_solution(get("bounded", 0.0) != 0.0 ? BoundaryKind::bounded
                                                                : BoundaryKind::periodic,
                                     get("g", 9.81), get("lambda", 500.0));
    }
    if (name == "dingemans") {
        check_keys({"amplitude", "wave_period", "x_offset", "n_waves", "g", "lambda"});
        ScenarioSpec s = dingemans(get("amplitude", 0.02), get("wave_period", 2.02),
                                   get("x_offset", 0.0), get("n_waves", 20.0),
                                   get("g", 9.81));
        s.lambda = get("lambda", s.lambda);
        return s;
    }
    if (name == "head_on_collision") {
        check_keys({"amplitude_right", "amplitude_left", "center_right", "center_left",
                    "h_inf", "g", "lambda"});
        ScenarioSpec s = head_on_collision(
            get("amplitude_right", 0.01077), get("amplitude_left", 0.01195),
            get("center_right", 0.4), get("center_left", 1.195), get("h_inf", 0.05),
            get("g", 9.81));
        s.lambda = get("lambda", s.lambda);
        return s;
    }
    if (name == "wall_reflection") {
        check_keys({"amplitude", "h_inf", "g", "center", "lambda"});
        ScenarioSpec s = wall_reflection(get("amplitude", 0.075), get("h_inf", 1.0),
                                         get("g", 9.81), get("center", -50.0));
        s.lambda = get("lambda", s.lambda);
        return s;
    }
    if (name == "gaussian_obstacle") {
        check_keys({"amplitude", "h_inf", "g", "bounded", "lambda"});
        ScenarioSpec s = gaussian_obstacle(get("amplitude", 0.0365), get("h_inf", 0.2),
                                           get("bounded", 0.0) != 0.0
                                               ? BoundaryKind::bounded
                                               : BoundaryKind::periodic,
                                           get("g", 9.81));
        s.lambda = get("lambda", s.lambda);
        return s;
    }
    if (name == "riemann") {
        check_keys({"h_left", "h_right", "g", "lambda"});
        ScenarioSpec s = riemann_setup(get("h_left", 1.8), get("h_right", 1.0),
                                       get("g", 9.81));
        s.lambda = get("lambda", s.lambda);
        return s;
    }
    if (name == "favre") {
        check_keys({"eps", "h0", "x0", "alpha", "g", "lambda"});
        ScenarioSpec s = favre_setup(get("eps", 0.1), get("h0", 1.0), get("x0", 0.0),
                                     get("alpha", 1.0), get("g", 9.81));
        s.lambda = get("lambda", s.lambda);
        return s;
    }
    if (name == "still_water") {
        check_keys({"depth", "g", "lambda"});
        ScenarioSpec s = still_water(get("depth", 1.0), get("g", 9.81));
        s.lambda = get("lambda", s.lambda);
        return s;
    }
    if (name == "lake_at_rest") {
        check_keys({"depth", "bump_amplitude", "bump_width", "g", "bounded", "lambda"});
        ScenarioSpec s = lake_at_rest(get("depth", 1.0), get("bump_amplitude", 0.1),
                                      get("bump_width", 1.0), get("g", 9.81),
                                      get("bounded", 0.0) != 0.0 ? BoundaryKind::bounded
                                                                 : BoundaryKind::periodic);
        s.lambda = get("lambda", s.lambda);
        return s;
    }
    throw std::invalid_argument("unknown scenario '" + name + "'");
}

inline std::vector<std::string> scenario_names() {
    return {"soliton",         "manufactured",      "dingemans",
            "head_on_collision", "wall_reflection", "gaussian_obstacle",
            "riemann",         "favre",             "still_water",
            "lake_at_rest"};
}

} // namespace hsgn
