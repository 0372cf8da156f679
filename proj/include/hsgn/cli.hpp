#pragma once

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hsgn/config.hpp"
#include "hsgn/io.hpp"
#include "hsgn/scenarios.hpp"
#include "hsgn/threading.hpp"

namespace hsgn {

namespace detail {

inline const char* boundary_name(BoundaryKind k) {
    return k == BoundaryKind::periodic ? "periodic" : "reflecting";
}

inline nlohmann::json integrator_json(const IntegratorConfig& c) {
    return {{"abs_tol", c.abs_tol},
            {"rel_tol", c.rel_tol},
            {"dt_initial", c.dt_initial},
            {"dt_max", std::isfinite(c.dt_max) ? nlohmann::json(c.dt_max)
                                               : nlohmann::json("inf")},
            {"fixed_dt", c.fixed_dt},
            {"max_steps", c.max_steps},
            {"safety", c.safety},
            {"growth_cap", c.growth_cap},
            {"shrink_floor", c.shrink_floor}};
}

inline nlohmann::json base_meta(const std::string& command, const RunConfig& cfg,
                                const ScenarioSpec& spec, const Grid2D& grid) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : cfg.scenario_params)
        params[k] = v;
    return {{"command", command},
            {"scenario", {{"name", spec.name}, {"parameters", params}}},
            {"grid",
             {{"nx", grid.nx},
              {"ny", grid.ny},
              {"dx", grid.dx},
              {"dy", grid.dy},
              {"x_min", grid.x_min},
              {"x_max", grid.x_max},
              {"y_min", grid.y_min},
              {"y_max", grid.y_max},
              {"boundary_x", boundary_name(grid.kind_x)},
              {"boundary_y", boundary_name(grid.kind_y)}}},
            {"physics", {{"g", spec.g}, {"lambda", spec.lambda}}},
            {"threads", max_thread_count()}};
}

inline void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

/** Applies [run] overrides onto the scenario's defaults. */
inline void apply_overrides(const RunConfig& cfg, ScenarioSpec& spec, int& nx, int& ny) {
    nx = cfg.nx > 0 ? cfg.nx : spec.nx_default;
    ny = cfg.ny > 0 ? cfg.ny : spec.ny_default;
    if (!std::isnan(cfg.t0))
        spec.t0 = cfg.t0;
    if (!std::isnan(cfg.t_final))
        spec.t_final = cfg.t_final;
    if (cfg.gauges_set)
        spec.gauges = cfg.gauges;
    if (cfg.snapshots_set)
        spec.snapshot_times = cfg.snapshot_times;
}

} // namespace detail

/** Runs one scenario and writes gauges.csv, per-time snapshot CSVs,
 *  conservation.csv and run_meta.json into the output directory. Returns 0 on
 *  a completed run, 1 when the solver aborts (partial outputs are flushed and
 *  run_meta.json carries the failure), throws on configuration errors. */
inline int cmd_run(const RunConfig& cfg, std::ostream& log) {
    ScenarioSpec spec = make_scenario(cfg.scenario, cfg.scenario_params);
    int nx = 0, ny = 0;
    detail::apply_overrides(cfg, spec, nx, ny);
    set_thread_count(cfg.threads);
    std::filesystem::create_directories(cfg.output_dir);

    PreparedRun run = prepare_run(spec, nx, ny);
    const RhsContext& ctx = run.ctx;
    log << "run: scenario " << spec.name << " on " << nx << "x" << ny << " grid, t in ["
        << spec.t0 << ", " << spec.t_final << "]\n";

    RunRecorder rec(ctx, cfg.output_dir, spec.gauges, spec.snapshot_times,
                    cfg.conservation_stride);
    const double mass0 = total_mass(ctx.op_x.mass, ctx.op_y.mass, run.q0);
    const double energy0 = total_energy(ctx.op_x.mass, ctx.op_y.mass, run.q0, ctx.phys);

    const auto wall0 = std::chrono::steady_clock::now();
    SolutionRecord sol = adaptive_solve(
        [&ctx](double t, const StateField& q, StateField& out) { rhs(ctx, t, q, out); },
        run.q0, spec.t0, spec.t_final, cfg.integrator,
        [&rec](double t, const StateField& q, const StateField& qt) {
            rec.on_accept(t, q, qt);
        });
    const double wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();

    rec.flush();
    if (cfg.cross_section_set)
        write_cross_section_csv(cfg.output_dir + "/cross_section.csv", run.grid, sol.q,
                                ctx.phys.b, cfg.cross_section_y);

    const double mass1 = total_mass(ctx.op_x.mass, ctx.op_y.mass, sol.q);
    const double energy1 = total_energy(ctx.op_x.mass, ctx.op_y.mass, sol.q, ctx.phys);

    nlohmann::json meta = detail::base_meta("run", cfg, spec, run.grid);
    meta["time"] = {{"t0", spec.t0}, {"t_final", spec.t_final}, {"t_reached", sol.t}};
    meta["integrator"] = detail::integrator_json(cfg.integrator);
    meta["steps"] = {{"accepted", sol.accepted},
                     {"rejected", sol.rejected},
                     {"rhs_evals", sol.rhs_evals},
                     {"rhs_evals_setup", sol.rhs_evals_setup}};
    meta["conservation"] = {{"mass_initial", mass0},
                            {"mass_final", mass1},
                            {"mass_drift_rel", (mass1 - mass0) / mass0},
                            {"energy_initial", energy0},
                            {"energy_final", energy1},
                            {"energy_drift_rel", (energy1 - energy0) / energy0}};
    nlohmann::json snaps = nlohmann::json::array();
    for (const SnapshotRecord& s : rec.snapshots())
        snaps.push_back({{"target", s.target},
                         {"actual", s.actual},
                         {"file", std::filesystem::path(s.path).filename().string()}});
    meta["snapshots"] = snaps;
    meta["output"] = {{"directory", cfg.output_dir},
                      {"conservation_stride", cfg.conservation_stride}};
    meta["wall_seconds"] = wall_seconds;
    meta["status"] = sol.aborted ? "aborted" : "ok";
    if (sol.aborted)
        meta["abort_reason"] = sol.abort_reason;
    detail::write_json(cfg.output_dir + "/run_meta.json", meta);

    log << "run: " << (sol.aborted ? "ABORTED: " + sol.abort_reason : "completed")
        << " at t = " << sol.t << " (" << sol.accepted << " accepted, " << sol.rejected
        << " rejected, " << sol.rhs_evals << " tendency evaluations, "
        << fmt_short(wall_seconds) << " s)\n"
        << "run: relative mass drift " << fmt_short((mass1 - mass0) / mass0)
        << ", relative energy drift " << fmt_short((energy1 - energy0) / energy0)
        << "\n";
    return sol.aborted ? 1 : 0;
}

/** Runs a refinement study and writes convergence.csv plus run_meta.json.
 *  Returns 0 when every rung completed, 1 otherwise. */
inline int cmd_converge(const RunConfig& cfg, std::ostream& log) {
    ScenarioSpec spec = make_scenario(cfg.scenario, cfg.scenario_params);
    int nx = 0, ny = 0;
    detail::apply_overrides(cfg, spec, nx, ny);
    if (!spec.exact)
        throw std::runtime_error("cmd_converge: scenario '" + spec.name +
                                 "' has no exact solution to converge against");
    if (cfg.resolutions.size() < 2)
        throw std::runtime_error("cmd_converge: [converge] resolutions needs >= 2 entries");
    set_thread_count(cfg.threads);
    std::filesystem::create_directories(cfg.output_dir);

    IntegratorConfig icfg = cfg.integrator;
    if (!cfg.tolerances_set) {
        icfg.abs_tol = 1e-10; // spatial error must dominate
        icfg.rel_tol = 1e-10;
    }

    const int ny_fixed = cfg.converge_ny;
    const ScenarioSpec base = spec;
    auto family = [&base, ny_fixed](int n) {
        return study_case_from(base, n, ny_fixed > 0 ? ny_fixed : n);
    };

    log << "converge: scenario " << spec.name << ", resolutions";
    for (int n : cfg.resolutions)
        log << ' ' << n;
    log << ", tolerances " << fmt_short(icfg.abs_tol) << "\n";

    const auto wall0 = std::chrono::steady_clock::now();
    ConvergenceTable table = run_convergence_study(family, cfg.resolutions, icfg);
    const double wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();

    write_convergence_csv(cfg.output_dir + "/convergence.csv", table);

    bool all_ok = true;
    for (std::size_t r = 0; r < table.resolution.size(); ++r) {
        log << "converge: nx = " << table.resolution[r];
        for (std::size_t v = 0; v < table.variables.size(); ++v)
            log << "  err_" << table.variables[v] << " = "
                << fmt_short(table.errors[r][v]) << " (eoc "
                << fmt_short(table.rates[r][v]) << ")";
        log << "  [" << table.status[r] << "]\n";
        all_ok = all_ok && table.status[r] == "ok";
    }

    Grid2D grid0 = make_grid(spec.x_min, spec.x_max, spec.y_min, spec.y_max,
                             cfg.resolutions.front(),
                             ny_fixed > 0 ? ny_fixed : cfg.resolutions.front(),
                             spec.kind_x, spec.kind_y);
    nlohmann::json meta = detail::base_meta("converge", cfg, spec, grid0);
    meta["integrator"] = detail::integrator_json(icfg);
    meta["resolutions"] = cfg.resolutions;
    meta["status"] = all_ok ? "ok" : "failed";
    meta["row_status"] = table.status;
    meta["wall_seconds"] = wall_seconds;
    detail::write_json(cfg.output_dir + "/run_meta.json", meta);
    return all_ok ? 0 : 1;
}

/** Measures tendency-evaluation throughput over a resolution ladder and
 *  writes bench.csv plus run_meta.json. Always returns 0; configuration
 *  problems (including ladder rungs below the minimum grid) throw before any
 *  measurement. */
inline int cmd_bench(const RunConfig& cfg, std::ostream& log) {
    RunConfig c = cfg;
    if (c.scenario.empty())
        c.scenario = "still_water";
    for (int n : c.bench_resolutions)
        if (n < 4)
            throw std::runtime_error("cmd_bench: resolution " + std::to_string(n) +
                                     " is below the 4-node minimum");
    if (c.bench_resolutions.empty())
        throw std::runtime_error("cmd_bench: empty resolution ladder");
    if (c.bench_repetitions < 1 || c.bench_warmups < 0)
        throw std::runtime_error("cmd_bench: need repetitions >= 1 and warmups >= 0");
    ScenarioSpec spec = make_scenario(c.scenario, c.scenario_params);
    set_thread_count(c.threads);
    std::filesystem::create_directories(c.output_dir);

    struct Rung {
        int n;
        double median, min;
    };
    std::vector<Rung> rungs;
    for (int n : c.bench_resolutions) {
        PreparedRun run = prepare_run(spec, n, n);
        const RhsContext& ctx = run.ctx;
        StateField out(run.grid);
        for (int k = 0; k < c.bench_warmups; ++k)
            rhs(ctx, spec.t0, run.q0, out);
        std::vector<double> secs(c.bench_repetitions);
        for (int k = 0; k < c.bench_repetitions; ++k) {
            const auto a = std::chrono::steady_clock::now();
            rhs(ctx, spec.t0, run.q0, out);
            const auto b = std::chrono::steady_clock::now();
            secs[k] = std::chrono::duration<double>(b - a).count();
        }
        std::sort(secs.begin(), secs.end());
        Rung r;
        r.n = n;
        r.min = secs.front();
        r.median = c.bench_repetitions % 2 == 1
                       ? secs[c.bench_repetitions / 2]
                       : 0.5 * (secs[c.bench_repetitions / 2 - 1] +
                                secs[c.bench_repetitions / 2]);
        rungs.push_back(r);
        log << "bench: " << n << "x" << n << "  median "
            << fmt_short(r.median * 1e3) << " ms  min " << fmt_short(r.min * 1e3)
            << " ms per evaluation\n";
    }

    const std::string path = c.output_dir + "/bench.csv";
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << "nx,ny,n_total,seconds_per_rhs,seconds_per_rhs_min,threads\n";
    for (const Rung& r : rungs)
        out << r.n << ',' << r.n << ',' << static_cast<long long>(r.n) * r.n << ','
            << fmt17(r.median) << ',' << fmt17(r.min) << ',' << max_thread_count()
            << '\n';

    Grid2D grid0 = make_grid(spec.x_min, spec.x_max, spec.y_min, spec.y_max,
                             c.bench_resolutions.front(), c.bench_resolutions.front(),
                             spec.kind_x, spec.kind_y);
    nlohmann::json meta = detail::base_meta("bench", c, spec, grid0);
    meta["repetitions"] = c.bench_repetitions;
    meta["warmups"] = c.bench_warmups;
    nlohmann::json jr = nlohmann::json::array();
    for (const Rung& r : rungs)
        jr.push_back({{"nx", r.n},
                      {"ny", r.n},
                      {"n_total", static_cast<long long>(r.n) * r.n},
                      {"seconds_per_rhs", r.median},
                      {"seconds_per_rhs_min", r.min}});
    meta["rungs"] = jr;
    meta["status"] = "ok";
    detail::write_json(c.output_dir + "/run_meta.json", meta);
    return 0;
}

} // namespace hsgn
