#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsgn/analysis.hpp"
#include "hsgn/rhs.hpp"
#include "hsgn/time_integration.hpp"

namespace hsgn {

/** 17 significant digits: enough for exact double round trips, so output
 *  files double as regression baselines. */
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/** Compact formatting for values embedded in file names. */
inline std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

struct GaugeNode {
    int i = 0, j = 0;
    double x = 0.0, y = 0.0; // actual node coordinates
};

inline GaugeNode nearest_node(const Grid2D& grid, double x, double y) {
    GaugeNode n;
    n.i = std::clamp(static_cast<int>(std::lround((x - grid.x_min) / grid.dx)), 0,
                     grid.nx - 1);
    n.j = std::clamp(static_cast<int>(std::lround((y - grid.y_min) / grid.dy)), 0,
                     grid.ny - 1);
    n.x = grid.x(n.i);
    n.y = grid.y(n.j);
    return n;
}

inline void write_snapshot_csv(const std::string& path, const Grid2D& grid,
                               const StateField& q, const Field2D& b) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << "x,y,h,u,v,w,eta,b\n";
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            out << fmt17(grid.x(i)) << ',' << fmt17(grid.y(j)) << ','
                << fmt17(q.h(i, j)) << ',' << fmt17(q.u(i, j)) << ','
                << fmt17(q.v(i, j)) << ',' << fmt17(q.w(i, j)) << ','
                << fmt17(q.eta(i, j)) << ',' << fmt17(b(i, j)) << '\n';
}

/** Single row along the grid line nearest to the requested y. */
inline void write_cross_section_csv(const std::string& path, const Grid2D& grid,
                                    const StateField& q, const Field2D& b,
                                    double y_target) {
    const GaugeNode n = nearest_node(grid, grid.x_min, y_target);
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << "# cross section along y = " << fmt17(n.y) << "\n";
    out << "x,h,u,v,w,eta,b\n";
    const int j = n.j;
    for (int i = 0; i < grid.nx; ++i)
        out << fmt17(grid.x(i)) << ',' << fmt17(q.h(i, j)) << ',' << fmt17(q.u(i, j))
            << ',' << fmt17(q.v(i, j)) << ',' << fmt17(q.w(i, j)) << ','
            << fmt17(q.eta(i, j)) << ',' << fmt17(b(i, j)) << '\n';
}

inline void write_convergence_csv(const std::string& path, const ConvergenceTable& t) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << "nx,dx";
    for (const std::string& v : t.variables)
        out << ",err_" << v << ",eoc_" << v;
    out << ",status\n";
    for (std::size_t r = 0; r < t.resolution.size(); ++r) {
        out << t.resolution[r] << ',' << fmt17(t.dx[r]);
        for (std::size_t v = 0; v < t.variables.size(); ++v)
            out << ',' << fmt17(t.errors[r][v]) << ',' << fmt17(t.rates[r][v]);
        out << ',' << t.status[r] << '\n';
    }
}

/** Captured snapshot bookkeeping: which accepted state served each target. */
struct SnapshotRecord {
    double target = 0.0;
    double actual = 0.0;
    std::string path;
};

/** Observer-driven recorder for production runs. Attach on_accept to the
 *  integrator; time series accumulate in memory and flush() writes them out,
 *  so a partial series still reaches disk when a run aborts. Snapshots are
 *  written immediately when their target time is crossed, using whichever
 *  neighboring accepted state lies closer in time. */
class RunRecorder {
public:
    RunRecorder(const RhsContext& ctx, std::string out_dir,
                std::vector<std::array<double, 2>> gauge_positions,
                std::vector<double> snapshot_targets, std::int64_t conservation_stride)
        : ctx_(ctx), dir_(std::move(out_dir)), stride_(conservation_stride),
          prev_(ctx.grid) {
        for (const auto& g : gauge_positions)
            gauges_.push_back(nearest_node(ctx.grid, g[0], g[1]));
        targets_ = std::move(snapshot_targets);
        std::sort(targets_.begin(), targets_.end());
    }

    void on_accept(double t, const StateField& q, const StateField& q_t) {
        if (first_) {
            first_ = false;
            prev_t_ = t;
            detail::copy_state(q, prev_);
            while (next_target_ < targets_.size() && targets_[next_target_] <= t)
                take_snapshot(targets_[next_target_++], t, q);
        } else {
            while (next_target_ < targets_.size() && targets_[next_target_] <= t) {
                const double target = targets_[next_target_++];
                const bool prev_closer = target - prev_t_ < t - target;
                take_snapshot(target, prev_closer ? prev_t_ : t, prev_closer ? prev_ : q);
            }
            prev_t_ = t;
            detail::copy_state(q, prev_);
        }

        if (!gauges_.empty()) {
            gauge_rows_.push_back({t, {}});
            for (const GaugeNode& g : gauges_)
                gauge_rows_.back().second.push_back(q.h(g.i, g.j) +
                                                    ctx_.phys.b(g.i, g.j));
        }

        if (accept_count_ % stride_ == 0) {
            ConsRow row;
            row.t = t;
            row.mass = total_mass(ctx_.op_x.mass, ctx_.op_y.mass, q);
            row.energy = total_energy(ctx_.op_x.mass, ctx_.op_y.mass, q, ctx_.phys);
            row.energy_rate =
                energy_rate(ctx_.op_x.mass, ctx_.op_y.mass, q, q_t, ctx_.phys);
            cons_rows_.push_back(row);
        }
        ++accept_count_;
    }

    /** Writes gauges.csv and conservation.csv; snapshots are already on disk. */
    void flush() {
        if (!gauges_.empty()) {
            const std::string path = dir_ + "/gauges.csv";
            std::ofstream out(path);
            if (!out)
                throw std::runtime_error("cannot write '" + path + "'");
            for (std::size_t g = 0; g < gauges_.size(); ++g)
                out << "# gauge_" << g + 1 << " at (" << fmt17(gauges_[g].x) << ", "
                    << fmt17(gauges_[g].y) << ")\n";
            out << "t";
            for (std::size_t g = 0; g < gauges_.size(); ++g)
                out << ",gauge_" << g + 1;
            out << '\n';
            for (const auto& [t, vals] : gauge_rows_) {
                out << fmt17(t);
                for (double v : vals)
                    out << ',' << fmt17(v);
                out << '\n';
            }
        }
        {
            const std::string path = dir_ + "/conservation.csv";
            std::ofstream out(path);
            if (!out)
                throw std::runtime_error("cannot write '" + path + "'");
            out << "t,total_mass,total_energy,semidiscrete_energy_rate\n";
            for (const ConsRow& r : cons_rows_)
                out << fmt17(r.t) << ',' << fmt17(r.mass) << ',' << fmt17(r.energy)
                    << ',' << fmt17(r.energy_rate) << '\n';
        }
    }

    struct ConsRow {
        double t, mass, energy, energy_rate;
    };
    const std::vector<ConsRow>& conservation_rows() const { return cons_rows_; }
    const std::vector<SnapshotRecord>& snapshots() const { return snaps_; }
    const std::vector<GaugeNode>& gauge_nodes() const { return gauges_; }

private:
    void take_snapshot(double target, double actual, const StateField& q) {
        SnapshotRecord rec;
        rec.target = target;
        rec.actual = actual;
        rec.path = dir_ + "/snapshot_t" + fmt_short(target) + ".csv";
        write_snapshot_csv(rec.path, ctx_.grid, q, ctx_.phys.b);
        snaps_.push_back(rec);
    }

    const RhsContext& ctx_;
    std::string dir_;
    std::int64_t stride_;
    std::vector<GaugeNode> gauges_;
    std::vector<double> targets_;
    std::size_t next_target_ = 0;
    std::vector<std::pair<double, std::vector<double>>> gauge_rows_;
    std::vector<ConsRow> cons_rows_;
    std::vector<SnapshotRecord> snaps_;
    StateField prev_;
    double prev_t_ = 0.0;
    bool first_ = true;
    std::int64_t accept_count_ = 0;
};

} // namespace hsgn
