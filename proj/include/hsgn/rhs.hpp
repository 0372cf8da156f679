#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "hsgn/grid.hpp"
#include "hsgn/model.hpp"
#include "hsgn/sbp.hpp"

namespace hsgn {

/** Everything a tendency evaluation needs: grid, physics, per-direction
 *  derivative operators, wall penalty data, precomputed bathymetry slopes,
 *  reusable scratch fields, and an optional additive source hook. */
struct RhsContext {
    Grid2D grid;
    PhysSetup phys;
    SbpOperator1D op_x, op_y;
    BoundaryOps bops;
    Field2D db_dx, db_dy;

    /** Adds external source terms to the tendency (used by manufactured
     *  solutions); called after all split-form terms are assembled. */
    std::function<void(double t, StateField& tendency)> source;

    mutable std::int64_t n_evals = 0;

    struct Workspace {
        Field2D hu, hv, huv, u2, v2, hhb, ratio, e2h, huw, hvw;
        Field2D dh_x, du_x, dv_x, dw_x, de_x, dhhb_x, du2_x, dhu_x, dhuv_x, de2h_x, dhuw_x;
        Field2D dh_y, du_y, dv_y, dw_y, de_y, dhhb_y, dv2_y, dhv_y, dhuv_y, de2h_y, dhvw_y;
        Field2D sat;
        bool allocated = false;
    };
    mutable Workspace ws;
};

inline RhsContext make_rhs_context(const Grid2D& grid, const PhysSetup& phys) {
    if (!phys.b.same_shape(Field2D(grid.nx, grid.ny)))
        throw std::invalid_argument("make_rhs_context: bathymetry shape must match grid");
    RhsContext ctx;
    ctx.grid = grid;
    ctx.phys = phys;
    ctx.op_x = build_d1(grid.kind_x, grid.nx, grid.dx);
    ctx.op_y = build_d1(grid.kind_y, grid.ny, grid.dy);
    ctx.bops = make_boundary_ops(grid);
    ctx.db_dx = Field2D(grid.nx, grid.ny);
    ctx.db_dy = Field2D(grid.nx, grid.ny);
    apply_dx(ctx.op_x, phys.b, ctx.db_dx);
    apply_dy(ctx.op_y, phys.b, ctx.db_dy);
    return ctx;
}

namespace detail {

inline void ensure_workspace(const RhsContext& ctx) {
    auto& ws = ctx.ws;
    if (ws.allocated && ws.hu.same_shape(ctx.phys.b))
        return;
    const int nx = ctx.grid.nx, ny = ctx.grid.ny;
    for (Field2D* f :
         {&ws.hu, &ws.hv, &ws.huv, &ws.u2, &ws.v2, &ws.hhb, &ws.ratio, &ws.e2h,
          &ws.huw, &ws.hvw, &ws.dh_x, &ws.du_x, &ws.dv_x, &ws.dw_x, &ws.de_x,
          &ws.dhhb_x, &ws.du2_x, &ws.dhu_x, &ws.dhuv_x, &ws.de2h_x, &ws.dhuw_x,
          &ws.dh_y, &ws.du_y, &ws.dv_y, &ws.dw_y, &ws.de_y, &ws.dhhb_y, &ws.dv2_y,
          &ws.dhv_y, &ws.dhuv_y, &ws.de2h_y, &ws.dhvw_y, &ws.sat})
        *f = Field2D(nx, ny);
    ws.allocated = true;
}

/** Split-form tendency shared by every boundary configuration. The term
 *  grouping follows the semidiscrete equations line by line on purpose: the
 *  discrete energy balance telescopes only for this exact arrangement, so do
 *  not refactor terms even where algebra suggests a shorter form. */
inline void split_form_rhs(const RhsContext& ctx, double lambda, double t,
                           const StateField& q, StateField& out) {
    ensure_workspace(ctx);
    auto& ws = ctx.ws;
    const std::size_t n = q.h.size();
    const Field2D& b = ctx.phys.b;
    const double g = ctx.phys.g;
    ++ctx.n_evals;

    // Pointwise products. eta/h is computed once and reused everywhere,
    // including eta^2/h = eta*(eta/h), so that the equilibrium eta == h
    // cancels exactly in floating point.
    std::int64_t bad = 0;
#pragma omp parallel for schedule(static) reduction(+ : bad)
    for (std::int64_t kk = 0; kk < static_cast<std::int64_t>(n); ++kk) {
        const std::size_t k = static_cast<std::size_t>(kk);
        const double h = q.h[k];
        if (!(h > 0.0)) {
            ++bad;
            continue;
        }
        const double u = q.u[k], v = q.v[k], w = q.w[k], eta = q.eta[k];
        const double r = eta / h;
        ws.hu[k] = h * u;
        ws.hv[k] = h * v;
        ws.huv[k] = h * u * v;
        ws.u2[k] = u * u;
        ws.v2[k] = v * v;
        ws.hhb[k] = h * (h + b[k]);
        ws.ratio[k] = r;
        ws.e2h[k] = eta * r;
        ws.huw[k] = ws.hu[k] * w;
        ws.hvw[k] = ws.hv[k] * w;
    }
    if (bad > 0)
        throw depth_error("tendency evaluation at t = " + std::to_string(t) + ": " +
                          std::to_string(bad) + " nodes with non-positive depth");

    apply_dx(ctx.op_x, q.h, ws.dh_x);
    apply_dx(ctx.op_x, q.u, ws.du_x);
    apply_dx(ctx.op_x, q.v, ws.dv_x);
    apply_dx(ctx.op_x, q.w, ws.dw_x);
    apply_dx(ctx.op_x, q.eta, ws.de_x);
    apply_dx(ctx.op_x, ws.hhb, ws.dhhb_x);
    apply_dx(ctx.op_x, ws.u2, ws.du2_x);
    apply_dx(ctx.op_x, ws.hu, ws.dhu_x);
    apply_dx(ctx.op_x, ws.huv, ws.dhuv_x);
    apply_dx(ctx.op_x, ws.e2h, ws.de2h_x);
    apply_dx(ctx.op_x, ws.huw, ws.dhuw_x);

    apply_dy(ctx.op_y, q.h, ws.dh_y);
    apply_dy(ctx.op_y, q.u, ws.du_y);
    apply_dy(ctx.op_y, q.v, ws.dv_y);
    apply_dy(ctx.op_y, q.w, ws.dw_y);
    apply_dy(ctx.op_y, q.eta, ws.de_y);
    apply_dy(ctx.op_y, ws.hhb, ws.dhhb_y);
    apply_dy(ctx.op_y, ws.v2, ws.dv2_y);
    apply_dy(ctx.op_y, ws.hv, ws.dhv_y);
    apply_dy(ctx.op_y, ws.huv, ws.dhuv_y);
    apply_dy(ctx.op_y, ws.e2h, ws.de2h_y);
    apply_dy(ctx.op_y, ws.hvw, ws.dhvw_y);

    const bool walls = ctx.bops.x_active || ctx.bops.y_active;
    if (walls)
        sat_mass_term(ctx.bops, ws.hu, ws.hv, ws.sat);

    const double lam_half = lambda / 2.0;
    const double lam_third = lambda / 3.0;
    const double lam_sixth = lambda / 6.0;

#pragma omp parallel for schedule(static)
    for (std::int64_t kk = 0; kk < static_cast<std::int64_t>(n); ++kk) {
        const std::size_t k = static_cast<std::size_t>(kk);
        const double h = q.h[k], u = q.u[k], v = q.v[k], w = q.w[k];
        const double r = ws.ratio[k];

        // continuity:
        //   h_t + u D_x h + h D_x u + v D_y h + h D_y v = wall penalty
        {
            double s = u * ws.dh_x[k] + h * ws.du_x[k] + v * ws.dh_y[k] + h * ws.dv_y[k];
            out.h[k] = walls ? -s + ws.sat[k] : -s;
        }

        // x-momentum:
        //   h u_t + g D_x(h(h+b)) - g(h+b) D_x h
        //         + 1/2 h D_x(u^2) - 1/2 u^2 D_x h + 1/2 u D_x(hu) - 1/2 hu D_x u
        //         + 1/2 D_y(huv) - 1/2 uv D_y h + 1/2 hv D_y u - 1/2 hu D_y v
        //         + lam/6 (eta^2/h^2) D_x h + lam/3 D_x eta - lam/3 (eta/h) D_x eta
        //         - lam/6 D_x(eta^2/h) + lam/2 (1 - eta/h) D_x b = 0
        {
            double s = g * ws.dhhb_x[k] - g * (h + b[k]) * ws.dh_x[k];
            s += 0.5 * h * ws.du2_x[k] - 0.5 * ws.u2[k] * ws.dh_x[k] +
                 0.5 * u * ws.dhu_x[k] - 0.5 * ws.hu[k] * ws.du_x[k];
            s += 0.5 * ws.dhuv_y[k] - 0.5 * u * v * ws.dh_y[k] +
                 0.5 * ws.hv[k] * ws.du_y[k] - 0.5 * ws.hu[k] * ws.dv_y[k];
            s += lam_sixth * (r * r) * ws.dh_x[k] + lam_third * ws.de_x[k] -
                 lam_third * r * ws.de_x[k] - lam_sixth * ws.de2h_x[k] +
                 lam_half * (1.0 - r) * ctx.db_dx[k];
            out.u[k] = -s / h;
        }

        // y-momentum (x-momentum mirrored, x <-> y and u <-> v):
        {
            double s = g * ws.dhhb_y[k] - g * (h + b[k]) * ws.dh_y[k];
            s += 0.5 * h * ws.dv2_y[k] - 0.5 * ws.v2[k] * ws.dh_y[k] +
                 0.5 * v * ws.dhv_y[k] - 0.5 * ws.hv[k] * ws.dv_y[k];
            s += 0.5 * ws.dhuv_x[k] - 0.5 * u * v * ws.dh_x[k] +
                 0.5 * ws.hu[k] * ws.dv_x[k] - 0.5 * ws.hv[k] * ws.du_x[k];
            s += lam_sixth * (r * r) * ws.dh_y[k] + lam_third * ws.de_y[k] -
                 lam_third * r * ws.de_y[k] - lam_sixth * ws.de2h_y[k] +
                 lam_half * (1.0 - r) * ctx.db_dy[k];
            out.v[k] = -s / h;
        }

        // vertical velocity:
        //   h w_t + 1/2 D_x(huw) + 1/2 hu D_x w - 1/2 uw D_x h - 1/2 hw D_x u
        //         + 1/2 D_y(hvw) + 1/2 hv D_y w - 1/2 vw D_y h - 1/2 hw D_y v
        //         = lam (1 - eta/h)
        {
            double s = 0.5 * ws.dhuw_x[k] + 0.5 * ws.hu[k] * ws.dw_x[k] -
                       0.5 * u * w * ws.dh_x[k] - 0.5 * h * w * ws.du_x[k];
            s += 0.5 * ws.dhvw_y[k] + 0.5 * ws.hv[k] * ws.dw_y[k] -
                 0.5 * v * w * ws.dh_y[k] - 0.5 * h * w * ws.dv_y[k];
            out.w[k] = (lambda * (1.0 - r) - s) / h;
        }

        // auxiliary depth:
        //   eta_t + u D_x eta + v D_y eta + 3/2 u D_x b + 3/2 v D_y b = w
        {
            double s = u * ws.de_x[k] + v * ws.de_y[k] + 1.5 * u * ctx.db_dx[k] +
                       1.5 * v * ctx.db_dy[k];
            out.eta[k] = w - s;
        }
    }

    if (ctx.source)
        ctx.source(t, out);
}

} // namespace detail

/** Tendency on a fully periodic grid. */
inline void rhs_periodic(const RhsContext& ctx, double t, const StateField& q,
                         StateField& out) {
    assert(ctx.grid.kind_x == BoundaryKind::periodic &&
           ctx.grid.kind_y == BoundaryKind::periodic);
    detail::split_form_rhs(ctx, ctx.phys.lambda, t, q, out);
}

/** Tendency with reflecting walls in every bounded direction; the wall
 *  penalty in the continuity equation is the only boundary coupling. */
inline void rhs_reflecting(const RhsContext& ctx, double t, const StateField& q,
                           StateField& out) {
    assert(ctx.grid.kind_x == BoundaryKind::bounded ||
           ctx.grid.kind_y == BoundaryKind::bounded);
    detail::split_form_rhs(ctx, ctx.phys.lambda, t, q, out);
}

/** Dispatches on the grid's boundary kinds. */
inline void rhs(const RhsContext& ctx, double t, const StateField& q, StateField& out) {
    detail::split_form_rhs(ctx, ctx.phys.lambda, t, q, out);
}

/** Shallow-water limit: the same split form evaluated with lambda = 0; the
 *  decoupled auxiliary tendencies are reported as zero. Bit-identical on
 *  (h, u, v) to the full tendency at lambda = 0. */
inline void rhs_shallow_water(const RhsContext& ctx, double t, const StateField& q,
                              StateField& out) {
    detail::split_form_rhs(ctx, 0.0, t, q, out);
    out.w.fill(0.0);
    out.eta.fill(0.0);
}

/** Adds pointwise source values (S_h, S_u, S_v, S_w, S_eta)(t, x, y) to an
 *  assembled tendency. */
inline void add_manufactured_sources(
    StateField& tendency, double t, const Grid2D& grid,
    const std::function<std::array<double, 5>(double, double, double)>& source) {
    for (int j = 0; j < grid.ny; ++j) {
        const double y = grid.y(j);
        for (int i = 0; i < grid.nx; ++i) {
            const std::array<double, 5> s = source(t, grid.x(i), y);
            tendency.h(i, j) += s[0];
            tendency.u(i, j) += s[1];
            tendency.v(i, j) += s[2];
            tendency.w(i, j) += s[3];
            tendency.eta(i, j) += s[4];
        }
    }
}

} // namespace hsgn
