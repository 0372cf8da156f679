#pragma once

#include <array>
#include <cassert>
#include <stdexcept>
#include <string>

#include "hsgn/grid.hpp"
#include "hsgn/sbp.hpp"

namespace hsgn {

/** Thrown when the water depth loses positivity; the solver has no
 *  wetting/drying treatment, so continuing would be meaningless. */
struct depth_error : std::runtime_error {
    explicit depth_error(const std::string& what) : std::runtime_error(what) {}
};

/** Primitive solution variables: depth h, velocities u and v, the auxiliary
 *  vertical-velocity variable w, and the auxiliary depth eta that relaxes
 *  toward h. All five live on the same grid. */
struct StateField {
    Field2D h, u, v, w, eta;

    StateField() = default;
    explicit StateField(const Grid2D& g)
        : h(g.nx, g.ny), u(g.nx, g.ny), v(g.nx, g.ny), w(g.nx, g.ny), eta(g.nx, g.ny) {}

    static constexpr int n_fields = 5;
    std::array<Field2D*, n_fields> fields() { return {&h, &u, &v, &w, &eta}; }
    std::array<const Field2D*, n_fields> fields() const { return {&h, &u, &v, &w, &eta}; }
    static constexpr std::array<const char*, n_fields> names() {
        return {"h", "u", "v", "w", "eta"};
    }
};

/** Physical configuration: gravity, the relaxation strength lambda (0 turns
 *  the model into plain shallow water), the node-sampled bathymetry, and the
 *  depth floor below which a run aborts rather than continuing unphysically. */
struct PhysSetup {
    double g = 9.81;
    double lambda = 500.0;
    double h_floor = 1e-12;
    Field2D b;
};

/** Relaxation pressure p = (lambda/3) r (1 - r) with r = eta/h; identically
 *  zero at the equilibrium eta = h. */
inline double pressure(double lambda, double h, double eta) {
    const double r = eta / h;
    return (lambda / 3.0) * r * (1.0 - r);
}

inline void pressure(double lambda, const Field2D& h, const Field2D& eta, Field2D& out) {
    assert(h.same_shape(eta) && h.same_shape(out));
    const std::size_t n = h.size();
    for (std::size_t k = 0; k < n; ++k)
        out[k] = pressure(lambda, h[k], eta[k]);
}

/** Pointwise total energy
 *  E = h [ (u^2+v^2)/2 + w^2/6 + (g/2)(h+2b) + (lambda/6)(eta/h-1)^2 ]. */
inline void energy_density(const StateField& q, const PhysSetup& phys, Field2D& out) {
    assert(q.h.same_shape(out) && q.h.same_shape(phys.b));
    const std::size_t n = q.h.size();
    const double g_half = 0.5 * phys.g;
    const double lam_sixth = phys.lambda / 6.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double h = q.h[k];
        const double r1 = q.eta[k] / h - 1.0;
        out[k] = h * (0.5 * (q.u[k] * q.u[k] + q.v[k] * q.v[k]) +
                      q.w[k] * q.w[k] / 6.0 + g_half * (h + 2.0 * phys.b[k]) +
                      lam_sixth * r1 * r1);
    }
}

inline double total_mass(const std::vector<double>& wx, const std::vector<double>& wy,
                         const StateField& q) {
    return mass_weighted_sum(wx, wy, q.h);
}

inline double total_energy(const std::vector<double>& wx, const std::vector<double>& wy,
                           const StateField& q, const PhysSetup& phys) {
    Field2D e(q.h.nx(), q.h.ny());
    energy_density(q, phys, e);
    return mass_weighted_sum(wx, wy, e);
}

/** Fills the auxiliary variables from (h, u, v):
 *      eta = h,   w = -h (D_x u + D_y v) + (3/2)(u D_x b + v D_y b)
 *  using the same derivative operators the right-hand side uses, so the
 *  initial state starts on the discrete equilibrium manifold. */
inline void init_auxiliary(StateField& q, const SbpOperator1D& op_x,
                           const SbpOperator1D& op_y, const Field2D& b) {
    q.eta = q.h;
    Field2D du(q.h.nx(), q.h.ny()), dv(q.h.nx(), q.h.ny());
    Field2D dbx(q.h.nx(), q.h.ny()), dby(q.h.nx(), q.h.ny());
    apply_dx(op_x, q.u, du);
    apply_dy(op_y, q.v, dv);
    apply_dx(op_x, b, dbx);
    apply_dy(op_y, b, dby);
    const std::size_t n = q.h.size();
    for (std::size_t k = 0; k < n; ++k)
        q.w[k] = -q.h[k] * (du[k] + dv[k]) + 1.5 * (q.u[k] * dbx[k] + q.v[k] * dby[k]);
}

} // namespace hsgn
