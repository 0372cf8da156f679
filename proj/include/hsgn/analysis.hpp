#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "hsgn/model.hpp"
#include "hsgn/sbp.hpp"

namespace hsgn {

/** Quadrature-weighted L2 distance sqrt(sum wx wy (a - b)^2). */
inline double discrete_l2_error(const std::vector<double>& wx,
                                const std::vector<double>& wy, const Field2D& a,
                                const Field2D& b) {
    assert(a.same_shape(b));
    Field2D diff2(a.nx(), a.ny());
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        diff2[k] = d * d;
    }
    return std::sqrt(mass_weighted_sum(wx, wy, diff2));
}

/** Experimental order of convergence between two resolutions. A vanishing
 *  fine-grid error reports +infinity; equal errors report 0. */
inline double eoc(double err_coarse, double err_fine, double dx_coarse, double dx_fine) {
    if (!(dx_coarse > 0.0) || !(dx_fine > 0.0) || dx_coarse == dx_fine)
        throw std::invalid_argument("eoc: spacings must be positive and distinct");
    if (err_coarse < 0.0 || err_fine < 0.0)
        throw std::invalid_argument("eoc: errors must be non-negative");
    if (err_fine == 0.0)
        return std::numeric_limits<double>::infinity();
    if (err_coarse == 0.0)
        return -std::numeric_limits<double>::infinity();
    return std::log(err_coarse / err_fine) / std::log(dx_coarse / dx_fine);
}

/** Time derivative of the discrete total energy implied by a tendency,
 *  assembled from the analytic energy partials:
 *    dE/dh = (u^2+v^2)/2 + w^2/6 + g h + g b + lam/6 (1 - eta^2/h^2)
 *    dE/du = h u,  dE/dv = h v,  dE/dw = h w / 3,
 *    dE/deta = -lam/3 (1 - eta/h).
 *  For the homogeneous split form this vanishes to machine precision. */
inline double energy_rate(const std::vector<double>& wx, const std::vector<double>& wy,
                          const StateField& q, const StateField& q_t,
                          const PhysSetup& phys) {
    Field2D point(q.h.nx(), q.h.ny());
    const double g = phys.g;
    const double lam_third = phys.lambda / 3.0;
    const double lam_sixth = phys.lambda / 6.0;
    for (std::size_t k = 0; k < point.size(); ++k) {
        const double h = q.h[k], u = q.u[k], v = q.v[k], w = q.w[k];
        const double r = q.eta[k] / h;
        const double dE_dh = 0.5 * (u * u + v * v) + w * w / 6.0 + g * h +
                             g * phys.b[k] + lam_sixth * (1.0 - r * r);
        const double dE_du = h * u;
        const double dE_dv = h * v;
        const double dE_dw = h * w / 3.0;
        const double dE_deta = -lam_third * (1.0 - r);
        point[k] = dE_dh * q_t.h[k] + dE_du * q_t.u[k] + dE_dv * q_t.v[k] +
                   dE_dw * q_t.w[k] + dE_deta * q_t.eta[k];
    }
    return mass_weighted_sum(wx, wy, point);
}

/** One row per resolution of a refinement study. */
struct ConvergenceTable {
    std::vector<std::string> variables;
    std::vector<int> resolution;       // nx per row
    std::vector<double> dx;            // spacing per row
    std::vector<std::vector<double>> errors; // [row][variable]
    std::vector<std::vector<double>> rates;  // [row][variable]; first row NaN
    std::vector<std::string> status;   // "ok" or a failure reason per row
};

} // namespace hsgn
