#pragma once

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "hsgn/grid.hpp"

namespace hsgn {

/** First-derivative operator with summation-by-parts structure, described by
 *  data so the apply kernels stay generic: an interior stencil plus (for
 *  bounded operators) one-sided closure rows that mirror to the right end
 *  with flipped sign. All stencil coefficients carry the 1/dx scaling.
 *
 *  Together with the diagonal mass weights the operator satisfies
 *      M D + D^T M = 0                                   (periodic)
 *      M D + D^T M = e_R e_R^T - e_L e_L^T               (bounded)
 *  which is what every discrete integration-by-parts argument below uses. */
struct SbpOperator1D {
    BoundaryKind kind = BoundaryKind::periodic;
    int n = 0;
    double dx = 0.0;

    int halfwidth = 0;
    std::vector<double> interior; // 2*halfwidth+1 coefficients
    int closure_rows = 0;
    int closure_width = 0;
    std::vector<double> closure; // closure_rows x closure_width, row-major
    std::vector<double> mass;    // n positive diagonal weights
};

/** Central second-order periodic derivative; mass weights are uniformly dx. */
inline SbpOperator1D build_periodic_d1(int n, double dx) {
    if (n < 4)
        throw std::invalid_argument("build_periodic_d1: need n >= 4");
    if (!(dx > 0.0))
        throw std::invalid_argument("build_periodic_d1: need dx > 0");
    SbpOperator1D op;
    op.kind = BoundaryKind::periodic;
    op.n = n;
    op.dx = dx;
    op.halfwidth = 1;
    op.interior = {-1.0 / (2.0 * dx), 0.0, 1.0 / (2.0 * dx)};
    op.mass.assign(n, dx);
    return op;
}

/** Second-order bounded derivative: one-sided first-order rows at both ends,
 *  central interior; mass weights dx*(1/2, 1, ..., 1, 1/2). */
inline SbpOperator1D build_bounded_d1(int n, double dx) {
    if (n < 4)
        throw std::invalid_argument("build_bounded_d1: need n >= 4");
    if (!(dx > 0.0))
        throw std::invalid_argument("build_bounded_d1: need dx > 0");
    SbpOperator1D op;
    op.kind = BoundaryKind::bounded;
    op.n = n;
    op.dx = dx;
    op.halfwidth = 1;
    op.interior = {-1.0 / (2.0 * dx), 0.0, 1.0 / (2.0 * dx)};
    op.closure_rows = 1;
    op.closure_width = 2;
    op.closure = {-1.0 / dx, 1.0 / dx};
    op.mass.assign(n, dx);
    op.mass.front() = 0.5 * dx;
    op.mass.back() = 0.5 * dx;
    return op;
}

/** Builds the derivative for one grid direction from its kind and spacing. */
inline SbpOperator1D build_d1(BoundaryKind kind, int n, double dx) {
    return kind == BoundaryKind::periodic ? build_periodic_d1(n, dx)
                                          : build_bounded_d1(n, dx);
}

namespace detail {

/** Derivative of one contiguous row u[0..n), result into out[0..n). */
inline void d1_row(const SbpOperator1D& op, const double* u, double* out) {
    const int n = op.n;
    const int hw = op.halfwidth;
    if (op.kind == BoundaryKind::periodic) {
        if (hw == 1) {
            const double cm = op.interior[0], cp = op.interior[2];
            out[0] = cm * u[n - 1] + cp * u[1];
            for (int i = 1; i < n - 1; ++i)
                out[i] = cm * u[i - 1] + cp * u[i + 1];
            out[n - 1] = cm * u[n - 2] + cp * u[0];
        } else {
            for (int i = 0; i < n; ++i) {
                double s = 0.0;
                for (int k = -hw; k <= hw; ++k) {
                    int m = i + k;
                    if (m < 0)
                        m += n;
                    else if (m >= n)
                        m -= n;
                    s += op.interior[k + hw] * u[m];
                }
                out[i] = s;
            }
        }
        return;
    }
    const int cr = op.closure_rows, cw = op.closure_width;
    for (int r = 0; r < cr; ++r) {
        double sl = 0.0, sr = 0.0;
        for (int c = 0; c < cw; ++c) {
            sl += op.closure[r * cw + c] * u[c];
            sr -= op.closure[r * cw + c] * u[n - 1 - c];
        }
        out[r] = sl;
        out[n - 1 - r] = sr;
    }
    if (hw == 1) {
        const double cm = op.interior[0], cp = op.interior[2];
        for (int i = cr; i < n - cr; ++i)
            out[i] = cm * u[i - 1] + cp * u[i + 1];
    } else {
        for (int i = cr; i < n - cr; ++i) {
            double s = 0.0;
            for (int k = -hw; k <= hw; ++k)
                s += op.interior[k + hw] * u[i + k];
            out[i] = s;
        }
    }
}

/** Derivative across rows: out(:,j) uses u(:,j+k). Row j written contiguously. */
inline void d1_col_row(const SbpOperator1D& op, const Field2D& u, int j, double* out) {
    const int nx = u.nx();
    const int n = op.n;
    const int hw = op.halfwidth;
    auto row = [&](int jj) { return u.data() + static_cast<std::size_t>(jj) * nx; };
    if (op.kind == BoundaryKind::periodic) {
        for (int i = 0; i < nx; ++i)
            out[i] = 0.0;
        for (int k = -hw; k <= hw; ++k) {
            const double c = op.interior[k + hw];
            if (c == 0.0)
                continue;
            int m = j + k;
            if (m < 0)
                m += n;
            else if (m >= n)
                m -= n;
            const double* src = row(m);
            for (int i = 0; i < nx; ++i)
                out[i] += c * src[i];
        }
        return;
    }
    const int cr = op.closure_rows, cw = op.closure_width;
    if (j < cr) {
        for (int i = 0; i < nx; ++i)
            out[i] = 0.0;
        for (int c = 0; c < cw; ++c) {
            const double coef = op.closure[j * cw + c];
            const double* src = row(c);
            for (int i = 0; i < nx; ++i)
                out[i] += coef * src[i];
        }
        return;
    }
    if (j >= n - cr) {
        const int r = n - 1 - j;
        for (int i = 0; i < nx; ++i)
            out[i] = 0.0;
        for (int c = 0; c < cw; ++c) {
            const double coef = -op.closure[r * cw + c];
            const double* src = row(n - 1 - c);
            for (int i = 0; i < nx; ++i)
                out[i] += coef * src[i];
        }
        return;
    }
    for (int i = 0; i < nx; ++i)
        out[i] = 0.0;
    for (int k = -hw; k <= hw; ++k) {
        const double c = op.interior[k + hw];
        if (c == 0.0)
            continue;
        const double* src = row(j + k);
        for (int i = 0; i < nx; ++i)
            out[i] += c * src[i];
    }
}

} // namespace detail

/** out = D_x u, one 1D derivative per grid row. */
inline void apply_dx(const SbpOperator1D& op, const Field2D& u, Field2D& out) {
    assert(u.same_shape(out));
    assert(op.n == u.nx());
    const int ny = u.ny();
    const int nx = u.nx();
#pragma omp parallel for schedule(static)
    for (int j = 0; j < ny; ++j)
        detail::d1_row(op, u.data() + static_cast<std::size_t>(j) * nx,
                       out.data() + static_cast<std::size_t>(j) * nx);
}

/** out = D_y u, one 1D derivative per grid column. */
inline void apply_dy(const SbpOperator1D& op, const Field2D& u, Field2D& out) {
    assert(u.same_shape(out));
    assert(op.n == u.ny());
    const int ny = u.ny();
    const int nx = u.nx();
#pragma omp parallel for schedule(static)
    for (int j = 0; j < ny; ++j)
        detail::d1_col_row(op, u, j, out.data() + static_cast<std::size_t>(j) * nx);
}

/** Tensor-product quadrature sum_{i,j} wx_i wy_j f(i,j), compensated so the
 *  result is deterministic and accurate independent of grid size. */
inline double mass_weighted_sum(const std::vector<double>& wx,
                                const std::vector<double>& wy, const Field2D& f) {
    assert(static_cast<int>(wx.size()) == f.nx());
    assert(static_cast<int>(wy.size()) == f.ny());
    double sum = 0.0, comp = 0.0;
    for (int j = 0; j < f.ny(); ++j) {
        double row = 0.0, row_comp = 0.0;
        const double* src = f.data() + static_cast<std::size_t>(j) * f.nx();
        for (int i = 0; i < f.nx(); ++i) {
            double term = wx[i] * src[i] - row_comp;
            double t = row + term;
            row_comp = (t - row) - term;
            row = t;
        }
        double term = wy[j] * row - comp;
        double t = sum + term;
        comp = (t - sum) - term;
        sum = t;
    }
    return sum;
}

/** Boundary restriction data for the penalty coupling: which directions have
 *  walls and the inverse boundary mass 2/dx they carry. */
struct BoundaryOps {
    bool x_active = false;
    bool y_active = false;
    double two_over_dx = 0.0;
    double two_over_dy = 0.0;
};

inline BoundaryOps make_boundary_ops(const Grid2D& g) {
    BoundaryOps b;
    if (g.kind_x == BoundaryKind::bounded) {
        b.x_active = true;
        b.two_over_dx = 2.0 / g.dx;
    }
    if (g.kind_y == BoundaryKind::bounded) {
        b.y_active = true;
        b.two_over_dy = 2.0 / g.dy;
    }
    return b;
}

/** Wall penalty for the continuity equation: -(2/dx)(hu) on the left face,
 *  +(2/dx)(hu) on the right face, the y analog with (hv), contributions summed
 *  at corners, zero in the interior. Mass-weighting a face node turns the
 *  2/dx into exactly 1, which is what makes total mass conservative. */
inline void sat_mass_term(const BoundaryOps& b, const Field2D& hu, const Field2D& hv,
                          Field2D& out) {
    assert(hu.same_shape(hv) && hu.same_shape(out));
    assert(b.x_active || b.y_active); // fully periodic setups have no wall term
    const int nx = out.nx(), ny = out.ny();
    out.fill(0.0);
    if (b.x_active) {
        for (int j = 0; j < ny; ++j) {
            out(0, j) -= b.two_over_dx * hu(0, j);
            out(nx - 1, j) += b.two_over_dx * hu(nx - 1, j);
        }
    }
    if (b.y_active) {
        for (int i = 0; i < nx; ++i) {
            out(i, 0) -= b.two_over_dy * hv(i, 0);
            out(i, ny - 1) += b.two_over_dy * hv(i, ny - 1);
        }
    }
}

/** Dense n x n image of the operator, built by applying it to unit vectors so
 *  the verification exercises the same kernels production uses. */
inline std::vector<double> dense_d1(const SbpOperator1D& op) {
    const int n = op.n;
    std::vector<double> D(static_cast<std::size_t>(n) * n, 0.0);
    std::vector<double> e(n, 0.0), col(n, 0.0);
    for (int k = 0; k < n; ++k) {
        e[k] = 1.0;
        detail::d1_row(op, e.data(), col.data());
        e[k] = 0.0;
        for (int i = 0; i < n; ++i)
            D[static_cast<std::size_t>(i) * n + k] = col[i];
    }
    return D;
}

struct SbpCheckResult {
    bool ok = false;
    double max_residual = std::numeric_limits<double>::infinity();
};

/** Verifies M D + D^T M against the expected boundary matrix entrywise. */
inline SbpCheckResult check_sbp_property(const SbpOperator1D& op) {
    const int n = op.n;
    const std::vector<double> D = dense_d1(op);
    double max_entry = 0.0;
    double max_res = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double a = op.mass[i] * D[static_cast<std::size_t>(i) * n + j] +
                             D[static_cast<std::size_t>(j) * n + i] * op.mass[j];
            double expect = 0.0;
            if (op.kind == BoundaryKind::bounded) {
                if (i == 0 && j == 0)
                    expect = -1.0;
                else if (i == n - 1 && j == n - 1)
                    expect = 1.0;
            }
            max_entry = std::max({max_entry, std::abs(a), std::abs(expect)});
            max_res = std::max(max_res, std::abs(a - expect));
        }
    }
    SbpCheckResult r;
    r.max_residual = max_res;
    r.ok = max_res <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(max_entry, 1.0);
    return r;
}

} // namespace hsgn
