#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "hsgn/field.hpp"

namespace hsgn {

enum class BoundaryKind { periodic, bounded };

/** Uniform structured grid on [x_min,x_max] x [y_min,y_max].
 *  Periodic directions exclude the seam node (spacing L/n); bounded
 *  directions include both endpoints (spacing L/(n-1)). */
struct Grid2D {
    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;
    int nx = 0, ny = 0;
    double dx = 0.0, dy = 0.0;
    BoundaryKind kind_x = BoundaryKind::periodic;
    BoundaryKind kind_y = BoundaryKind::periodic;

    double x(int i) const { return x_min + i * dx; }
    double y(int j) const { return y_min + j * dy; }
    std::array<double, 2> node_coords(int i, int j) const { return {x(i), y(j)}; }

    std::size_t n_total() const { return static_cast<std::size_t>(nx) * ny; }

    Field2D make_field(double fill = 0.0) const { return Field2D(nx, ny, fill); }

    /** Samples f(x, y) at every node. */
    template <class F>
    Field2D sample(F&& f) const {
        Field2D out(nx, ny);
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                out(i, j) = f(x(i), y(j));
        return out;
    }
};

inline double direction_spacing(double lo, double hi, int n, BoundaryKind kind) {
    return kind == BoundaryKind::periodic ? (hi - lo) / n : (hi - lo) / (n - 1);
}

inline Grid2D make_grid(double x_min, double x_max, double y_min, double y_max,
                        int nx, int ny,
                        BoundaryKind kind_x = BoundaryKind::periodic,
                        BoundaryKind kind_y = BoundaryKind::periodic) {
    if (!(x_max > x_min) || !(y_max > y_min))
        throw std::invalid_argument("make_grid: domain extents must be increasing");
    if (nx < 4 || ny < 4)
        throw std::invalid_argument("make_grid: need at least 4 nodes per direction, got nx=" +
                                    std::to_string(nx) + " ny=" + std::to_string(ny));
    Grid2D g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.y_min = y_min;
    g.y_max = y_max;
    g.nx = nx;
    g.ny = ny;
    g.kind_x = kind_x;
    g.kind_y = kind_y;
    g.dx = direction_spacing(x_min, x_max, nx, kind_x);
    g.dy = direction_spacing(y_min, y_max, ny, kind_y);
    return g;
}

} // namespace hsgn
