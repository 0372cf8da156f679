#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hsgn/analysis.hpp"

using namespace hsgn;

namespace {

struct Quad {
    Grid2D grid;
    SbpOperator1D opx, opy;
};

Quad bounded_unit_square(int n) {
    Quad q{make_grid(0.0, 1.0, 0.0, 1.0, n, n, BoundaryKind::bounded,
                     BoundaryKind::bounded),
           {}, {}};
    q.opx = build_bounded_d1(q.grid.nx, q.grid.dx);
    q.opy = build_bounded_d1(q.grid.ny, q.grid.dy);
    return q;
}

} // namespace

TEST_CASE("weighted error norm of elementary differences", "[analysis]") {
    Quad q = bounded_unit_square(5);
    SECTION("identical fields have zero distance") {
        Field2D a = q.grid.sample([](double x, double y) { return std::sin(x) * y; });
        CHECK(discrete_l2_error(q.opx.mass, q.opy.mass, a, a) == 0.0);
    }
    SECTION("a constant offset has norm equal to the offset") {
        Field2D a(5, 5, 3.25), b(5, 5, 0.0);
        CHECK(discrete_l2_error(q.opx.mass, q.opy.mass, a, b) ==
              Catch::Approx(3.25).epsilon(1e-14));
        CHECK(discrete_l2_error(q.opx.mass, q.opy.mass, b, a) ==
              Catch::Approx(3.25).epsilon(1e-14));
    }
    SECTION("a linear ramp integrates to the trapezoid value") {
        Field2D a = q.grid.sample([](double x, double) { return x; });
        Field2D b(5, 5, 0.0);
        const double got = discrete_l2_error(q.opx.mass, q.opy.mass, a, b);
        CHECK(got == Catch::Approx(std::sqrt(0.34375)).epsilon(1e-14));
        CHECK(got == Catch::Approx(std::sqrt(1.0 / 3.0)).margin(0.01));
    }
    SECTION("triangle inequality of the induced metric") {
        Field2D a = q.grid.sample([](double x, double y) { return x * x - y; });
        Field2D b = q.grid.sample([](double x, double y) { return std::cos(3 * x + y); });
        Field2D c = q.grid.sample([](double x, double y) { return x + 2 * y * y; });
        const double ab = discrete_l2_error(q.opx.mass, q.opy.mass, a, b);
        const double bc = discrete_l2_error(q.opx.mass, q.opy.mass, b, c);
        const double ac = discrete_l2_error(q.opx.mass, q.opy.mass, a, c);
        CHECK(ac <= ab + bc + 1e-14);
    }
}

TEST_CASE("observed order from error pairs", "[analysis]") {
    CHECK(eoc(0.1, 0.025, 1.0, 0.5) == Catch::Approx(2.0).epsilon(1e-14));
    CHECK(eoc(0.1, 0.05, 1.0, 0.5) == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(eoc(0.1, 0.1, 1.0, 0.5) == Catch::Approx(0.0).margin(1e-14));
    CHECK(std::isinf(eoc(0.1, 0.0, 1.0, 0.5)));
    CHECK(eoc(0.1, 0.0, 1.0, 0.5) > 0.0);
    CHECK(std::isinf(eoc(0.0, 0.1, 1.0, 0.5)));
    CHECK(eoc(0.0, 0.1, 1.0, 0.5) < 0.0);
    CHECK_THROWS_AS(eoc(0.1, 0.05, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(eoc(0.1, 0.05, -1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(eoc(0.1, 0.05, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(eoc(-0.1, 0.05, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("energy rate is the directional derivative of the total energy",
          "[analysis]") {
    Grid2D g = make_grid(-1.0, 1.0, -1.0, 1.0, 10, 9, BoundaryKind::bounded,
                         BoundaryKind::periodic);
    SbpOperator1D opx = build_bounded_d1(g.nx, g.dx);
    SbpOperator1D opy = build_periodic_d1(g.ny, g.dy);
    PhysSetup phys;
    phys.b = g.sample([](double x, double y) { return 0.05 * std::cos(x + y); });
    StateField q(g), qt(g);
    q.h = g.sample([](double x, double y) { return 1.0 + 0.2 * std::sin(2 * x - y); });
    q.u = g.sample([](double x, double) { return 0.3 * std::cos(x); });
    q.v = g.sample([](double, double y) { return 0.2 * std::sin(y); });
    q.w = g.sample([](double x, double y) { return 0.1 * x * y; });
    q.eta = g.sample([](double x, double y) { return 1.0 + 0.1 * std::cos(x * y); });
    qt.h = g.sample([](double x, double y) { return std::cos(x) * std::sin(y); });
    qt.u = g.sample([](double x, double) { return std::sin(3 * x); });
    qt.v = g.sample([](double, double y) { return y; });
    qt.w = g.sample([](double x, double) { return 1.0 - x; });
    qt.eta = g.sample([](double x, double y) { return x + y; });

    SECTION("zero direction gives zero rate") {
        StateField zero(g);
        CHECK(energy_rate(opx.mass, opy.mass, q, zero, phys) == 0.0);
    }
    SECTION("doubling the direction doubles the rate exactly") {
        const double r1 = energy_rate(opx.mass, opy.mass, q, qt, phys);
        StateField qt2(g);
        auto src = qt.fields();
        auto dst = qt2.fields();
        for (int f = 0; f < StateField::n_fields; ++f)
            for (std::size_t k = 0; k < src[f]->size(); ++k)
                (*dst[f])[k] = 2.0 * (*src[f])[k];
        CHECK(energy_rate(opx.mass, opy.mass, q, qt2, phys) == 2.0 * r1);
    }
    SECTION("central differences of the energy functional agree") {
        const double rate = energy_rate(opx.mass, opy.mass, q, qt, phys);
        const double eps = 1e-7;
        auto shifted = [&](double sign) {
            StateField qs(g);
            auto base = q.fields();
            auto dir = qt.fields();
            auto out = qs.fields();
            for (int f = 0; f < StateField::n_fields; ++f)
                for (std::size_t k = 0; k < base[f]->size(); ++k)
                    (*out[f])[k] = (*base[f])[k] + sign * eps * (*dir[f])[k];
            return total_energy(opx.mass, opy.mass, qs, phys);
        };
        const double fd = (shifted(+1.0) - shifted(-1.0)) / (2.0 * eps);
        CHECK(rate == Catch::Approx(fd).epsilon(1e-6).margin(1e-6));
    }
}
