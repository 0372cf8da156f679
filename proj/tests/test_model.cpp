#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hsgn/model.hpp"

using namespace hsgn;

TEST_CASE("relaxation pressure vanishes only at equilibrium", "[model]") {
    CHECK(pressure(500.0, 1.0, 1.0) == 0.0);
    CHECK(pressure(500.0, 2.7, 2.7) == 0.0);
    CHECK(pressure(500.0, 1.0, 0.0) == 0.0);
    CHECK(pressure(500.0, 1.0, 0.5) == Catch::Approx(500.0 / 12.0).epsilon(1e-15));
    CHECK(pressure(500.0, 1.0, 1.5) == Catch::Approx(-125.0).epsilon(1e-15));
    // compressed column pushes out, stretched column pulls in
    CHECK(pressure(500.0, 1.0, 0.25) > 0.0);
    CHECK(pressure(500.0, 1.0, 1.75) < 0.0);
}

TEST_CASE("pressure field form matches the scalar form", "[model]") {
    Field2D h(4, 3), eta(4, 3), out(4, 3);
    for (std::size_t k = 0; k < h.size(); ++k) {
        h[k] = 1.0 + 0.1 * static_cast<double>(k);
        eta[k] = 0.9 * h[k] + 0.02 * static_cast<double>(k % 3);
    }
    pressure(500.0, h, eta, out);
    for (std::size_t k = 0; k < h.size(); ++k)
        CHECK(out[k] == pressure(500.0, h[k], eta[k]));
}

TEST_CASE("energy density of simple columns", "[model]") {
    Grid2D g = make_grid(0.0, 1.0, 0.0, 1.0, 4, 4);
    PhysSetup phys;
    phys.b = Field2D(4, 4, 0.0);
    StateField q(g);
    Field2D e(4, 4);

    q.h.fill(1.0);
    q.eta = q.h;
    energy_density(q, phys, e);
    CHECK(e[0] == Catch::Approx(4.905).epsilon(1e-15));  // (g/2) h^2 at rest

    q.u.fill(2.0);
    energy_density(q, phys, e);
    CHECK(e[0] == Catch::Approx(6.905).epsilon(1e-15));  // + h u^2 / 2

    q.u.fill(0.0);
    q.eta.fill(2.0);
    phys.lambda = 6.0;
    energy_density(q, phys, e);
    CHECK(e[0] == Catch::Approx(5.905).epsilon(1e-15));  // + (lambda/6) h (eta/h-1)^2
}

TEST_CASE("energy density is nonnegative over nonnegative bathymetry", "[model]") {
    Grid2D g = make_grid(0.0, 1.0, 0.0, 1.0, 8, 8);
    PhysSetup phys;
    phys.b = g.sample([](double x, double y) { return 0.2 + 0.1 * std::sin(x + y); });
    StateField q(g);
    q.h = g.sample([](double x, double y) { return 1.0 + 0.4 * std::cos(3 * x - y); });
    q.u = g.sample([](double x, double) { return std::sin(5 * x); });
    q.v = g.sample([](double, double y) { return std::cos(4 * y); });
    q.w = g.sample([](double x, double y) { return x - y; });
    q.eta = g.sample([](double x, double y) { return 1.0 + 0.3 * std::sin(x * y); });
    Field2D e(8, 8);
    energy_density(q, phys, e);
    for (std::size_t k = 0; k < e.size(); ++k)
        CHECK(e[k] >= 0.0);
}

TEST_CASE("totals reduce to closed-form integrals", "[model]") {
    SECTION("still column of depth two on the periodic unit square") {
        Grid2D g = make_grid(0.0, 1.0, 0.0, 1.0, 12, 12);
        SbpOperator1D opx = build_periodic_d1(g.nx, g.dx);
        SbpOperator1D opy = build_periodic_d1(g.ny, g.dy);
        PhysSetup phys;
        phys.b = Field2D(g.nx, g.ny, 0.0);
        StateField q(g);
        q.h.fill(2.0);
        q.eta = q.h;
        CHECK(total_mass(opx.mass, opy.mass, q) == Catch::Approx(2.0).margin(1e-14));
        CHECK(total_energy(opx.mass, opy.mass, q, phys) ==
              Catch::Approx(19.62).margin(1e-12));  // (g/2) h^2
    }
    SECTION("constant depth on bounded [-1,1]^2") {
        Grid2D g = make_grid(-1.0, 1.0, -1.0, 1.0, 9, 9, BoundaryKind::bounded,
                             BoundaryKind::bounded);
        SbpOperator1D opx = build_bounded_d1(g.nx, g.dx);
        SbpOperator1D opy = build_bounded_d1(g.ny, g.dy);
        StateField q(g);
        q.h.fill(2.0);
        CHECK(total_mass(opx.mass, opy.mass, q) == Catch::Approx(8.0).margin(1e-13));
    }
    SECTION("a full sine period adds no mass") {
        Grid2D g = make_grid(0.0, 1.0, 0.0, 1.0, 32, 4);
        SbpOperator1D opx = build_periodic_d1(g.nx, g.dx);
        SbpOperator1D opy = build_periodic_d1(g.ny, g.dy);
        StateField q(g);
        q.h = g.sample([](double x, double) { return 1.0 + std::sin(2.0 * M_PI * x); });
        CHECK(total_mass(opx.mass, opy.mass, q) == Catch::Approx(1.0).margin(1e-14));
    }
}

TEST_CASE("auxiliary initialization sits on the equilibrium manifold", "[model]") {
    Grid2D g = make_grid(0.0, 1.0, 0.0, 1.0, 9, 9, BoundaryKind::bounded,
                         BoundaryKind::bounded);
    SbpOperator1D opx = build_bounded_d1(g.nx, g.dx);
    SbpOperator1D opy = build_bounded_d1(g.ny, g.dy);
    Field2D b(g.nx, g.ny, 0.0);

    SECTION("still water has zero vertical velocity") {
        StateField q(g);
        q.h = g.sample([](double x, double y) { return 1.0 + 0.1 * x * y; });
        init_auxiliary(q, opx, opy, b);
        for (std::size_t k = 0; k < q.h.size(); ++k) {
            CHECK(q.eta[k] == q.h[k]);
            CHECK(q.w[k] == 0.0);
        }
    }
    SECTION("uniform flow over a flat bottom stays columnar") {
        StateField q(g);
        q.h.fill(1.5);
        q.u.fill(0.7);
        q.v.fill(-0.3);
        init_auxiliary(q, opx, opy, b);
        for (std::size_t k = 0; k < q.h.size(); ++k)
            CHECK(q.w[k] == 0.0);
    }
    SECTION("linear divergence gives w = -h div(u)") {
        StateField q(g);
        q.h.fill(2.0);
        q.u = g.sample([](double x, double) { return x; });
        init_auxiliary(q, opx, opy, b);
        for (std::size_t k = 0; k < q.h.size(); ++k)
            CHECK(q.w[k] == Catch::Approx(-2.0).margin(1e-12));
    }
    SECTION("uphill advection adds (3/2) u . grad b") {
        StateField q(g);
        q.h.fill(1.0);
        q.u.fill(0.4);
        Field2D slope = g.sample([](double x, double) { return 0.2 * x; });
        init_auxiliary(q, opx, opy, slope);
        for (std::size_t k = 0; k < q.h.size(); ++k)
            CHECK(q.w[k] == Catch::Approx(1.5 * 0.4 * 0.2).margin(1e-13));
    }
}

TEST_CASE("state field enumerates its components in order", "[model]") {
    Grid2D g = make_grid(0.0, 1.0, 0.0, 1.0, 4, 4);
    StateField q(g);
    auto names = StateField::names();
    REQUIRE(names.size() == StateField::n_fields);
    CHECK(names[0] == std::string("h"));
    CHECK(names[4] == std::string("eta"));
    auto ptrs = q.fields();
    CHECK(ptrs[0] == &q.h);
    CHECK(ptrs[1] == &q.u);
    CHECK(ptrs[2] == &q.v);
    CHECK(ptrs[3] == &q.w);
    CHECK(ptrs[4] == &q.eta);
}
