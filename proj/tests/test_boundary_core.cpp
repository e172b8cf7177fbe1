#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "hweno/boundary.hpp"
#include "hweno/config.hpp"
#include "hweno/grid.hpp"
#include "hweno/state.hpp"

using namespace hweno;

TEST_CASE("grid construction validates its arguments") {
  CHECK_THROWS_AS(Grid1D::make(0.0, 1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(Grid1D::make(1.0, 0.0, 32), std::invalid_argument);
  CHECK_THROWS_AS(Grid2D::make(0.0, 1.0, 0.0, 1.0, 32, 4), std::invalid_argument);

  const Grid1D g = Grid1D::make(-0.5, 0.5, 100);
  CHECK(g.dx == doctest::Approx(0.01));
  CHECK(g.x(0) == doctest::Approx(-0.495));
  CHECK(g.x(99) == doctest::Approx(0.495));

  const Grid2D g2 = Grid2D::make(0.0, 4.0, 0.0, 1.0, 16, 8);
  CHECK(g2.dx == doctest::Approx(0.25));
  CHECK(g2.dy == doctest::Approx(0.125));
  CHECK(g2.y(0) == doctest::Approx(0.0625));
}

TEST_CASE("scheme configuration validation") {
  SchemeConfig cfg;
  CHECK_NOTHROW(cfg.validate());

  SchemeConfig bad = cfg;
  bad.gamma = {0.5, 0.3, 0.3};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.d = {1.0, -0.1, 0.1};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.cfl = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = cfg;
  bad.epsilon = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  CHECK(scheme_from_string("l-hweno") == Scheme::l_hweno);
  CHECK(scheme_from_string("weno-js") == Scheme::weno_js);
  CHECK_THROWS_AS(scheme_from_string("hweno"), std::invalid_argument);
  CHECK(limiter_mode_from_string("staged") == LimiterMode::staged);
  CHECK(limiter_mode_from_string("off") == LimiterMode::off);
  CHECK_THROWS_AS(limiter_mode_from_string("on"), std::invalid_argument);
  CHECK(to_string(Scheme::weno_js) == "weno-js");
  CHECK(to_string(LimiterMode::off) == "off");
}

TEST_CASE("2D array rows are contiguous in x") {
  Array2D a(8, 4);
  a(2, 1) = 5.0;
  a(3, 1) = 7.0;
  const double* p = a.row_ptr(2, 1);
  CHECK(p[0] == 5.0);
  CHECK(p[1] == 7.0);
}

TEST_CASE("1D periodic fill wraps both sides") {
  const Grid1D g = Grid1D::make(0.0, 1.0, 8);
  auto s = HermiteState1D::make(1, 8);
  for (int i = 0; i < 8; ++i) {
    s.u[0](i) = 10.0 + i;
    s.v[0](i) = 20.0 + i;
  }
  BoundarySpec1D bc{SideBC::periodic(), SideBC::periodic()};
  apply_boundary(s, g, bc, 0.0);
  for (int k = 1; k <= ghost_width; ++k) {
    CHECK(s.u[0](-k) == 10.0 + 8 - k);
    CHECK(s.u[0](7 + k) == 10.0 + k - 1);
    CHECK(s.v[0](-k) == 20.0 + 8 - k);
  }
}

TEST_CASE("mixed periodic and non-periodic sides are rejected") {
  const Grid1D g = Grid1D::make(0.0, 1.0, 8);
  auto s = HermiteState1D::make(1, 8);
  BoundarySpec1D bc{SideBC::periodic(), SideBC::outflow()};
  CHECK_THROWS_AS(apply_boundary(s, g, bc, 0.0), std::invalid_argument);
}

TEST_CASE("1D reflective fill flips the normal momentum and derivatives") {
  const Grid1D g = Grid1D::make(0.0, 1.0, 8);
  auto s = HermiteState1D::make(3, 8);
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < 8; ++i) {
      s.u[c](i) = 100.0 * c + i + 1.0;
      s.v[c](i) = 500.0 * c + i + 1.0;
    }
  BoundarySpec1D bc{SideBC::reflective(), SideBC::reflective()};
  apply_boundary(s, g, bc, 0.0, /*normal_comp=*/1);
  for (int k = 0; k < ghost_width; ++k) {
    // density and energy mirror evenly; x-momentum flips
    CHECK(s.u[0](-1 - k) == s.u[0](k));
    CHECK(s.u[1](-1 - k) == -s.u[1](k));
    CHECK(s.u[2](-1 - k) == s.u[2](k));
    // d/dx data get one extra sign flip across an x wall
    CHECK(s.v[0](-1 - k) == -s.v[0](k));
    CHECK(s.v[1](-1 - k) == s.v[1](k));
    CHECK(s.v[2](-1 - k) == -s.v[2](k));
    // right wall mirrors the rightmost interior nodes
    CHECK(s.u[1](8 + k) == -s.u[1](7 - k));
    CHECK(s.v[0](8 + k) == -s.v[0](7 - k));
  }
}

TEST_CASE("1D outflow fill extrapolates the edge node") {
  const Grid1D g = Grid1D::make(0.0, 1.0, 8);
  auto s = HermiteState1D::make(1, 8);
  for (int i = 0; i < 8; ++i) s.u[0](i) = i * i + 1.0;
  BoundarySpec1D bc{SideBC::outflow(), SideBC::outflow()};
  apply_boundary(s, g, bc, 0.0);
  for (int k = 1; k <= ghost_width; ++k) {
    CHECK(s.u[0](-k) == 1.0);
    CHECK(s.u[0](7 + k) == 50.0);
  }
}

TEST_CASE("1D dirichlet fill evaluates at the ghost node coordinates") {
  const Grid1D g = Grid1D::make(0.0, 1.0, 8);
  auto s = HermiteState1D::make(2, 8);
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < 8; ++i) s.v[c](i) = 3.0;
  auto state = [](double x, double, double t, std::span<double> u) {
    u[0] = x + t;
    u[1] = 2.0 * x;
  };
  BoundarySpec1D bc{SideBC::dirichlet(state), SideBC::dirichlet(state)};
  apply_boundary(s, g, bc, 0.25);
  for (int k = 1; k <= ghost_width; ++k) {
    CHECK(s.u[0](-k) == doctest::Approx(g.x(-k) + 0.25));
    CHECK(s.u[1](7 + k) == doctest::Approx(2.0 * g.x(7 + k)));
    CHECK(s.v[0](-k) == 0.0);
    CHECK(s.v[1](7 + k) == 0.0);
  }
}

TEST_CASE("non-finite interior data are rejected before filling ghosts") {
  const Grid1D g = Grid1D::make(0.0, 1.0, 8);
  auto s = HermiteState1D::make(1, 8);
  s.u[0](4) = std::numeric_limits<double>::quiet_NaN();
  BoundarySpec1D bc{SideBC::outflow(), SideBC::outflow()};
  CHECK_THROWS_AS(apply_boundary(s, g, bc, 0.0), SolverError);
}

TEST_CASE("2D periodic fill wraps x and y faces") {
  const Grid2D g = Grid2D::make(0.0, 1.0, 0.0, 1.0, 8, 6);
  auto s = HermiteState2D::make(1, 8, 6);
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 8; ++i) {
      s.u[0](i, j) = 100.0 * j + i;
      s.v[0](i, j) = 1000.0 + 100.0 * j + i;
      s.w[0](i, j) = 2000.0 + 100.0 * j + i;
    }
  BoundarySpec2D bc{Side2D::uniform(SideBC::periodic()), Side2D::uniform(SideBC::periodic()),
                    Side2D::uniform(SideBC::periodic()), Side2D::uniform(SideBC::periodic())};
  apply_boundary(s, g, bc, 0.0);
  for (int j = 0; j < 6; ++j) {
    CHECK(s.u[0](-1, j) == s.u[0](7, j));
    CHECK(s.u[0](-3, j) == s.u[0](5, j));
    CHECK(s.u[0](8, j) == s.u[0](0, j));
    CHECK(s.w[0](9, j) == s.w[0](1, j));
  }
  for (int i = 0; i < 8; ++i) {
    CHECK(s.u[0](i, -1) == s.u[0](i, 5));
    CHECK(s.u[0](i, 6) == s.u[0](i, 0));
    CHECK(s.v[0](i, -2) == s.v[0](i, 4));
  }
}

TEST_CASE("2D reflective fill at a y wall flips y momentum and d/dy data") {
  const Grid2D g = Grid2D::make(0.0, 1.0, 0.0, 1.0, 8, 6);
  auto s = HermiteState2D::make(4, 8, 6);
  for (int c = 0; c < 4; ++c)
    for (int j = 0; j < 6; ++j)
      for (int i = 0; i < 8; ++i) {
        s.u[c](i, j) = 1.0 + c + 10.0 * j + i;
        s.v[c](i, j) = 2.0 + c + 10.0 * j + i;
        s.w[c](i, j) = 3.0 + c + 10.0 * j + i;
      }
  BoundarySpec2D bc{Side2D::uniform(SideBC::outflow()), Side2D::uniform(SideBC::outflow()),
                    Side2D::uniform(SideBC::reflective()), Side2D::uniform(SideBC::reflective())};
  apply_boundary(s, g, bc, 0.0, /*normal_comp_x=*/1, /*normal_comp_y=*/2);
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < ghost_width; ++k) {
      // solution: y momentum odd, everything else even
      CHECK(s.u[0](i, -1 - k) == s.u[0](i, k));
      CHECK(s.u[2](i, -1 - k) == -s.u[2](i, k));
      // d/dx data are tangential at a y wall: same parity as the solution
      CHECK(s.v[0](i, -1 - k) == s.v[0](i, k));
      CHECK(s.v[2](i, -1 - k) == -s.v[2](i, k));
      // d/dy data flip once more
      CHECK(s.w[0](i, -1 - k) == -s.w[0](i, k));
      CHECK(s.w[2](i, -1 - k) == s.w[2](i, k));
      // top wall
      CHECK(s.u[2](i, 6 + k) == -s.u[2](i, 5 - k));
      CHECK(s.w[0](i, 6 + k) == -s.w[0](i, 5 - k));
    }
}

TEST_CASE("2D side rules can vary along the boundary") {
  const Grid2D g = Grid2D::make(0.0, 4.0, 0.0, 1.0, 16, 8);
  auto s = HermiteState2D::make(1, 16, 8);
  for (int j = 0; j < 8; ++j)
    for (int i = 0; i < 16; ++i) s.u[0](i, j) = 1.0 + i + 100.0 * j;
  Side2D bottom;
  bottom.bc = SideBC::dirichlet([](double, double, double, std::span<double> u) { u[0] = -7.0; });
  bottom.kind_fn = [](double x) { return x < 1.0 ? BCKind::dirichlet : BCKind::reflective; };
  BoundarySpec2D bc{Side2D::uniform(SideBC::outflow()), Side2D::uniform(SideBC::outflow()),
                    bottom, Side2D::uniform(SideBC::outflow())};
  apply_boundary(s, g, bc, 0.0);
  for (int i = 0; i < 16; ++i) {
    if (g.x(i) < 1.0) {
      CHECK(s.u[0](i, -1) == -7.0);
    } else {
      CHECK(s.u[0](i, -1) == s.u[0](i, 0));
    }
  }
}

TEST_CASE("step geometry demands grid-aligned faces") {
  const Grid2D g = Grid2D::make(0.0, 3.0, 0.0, 1.0, 24, 8);
  StepGeom ok{0.625, 0.25};  // 5 cells in, 2 cells up on this grid
  CHECK(ok.i_face(g) == 5);
  CHECK(ok.j_face(g) == 2);
  StepGeom bad{0.6, 0.25};
  CHECK_THROWS_AS(bad.i_face(g), std::invalid_argument);
}

TEST_CASE("step wall fills mirror into the solid region with correct parity") {
  const Grid2D g = Grid2D::make(0.0, 3.0, 0.0, 1.0, 24, 8);
  const StepGeom step{0.75, 0.25};  // i_face = 6, j_face = 2
  auto s = HermiteState2D::make(4, 24, 8);
  for (int c = 0; c < 4; ++c)
    for (int j = -ghost_width; j < 8 + ghost_width; ++j)
      for (int i = -ghost_width; i < 24 + ghost_width; ++i) {
        s.u[c](i, j) = 1.0 + c + 0.1 * i + 0.01 * j;
        s.v[c](i, j) = 2.0 + c + 0.1 * i + 0.01 * j;
        s.w[c](i, j) = 3.0 + c + 0.1 * i + 0.01 * j;
      }

  auto s1 = s;
  fill_step_ghosts_x(s1, g, step, /*normal_comp_x=*/1);
  // rows below the step surface mirror across x = x_face
  for (int j = -ghost_width; j < 2; ++j)
    for (int k = 0; k < ghost_width; ++k) {
      CHECK(s1.u[0](6 + k, j) == s1.u[0](5 - k, j));
      CHECK(s1.u[1](6 + k, j) == -s1.u[1](5 - k, j));
      CHECK(s1.v[0](6 + k, j) == -s1.v[0](5 - k, j));
      CHECK(s1.v[1](6 + k, j) == s1.v[1](5 - k, j));
      CHECK(s1.w[0](6 + k, j) == s1.w[0](5 - k, j));
      CHECK(s1.w[1](6 + k, j) == -s1.w[1](5 - k, j));
    }
  // rows at and above the surface are untouched
  CHECK(s1.u[0](7, 3) == s.u[0](7, 3));

  auto s2 = s;
  fill_step_ghosts_y(s2, g, step, /*normal_comp_y=*/2);
  // columns right of the corner mirror across y = y_face
  for (int i = 6; i < 24 + ghost_width; ++i)
    for (int k = 0; k < ghost_width; ++k) {
      CHECK(s2.u[0](i, 1 - k) == s2.u[0](i, 2 + k));
      CHECK(s2.u[2](i, 1 - k) == -s2.u[2](i, 2 + k));
      CHECK(s2.v[2](i, 1 - k) == -s2.v[2](i, 2 + k));
      CHECK(s2.w[0](i, 1 - k) == -s2.w[0](i, 2 + k));
      CHECK(s2.w[2](i, 1 - k) == s2.w[2](i, 2 + k));
    }
  // columns left of the corner are untouched
  CHECK(s2.u[0](5, 1) == s.u[0](5, 1));
}
