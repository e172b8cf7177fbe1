#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "hweno/problem.hpp"
#include "hweno/solver.hpp"
#include "test_util.hpp"

using namespace hweno;

TEST_CASE("registry lists every problem exactly once and dispatches") {
  const auto names = problem_names();
  CHECK(names.size() == 12);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());
  for (const auto& n : problem_names_1d()) {
    CHECK_FALSE(is_problem_2d(n));
    const Problem1D P = make_problem_1d(n);
    CHECK(P.name == n);
    CHECK(P.t_end > 0.0);
    CHECK(P.default_nx >= 6);
    CHECK(P.x_max > P.x_min);
    REQUIRE(P.init);
  }
  for (const auto& n : problem_names_2d()) {
    CHECK(is_problem_2d(n));
    const Problem2D P = make_problem_2d(n);
    CHECK(P.name == n);
    CHECK(P.t_end > 0.0);
    CHECK(P.y_max > P.y_min);
    REQUIRE(P.init);
  }
}

TEST_CASE("unknown problem name raises a listing of valid names") {
  try {
    make_problem_1d("no-such-problem");
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("no-such-problem") != std::string::npos);
    CHECK(msg.find("burgers1d-smooth") != std::string::npos);
    CHECK(msg.find("forward-step") != std::string::npos);
  }
}

TEST_CASE("initial states are finite on the default grids") {
  for (const auto& n : problem_names_1d()) {
    const Problem1D P = make_problem_1d(n);
    const Grid1D g = make_grid(P, P.default_nx);
    const HermiteState1D s = init_state(P, g);
    require_finite(s, n.c_str());  // throws on failure
    CHECK(s.ncomp() == P.system.ncomp);
  }
  for (const auto& n : problem_names_2d()) {
    const Problem2D P = make_problem_2d(n);
    // default grids can be large; an aligned fraction suffices for finiteness
    const Grid2D g = make_grid(P, P.default_nx / 4, P.default_ny / 4);
    const HermiteState2D s = init_state(P, g);
    require_finite(s, n.c_str());
    CHECK(s.ncomp() == P.system.ncomp);
  }
}

TEST_CASE("gas-dynamics initial states are admissible") {
  for (const auto& n : {"euler1d-smooth", "lax", "shu-osher", "blast"}) {
    const Problem1D P = make_problem_1d(n);
    const Grid1D g = make_grid(P, P.default_nx);
    const HermiteState1D s = init_state(P, g);
    double U[3];
    for (int i = 0; i < g.nx; ++i) {
      for (int c = 0; c < 3; ++c) U[c] = s.u[c](i);
      CHECK(euler_admissible(std::span<const double>(U, 3), P.system.gas));
    }
  }
  for (const auto& n : {"euler2d-smooth", "double-mach", "forward-step"}) {
    const Problem2D P = make_problem_2d(n);
    const Grid2D g = make_grid(P, P.default_nx / 4, P.default_ny / 4);
    const HermiteState2D s = init_state(P, g);
    double U[4];
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        for (int c = 0; c < 4; ++c) U[c] = s.u[c](i, j);
        CHECK(euler_admissible(std::span<const double>(U, 4), P.system.gas));
      }
  }
}

TEST_CASE("exact solutions reduce to the initial data at t = 0") {
  SUBCASE("1D") {
    for (const auto& n : {"burgers1d-smooth", "euler1d-smooth"}) {
      const Problem1D P = make_problem_1d(n);
      REQUIRE(P.exact);
      const int nc = P.system.ncomp;
      std::vector<double> u0(nc), v0(nc), ue(nc);
      for (int k = 0; k < 50; ++k) {
        const double x = P.x_min + (P.x_max - P.x_min) * (k + 0.5) / 50.0;
        P.init(x, u0, v0);
        P.exact(x, 0.0, ue);
        for (int c = 0; c < nc; ++c) CHECK(std::abs(ue[c] - u0[c]) < 1e-12);
      }
    }
  }
  SUBCASE("2D") {
    for (const auto& n : {"burgers2d-smooth", "euler2d-smooth"}) {
      const Problem2D P = make_problem_2d(n);
      REQUIRE(P.exact);
      const int nc = P.system.ncomp;
      std::vector<double> u0(nc), v0(nc), w0(nc), ue(nc);
      for (int k = 0; k < 50; ++k) {
        const double x = P.x_min + (P.x_max - P.x_min) * (k + 0.5) / 50.0;
        const double y = P.y_min + (P.y_max - P.y_min) * ((k * 7) % 50 + 0.5) / 50.0;
        P.init(x, y, u0, v0, w0);
        P.exact(x, y, 0.0, ue);
        for (int c = 0; c < nc; ++c) CHECK(std::abs(ue[c] - u0[c]) < 1e-12);
      }
    }
  }
}

TEST_CASE("implicit wave profile satisfies its defining equation") {
  for (const double t : {0.05, 0.15, 0.25}) {
    for (int k = 0; k < 40; ++k) {
      const double x = 2.0 * (k + 0.5) / 40.0;
      const double u = exact_profiles::burgers_wave_1d(x, t);
      CHECK(std::abs(u - 0.5 - std::sin(M_PI * (x - u * t))) < 1e-12);
      const double u2 = exact_profiles::burgers_wave_2d(x, x, t);
      CHECK(std::abs(u2 - 0.5 - std::sin(0.5 * M_PI * (2.0 * x - 2.0 * u2 * t))) <
            1e-12);
    }
  }
}

TEST_CASE("exact solutions satisfy their conservation law at t = 0") {
  const double dt = 1e-5;
  SUBCASE("scalar 1D: u_t = -u u_x") {
    const Problem1D P = make_problem_1d("burgers1d-smooth");
    std::vector<double> up(1), um(1);
    for (int k = 0; k < 25; ++k) {
      const double x = 2.0 * (k + 0.5) / 25.0;
      P.exact(x, dt, up);
      P.exact(x, -dt, um);
      const double ut = (up[0] - um[0]) / (2.0 * dt);
      const double u = 0.5 + std::sin(M_PI * x);
      const double ux = M_PI * std::cos(M_PI * x);
      CHECK(std::abs(ut + u * ux) < 1e-7);
    }
  }
  SUBCASE("gas 1D: rho_t = -rho_x (unit advection)") {
    const Problem1D P = make_problem_1d("euler1d-smooth");
    std::vector<double> up(3), um(3);
    for (int k = 0; k < 25; ++k) {
      const double x = 2.0 * (k + 0.5) / 25.0;
      P.exact(x, dt, up);
      P.exact(x, -dt, um);
      const double rt = (up[0] - um[0]) / (2.0 * dt);
      CHECK(std::abs(rt + 0.2 * M_PI * std::cos(M_PI * x)) < 1e-7);
    }
  }
  SUBCASE("gas 2D: rho_t = -(rho_x + rho_y)") {
    const Problem2D P = make_problem_2d("euler2d-smooth");
    std::vector<double> up(4), um(4);
    for (int k = 0; k < 25; ++k) {
      const double x = 2.0 * (k + 0.5) / 25.0;
      const double y = 2.0 * ((k * 11) % 25 + 0.5) / 25.0;
      P.exact(x, y, dt, up);
      P.exact(x, y, -dt, um);
      const double rt = (up[0] - um[0]) / (2.0 * dt);
      CHECK(std::abs(rt + 2.0 * 0.2 * M_PI * std::cos(M_PI * (x + y))) < 1e-7);
    }
  }
}

TEST_CASE("derivative initial data matches finite differences of the values") {
  const double h = 1e-6;
  for (const auto& n : {"burgers1d-smooth", "euler1d-smooth", "shu-osher"}) {
    const Problem1D P = make_problem_1d(n);
    const int nc = P.system.ncomp;
    std::vector<double> up(nc), um(nc), u0(nc), v0(nc), tmp(nc);
    for (int k = 0; k < 30; ++k) {
      // stay away from the shu-osher jump at x = -4
      const double x = P.x_min + (P.x_max - P.x_min) * (k + 0.5) / 30.0;
      if (std::abs(x - (-4.0)) < 0.2) continue;
      P.init(x, u0, v0);
      P.init(x + h, up, tmp);
      P.init(x - h, um, tmp);
      for (int c = 0; c < nc; ++c)
        CHECK(std::abs(v0[c] - (up[c] - um[c]) / (2.0 * h)) < 1e-5);
    }
  }
}

TEST_CASE("piecewise-constant problems start with zero derivative data") {
  for (const auto& n : {"lax", "blast", "buckley-leverett"}) {
    const Problem1D P = make_problem_1d(n);
    const Grid1D g = make_grid(P, P.default_nx);
    const HermiteState1D s = init_state(P, g);
    for (int c = 0; c < P.system.ncomp; ++c)
      for (int i = 0; i < g.nx; ++i) CHECK(s.v[c](i) == 0.0);
  }
}

TEST_CASE("nonconvex flux wave-speed bound covers the whole unit interval") {
  const Problem1D P = make_problem_1d("buckley-leverett");
  CHECK(P.system.alpha_fixed_x > 2.2);
  CHECK(P.system.alpha_fixed_x < 2.4);
  // the bound must dominate |f'(u)| sampled densely on [0, 1]
  for (int k = 0; k <= 1000; ++k) {
    const double u = k / 1000.0;
    CHECK(std::abs(P.system.df(u)) <= P.system.alpha_fixed_x);
  }
}

TEST_CASE("planar-shock problem: geometry and boundary states") {
  const Problem2D P = make_problem_2d("double-mach");
  const Grid2D g = make_grid(P, 96, 24);
  HermiteState2D s = init_state(P, g);

  // 60-degree incidence: the shock foot sits at x = 1/6 on the wall and
  // advances along the top edge at speed 20/sqrt(3)
  std::vector<double> ua(4), ub(4);
  P.init(0.1, 0.0, ua, ub, ub);
  CHECK(ua[0] == doctest::Approx(8.0));  // post-shock density
  P.init(3.5, 0.9, ua, ub, ub);
  CHECK(ua[0] == doctest::Approx(1.4));  // undisturbed gas

  // the moving-shock top boundary: ghosts switch state across the shock
  apply_boundary(s, g, P.bc, 0.15, 1, 2);
  const double xs = 1.0 / 6.0 + (1.0 + 20.0 * 0.15) / std::sqrt(3.0);
  int i_post = -1, i_pre = -1;
  for (int i = 0; i < g.nx; ++i) {
    if (g.x(i) < xs - 0.2) i_post = i;
    if (i_pre < 0 && g.x(i) > xs + 0.2) i_pre = i;
  }
  REQUIRE(i_post >= 0);
  REQUIRE(i_pre >= 0);
  CHECK(s.u[0](i_post, g.ny) == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(s.u[0](i_pre, g.ny) == doctest::Approx(1.4).epsilon(1e-12));

  // Mach-10 jump conditions for the inflow state (normal frame): mass and
  // momentum balance across the shock
  const double rho1 = 1.4, p1 = 1.0, c1 = 1.0, s_speed = 10.0 * c1;
  const double rho2 = 8.0, p2 = 116.5, un2 = 8.25;
  CHECK(rho1 * s_speed == doctest::Approx(rho2 * (s_speed - un2)).epsilon(1e-12));
  CHECK(p1 + rho1 * s_speed * s_speed ==
        doctest::Approx(p2 + rho2 * (s_speed - un2) * (s_speed - un2)).epsilon(1e-12));
}

TEST_CASE("wind-tunnel problem: step alignment and inflow") {
  const Problem2D P = make_problem_2d("forward-step");
  REQUIRE(P.step.has_value());
  CHECK(P.step->x_face == doctest::Approx(0.6));
  CHECK(P.step->y_face == doctest::Approx(0.2));

  const Grid2D g = make_grid(P, P.default_nx, P.default_ny);
  CHECK(P.step->i_face(g) * (3.0 / P.default_nx) == doctest::Approx(0.6));
  CHECK(P.step->j_face(g) * (1.0 / P.default_ny) == doctest::Approx(0.2));

  // misaligned resolution is rejected up front (64 * 0.6/3 is not integral)
  const Grid2D bad = Grid2D::make(0.0, 3.0, 0.0, 1.0, 64, 20);
  CHECK_THROWS_AS(P.step->i_face(bad), std::invalid_argument);

  // Mach-3 inflow everywhere initially
  std::vector<double> u(4), v(4), w(4);
  P.init(1.5, 0.5, u, v, w);
  CHECK(u[0] == doctest::Approx(1.4));
  CHECK(u[1] / u[0] == doctest::Approx(3.0));
  CHECK(u[2] == doctest::Approx(0.0));
}

TEST_CASE("constant-state left inflow for the shock-turbulence problem") {
  const Problem1D P = make_problem_1d("shu-osher");
  const Grid1D g = make_grid(P, 40);
  HermiteState1D s = init_state(P, g);
  apply_boundary(s, g, P.bc, 0.3, 1);
  // left ghosts hold the post-shock state rho = 27/7, u = 4 sqrt(35)/9, p = 31/3
  const double rho = 27.0 / 7.0, vel = 4.0 * std::sqrt(35.0) / 9.0, p = 31.0 / 3.0;
  for (int k = 1; k <= ghost_width; ++k) {
    CHECK(s.u[0](-k) == doctest::Approx(rho).epsilon(1e-12));
    CHECK(s.u[1](-k) == doctest::Approx(rho * vel).epsilon(1e-12));
    CHECK(s.u[2](-k) ==
          doctest::Approx(p / 0.4 + 0.5 * rho * vel * vel).epsilon(1e-12));
    CHECK(s.v[0](-k) == 0.0);
  }
}

TEST_CASE("three-zone blast setup") {
  const Problem1D P = make_problem_1d("blast");
  const Grid1D g = make_grid(P, 80);
  const HermiteState1D s = init_state(P, g);
  auto pressure_at = [&](double x) {
    const int i = static_cast<int>(x / g.dx);
    double U[3] = {s.u[0](i), s.u[1](i), s.u[2](i)};
    return euler_pressure(std::span<const double>(U, 3), P.system.gas);
  };
  CHECK(pressure_at(0.05) == doctest::Approx(1000.0));
  CHECK(pressure_at(0.50) == doctest::Approx(0.01));
  CHECK(pressure_at(0.95) == doctest::Approx(100.0));
}
