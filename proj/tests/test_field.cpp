#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "bdg/field.hpp"
#include "bdg/quadrature.hpp"
#include "support/random_states.hpp"

using namespace bdg;
using doctest::Approx;

TEST_CASE("constant field evaluates to the constant anywhere") {
  const auto mesh = Mesh1D::uniform(0.0, 1.0, 4);
  Field1D u(mesh, 2, 3);
  for (int j = 0; j < 4; ++j) {
    u.coeff(j, 0, 0) = 1.5;
    u.coeff(j, 1, 0) = -0.25;
    u.coeff(j, 2, 0) = 3.0;
  }
  const auto v = u.evaluate(2, 0.55);
  CHECK(v.rho == 1.5);
  CHECK(v.mom[0] == -0.25);
  CHECK(v.ener == 3.0);
  CHECK_THROWS_AS(u.evaluate(0, 0.9), DomainError);
}

TEST_CASE("k=1 field reproduces rho(x) = x exactly") {
  const auto mesh = Mesh1D::uniform(0.0, 1.0, 1);
  auto u = l2_project([](double x, double* o) { o[0] = x; o[1] = 0.0; o[2] = 1.0; },
                      mesh, 1, 3);
  CHECK(u.evaluate(0, 0.25).rho == Approx(0.25).epsilon(1e-14));
  CHECK(u.evaluate(0, 1.0).rho == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("projection of sin: center value matches a dense independent expansion") {
  const auto mesh = Mesh1D::uniform(0.0, 1.0, 1);
  auto u = l2_project(
      [](double x, double* o) { o[0] = std::sin(x); o[1] = 0.0; o[2] = 1.0; }, mesh, 2, 3);
  // independent oracle: coefficients from a very dense quadrature
  const Basis1D b(2);
  const auto& q = gauss_rule(30);
  double c[3] = {0, 0, 0};
  for (size_t p = 0; p < q.nodes.size(); ++p) {
    const double x = 0.5 + 0.5 * q.nodes[p];
    for (int m = 0; m < 3; ++m) c[m] += q.weights[p] * std::sin(x) * b.value(m, q.nodes[p]);
  }
  double dense = 0.0;
  for (int m = 0; m < 3; ++m) dense += c[m] * b.value(m, 0.0);
  CHECK(u.evaluate(0, 0.5).rho == Approx(dense).epsilon(1e-10));
}

TEST_CASE("projection reproduces polynomials of degree <= k; zero stays zero") {
  const auto mesh = Mesh1D::uniform(-1.0, 2.0, 5);
  auto u = l2_project(
      [](double x, double* o) {
        o[0] = 1.0 + x - 0.5 * x * x;
        o[1] = x * x;
        o[2] = 2.0 - x + x * x;
      },
      mesh, 2, 3);
  std::mt19937_64 rng(bdg::testing::seed_from_env(7301));
  std::uniform_real_distribution<double> pick(-1.0, 2.0);
  for (int t = 0; t < 200; ++t) {
    const double x = pick(rng);
    int j = 0;
    while (j + 1 < 5 && x > mesh.edges[j + 1]) ++j;
    const auto v = u.evaluate(j, x);
    CHECK(v.rho == Approx(1.0 + x - 0.5 * x * x).epsilon(1e-13).scale(1.0));
    CHECK(v.mom[0] == Approx(x * x).epsilon(1e-13).scale(1.0));
    CHECK(v.ener == Approx(2.0 - x + x * x).epsilon(1e-13).scale(1.0));
  }

  auto z = l2_project([](double, double* o) { o[0] = o[1] = o[2] = 0.0; }, mesh, 2, 3);
  for (double d : z.data) CHECK(d == 0.0);
}

TEST_CASE("cell average: exp profile matches the quadrature mean") {
  const auto mesh = Mesh1D::uniform(0.0, 1.0, 1);
  auto u = l2_project(
      [](double x, double* o) { o[0] = std::exp(-x); o[1] = 0.0; o[2] = 1.0; }, mesh, 2, 3);
  const auto& q = gauss_rule(5);  // independent 5-point oracle
  double mean = 0.0;
  for (size_t p = 0; p < q.nodes.size(); ++p)
    mean += q.weights[p] * std::exp(-(0.5 + 0.5 * q.nodes[p]));
  CHECK(u.cell_average(0).rho == Approx(mean).epsilon(1e-9));
}

TEST_CASE("random k=2 field: average equals the 5-point Gauss oracle") {
  const auto mesh = Mesh1D::uniform(0.0, 2.0, 3);
  Field1D u(mesh, 2, 3);
  std::mt19937_64 rng(bdg::testing::seed_from_env(7302));
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (auto& d : u.data) d = coef(rng);
  const auto& q = gauss_rule(5);
  for (int j = 0; j < 3; ++j) {
    for (int comp = 0; comp < 3; ++comp) {
      double mean = 0.0;
      for (size_t p = 0; p < q.nodes.size(); ++p)
        mean += q.weights[p] * u.evaluate_ref(j, q.nodes[p])[comp];
      CHECK(u.cell_average(j)[comp] == Approx(mean).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("interface traces") {
  const auto mesh = Mesh1D::uniform(0.0, 1.0, 2);
  // piecewise constants (1,0,2.5) | (2,0,2.5)
  Field1D u(mesh, 2, 3);
  u.coeff(0, 0, 0) = 1.0;
  u.coeff(0, 2, 0) = 2.5;
  u.coeff(1, 0, 0) = 2.0;
  u.coeff(1, 2, 0) = 2.5;
  const auto t = interface_traces(u);
  CHECK(t.l(1, 0) == 1.0);
  CHECK(t.r(1, 0) == 2.0);
  CHECK(t.l(1, 2) == 2.5);
  CHECK(t.r(1, 2) == 2.5);

  // continuous representable field: traces agree at the interior interface
  auto v = l2_project(
      [](double x, double* o) { o[0] = 1.0 + x * x; o[1] = x; o[2] = 2.0; }, mesh, 2, 3);
  const auto tv = interface_traces(v);
  for (int c = 0; c < 3; ++c) CHECK(tv.l(1, c) == Approx(tv.r(1, c)).epsilon(1e-13));

  // trace equals endpoint evaluation
  CHECK(tv.l(1, 0) == Approx(v.evaluate(0, 0.5).rho).epsilon(1e-14));
}

TEST_CASE("projection idempotence: reprojecting a DG field returns identical coefficients") {
  const auto mesh = Mesh1D::uniform(0.0, 1.0, 4);
  Field1D u(mesh, 2, 3);
  std::mt19937_64 rng(bdg::testing::seed_from_env(7303));
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (auto& d : u.data) d = coef(rng);
  auto v = l2_project(
      [&](double x, double* o) {
        int j = 0;
        while (j + 1 < 4 && x > mesh.edges[j + 1]) ++j;
        const auto s = u.evaluate(j, x);
        o[0] = s.rho;
        o[1] = s.mom[0];
        o[2] = s.ener;
      },
      mesh, 2, 3);
  for (size_t i = 0; i < u.data.size(); ++i)
    CHECK(v.data[i] == Approx(u.data[i]).epsilon(1e-13).scale(1.0));
}

TEST_CASE("2d field: projection reproduces P^k and averages match mode 0") {
  const auto mesh = Mesh2D::uniform(0.0, 1.0, 3, 0.0, 2.0, 2);
  auto u = l2_project(
      [](double x, double y, double* o) {
        o[0] = 1.0 + x * y;
        o[1] = x - y;
        o[2] = y * y;
        o[3] = 2.0 + x * x - x * y;
      },
      mesh, 2, 4);
  std::mt19937_64 rng(bdg::testing::seed_from_env(7304));
  std::uniform_real_distribution<double> px(0.0, 1.0), py(0.0, 2.0);
  for (int t = 0; t < 100; ++t) {
    const double x = px(rng), y = py(rng);
    int i = 0;
    while (i + 1 < 3 && x > mesh.x_edges[i + 1]) ++i;
    int l = 0;
    while (l + 1 < 2 && y > mesh.y_edges[l + 1]) ++l;
    const auto v = u.evaluate(i, l, x, y);
    CHECK(v.rho == Approx(1.0 + x * y).epsilon(1e-13).scale(1.0));
    CHECK(v.mom[0] == Approx(x - y).epsilon(1e-13).scale(1.0));
    CHECK(v.mom[1] == Approx(y * y).epsilon(1e-13).scale(1.0));
    CHECK(v.ener == Approx(2.0 + x * x - x * y).epsilon(1e-13).scale(1.0));
  }
  // cell average of rho over cell (0,0): integral of 1 + xy
  const double ax = mesh.x_edges[1], ay = mesh.y_edges[1];
  const double exact = 1.0 + (ax / 2.0) * (ay / 2.0);
  CHECK(u.cell_average(0).rho == Approx(exact).epsilon(1e-13));
}
