#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "bdg/state.hpp"
#include "support/random_states.hpp"

using namespace bdg;
using doctest::Approx;

TEST_CASE("internal energy functional") {
  CHECK(internal_energy_functional(Cons1{1.0, {0.0}, 2.5}) == 2.5);
  CHECK(internal_energy_functional(Cons1{2.0, {2.0}, 1.0}) == 0.0);
  // E - m^2/(2 rho) = 3.85 - 49/14
  CHECK(internal_energy_functional(Cons1{7.0, {-7.0}, 3.85}) == Approx(0.35).epsilon(1e-14));
  CHECK_THROWS_AS(internal_energy_functional(Cons1{0.0, {1.0}, 1.0}), DomainError);
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(Cons1{1.0, {0.0}, 2.5}).admissible);
  // G = 0 exactly sits on the boundary: inadmissible by strictness
  CHECK_FALSE(is_admissible(Cons1{1.0, {1.0}, 0.5}).admissible);
  CHECK_FALSE(is_admissible(Cons1{-1.0, {0.0}, 1.0}).admissible);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_FALSE(is_admissible(Cons1{nan, {0.0}, 1.0}).admissible);
  CHECK_FALSE(is_admissible(Cons1{1.0, {nan}, 1.0}).admissible);
}

TEST_CASE("cons_to_prim, ideal gas") {
  const auto g14 = EosModel::ideal(1.4);
  auto w = cons_to_prim(Cons1{1.0, {0.0}, 2.5}, g14);
  CHECK(w.pres == Approx(1.0).epsilon(1e-14));
  CHECK(w.vel[0] == 0.0);

  const auto g53 = EosModel::ideal(5.0 / 3.0);
  w = cons_to_prim(Cons1{1.0, {1.0}, 1.0}, g53);
  CHECK(w.pres == Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(w.vel[0] == Approx(1.0));

  const auto g2 = EosModel::ideal(2.0);
  w = cons_to_prim(Cons1{2.0, {0.0}, 2.0}, g2);
  CHECK(w.pres == Approx(2.0).epsilon(1e-14));

  CHECK_THROWS_AS(cons_to_prim(Cons1{1.0, {2.0}, 1.0}, g14), DomainError);
}

TEST_CASE("prim_to_cons, ideal gas") {
  const auto g14 = EosModel::ideal(1.4);
  auto u = prim_to_cons(Prim1{1.0, {0.0}, 1.0}, g14);
  CHECK(u.ener == Approx(2.5).epsilon(1e-14));
  u = prim_to_cons(Prim1{0.125, {0.0}, 0.1}, g14);
  CHECK(u.ener == Approx(0.25).epsilon(1e-14));

  const auto g53 = EosModel::ideal(5.0 / 3.0);
  auto u2 = prim_to_cons(Prim2{1.0, {1.0, 1.0}, 4.5}, g53);
  CHECK(u2.ener == Approx(7.75).epsilon(1e-14));

  CHECK_THROWS_AS(prim_to_cons(Prim1{-1.0, {0.0}, 1.0}, g14), DomainError);
  CHECK_THROWS_AS(prim_to_cons(Prim1{1.0, {0.0}, 0.0}, g14), DomainError);
}

TEST_CASE("round trip cons -> prim -> cons, both EOS kinds") {
  std::mt19937_64 rng(bdg::testing::seed_from_env(7001));
  const auto ideal = EosModel::ideal(1.4);
  const auto stiff = EosModel::stiffened(2.1, 3.0);
  for (int t = 0; t < 2000; ++t) {
    const auto u = bdg::testing::random_admissible<1>(rng, ideal);
    const auto v = prim_to_cons(cons_to_prim(u, ideal), ideal);
    CHECK(v.rho == Approx(u.rho).epsilon(1e-12));
    CHECK(v.mom[0] == Approx(u.mom[0]).epsilon(1e-12));
    CHECK(v.ener == Approx(u.ener).epsilon(1e-12));
  }
  for (int t = 0; t < 500; ++t) {
    const auto u = bdg::testing::random_admissible<2>(rng, stiff);
    const auto v = prim_to_cons(cons_to_prim(u, stiff), stiff);
    CHECK(v.rho == Approx(u.rho).epsilon(1e-12));
    CHECK(v.ener == Approx(u.ener).epsilon(1e-12));
  }
}

TEST_CASE("stiffened-gas pressure recovery matches the closed form") {
  const double gamma = 1.9, pinf = 2.5;
  const auto eos = EosModel::stiffened(gamma, pinf);
  std::mt19937_64 rng(bdg::testing::seed_from_env(7002));
  std::uniform_real_distribution<double> pos(0.1, 10.0);
  for (int t = 0; t < 200; ++t) {
    const double rho = pos(rng), p = pos(rng);
    const double rhoe = rho * (p + gamma * pinf) / ((gamma - 1.0) * rho);
    CHECK(eos.pressure(rho, rhoe) == Approx(p).epsilon(1e-11));
  }
  // no positive-pressure root when the target sits below rho*E(rho,0)
  CHECK_THROWS_AS(eos.pressure(1.0, 1e-6), NumericError);
}

TEST_CASE("physical flux") {
  const auto g14 = EosModel::ideal(1.4);
  auto f = physical_flux(Cons1{1.0, {0.0}, 2.5}, g14);
  CHECK(f.rho == 0.0);
  CHECK(f.mom[0] == Approx(1.0).epsilon(1e-14));
  CHECK(f.ener == 0.0);

  // p = 0.8, u = 1: (1, 1*1+0.8, (2.5+0.8)*1)
  f = physical_flux(Cons1{1.0, {1.0}, 2.5}, g14);
  CHECK(f.rho == Approx(1.0));
  CHECK(f.mom[0] == Approx(1.8).epsilon(1e-14));
  CHECK(f.ener == Approx(3.3).epsilon(1e-14));

  auto f2 = physical_flux(Cons2{1.0, {0.0, 0.0}, 2.5}, g14, {0.0, 1.0});
  CHECK(f2.rho == 0.0);
  CHECK(f2.mom[0] == 0.0);
  CHECK(f2.mom[1] == Approx(1.0).epsilon(1e-14));
  CHECK(f2.ener == 0.0);

  CHECK_THROWS_AS(physical_flux(Cons1{1.0, {3.0}, 1.0}, g14), DomainError);
}

TEST_CASE("flux homogeneity F(aU) = a F(U) for ideal EOS") {
  std::mt19937_64 rng(bdg::testing::seed_from_env(7003));
  const auto eos = EosModel::ideal(1.4);
  for (int t = 0; t < 1000; ++t) {
    const auto u = bdg::testing::random_admissible<2>(rng, eos);
    const auto n = bdg::testing::random_unit<2>(rng);
    std::uniform_real_distribution<double> amp(0.01, 100.0);
    const double a = amp(rng);
    const auto f = physical_flux(u, eos, n);
    const auto fa = physical_flux(a * u, eos, n);
    for (int c = 0; c < 4; ++c)
      CHECK(fa[c] == Approx(a * f[c]).epsilon(1e-12).scale(std::abs(f[c]) + 1e-30));
  }
}

TEST_CASE("alpha_max and alpha_n") {
  const auto g14 = EosModel::ideal(1.4);
  CHECK(alpha_max(Cons1{1.0, {0.0}, 2.5}, g14) == Approx(std::sqrt(1.4)).epsilon(1e-12));
  // (1,1,3): u=1, p = 0.4*(3-0.5) = 1
  CHECK(alpha_max(Cons1{1.0, {1.0}, 3.0}, g14) == Approx(1.0 + std::sqrt(1.4)).epsilon(1e-12));

  // orthogonal velocity contributes nothing to alpha_n
  const auto u2 = prim_to_cons(Prim2{1.0, {3.0, 0.0}, 1.0}, g14);
  CHECK(alpha_n(u2, g14, {0.0, 1.0}) == Approx(std::sqrt(1.4)).epsilon(1e-12));

  const auto u3 = prim_to_cons(Prim2{1.0, {1.0, 1.0}, 1.0}, g14);
  CHECK(alpha_n(u3, g14, {1.0, 0.0}) == Approx(1.0 + std::sqrt(1.4)).epsilon(1e-12));

  // 1D embedding: alpha_n with n = +1 equals alpha_max for u >= 0
  const auto u1 = prim_to_cons(Prim1{2.0, {0.7}, 0.9}, g14);
  CHECK(alpha_n(u1, g14, {1.0}) == Approx(alpha_max(u1, g14)).epsilon(1e-14));

  // scale invariance of wave speeds (ideal EOS)
  std::mt19937_64 rng(bdg::testing::seed_from_env(7004));
  for (int t = 0; t < 500; ++t) {
    const auto u = bdg::testing::random_admissible<1>(rng, g14);
    std::uniform_real_distribution<double> amp(0.01, 100.0);
    const double z = amp(rng);
    CHECK(alpha_max(z * u, g14) == Approx(alpha_max(u, g14)).epsilon(1e-12));
  }
}
