#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "bdg/hllc.hpp"
#include "support/oracle_hllc.hpp"
#include "support/random_states.hpp"

using namespace bdg;
using doctest::Approx;

namespace {
const EosModel g14 = EosModel::ideal(1.4);

double rel(double a, double b) {
  const double s = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / s;
}
}  // namespace

TEST_CASE("consistency: hllc(U,U) = F(U), static state") {
  const Cons1 u{1.0, {0.0}, 2.5};
  const auto f = hllc_flux_1d(u, u, g14);
  CHECK(f.rho == Approx(0.0).scale(1.0).epsilon(1e-14));
  CHECK(f.mom[0] == Approx(1.0).epsilon(1e-14));
  CHECK(f.ener == Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("contact property: static equal-pressure pair gives a pure pressure flux") {
  const Cons1 ul{2.0, {0.0}, 2.5}, ur{1.0, {0.0}, 2.5};
  const auto f = hllc_flux_1d(ul, ur, g14);
  CHECK(std::abs(f.rho) < 1e-14);
  CHECK(f.mom[0] == Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(f.ener) < 1e-14);
}

TEST_CASE("sod pair matches the independent transcription oracle") {
  const Cons1 ul{1.0, {0.0}, 2.5}, ur{0.125, {0.0}, 0.25};
  const auto f = hllc_flux_1d(ul, ur, g14);
  const auto o = bdg::testing::oracle_hllc_1d({1.0, 0.0, 2.5}, {0.125, 0.0, 0.25}, 1.4);
  CHECK(rel(f.rho, o[0]) < 1e-13);
  CHECK(rel(f.mom[0], o[1]) < 1e-13);
  CHECK(rel(f.ener, o[2]) < 1e-13);
}

TEST_CASE("randomized sweep against the oracle") {
  std::mt19937_64 rng(bdg::testing::seed_from_env(7201));
  for (int t = 0; t < 20000; ++t) {
    const auto ul = bdg::testing::random_admissible<1>(rng, g14);
    const auto ur = bdg::testing::random_admissible<1>(rng, g14);
    const auto f = hllc_flux_1d(ul, ur, g14);
    const auto o = bdg::testing::oracle_hllc_1d({ul.rho, ul.mom[0], ul.ener},
                                                {ur.rho, ur.mom[0], ur.ener}, 1.4);
    // the natural backward-error scale: flux size plus signal speed times
    // state size (S - S* cancellation amplifies rounding near degeneracies)
    const auto ws = hllc_wave_speeds_1d(ul, ur, g14);
    const double smax = std::max(std::abs(ws.s_left), std::abs(ws.s_right));
    for (int c = 0; c < 3; ++c) {
      const double scale =
          std::abs(o[c]) + smax * (std::abs(ul[c]) + std::abs(ur[c])) + 1e-12;
      CHECK(std::abs(f[c] - o[c]) <= 1e-11 * scale);
    }
  }
}

TEST_CASE("wave speed ordering and intermediates admissible (Lemma on U_*)") {
  std::mt19937_64 rng(bdg::testing::seed_from_env(7202));
  for (int t = 0; t < 100000; ++t) {
    const auto ul = bdg::testing::random_admissible<1>(rng, g14);
    const auto ur = bdg::testing::random_admissible<1>(rng, g14);
    const auto ws = hllc_wave_speeds_1d(ul, ur, g14);
    REQUIRE(ws.s_left <= ws.s_star);
    REQUIRE(ws.s_star <= ws.s_right);
    const auto im = hllc_intermediates_1d(ul, ur, g14);
    REQUIRE(is_admissible(im.u_star_left).admissible);
    REQUIRE(is_admissible(im.u_star_right).admissible);
  }
}

TEST_CASE("inadmissible inputs are rejected") {
  CHECK_THROWS_AS(hllc_flux_1d(Cons1{-1.0, {0.0}, 1.0}, Cons1{1.0, {0.0}, 1.0}, g14),
                  DomainError);
  CHECK_THROWS_AS(hllc_flux_1d(Cons1{1.0, {0.0}, 1.0}, Cons1{1.0, {3.0}, 1.0}, g14),
                  DomainError);
}

TEST_CASE("2d flux: equal states, n=(1,0) reduces to F(U).n") {
  const Cons2 u = prim_to_cons(Prim2{1.3, {0.4, -0.2}, 0.9}, g14);
  const auto f = hllc_flux_2d(u, u, {1.0, 0.0}, g14);
  const auto fx = physical_flux(u, g14, {1.0, 0.0});
  for (int c = 0; c < 4; ++c) CHECK(f[c] == Approx(fx[c]).epsilon(1e-13).scale(1.0));
}

TEST_CASE("2d contact property (Lemma 4.1 statement)") {
  const Cons2 ul{2.0, {0.0, 0.0}, 2.5}, ur{1.0, {0.0, 0.0}, 2.5};
  const auto f = hllc_flux_2d(ul, ur, {0.0, 1.0}, g14);
  CHECK(std::abs(f.rho) < 1e-14);
  CHECK(std::abs(f.mom[0]) < 1e-14);
  CHECK(f.mom[1] == Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(f.ener) < 1e-14);
}

TEST_CASE("2d n=(0,1) equals 1d on swapped components with passive tangential momentum") {
  std::mt19937_64 rng(bdg::testing::seed_from_env(7203));
  for (int t = 0; t < 5000; ++t) {
    const auto al = bdg::testing::random_admissible<2>(rng, g14);
    const auto ar = bdg::testing::random_admissible<2>(rng, g14);
    const auto f = hllc_flux_2d(al, ar, {0.0, 1.0}, g14);
    // swap (mx,my): the y-direction problem is the x-direction one of the
    // swapped states
    const Cons2 bl{al.rho, {al.mom[1], al.mom[0]}, al.ener};
    const Cons2 br{ar.rho, {ar.mom[1], ar.mom[0]}, ar.ener};
    const auto g = hllc_flux_2d(bl, br, {1.0, 0.0}, g14);
    const double scale = std::max({std::abs(f.rho), std::abs(f.mom[0]),
                                   std::abs(f.mom[1]), std::abs(f.ener), 1e-12});
    CHECK(std::abs(f.rho - g.rho) <= 1e-12 * scale);
    CHECK(std::abs(f.mom[0] - g.mom[1]) <= 1e-12 * scale);
    CHECK(std::abs(f.mom[1] - g.mom[0]) <= 1e-12 * scale);
    CHECK(std::abs(f.ener - g.ener) <= 1e-12 * scale);
  }
}

TEST_CASE("wb flux: unit scalings reduce to plain hllc") {
  std::mt19937_64 rng(bdg::testing::seed_from_env(7204));
  for (int t = 0; t < 1000; ++t) {
    const auto um = bdg::testing::random_admissible<1>(rng, g14);
    const auto up = bdg::testing::random_admissible<1>(rng, g14);
    EquilibriumFace eq;
    eq.pe_minus = eq.pe_plus = eq.pe_star = 0.7;
    const auto f = wb_hllc_1d(um, up, eq, g14);
    const auto g = hllc_flux_1d(um, up, g14);
    for (int c = 0; c < 3; ++c) CHECK(f[c] == Approx(g[c]).epsilon(1e-13).scale(1e-12));
  }
}

TEST_CASE("wb flux equals hllc of the scaled states (substitution oracle)") {
  std::mt19937_64 rng(bdg::testing::seed_from_env(7205));
  for (int t = 0; t < 1000; ++t) {
    const auto um = bdg::testing::random_admissible<1>(rng, g14);
    const auto up = bdg::testing::random_admissible<1>(rng, g14);
    EquilibriumFace eq;
    eq.pe_minus = 1.0;
    eq.pe_plus = 4.0;
    eq.pe_star = 2.0;  // scalings 2 and 0.5
    const auto f = wb_hllc_1d(um, up, eq, g14);
    const auto g = hllc_flux_1d(2.0 * um, 0.5 * up, g14);
    for (int c = 0; c < 3; ++c) CHECK(f[c] == g[c]);
  }
}

TEST_CASE("wb flux at an equilibrium interface returns (0, p*, 0)") {
  // traces from a smooth equilibrium profile: rho and p differ across the
  // interface, velocity zero, E = p/(gamma-1)
  const double pm = 0.83, pp = 0.85, rm = 1.1, rp = 1.08;
  EquilibriumFace eq;
  eq.pe_minus = pm;
  eq.pe_plus = pp;
  eq.pe_star = 0.5 * (pm + pp);
  const Cons1 um{rm, {0.0}, pm / 0.4};
  const Cons1 up{rp, {0.0}, pp / 0.4};
  const auto f = wb_hllc_1d(um, up, eq, g14);
  CHECK(std::abs(f.rho) < 1e-14);
  CHECK(f.mom[0] == Approx(eq.pe_star).epsilon(1e-14));
  CHECK(std::abs(f.ener) < 1e-14);
}

TEST_CASE("wb flux, 2d equilibrium edge point") {
  const double pm = 0.83, pp = 0.85, rm = 1.1, rp = 1.08;
  EquilibriumFace eq;
  eq.pe_minus = pm;
  eq.pe_plus = pp;
  eq.pe_star = 0.5 * (pm + pp);
  const Cons2 um{rm, {0.0, 0.0}, pm / 0.4};
  const Cons2 up{rp, {0.0, 0.0}, pp / 0.4};
  const double s = 1.0 / std::sqrt(2.0);
  const auto f = wb_hllc_2d(um, up, eq, {s, s}, g14);
  CHECK(std::abs(f.rho) < 1e-14);
  CHECK(f.mom[0] == Approx(eq.pe_star * s).epsilon(1e-13));
  CHECK(f.mom[1] == Approx(eq.pe_star * s).epsilon(1e-13));
  CHECK(std::abs(f.ener) < 1e-14);
}

TEST_CASE("general-EOS contact property and wb balance (stiffened gas)") {
  const auto eos = EosModel::stiffened(1.6, 2.0);
  // equal pressure, zero velocity: E = rho E(rho, p)
  const double p = 1.3, rl = 2.0, rr = 0.7;
  const Cons1 ul{rl, {0.0}, rl * eos.internal_energy(rl, p)};
  const Cons1 ur{rr, {0.0}, rr * eos.internal_energy(rr, p)};
  const auto f = hllc_flux_1d(ul, ur, eos);
  CHECK(std::abs(f.rho) < 1e-13);
  CHECK(f.mom[0] == Approx(p).epsilon(1e-12));
  CHECK(std::abs(f.ener) < 1e-13);

  // wb variant with energy-ratio scalings at an equilibrium interface
  const double pm = 0.83, pp = 0.87, rm = 1.1, rp = 1.05;
  EquilibriumFace eq;
  eq.pe_minus = pm;
  eq.pe_plus = pp;
  eq.pe_star = 0.5 * (pm + pp);
  eq.rho_e_minus = rm;
  eq.rho_e_plus = rp;
  eq.e_e_minus = eos.internal_energy(rm, pm);
  eq.e_e_plus = eos.internal_energy(rp, pp);
  const Cons1 um{rm, {0.0}, rm * eq.e_e_minus};
  const Cons1 up{rp, {0.0}, rp * eq.e_e_plus};
  const auto g = wb_hllc_1d(um, up, eq, eos);
  CHECK(std::abs(g.rho) < 1e-13);
  CHECK(g.mom[0] == Approx(eq.pe_star).epsilon(1e-12));
  CHECK(std::abs(g.ener) < 1e-13);
}

TEST_CASE("modified LF flux") {
  // equal states and equal rho_e: consistency
  const Cons1 u = prim_to_cons(Prim1{1.2, {0.3}, 0.8}, g14);
  const double a = alpha_max(u, g14);
  auto f = modified_lf_flux_1d(u, u, 1.0, 1.0, 1.0, a, g14);
  const auto fu = physical_flux(u, g14);
  for (int c = 0; c < 3; ++c) CHECK(f[c] == Approx(fu[c]).epsilon(1e-14).scale(1.0));

  // direct transcription oracle on a random pair
  std::mt19937_64 rng(bdg::testing::seed_from_env(7206));
  for (int t = 0; t < 1000; ++t) {
    const auto um = bdg::testing::random_admissible<1>(rng, g14);
    const auto up = bdg::testing::random_admissible<1>(rng, g14);
    const double rem = 0.9, rep = 1.1, remax = 1.2;
    const double lf = 2.0 * std::max(alpha_max(um, g14), alpha_max(up, g14));
    const auto got = modified_lf_flux_1d(um, up, rem, rep, remax, lf, g14);
    const auto fm = physical_flux(um, g14);
    const auto fp = physical_flux(up, g14);
    for (int c = 0; c < 3; ++c) {
      const double want = 0.5 * (fm[c] + fp[c] - lf * remax * (up[c] / rep - um[c] / rem));
      CHECK(got[c] == Approx(want).epsilon(1e-13).scale(1e-12));
    }
  }

  // viscosity below the admissible bound violates the contract
  CHECK_THROWS_AS(modified_lf_flux_1d(u, u, 1.0, 1.0, 1.0, 0.5 * a, g14), DomainError);

  // isothermal equilibrium traces: U/rho_e continuous across the interface,
  // so the viscosity term vanishes and the flux is the pressure average
  const double rt = 0.5;  // p = rt * rho
  const double rm = 1.3, rp = 1.25;
  const Cons1 em{rm, {0.0}, rt * rm / 0.4};
  const Cons1 ep{rp, {0.0}, rt * rp / 0.4};
  f = modified_lf_flux_1d(em, ep, rm, rp, std::max(rm, rp),
                          std::max(alpha_max(em, g14), alpha_max(ep, g14)), g14);
  CHECK(std::abs(f.rho) < 1e-14);
  CHECK(f.mom[0] == Approx(0.5 * (rt * rm + rt * rp)).epsilon(1e-14));
  CHECK(std::abs(f.ener) < 1e-14);
}
