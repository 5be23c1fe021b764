// Random admissible states and small helpers shared by the test suites.

#ifndef BDG_TESTS_RANDOM_STATES_HPP
#define BDG_TESTS_RANDOM_STATES_HPP

#include <cstdlib>
#include <random>

#include "bdg/state.hpp"

namespace bdg::testing {

inline uint64_t seed_from_env(uint64_t fallback) {
  if (const char* s = std::getenv("BALANCEDG_SEED")) return std::strtoull(s, nullptr, 10);
  return fallback;
}

// Admissible state from positive primitives; covers several magnitudes.
template <int D>
Cons<D> random_admissible(std::mt19937_64& rng, const EosModel& eos) {
  std::uniform_real_distribution<double> mag(-3.0, 3.0);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Prim<D> w;
  w.rho = std::pow(10.0, mag(rng));
  w.pres = std::pow(10.0, mag(rng));
  const double c = eos.sound_speed(w.rho, w.pres);
  for (int i = 0; i < D; ++i) w.vel[i] = 3.0 * c * uni(rng);
  return prim_to_cons(w, eos);
}

// A state on or near the boundary of G (zero internal energy).
template <int D>
Cons<D> boundary_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(0.1, 10.0);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Cons<D> u;
  u.rho = pos(rng);
  double k = 0.0;
  for (int i = 0; i < D; ++i) {
    u.mom[i] = pos(rng) * uni(rng);
    k += u.mom[i] * u.mom[i];
  }
  u.ener = 0.5 * k / u.rho;  // G(U) = 0 exactly up to round-off
  return u;
}

template <int D>
std::array<double, D> random_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::array<double, D> n{};
  if constexpr (D == 1) {
    n[0] = uni(rng) >= 0.0 ? 1.0 : -1.0;
  } else {
    const double th = 3.14159265358979323846 * uni(rng);
    n[0] = std::cos(th);
    n[1] = std::sin(th);
  }
  return n;
}

}  // namespace bdg::testing

#endif
