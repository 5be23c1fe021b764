// Conserved/primitive states for the d-dimensional compressible Euler
// equations (d = 1, 2), admissibility predicates, physical fluxes and
// wave-speed functions.

#ifndef BDG_STATE_HPP
#define BDG_STATE_HPP

#include <array>
#include <cmath>
#include <limits>

#include "bdg/eos.hpp"
#include "bdg/errors.hpp"

namespace bdg {

// fixed-size vector tied to the spatial dimension; the cast keeps D
// non-deduced so callers deduce D from the state argument alone
template <int D>
using Vec = std::array<double, static_cast<std::size_t>(D)>;

template <int D>
struct Cons {
  double rho = 0.0;
  std::array<double, D> mom{};
  double ener = 0.0;

  static constexpr int ncomp = D + 2;
  double operator[](int c) const {
    if (c == 0) return rho;
    if (c == D + 1) return ener;
    return mom[c - 1];
  }
  double& operator[](int c) {
    if (c == 0) return rho;
    if (c == D + 1) return ener;
    return mom[c - 1];
  }
};

template <int D>
struct Prim {
  double rho = 0.0;
  std::array<double, D> vel{};
  double pres = 0.0;
};

using Cons1 = Cons<1>;
using Cons2 = Cons<2>;
using Prim1 = Prim<1>;
using Prim2 = Prim<2>;

struct AdmissibilityReport {
  bool rho_ok = false;
  double g_value = 0.0;
  bool admissible = false;
};

template <int D>
inline Cons<D> operator+(Cons<D> a, const Cons<D>& b) {
  a.rho += b.rho;
  for (int i = 0; i < D; ++i) a.mom[i] += b.mom[i];
  a.ener += b.ener;
  return a;
}

template <int D>
inline Cons<D> operator-(Cons<D> a, const Cons<D>& b) {
  a.rho -= b.rho;
  for (int i = 0; i < D; ++i) a.mom[i] -= b.mom[i];
  a.ener -= b.ener;
  return a;
}

template <int D>
inline Cons<D> operator*(double s, Cons<D> a) {
  a.rho *= s;
  for (int i = 0; i < D; ++i) a.mom[i] *= s;
  a.ener *= s;
  return a;
}

template <int D>
inline double mom_norm2(const Cons<D>& u) {
  double s = 0.0;
  for (int i = 0; i < D; ++i) s += u.mom[i] * u.mom[i];
  return s;
}

// G(U) = E - ||m||^2 / (2 rho); concave on {rho >= 0}.
template <int D>
inline double internal_energy_functional(const Cons<D>& u) {
  if (u.rho == 0.0) throw DomainError("internal_energy_functional: rho = 0");
  return u.ener - 0.5 * mom_norm2(u) / u.rho;
}

// Admissible set G: rho > 0 and G(U) > 0, both strict. NaNs report
// inadmissible.
template <int D>
inline AdmissibilityReport is_admissible(const Cons<D>& u) {
  AdmissibilityReport r;
  r.rho_ok = u.rho > 0.0;
  r.g_value = r.rho_ok ? u.ener - 0.5 * mom_norm2(u) / u.rho
                       : std::numeric_limits<double>::quiet_NaN();
  r.admissible = r.rho_ok && r.g_value > 0.0;
  return r;
}

template <int D>
inline Prim<D> cons_to_prim(const Cons<D>& u, const EosModel& eos) {
  const auto rep = is_admissible(u);
  if (!rep.admissible) throw DomainError("cons_to_prim: inadmissible state");
  Prim<D> w;
  w.rho = u.rho;
  for (int i = 0; i < D; ++i) w.vel[i] = u.mom[i] / u.rho;
  w.pres = eos.pressure(u.rho, rep.g_value);
  return w;
}

template <int D>
inline Cons<D> prim_to_cons(const Prim<D>& w, const EosModel& eos) {
  if (!(w.rho > 0.0) || !(w.pres > 0.0))
    throw DomainError("prim_to_cons: requires rho > 0 and p > 0");
  Cons<D> u;
  u.rho = w.rho;
  double v2 = 0.0;
  for (int i = 0; i < D; ++i) {
    u.mom[i] = w.rho * w.vel[i];
    v2 += w.vel[i] * w.vel[i];
  }
  u.ener = 0.5 * w.rho * v2 + w.rho * eos.internal_energy(w.rho, w.pres);
  return u;
}

// F(U).n from primitive values; no admissibility check (callers that need
// the contract check use physical_flux).
template <int D>
inline Cons<D> flux_from_prim(const Cons<D>& u, const Prim<D>& w,
                              const Vec<D>& n) {
  double un = 0.0;
  for (int i = 0; i < D; ++i) un += w.vel[i] * n[i];
  Cons<D> f;
  f.rho = u.rho * un;
  for (int i = 0; i < D; ++i) f.mom[i] = u.mom[i] * un + w.pres * n[i];
  f.ener = (u.ener + w.pres) * un;
  return f;
}

template <int D>
inline Cons<D> physical_flux(const Cons<D>& u, const EosModel& eos,
                             const Vec<D>& n) {
  return flux_from_prim(u, cons_to_prim(u, eos), n);
}

inline Cons1 physical_flux(const Cons1& u, const EosModel& eos) {
  return physical_flux(u, eos, {1.0});
}

// |u| + c (general EOS: |u| + chat)
template <int D>
inline double alpha_max(const Cons<D>& u, const EosModel& eos) {
  const Prim<D> w = cons_to_prim(u, eos);
  double v2 = 0.0;
  for (int i = 0; i < D; ++i) v2 += w.vel[i] * w.vel[i];
  const double e = eos.internal_energy(w.rho, w.pres);
  return std::sqrt(v2) + eos.chat(w.rho, w.pres, e);
}

// |u.n| + c
template <int D>
inline double alpha_n(const Cons<D>& u, const EosModel& eos,
                      const Vec<D>& n) {
  const Prim<D> w = cons_to_prim(u, eos);
  double un = 0.0;
  for (int i = 0; i < D; ++i) un += w.vel[i] * n[i];
  const double e = eos.internal_energy(w.rho, w.pres);
  return std::abs(un) + eos.chat(w.rho, w.pres, e);
}

}  // namespace bdg

#endif
