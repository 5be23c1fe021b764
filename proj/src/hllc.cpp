#include "bdg/hllc.hpp"

#include <cmath>

namespace bdg {

namespace {

struct Side {
  double rho, u, p, en;  // en = total energy; u = normal velocity
  double ut = 0.0;       // tangential velocity (2D)
};

struct Speeds {
  double sl, sr, sstar;
  bool degenerate = false;
};

Speeds speeds(const Side& l, const Side& r, const EosModel& eos) {
  const double el = eos.internal_energy(l.rho, l.p);
  const double er = eos.internal_energy(r.rho, r.p);
  const double cl = eos.chat(l.rho, l.p, el);
  const double cr = eos.chat(r.rho, r.p, er);
  Speeds s;
  s.sl = std::min(l.u - cl, r.u - cr);
  s.sr = std::max(l.u + cl, r.u + cr);
  const double num = r.p - l.p + l.rho * l.u * (s.sl - l.u) - r.rho * r.u * (s.sr - r.u);
  const double den = l.rho * (s.sl - l.u) - r.rho * (s.sr - r.u);
  if (den == 0.0) {
    s.degenerate = true;
    s.sstar = 0.0;
  } else {
    s.sstar = num / den;
  }
  return s;
}

// intermediate state of eq US in the normal frame; D picks the layout
template <int D>
Cons<D> star_state(const Side& a, double s, double sstar,
                   const std::array<double, 2>& n) {
  const double fac = a.rho * ((s - a.u) / (s - sstar));
  Cons<D> w;
  w.rho = fac;
  if constexpr (D == 1) {
    w.mom[0] = fac * sstar;
  } else {
    w.mom[0] = fac * (sstar * n[0] - a.ut * n[1]);
    w.mom[1] = fac * (sstar * n[1] + a.ut * n[0]);
  }
  w.ener = fac * (a.en / a.rho + (sstar - a.u) * (sstar + a.p / (a.rho * (s - a.u))));
  return w;
}

template <int D>
Cons<D> assemble_cons(const Side& a, const std::array<double, 2>& n) {
  Cons<D> u;
  u.rho = a.rho;
  if constexpr (D == 1) {
    u.mom[0] = a.rho * a.u;
  } else {
    u.mom[0] = a.rho * (a.u * n[0] - a.ut * n[1]);
    u.mom[1] = a.rho * (a.u * n[1] + a.ut * n[0]);
  }
  u.ener = a.en;
  return u;
}

template <int D>
Cons<D> phys_flux(const Side& a, const std::array<double, 2>& n) {
  Cons<D> f;
  f.rho = a.rho * a.u;
  if constexpr (D == 1) {
    f.mom[0] = a.rho * a.u * a.u + a.p;
  } else {
    // momentum flux = m u_n + p n, with m rotated back from (u, ut)
    f.mom[0] = a.rho * (a.u * n[0] - a.ut * n[1]) * a.u + a.p * n[0];
    f.mom[1] = a.rho * (a.u * n[1] + a.ut * n[0]) * a.u + a.p * n[1];
  }
  f.ener = (a.en + a.p) * a.u;
  return f;
}

template <int D>
Side make_side(const Cons<D>& u, const std::array<double, 2>& n, const EosModel& eos) {
  const auto rep = is_admissible(u);
  if (!rep.admissible) throw DomainError("hllc: inadmissible input state");
  Side s;
  s.rho = u.rho;
  s.en = u.ener;
  if constexpr (D == 1) {
    s.u = u.mom[0] / u.rho;
  } else {
    const double vx = u.mom[0] / u.rho, vy = u.mom[1] / u.rho;
    s.u = vx * n[0] + vy * n[1];
    s.ut = -vx * n[1] + vy * n[0];
  }
  s.p = eos.pressure(u.rho, rep.g_value);
  return s;
}

// Branch ties resolve to the left: consistency makes adjacent branch values
// coincide there.
template <int D>
Cons<D> hllc_impl(const Side& l, const Side& r, const std::array<double, 2>& n,
                  const EosModel& eos) {
  const Speeds s = speeds(l, r, eos);
  if (s.degenerate) return phys_flux<D>(l, n);
  if (s.sl >= 0.0) return phys_flux<D>(l, n);
  if (s.sstar >= 0.0) {
    const Cons<D> ustar = star_state<D>(l, s.sl, s.sstar, n);
    return phys_flux<D>(l, n) + s.sl * (ustar - assemble_cons<D>(l, n));
  }
  if (s.sr >= 0.0) {
    const Cons<D> ustar = star_state<D>(r, s.sr, s.sstar, n);
    return phys_flux<D>(r, n) + s.sr * (ustar - assemble_cons<D>(r, n));
  }
  return phys_flux<D>(r, n);
}

constexpr std::array<double, 2> kNx = {1.0, 0.0};

}  // namespace

WaveSpeeds hllc_wave_speeds_1d(const Cons1& ul, const Cons1& ur, const EosModel& eos) {
  const Speeds s = speeds(make_side(ul, kNx, eos), make_side(ur, kNx, eos), eos);
  return {s.sl, s.sr, s.sstar};
}

HllcIntermediate<1> hllc_intermediates_1d(const Cons1& ul, const Cons1& ur,
                                          const EosModel& eos) {
  const Side l = make_side(ul, kNx, eos), r = make_side(ur, kNx, eos);
  const Speeds s = speeds(l, r, eos);
  return {star_state<1>(l, s.sl, s.sstar, kNx), star_state<1>(r, s.sr, s.sstar, kNx)};
}

Cons1 hllc_flux_1d(const Cons1& ul, const Cons1& ur, const EosModel& eos) {
  return hllc_impl<1>(make_side(ul, kNx, eos), make_side(ur, kNx, eos), kNx, eos);
}

Cons2 hllc_flux_2d(const Cons2& ul, const Cons2& ur, const std::array<double, 2>& n,
                   const EosModel& eos) {
  return hllc_impl<2>(make_side(ul, n, eos), make_side(ur, n, eos), n, eos);
}

WaveSpeeds hllc_wave_speeds_2d(const Cons2& ul, const Cons2& ur,
                               const std::array<double, 2>& n, const EosModel& eos) {
  const Speeds s = speeds(make_side(ul, n, eos), make_side(ur, n, eos), eos);
  return {s.sl, s.sr, s.sstar};
}

HllcIntermediate<2> hllc_intermediates_2d(const Cons2& ul, const Cons2& ur,
                                          const std::array<double, 2>& n,
                                          const EosModel& eos) {
  const Side l = make_side(ul, n, eos), r = make_side(ur, n, eos);
  const Speeds s = speeds(l, r, eos);
  return {star_state<2>(l, s.sl, s.sstar, n), star_state<2>(r, s.sr, s.sstar, n)};
}

Cons1 wb_hllc_1d(const Cons1& um, const Cons1& up, const EquilibriumFace& eq,
                 const EosModel& eos) {
  double zm, zp;
  if (eos.kind() == EosModel::Kind::Ideal) {
    if (!(eq.pe_minus > 0.0) || !(eq.pe_plus > 0.0))
      throw DomainError("wb_hllc_1d: nonpositive equilibrium pressure trace");
    zm = eq.pe_star / eq.pe_minus;
    zp = eq.pe_star / eq.pe_plus;
  } else {
    zm = eos.internal_energy(eq.rho_e_minus, eq.pe_star) / eq.e_e_minus;
    zp = eos.internal_energy(eq.rho_e_plus, eq.pe_star) / eq.e_e_plus;
  }
  return hllc_flux_1d(zm * um, zp * up, eos);
}

Cons2 wb_hllc_2d(const Cons2& um, const Cons2& up, const EquilibriumFace& eq,
                 const std::array<double, 2>& n, const EosModel& eos) {
  double zm, zp;
  if (eos.kind() == EosModel::Kind::Ideal) {
    if (!(eq.pe_minus > 0.0) || !(eq.pe_plus > 0.0))
      throw DomainError("wb_hllc_2d: nonpositive equilibrium pressure trace");
    zm = eq.pe_star / eq.pe_minus;
    zp = eq.pe_star / eq.pe_plus;
  } else {
    zm = eos.internal_energy(eq.rho_e_minus, eq.pe_star) / eq.e_e_minus;
    zp = eos.internal_energy(eq.rho_e_plus, eq.pe_star) / eq.e_e_plus;
  }
  return hllc_flux_2d(zm * um, zp * up, n, eos);
}

Cons1 modified_lf_flux_1d(const Cons1& um, const Cons1& up, double rho_e_minus,
                          double rho_e_plus, double rho_e_max, double alpha_lf,
                          const EosModel& eos) {
  const double amax = std::max(alpha_max(um, eos), alpha_max(up, eos));
  if (alpha_lf < amax * (1.0 - 1e-14))
    throw DomainError("modified_lf_flux_1d: viscosity below the admissible bound");
  if (rho_e_max < std::max(rho_e_minus, rho_e_plus) * (1.0 - 1e-14))
    throw DomainError("modified_lf_flux_1d: rho_e_max below the trace values");
  const Cons1 fm = physical_flux(um, eos);
  const Cons1 fp = physical_flux(up, eos);
  Cons1 f;
  for (int c = 0; c < 3; ++c)
    f[c] = 0.5 * (fm[c] + fp[c] -
                  alpha_lf * rho_e_max * (up[c] / rho_e_plus - um[c] / rho_e_minus));
  return f;
}

}  // namespace bdg
