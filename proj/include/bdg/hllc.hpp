// HLLC approximate Riemann fluxes (1D and directional 2D), the well-balanced
// modifications built on them, and the modified Lax-Friedrichs flux for
// isothermal equilibria.

#ifndef BDG_HLLC_HPP
#define BDG_HLLC_HPP

#include "bdg/state.hpp"

namespace bdg {

struct WaveSpeeds {
  double s_left = 0.0;
  double s_right = 0.0;
  double s_star = 0.0;
};

template <int D>
struct HllcIntermediate {
  Cons<D> u_star_left;
  Cons<D> u_star_right;
};

// Signal speeds: S_L = min(alpha_-(UL), alpha_-(UR)), S_R = max(alpha_+),
// with alpha_+- = u +- c (general EOS: u +- chat); S_* the contact speed.
WaveSpeeds hllc_wave_speeds_1d(const Cons1& ul, const Cons1& ur, const EosModel& eos);
HllcIntermediate<1> hllc_intermediates_1d(const Cons1& ul, const Cons1& ur,
                                          const EosModel& eos);

Cons1 hllc_flux_1d(const Cons1& ul, const Cons1& ur, const EosModel& eos);

// Rotate to the normal frame, solve with the tangential momentum riding the
// contact, rotate back.
Cons2 hllc_flux_2d(const Cons2& ul, const Cons2& ur, const std::array<double, 2>& n,
                   const EosModel& eos);
WaveSpeeds hllc_wave_speeds_2d(const Cons2& ul, const Cons2& ur,
                               const std::array<double, 2>& n, const EosModel& eos);
HllcIntermediate<2> hllc_intermediates_2d(const Cons2& ul, const Cons2& ur,
                                          const std::array<double, 2>& n,
                                          const EosModel& eos);

// Equilibrium data carried by one interface (or one edge Gauss point):
// pressure traces and their star value; density/internal-energy traces feed
// the general-EOS scaling.
struct EquilibriumFace {
  double pe_minus = 0.0, pe_plus = 0.0, pe_star = 0.0;
  double rho_e_minus = 0.0, rho_e_plus = 0.0;
  double e_e_minus = 0.0, e_e_plus = 0.0;  // e^e_h traces (general EOS)
};

// Ideal EOS: hllc((pe*/pe^-) U^-, (pe*/pe^+) U^+).
// General EOS: scales by E(rho_e^+-, pe*)/e_e^+- instead.
Cons1 wb_hllc_1d(const Cons1& um, const Cons1& up, const EquilibriumFace& eq,
                 const EosModel& eos);
Cons2 wb_hllc_2d(const Cons2& um, const Cons2& up, const EquilibriumFace& eq,
                 const std::array<double, 2>& n, const EosModel& eos);

// 0.5 [F(U^-) + F(U^+) - alpha_lf rho_e_max (U^+/rho_e^+ - U^-/rho_e^-)];
// alpha_lf must dominate alpha_max of both traces and rho_e_max both
// equilibrium densities.
Cons1 modified_lf_flux_1d(const Cons1& um, const Cons1& up, double rho_e_minus,
                          double rho_e_plus, double rho_e_max, double alpha_lf,
                          const EosModel& eos);

}  // namespace bdg

#endif
