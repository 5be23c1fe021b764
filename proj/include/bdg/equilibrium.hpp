// Hydrostatic equilibrium profiles, their DG projection with the
// positivity fix, and the precomputed interface/edge/source tables the
// well-balanced fluxes and sources consume.

#ifndef BDG_EQUILIBRIUM_HPP
#define BDG_EQUILIBRIUM_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "bdg/eos.hpp"
#include "bdg/field.hpp"
#include "bdg/limiter.hpp"

namespace bdg {

struct EquilibriumProfile {
  std::function<double(double, double)> rho_e;  // (x, y); y ignored in 1D
  std::function<double(double, double)> p_e;
  std::function<double(double, double)> phi;    // may be empty
  std::function<std::array<double, 2>(double, double)> grad_phi;  // may be empty
  bool isothermal = false;
};

// rho = rho0 exp(-phi/(R T0)), p = p0 exp(-phi/(R T0)), R T0 = p0/rho0
EquilibriumProfile isothermal_profile(double rho0, double p0,
                                      std::function<double(double, double)> phi,
                                      std::function<std::array<double, 2>(double, double)> grad_phi);

// p = K0 rho^gamma: rho = (rho0^{gamma-1} - (gamma-1) phi/(K0 gamma))^{1/(gamma-1)}
EquilibriumProfile polytropic_profile(double K0, double gamma, double rho0,
                                      std::function<double(double, double)> phi,
                                      std::function<std::array<double, 2>(double, double)> grad_phi);

// static adiabatic gas sphere (gamma = 2): rho = rho_c sinc(alpha r),
// p = K0 rho^2, phi = -2 K0 rho_c sinc(alpha r), alpha = sqrt(2 pi g / K0)
EquilibriumProfile gas_sphere_profile(double K0, double rho_c, double g);

// rho = rho_star, p = C - rho_star * phi
EquilibriumProfile constant_density_profile(double rho_star, double C,
                                            std::function<double(double, double)> phi,
                                            std::function<std::array<double, 2>(double, double)> grad_phi);

// plain-text records "x rho p" (one per line, '#' comments), interpolated
// with monotone cubic (Fritsch-Carlson) splines; 1D profiles only, linear
// extension beyond the table for ghost cells
EquilibriumProfile tabulated_profile(const std::string& path);

// Rejects profiles that are nonpositive anywhere on a sampling of the box
// (including one ghost-cell margin on each side).
void validate_profile(const EquilibriumProfile& p, double xmin, double xmax,
                      double ymin, double ymax, bool two_d, double margin);

// How exterior equilibrium traces at a domain boundary are produced.
enum class EqGhost {
  Extension,  // analytic profile projected onto a mirrored ghost cell
  Mirror,     // even reflection of the interior trace (walls)
  Wrap,       // periodic
  CopyTrace,  // copy the interior trace (transmissive outflow)
};

struct ProjectedEquilibrium1D {
  // projected triple (rho_e, 0, E_e); E_e = p_e/(gamma-1) (ideal) or
  // rho_e * E(rho_e, p_e) (general)
  Field1D triple;
  std::vector<double> ghost_left, ghost_right;  // ghost-cell coefficient blocks
  bool fix_applied = false;

  // per interface i = 0..ncells
  std::vector<double> pe_m, pe_p, pstar, jump;
  std::vector<double> rho_m, rho_p;    // density traces
  std::vector<double> ee_m, ee_p;      // specific internal energy traces
  std::vector<double> estar_m, estar_p;

  // per cell, N = k+1 Gauss points: [cell*N + mu]
  std::vector<double> rho_g, p_g, dpdx_g;
  // per cell
  std::vector<double> rho_bar, p_bar, e_center;

  int ngauss = 0;
};

ProjectedEquilibrium1D project_equilibrium(const EquilibriumProfile& prof,
                                           const Mesh1D& mesh, int degree,
                                           const EosModel& eos, EqGhost left,
                                           EqGhost right,
                                           const LimiterParams& params = {});

struct ProjectedEquilibrium2D {
  Field2D triple;  // (rho_e, 0, 0, E_e)
  bool fix_applied = false;

  int ngauss = 0;

  // x-interfaces: index (i + (nx+1)*l)*N + mu; minus side = cell (i-1,l)
  std::vector<double> x_pe_m, x_pe_p, x_pstar, x_jump;
  std::vector<double> x_rho_m, x_rho_p, x_ee_m, x_ee_p, x_estar_m, x_estar_p;
  // y-interfaces: index (i + nx*l)*N + mu with l = 0..ny
  std::vector<double> y_pe_m, y_pe_p, y_pstar, y_jump;
  std::vector<double> y_rho_m, y_rho_p, y_ee_m, y_ee_p, y_estar_m, y_estar_p;

  // per cell, N^2 interior Gauss points: [cell*N^2 + q]
  std::vector<double> rho_g, p_g, dpdx_g, dpdy_g;
  std::vector<double> rho_bar, p_bar, e_center;
};

ProjectedEquilibrium2D project_equilibrium(const EquilibriumProfile& prof,
                                           const Mesh2D& mesh, int degree,
                                           const EosModel& eos, EqGhost xlo, EqGhost xhi,
                                           EqGhost ylo, EqGhost yhi,
                                           const LimiterParams& params = {});

}  // namespace bdg

#endif
