// Positivity-preserving scaling limiter at the theorem point sets, and the
// TVB-minmod trouble-cell limiter with local characteristic decomposition.

#ifndef BDG_LIMITER_HPP
#define BDG_LIMITER_HPP

#include <vector>

#include "bdg/field.hpp"
#include "bdg/points.hpp"

namespace bdg {

struct LimiterParams {
  double eps1_cap = 1e-13;  // density floor: eps1 = min(cap, rho_bar)
  double eps2_cap = 1e-13;  // internal-energy floor: eps2 = min(cap, G(U_bar))
  double tvb_m = 10.0;      // TVB constant M
};

struct PpStats {
  long cells_density_limited = 0;
  long cells_energy_limited = 0;
  double min_rho = 0.0;  // over all point-set values, after limiting
  double min_g = 0.0;
};

// Shared single-cell pass: density scaling then G scaling at the supplied
// point values. B is the basis-value table at the np reference points;
// coeff is one cell's [comp][mode] block (momentum components between the
// first and last). Throws PositivityFault if the cell average is
// inadmissible. Used by the field-level limiters and by the equilibrium
// projection fix.
struct PpCellOut {
  double theta1 = 1.0, theta2 = 1.0;
  double min_rho = 0.0, min_g = 0.0;  // after limiting
};
PpCellOut pp_limit_cell(double* coeff, int ncomp, int nm, const double* B, int np,
                        const LimiterParams& params, long cell_id);

PpStats pp_limit(Field1D& u, const LimiterParams& params);
PpStats pp_limit(Field2D& u, const LimiterParams& params);

// Point-set admissibility scan without modification (reports the minima).
PpStats pp_scan(const Field1D& u);
PpStats pp_scan(const Field2D& u);

// Trouble-cell detection: TVB-minmod on the conserved-variable interface
// deviations; ghost neighbor averages supplied by the caller (boundary
// closures own them).
std::vector<char> detect_trouble_cells(const Field1D& u, const Cons1& left_ghost_avg,
                                       const Cons1& right_ghost_avg,
                                       const LimiterParams& params);
// 2D ghost averages: [side][cell index along the boundary], sides ordered
// left, right, bottom, top.
std::vector<char> detect_trouble_cells(const Field2D& u,
                                       const std::vector<Cons2>& ghost_avgs_x_lo,
                                       const std::vector<Cons2>& ghost_avgs_x_hi,
                                       const std::vector<Cons2>& ghost_avgs_y_lo,
                                       const std::vector<Cons2>& ghost_avgs_y_hi,
                                       const LimiterParams& params);

// In flagged cells, limit the linear modes in local characteristic variables
// (eigenvectors at the cell average; component-wise for non-ideal EOS) and
// zero the higher modes where a direction limits. Cell averages preserved.
void characteristic_slope_limit(Field1D& u, const std::vector<char>& mask,
                                const Cons1& left_ghost_avg, const Cons1& right_ghost_avg,
                                const EosModel& eos, const LimiterParams& params);
void characteristic_slope_limit(Field2D& u, const std::vector<char>& mask,
                                const std::vector<Cons2>& ghost_avgs_x_lo,
                                const std::vector<Cons2>& ghost_avgs_x_hi,
                                const std::vector<Cons2>& ghost_avgs_y_lo,
                                const std::vector<Cons2>& ghost_avgs_y_hi,
                                const EosModel& eos, const LimiterParams& params);

// Euler eigensystem helpers (ideal EOS), exposed for tests: rows of L and
// columns of R for the 1D system and the 2D system in direction (nx, ny).
void euler_eigensystem_1d(const Cons1& u, double gamma, double R[3][3], double L[3][3]);
void euler_eigensystem_2d(const Cons2& u, double gamma, double nx, double ny,
                          double R[4][4], double L[4][4]);

}  // namespace bdg

#endif
