// Independent transcription of the HLLC flux used as the oracle: every
// quantity is computed from the displayed formulas in one straight pass and
// the branch is selected by interval membership, with no shared code with
// the production solver.

#ifndef BDG_TESTS_ORACLE_HLLC_HPP
#define BDG_TESTS_ORACLE_HLLC_HPP

#include <array>
#include <cmath>

#include "bdg/eos.hpp"

namespace bdg::testing {

// 1D states as plain arrays (rho, m, E)
using V3 = std::array<double, 3>;

inline V3 oracle_euler_flux(const V3& u, double gamma) {
  const double vel = u[1] / u[0];
  const double pres = (gamma - 1.0) * (u[2] - 0.5 * u[1] * u[1] / u[0]);
  return {u[0] * vel, u[1] * vel + pres, (u[2] + pres) * vel};
}

inline V3 oracle_hllc_1d(const V3& ul, const V3& ur, double gamma) {
  const double uL = ul[1] / ul[0], uR = ur[1] / ur[0];
  const double pL = (gamma - 1.0) * (ul[2] - 0.5 * ul[1] * ul[1] / ul[0]);
  const double pR = (gamma - 1.0) * (ur[2] - 0.5 * ur[1] * ur[1] / ur[0]);
  const double cL = std::sqrt(gamma * pL / ul[0]);
  const double cR = std::sqrt(gamma * pR / ur[0]);

  const double sL = std::min(uL - cL, uR - cR);
  const double sR = std::max(uL + cL, uR + cR);
  const double sM = (pR - pL + ul[0] * uL * (sL - uL) - ur[0] * uR * (sR - uR)) /
                    (ul[0] * (sL - uL) - ur[0] * (sR - uR));

  const V3 fL = oracle_euler_flux(ul, gamma);
  const V3 fR = oracle_euler_flux(ur, gamma);

  const double facL = ul[0] * (sL - uL) / (sL - sM);
  const V3 usL = {facL, facL * sM,
                  facL * (ul[2] / ul[0] + (sM - uL) * (sM + pL / (ul[0] * (sL - uL))))};
  const double facR = ur[0] * (sR - uR) / (sR - sM);
  const V3 usR = {facR, facR * sM,
                  facR * (ur[2] / ur[0] + (sM - uR) * (sM + pR / (ur[0] * (sR - uR))))};

  V3 fsL, fsR;
  for (int c = 0; c < 3; ++c) {
    fsL[c] = fL[c] + sL * (usL[c] - ul[c]);
    fsR[c] = fR[c] + sR * (usR[c] - ur[c]);
  }

  if (0.0 <= sL) return fL;
  if (sL <= 0.0 && 0.0 <= sM) return fsL;
  if (sM <= 0.0 && 0.0 <= sR) return fsR;
  return fR;
}

}  // namespace bdg::testing

#endif
