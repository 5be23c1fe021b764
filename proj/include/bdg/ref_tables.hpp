// Reference-cell tables shared by the spatial operators and the equilibrium
// projection. Both sides must evaluate through the same tables and kernels
// so that the discrete-equilibrium cancellations hold bitwise.

#ifndef BDG_REF_TABLES_HPP
#define BDG_REF_TABLES_HPP

#include <array>
#include <vector>

#include "bdg/basis.hpp"
#include "bdg/quadrature.hpp"

namespace bdg {

struct RefTables1D {
  int degree = 0, N = 1, nm = 1;
  double w1hat = 0.5;                 // 1/(L(L-1)), L = max(2, ceil((k+3)/2))
  std::vector<double> gnodes, gweights;
  std::vector<double> Bg, Dg;         // nm x N, values/derivatives at Gauss nodes
  std::vector<double> Bend;           // nm x 2, values at xi = -1, +1
  std::vector<double> Welem;          // point-major [mu][m] = w_mu * Dg[m][mu]
  std::vector<double> Wsrc;           // point-major [mu][m] = w_mu * Bg[m][mu]

  explicit RefTables1D(int k);
};

struct RefTables2D {
  int degree = 0, N = 1, nm = 1, nq = 1;
  double w1hat = 0.5;
  std::vector<double> gnodes, gweights;
  std::vector<std::array<double, 2>> qpts;  // interior tensor points, q = a + N*b
  std::vector<double> Bq, Dxq, Dyq;         // nm x nq
  std::vector<double> BL, BR, BB, BT;       // nm x N, edge-point values
  std::vector<double> Welem_x, Welem_y;     // [q][m] = w_q * D{x,y}q[m][q]
  std::vector<double> Wsrc;                 // [q][m] = w_q * Bq[m][q]
  std::vector<double> WBL, WBR, WBB, WBT;   // [mu][m] = w_mu * B*[m][mu]

  explicit RefTables2D(int k);
};

}  // namespace bdg

#endif
