// Gauss and Gauss-Lobatto rules on [-1,1], with weights normalized to sum
// to 1 so a cell integral is (cell measure) * sum_i w_i f(x_i).

#ifndef BDG_QUADRATURE_HPP
#define BDG_QUADRATURE_HPP

#include <vector>

namespace bdg {

struct QuadratureRule {
  std::vector<double> nodes;    // ascending, in [-1,1]
  std::vector<double> weights;  // positive, sum to 1
};

// N-point Gauss-Legendre; exact for degree <= 2N-1.
const QuadratureRule& gauss_rule(int n);

// L-point Gauss-Lobatto (endpoints included); exact for degree <= 2L-3;
// endpoint weights 1/(L(L-1)).
const QuadratureRule& gauss_lobatto_rule(int l);

// Legendre P_n(x) and derivative, used by the node solves and the modal
// basis.
double legendre(int n, double x);
double legendre_deriv(int n, double x);

}  // namespace bdg

#endif
