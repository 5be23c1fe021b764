// Positivity point sets: the Gauss-Lobatto/Gauss unions the weak-positivity
// theorems quantify over, plus the convex-decomposition weights on Cartesian
// cells. Coordinates are on the reference cell [-1,1]^d.

#ifndef BDG_POINTS_HPP
#define BDG_POINTS_HPP

#include <array>
#include <vector>

namespace bdg {

enum class PointTag {
  Edge,        // on the cell boundary, carries a decomposition weight
  Interior,    // interior decomposition point
  SourceQuad,  // interior Gauss point used by flux/source quadrature only
};

struct PositivityPointSet1D {
  int degree = 0;
  int lobatto_order = 0;  // L >= (k+3)/2
  int gauss_order = 0;    // N = k+1
  double w1_hat = 0.0;    // endpoint Lobatto weight 1/(L(L-1))
  std::vector<double> xi;                 // unique points, ascending
  std::vector<PointTag> tags;
  std::vector<double> decomposition_weights;  // 0 for SourceQuad points
};

struct PositivityPointSet2D {
  int degree = 0;
  int lobatto_order = 0;
  int gauss_order = 0;
  double w1_hat = 0.0;
  std::vector<std::array<double, 2>> pts;  // unique reference points
  std::vector<PointTag> tags;
  std::vector<double> decomposition_weights;  // depend on the dx:dy ratio
};

PositivityPointSet1D pp_point_set_1d(int degree);
PositivityPointSet2D pp_point_set_2d(int degree, double dx, double dy);

}  // namespace bdg

#endif
