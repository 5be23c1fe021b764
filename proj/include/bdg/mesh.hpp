#ifndef BDG_MESH_HPP
#define BDG_MESH_HPP

#include <vector>

namespace bdg {

// Interval mesh: cells (edge[j], edge[j+1]), j = 0..ncells-1.
struct Mesh1D {
  std::vector<double> edges;  // strictly increasing

  int ncells() const { return static_cast<int>(edges.size()) - 1; }
  double h(int j) const { return edges[j + 1] - edges[j]; }
  double center(int j) const { return 0.5 * (edges[j] + edges[j + 1]); }
  double hmax() const;
  double length() const { return edges.back() - edges.front(); }
  // physical coordinate of reference point xi in cell j
  double to_phys(int j, double xi) const { return center(j) + 0.5 * h(j) * xi; }

  static Mesh1D uniform(double a, double b, int n);
};

// Tensor-product Cartesian mesh: cell (i, l) = [xe[i], xe[i+1]] x [ye[l], ye[l+1]],
// linear index i + nx*l.
struct Mesh2D {
  std::vector<double> x_edges;
  std::vector<double> y_edges;

  int nx() const { return static_cast<int>(x_edges.size()) - 1; }
  int ny() const { return static_cast<int>(y_edges.size()) - 1; }
  int ncells() const { return nx() * ny(); }
  int cell(int i, int l) const { return i + nx() * l; }
  double dx(int i) const { return x_edges[i + 1] - x_edges[i]; }
  double dy(int l) const { return y_edges[l + 1] - y_edges[l]; }
  double area(int i, int l) const { return dx(i) * dy(l); }
  double xc(int i) const { return 0.5 * (x_edges[i] + x_edges[i + 1]); }
  double yc(int l) const { return 0.5 * (y_edges[l] + y_edges[l + 1]); }
  double domain_area() const {
    return (x_edges.back() - x_edges.front()) * (y_edges.back() - y_edges.front());
  }

  static Mesh2D uniform(double ax, double bx, int nx, double ay, double by, int ny);
};

}  // namespace bdg

#endif
