#include "bdg/mesh.hpp"

#include "bdg/errors.hpp"

namespace bdg {

double Mesh1D::hmax() const {
  double m = 0.0;
  for (int j = 0; j < ncells(); ++j)
    if (h(j) > m) m = h(j);
  return m;
}

Mesh1D Mesh1D::uniform(double a, double b, int n) {
  if (!(b > a) || n < 1) throw DomainError("Mesh1D::uniform: need b > a, n >= 1");
  Mesh1D m;
  m.edges.resize(n + 1);
  const double h = (b - a) / n;
  for (int j = 0; j <= n; ++j) m.edges[j] = a + j * h;
  m.edges[n] = b;
  return m;
}

Mesh2D Mesh2D::uniform(double ax, double bx, int nx, double ay, double by, int ny) {
  if (!(bx > ax) || !(by > ay) || nx < 1 || ny < 1)
    throw DomainError("Mesh2D::uniform: invalid box or resolution");
  Mesh2D m;
  m.x_edges = Mesh1D::uniform(ax, bx, nx).edges;
  m.y_edges = Mesh1D::uniform(ay, by, ny).edges;
  return m;
}

}  // namespace bdg
