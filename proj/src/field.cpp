#include "bdg/field.hpp"

#include <cmath>

#include "bdg/errors.hpp"
#include "bdg/quadrature.hpp"

namespace bdg {

Field1D::Field1D(const Mesh1D& m, int degree, int ncomponents)
    : mesh(&m), basis(degree), ncomp(ncomponents) {
  data.assign(static_cast<size_t>(m.ncells()) * ncomp * basis.nmodes(), 0.0);
}

Cons1 Field1D::evaluate_ref(int j, double xi) const {
  const int nm = nmodes();
  const double* c = cell(j);
  Cons1 u;
  for (int comp = 0; comp < ncomp; ++comp) {
    double v = 0.0;
    for (int m = 0; m < nm; ++m) v += c[comp * nm + m] * basis.value(m, xi);
    u[comp] = v;
  }
  return u;
}

Cons1 Field1D::evaluate(int j, double x) const {
  const double h = mesh->h(j);
  const double xi = 2.0 * (x - mesh->center(j)) / h;
  if (xi < -1.0 - 1e-12 || xi > 1.0 + 1e-12)
    throw DomainError("Field1D::evaluate: point outside cell");
  return evaluate_ref(j, xi < -1.0 ? -1.0 : (xi > 1.0 ? 1.0 : xi));
}

Cons1 Field1D::cell_average(int j) const {
  const int nm = nmodes();
  const double* c = cell(j);
  Cons1 u;
  for (int comp = 0; comp < ncomp; ++comp) u[comp] = c[comp * nm];
  return u;
}

Field2D::Field2D(const Mesh2D& m, int degree, int ncomponents)
    : mesh(&m), basis(degree), ncomp(ncomponents) {
  data.assign(static_cast<size_t>(m.ncells()) * ncomp * basis.nmodes(), 0.0);
}

Cons2 Field2D::evaluate_ref(int cell_id, double xi, double eta) const {
  const int nm = nmodes();
  const double* c = cell(cell_id);
  Cons2 u;
  for (int comp = 0; comp < ncomp; ++comp) {
    double v = 0.0;
    for (int m = 0; m < nm; ++m) v += c[comp * nm + m] * basis.value(m, xi, eta);
    u[comp] = v;
  }
  return u;
}

Cons2 Field2D::evaluate(int i, int l, double x, double y) const {
  const double xi = 2.0 * (x - mesh->xc(i)) / mesh->dx(i);
  const double eta = 2.0 * (y - mesh->yc(l)) / mesh->dy(l);
  if (std::abs(xi) > 1.0 + 1e-12 || std::abs(eta) > 1.0 + 1e-12)
    throw DomainError("Field2D::evaluate: point outside cell");
  auto clamp = [](double t) { return t < -1.0 ? -1.0 : (t > 1.0 ? 1.0 : t); };
  return evaluate_ref(mesh->cell(i, l), clamp(xi), clamp(eta));
}

Cons2 Field2D::cell_average(int cell_id) const {
  const int nm = nmodes();
  const double* c = cell(cell_id);
  Cons2 u;
  for (int comp = 0; comp < ncomp; ++comp) u[comp] = c[comp * nm];
  return u;
}

Field1D l2_project(const std::function<void(double, double*)>& f, const Mesh1D& mesh,
                   int degree, int ncomp) {
  Field1D u(mesh, degree, ncomp);
  const int nm = u.nmodes();
  const QuadratureRule& q = gauss_rule(degree + 3);
  std::vector<double> fx(ncomp);
  for (int j = 0; j < mesh.ncells(); ++j) {
    double* c = u.cell(j);
    for (size_t p = 0; p < q.nodes.size(); ++p) {
      const double x = mesh.to_phys(j, q.nodes[p]);
      f(x, fx.data());
      for (int comp = 0; comp < ncomp; ++comp) {
        const double wf = q.weights[p] * fx[comp];
        for (int m = 0; m < nm; ++m)
          c[comp * nm + m] += wf * u.basis.value(m, q.nodes[p]);
      }
    }
  }
  return u;
}

Field2D l2_project(const std::function<void(double, double, double*)>& f,
                   const Mesh2D& mesh, int degree, int ncomp) {
  Field2D u(mesh, degree, ncomp);
  const int nm = u.nmodes();
  const QuadratureRule& q = gauss_rule(degree + 3);
  const int nq = static_cast<int>(q.nodes.size());
  std::vector<double> fx(ncomp);
  for (int l = 0; l < mesh.ny(); ++l) {
    for (int i = 0; i < mesh.nx(); ++i) {
      double* c = u.cell(mesh.cell(i, l));
      for (int b = 0; b < nq; ++b) {
        const double y = mesh.yc(l) + 0.5 * mesh.dy(l) * q.nodes[b];
        for (int a = 0; a < nq; ++a) {
          const double x = mesh.xc(i) + 0.5 * mesh.dx(i) * q.nodes[a];
          f(x, y, fx.data());
          const double w = q.weights[a] * q.weights[b];
          for (int comp = 0; comp < ncomp; ++comp) {
            const double wf = w * fx[comp];
            for (int m = 0; m < nm; ++m)
              c[comp * nm + m] += wf * u.basis.value(m, q.nodes[a], q.nodes[b]);
          }
        }
      }
    }
  }
  return u;
}

Traces1D interface_traces(const Field1D& u) {
  const int nc = u.mesh->ncells();
  const int nm = u.nmodes();
  Traces1D t;
  t.ncomp = u.ncomp;
  t.nifaces = nc + 1;
  t.left.assign(static_cast<size_t>(nc + 1) * u.ncomp, 0.0);
  t.right.assign(static_cast<size_t>(nc + 1) * u.ncomp, 0.0);
  // phi_m(+1) = sqrt(2m+1), phi_m(-1) = (-1)^m sqrt(2m+1)
  std::vector<double> bp(nm), bm(nm);
  for (int m = 0; m < nm; ++m) {
    bp[m] = u.basis.value(m, 1.0);
    bm[m] = (m % 2 == 0) ? bp[m] : -bp[m];
  }
  for (int j = 0; j < nc; ++j) {
    const double* c = u.cell(j);
    for (int comp = 0; comp < u.ncomp; ++comp) {
      double vl = 0.0, vr = 0.0;
      for (int m = 0; m < nm; ++m) {
        vl += c[comp * nm + m] * bm[m];
        vr += c[comp * nm + m] * bp[m];
      }
      t.right[static_cast<size_t>(j) * u.ncomp + comp] = vl;      // left endpoint of cell j
      t.left[static_cast<size_t>(j + 1) * u.ncomp + comp] = vr;   // right endpoint of cell j
    }
  }
  return t;
}

}  // namespace bdg
