// Modal DG fields: per-cell, per-component coefficient arrays over a mesh,
// with evaluation, L2 projection, interface/edge traces and cell averages.

#ifndef BDG_FIELD_HPP
#define BDG_FIELD_HPP

#include <functional>
#include <vector>

#include "bdg/basis.hpp"
#include "bdg/mesh.hpp"
#include "bdg/state.hpp"

namespace bdg {

struct Field1D {
  const Mesh1D* mesh = nullptr;
  Basis1D basis{0};
  int ncomp = 3;
  std::vector<double> data;  // [cell][comp][mode]

  Field1D() = default;
  Field1D(const Mesh1D& m, int degree, int ncomponents = 3);

  int nmodes() const { return basis.nmodes(); }
  double* cell(int j) { return data.data() + static_cast<size_t>(j) * ncomp * nmodes(); }
  const double* cell(int j) const {
    return data.data() + static_cast<size_t>(j) * ncomp * nmodes();
  }
  double& coeff(int j, int c, int m) { return cell(j)[c * nmodes() + m]; }
  double coeff(int j, int c, int m) const { return cell(j)[c * nmodes() + m]; }

  // value at reference point xi of cell j
  Cons1 evaluate_ref(int j, double xi) const;
  // value at physical point x (must lie in the closed cell)
  Cons1 evaluate(int j, double x) const;
  Cons1 cell_average(int j) const;
};

struct Field2D {
  const Mesh2D* mesh = nullptr;
  Basis2D basis{0};
  int ncomp = 4;
  std::vector<double> data;

  Field2D() = default;
  Field2D(const Mesh2D& m, int degree, int ncomponents = 4);

  int nmodes() const { return basis.nmodes(); }
  double* cell(int c) { return data.data() + static_cast<size_t>(c) * ncomp * nmodes(); }
  const double* cell(int c) const {
    return data.data() + static_cast<size_t>(c) * ncomp * nmodes();
  }
  double& coeff(int c, int comp, int m) { return cell(c)[comp * nmodes() + m]; }
  double coeff(int c, int comp, int m) const { return cell(c)[comp * nmodes() + m]; }

  Cons2 evaluate_ref(int cell_id, double xi, double eta) const;
  Cons2 evaluate(int i, int l, double x, double y) const;
  Cons2 cell_average(int cell_id) const;
};

// Per-cell L2 projection computed with an N_proj-point Gauss rule
// (exactness >= 2k+1, reproducing polynomials of degree <= k exactly).
Field1D l2_project(const std::function<void(double, double*)>& f, const Mesh1D& mesh,
                   int degree, int ncomp);
Field2D l2_project(const std::function<void(double, double, double*)>& f,
                   const Mesh2D& mesh, int degree, int ncomp);

// Interface traces: per interior interface i = 0..ncells, pair
// (U^-_i, U^+_i); boundary entries carry only the interior-side value.
struct Traces1D {
  // value of component c at interface i from the left cell / right cell
  std::vector<double> left;   // [i][comp], cell i-1 right-endpoint values
  std::vector<double> right;  // [i][comp], cell i left-endpoint values
  int ncomp = 0;
  int nifaces = 0;
  double l(int i, int c) const { return left[static_cast<size_t>(i) * ncomp + c]; }
  double r(int i, int c) const { return right[static_cast<size_t>(i) * ncomp + c]; }
};

// Exact polynomial endpoint evaluation; boundary interfaces get the interior
// trace only (exterior values come from boundary closures downstream).
Traces1D interface_traces(const Field1D& u);

}  // namespace bdg

#endif
