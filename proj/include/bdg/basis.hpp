// Orthonormal modal Legendre bases on the reference cell, normalized against
// the averaged inner product (1/|ref|) * integral, so mode 0 is the constant
// 1 and the zeroth coefficient is the cell average.

#ifndef BDG_BASIS_HPP
#define BDG_BASIS_HPP

#include <array>
#include <vector>

namespace bdg {

// phi_m(xi) = sqrt(2m+1) P_m(xi) on [-1,1]
struct Basis1D {
  int degree = 0;

  explicit Basis1D(int k) : degree(k) {}
  int nmodes() const { return degree + 1; }
  double value(int m, double xi) const;
  double deriv(int m, double xi) const;  // d/dxi

  // row-major tables B[m*np + p] for the kernels
  std::vector<double> value_table(const std::vector<double>& xi) const;
  std::vector<double> deriv_table(const std::vector<double>& xi) const;
};

// Full P^k on [-1,1]^2: phi_{ij}(xi,eta) = phi_i(xi) phi_j(eta), i+j <= k.
struct Basis2D {
  int degree = 0;
  std::vector<std::array<int, 2>> modes;  // (i, j) pairs

  explicit Basis2D(int k);
  int nmodes() const { return static_cast<int>(modes.size()); }
  double value(int m, double xi, double eta) const;
  double deriv_xi(int m, double xi, double eta) const;
  double deriv_eta(int m, double xi, double eta) const;

  std::vector<double> value_table(const std::vector<std::array<double, 2>>& p) const;
  std::vector<double> deriv_xi_table(const std::vector<std::array<double, 2>>& p) const;
  std::vector<double> deriv_eta_table(const std::vector<std::array<double, 2>>& p) const;
};

}  // namespace bdg

#endif
