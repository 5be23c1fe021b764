#include "bdg/basis.hpp"

#include <cmath>

#include "bdg/errors.hpp"
#include "bdg/quadrature.hpp"

namespace bdg {

double Basis1D::value(int m, double xi) const {
  return std::sqrt(2.0 * m + 1.0) * legendre(m, xi);
}

double Basis1D::deriv(int m, double xi) const {
  return std::sqrt(2.0 * m + 1.0) * legendre_deriv(m, xi);
}

std::vector<double> Basis1D::value_table(const std::vector<double>& xi) const {
  const int np = static_cast<int>(xi.size());
  std::vector<double> b(nmodes() * np);
  for (int m = 0; m < nmodes(); ++m)
    for (int p = 0; p < np; ++p) b[m * np + p] = value(m, xi[p]);
  return b;
}

std::vector<double> Basis1D::deriv_table(const std::vector<double>& xi) const {
  const int np = static_cast<int>(xi.size());
  std::vector<double> b(nmodes() * np);
  for (int m = 0; m < nmodes(); ++m)
    for (int p = 0; p < np; ++p) b[m * np + p] = deriv(m, xi[p]);
  return b;
}

Basis2D::Basis2D(int k) : degree(k) {
  if (k < 0) throw DomainError("Basis2D: degree >= 0");
  for (int d = 0; d <= k; ++d)
    for (int i = d; i >= 0; --i) modes.push_back({i, d - i});
}

double Basis2D::value(int m, double xi, double eta) const {
  const auto [i, j] = modes[m];
  return std::sqrt(2.0 * i + 1.0) * legendre(i, xi) * std::sqrt(2.0 * j + 1.0) *
         legendre(j, eta);
}

double Basis2D::deriv_xi(int m, double xi, double eta) const {
  const auto [i, j] = modes[m];
  return std::sqrt(2.0 * i + 1.0) * legendre_deriv(i, xi) * std::sqrt(2.0 * j + 1.0) *
         legendre(j, eta);
}

double Basis2D::deriv_eta(int m, double xi, double eta) const {
  const auto [i, j] = modes[m];
  return std::sqrt(2.0 * i + 1.0) * legendre(i, xi) * std::sqrt(2.0 * j + 1.0) *
         legendre_deriv(j, eta);
}

std::vector<double> Basis2D::value_table(const std::vector<std::array<double, 2>>& p) const {
  const int np = static_cast<int>(p.size());
  std::vector<double> b(nmodes() * np);
  for (int m = 0; m < nmodes(); ++m)
    for (int q = 0; q < np; ++q) b[m * np + q] = value(m, p[q][0], p[q][1]);
  return b;
}

std::vector<double> Basis2D::deriv_xi_table(const std::vector<std::array<double, 2>>& p) const {
  const int np = static_cast<int>(p.size());
  std::vector<double> b(nmodes() * np);
  for (int m = 0; m < nmodes(); ++m)
    for (int q = 0; q < np; ++q) b[m * np + q] = deriv_xi(m, p[q][0], p[q][1]);
  return b;
}

std::vector<double> Basis2D::deriv_eta_table(const std::vector<std::array<double, 2>>& p) const {
  const int np = static_cast<int>(p.size());
  std::vector<double> b(nmodes() * np);
  for (int m = 0; m < nmodes(); ++m)
    for (int q = 0; q < np; ++q) b[m * np + q] = deriv_eta(m, p[q][0], p[q][1]);
  return b;
}

}  // namespace bdg
