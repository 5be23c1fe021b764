#include "bdg/ref_tables.hpp"

namespace bdg {

namespace {

std::vector<double> point_major(const std::vector<double>& weights,
                                const std::vector<double>& B, int nm, int np) {
  std::vector<double> W(static_cast<size_t>(np) * nm);
  for (int p = 0; p < np; ++p)
    for (int m = 0; m < nm; ++m) W[p * nm + m] = weights[p] * B[m * np + p];
  return W;
}

int lobatto_order(int k) {
  const int l = (k + 4) / 2;  // ceil((k+3)/2)
  return l < 2 ? 2 : l;
}

}  // namespace

RefTables1D::RefTables1D(int k) : degree(k), N(k + 1) {
  const Basis1D basis(k);
  nm = basis.nmodes();
  const int L = lobatto_order(k);
  w1hat = 1.0 / (L * (L - 1.0));
  const QuadratureRule& g = gauss_rule(N);
  gnodes = g.nodes;
  gweights = g.weights;
  Bg = basis.value_table(gnodes);
  Dg = basis.deriv_table(gnodes);
  Bend = basis.value_table({-1.0, 1.0});
  Welem = point_major(gweights, Dg, nm, N);
  Wsrc = point_major(gweights, Bg, nm, N);
}

RefTables2D::RefTables2D(int k) : degree(k), N(k + 1) {
  const Basis2D basis(k);
  nm = basis.nmodes();
  nq = N * N;
  const int L = lobatto_order(k);
  w1hat = 1.0 / (L * (L - 1.0));
  const QuadratureRule& g = gauss_rule(N);
  gnodes = g.nodes;
  gweights = g.weights;

  qpts.resize(nq);
  std::vector<double> qw(nq);
  for (int b = 0; b < N; ++b)
    for (int a = 0; a < N; ++a) {
      qpts[a + N * b] = {gnodes[a], gnodes[b]};
      qw[a + N * b] = gweights[a] * gweights[b];
    }
  Bq = basis.value_table(qpts);
  Dxq = basis.deriv_xi_table(qpts);
  Dyq = basis.deriv_eta_table(qpts);

  std::vector<std::array<double, 2>> pl(N), pr(N), pb(N), pt(N);
  for (int mu = 0; mu < N; ++mu) {
    pl[mu] = {-1.0, gnodes[mu]};
    pr[mu] = {1.0, gnodes[mu]};
    pb[mu] = {gnodes[mu], -1.0};
    pt[mu] = {gnodes[mu], 1.0};
  }
  BL = basis.value_table(pl);
  BR = basis.value_table(pr);
  BB = basis.value_table(pb);
  BT = basis.value_table(pt);

  Welem_x = point_major(qw, Dxq, nm, nq);
  Welem_y = point_major(qw, Dyq, nm, nq);
  Wsrc = point_major(qw, Bq, nm, nq);
  WBL = point_major(gweights, BL, nm, N);
  WBR = point_major(gweights, BR, nm, N);
  WBB = point_major(gweights, BB, nm, N);
  WBT = point_major(gweights, BT, nm, N);
}

}  // namespace bdg
