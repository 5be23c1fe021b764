#include "bdg/limiter.hpp"

#include <cmath>
#include <limits>

#include "bdg/errors.hpp"
#include "bdg/kernels.hpp"

namespace bdg {

namespace {

// value tables at the reference positivity point set, cached per degree
struct PpTables1D {
  PositivityPointSet1D set;
  std::vector<double> B;
};
struct PpTables2D {
  PositivityPointSet2D set;
  std::vector<double> B;
};

const PpTables1D& pp_tables_1d(int degree) {
  if (degree < 0 || degree > 7) throw DomainError("pp limiter: degree out of range");
  static PpTables1D cache[8];
  static bool built[8] = {};
  if (!built[degree]) {
    cache[degree].set = pp_point_set_1d(degree);
    cache[degree].B = Basis1D(degree).value_table(cache[degree].set.xi);
    built[degree] = true;
  }
  return cache[degree];
}

const PpTables2D& pp_tables_2d(int degree) {
  if (degree < 0 || degree > 7) throw DomainError("pp limiter: degree out of range");
  static PpTables2D cache[8];
  static bool built[8] = {};
  if (!built[degree]) {
    cache[degree].set = pp_point_set_2d(degree, 1.0, 1.0);  // weights unused here
    cache[degree].B = Basis2D(degree).value_table(cache[degree].set.pts);
    built[degree] = true;
  }
  return cache[degree];
}

double minmod3(double a, double b, double c) {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min(a, std::min(b, c));
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max(a, std::max(b, c));
  return 0.0;
}

// TVB-modified minmod: pass a through when |a| <= M h^2
double minmod_tvb(double a, double b, double c, double mh2) {
  if (std::abs(a) <= mh2) return a;
  return minmod3(a, b, c);
}

}  // namespace

PpCellOut pp_limit_cell(double* coeff, int ncomp, int nm, const double* B, int np,
                        const LimiterParams& params, long cell_id) {
  const auto& k = kernels::active();
  const int last = ncomp - 1;
  const double rho_bar = coeff[0];
  double mom2 = 0.0;
  for (int c = 1; c < last; ++c) mom2 += coeff[c * nm] * coeff[c * nm];
  const double g_bar = (rho_bar > 0.0)
                           ? coeff[last * nm] - 0.5 * mom2 / rho_bar
                           : -1.0;
  if (!(rho_bar > 0.0) || !(g_bar > 0.0))
    throw PositivityFault(cell_id, "pp_limit: inadmissible cell average");

  std::vector<double> vals(static_cast<size_t>(ncomp) * np);
  k.eval_block(coeff, ncomp, nm, B, np, vals.data());
  double* rho = vals.data();
  double* mx = vals.data() + np;
  double* my = (ncomp == 4) ? vals.data() + 2 * np : nullptr;
  double* en = vals.data() + last * np;

  PpCellOut out;

  // density pass
  const double eps1 = std::min(params.eps1_cap, rho_bar);
  double rmin = rho[0];
  for (int p = 1; p < np; ++p) rmin = std::min(rmin, rho[p]);
  if (rmin < eps1) {
    const double th = (rho_bar - eps1) / (rho_bar - rmin);
    out.theta1 = th;
    for (int m = 1; m < nm; ++m) coeff[m] *= th;
    for (int p = 0; p < np; ++p) rho[p] = th * (rho[p] - rho_bar) + rho_bar;
  }

  // internal-energy pass on the density-corrected values
  const double eps2 = std::min(params.eps2_cap, g_bar);
  double rdummy, gmin;
  k.min_rho_g(rho, mx, my, en, np, &rdummy, &gmin);
  if (gmin < eps2) {
    const double th = (g_bar - eps2) / (g_bar - gmin);
    out.theta2 = th;
    for (int c = 0; c < ncomp; ++c)
      for (int m = 1; m < nm; ++m) coeff[c * nm + m] *= th;
    for (int c = 0; c < ncomp; ++c) {
      double* v = vals.data() + static_cast<size_t>(c) * np;
      const double mean = coeff[c * nm];
      for (int p = 0; p < np; ++p) v[p] = th * (v[p] - mean) + mean;
    }
  }

  k.min_rho_g(rho, mx, my, en, np, &out.min_rho, &out.min_g);
  return out;
}

namespace {

template <class FieldT>
PpStats pp_limit_impl(FieldT& u, const double* B, int np, const LimiterParams& params) {
  const int nm = u.nmodes();
  const long nc = static_cast<long>(u.data.size() / (static_cast<size_t>(u.ncomp) * nm));
  PpStats st;
  st.min_rho = std::numeric_limits<double>::infinity();
  st.min_g = st.min_rho;
  for (long j = 0; j < nc; ++j) {
    const auto r = pp_limit_cell(u.cell(j), u.ncomp, nm, B, np, params, j);
    if (r.theta1 < 1.0) ++st.cells_density_limited;
    if (r.theta2 < 1.0) ++st.cells_energy_limited;
    st.min_rho = std::min(st.min_rho, r.min_rho);
    st.min_g = std::min(st.min_g, r.min_g);
  }
  return st;
}

template <class FieldT>
PpStats pp_scan_impl(const FieldT& u, const double* B, int np) {
  const auto& k = kernels::active();
  const int nm = u.nmodes();
  const long nc = static_cast<long>(u.data.size() / (static_cast<size_t>(u.ncomp) * nm));
  const int last = u.ncomp - 1;
  PpStats st;
  st.min_rho = std::numeric_limits<double>::infinity();
  st.min_g = st.min_rho;
  std::vector<double> vals(static_cast<size_t>(u.ncomp) * np);
  for (long j = 0; j < nc; ++j) {
    k.eval_block(u.cell(j), u.ncomp, nm, B, np, vals.data());
    double rmin, gmin;
    k.min_rho_g(vals.data(), vals.data() + np,
                u.ncomp == 4 ? vals.data() + 2 * np : nullptr,
                vals.data() + static_cast<size_t>(last) * np, np, &rmin, &gmin);
    st.min_rho = std::min(st.min_rho, rmin);
    st.min_g = std::min(st.min_g, gmin);
  }
  return st;
}

}  // namespace

PpStats pp_limit(Field1D& u, const LimiterParams& params) {
  const auto& t = pp_tables_1d(u.basis.degree);
  return pp_limit_impl(u, t.B.data(), static_cast<int>(t.set.xi.size()), params);
}

PpStats pp_limit(Field2D& u, const LimiterParams& params) {
  const auto& t = pp_tables_2d(u.basis.degree);
  return pp_limit_impl(u, t.B.data(), static_cast<int>(t.set.pts.size()), params);
}

PpStats pp_scan(const Field1D& u) {
  const auto& t = pp_tables_1d(u.basis.degree);
  return pp_scan_impl(u, t.B.data(), static_cast<int>(t.set.xi.size()));
}

PpStats pp_scan(const Field2D& u) {
  const auto& t = pp_tables_2d(u.basis.degree);
  return pp_scan_impl(u, t.B.data(), static_cast<int>(t.set.pts.size()));
}

// ---------------------------------------------------------------------------
// trouble cells and characteristic limiting

void euler_eigensystem_1d(const Cons1& u, double gamma, double R[3][3], double L[3][3]) {
  const auto rep = is_admissible(u);
  if (!rep.admissible)
    throw PositivityFault(-1, "eigensystem at inadmissible average");
  const double v = u.mom[0] / u.rho;
  const double p = (gamma - 1.0) * rep.g_value;
  const double c = std::sqrt(gamma * p / u.rho);
  const double H = (u.ener + p) / u.rho;
  R[0][0] = 1.0;        R[0][1] = 1.0;       R[0][2] = 1.0;
  R[1][0] = v - c;      R[1][1] = v;         R[1][2] = v + c;
  R[2][0] = H - v * c;  R[2][1] = 0.5 * v * v; R[2][2] = H + v * c;
  const double b2 = (gamma - 1.0) / (c * c);
  const double b1 = 0.5 * b2 * v * v;
  L[0][0] = 0.5 * (b1 + v / c);  L[0][1] = -0.5 * (b2 * v + 1.0 / c);  L[0][2] = 0.5 * b2;
  L[1][0] = 1.0 - b1;            L[1][1] = b2 * v;                     L[1][2] = -b2;
  L[2][0] = 0.5 * (b1 - v / c);  L[2][1] = -0.5 * (b2 * v - 1.0 / c);  L[2][2] = 0.5 * b2;
}

void euler_eigensystem_2d(const Cons2& u, double gamma, double nx, double ny,
                          double R[4][4], double L[4][4]) {
  const auto rep = is_admissible(u);
  if (!rep.admissible)
    throw PositivityFault(-1, "eigensystem at inadmissible average");
  const double vx = u.mom[0] / u.rho, vy = u.mom[1] / u.rho;
  const double p = (gamma - 1.0) * rep.g_value;
  const double c = std::sqrt(gamma * p / u.rho);
  const double H = (u.ener + p) / u.rho;
  const double un = vx * nx + vy * ny;
  const double ut = -vx * ny + vy * nx;
  const double q2 = vx * vx + vy * vy;

  // columns: u_n - c, entropy, shear, u_n + c
  R[0][0] = 1.0;            R[0][1] = 1.0;      R[0][2] = 0.0;  R[0][3] = 1.0;
  R[1][0] = vx - c * nx;    R[1][1] = vx;       R[1][2] = -ny;  R[1][3] = vx + c * nx;
  R[2][0] = vy - c * ny;    R[2][1] = vy;       R[2][2] = nx;   R[2][3] = vy + c * ny;
  R[3][0] = H - un * c;     R[3][1] = 0.5 * q2; R[3][2] = ut;   R[3][3] = H + un * c;

  const double b2 = (gamma - 1.0) / (c * c);
  const double b1 = 0.5 * b2 * q2;
  L[0][0] = 0.5 * (b1 + un / c);
  L[0][1] = -0.5 * (b2 * vx + nx / c);
  L[0][2] = -0.5 * (b2 * vy + ny / c);
  L[0][3] = 0.5 * b2;
  L[1][0] = 1.0 - b1;  L[1][1] = b2 * vx;  L[1][2] = b2 * vy;  L[1][3] = -b2;
  L[2][0] = -ut;       L[2][1] = -ny;      L[2][2] = nx;       L[2][3] = 0.0;
  L[3][0] = 0.5 * (b1 - un / c);
  L[3][1] = -0.5 * (b2 * vx - nx / c);
  L[3][2] = -0.5 * (b2 * vy - ny / c);
  L[3][3] = 0.5 * b2;
}

namespace {

// endpoint deviation of the full polynomial: sum_{m>=1} c_m phi_m(+-1)
void endpoint_deviations_1d(const Field1D& u, int j, double* dl, double* dr) {
  const int nm = u.nmodes();
  const double* c = u.cell(j);
  for (int comp = 0; comp < u.ncomp; ++comp) {
    double vl = 0.0, vr = 0.0;
    for (int m = 1; m < nm; ++m) {
      const double s = std::sqrt(2.0 * m + 1.0);
      vr += c[comp * nm + m] * s;
      vl += c[comp * nm + m] * ((m % 2 == 0) ? s : -s);
    }
    dr[comp] = vr;        // u(x_{j+1/2}^-) - mean
    dl[comp] = -vl;       // mean - u(x_{j-1/2}^+)
  }
}

}  // namespace

std::vector<char> detect_trouble_cells(const Field1D& u, const Cons1& lga,
                                       const Cons1& rga, const LimiterParams& params) {
  const int nc = u.mesh->ncells();
  std::vector<char> mask(nc, 0);
  if (u.basis.degree == 0) return mask;
  double dl[3], dr[3];
  for (int j = 0; j < nc; ++j) {
    const double mh2 = params.tvb_m * u.mesh->h(j) * u.mesh->h(j);
    const Cons1 um = u.cell_average(j);
    const Cons1 up = (j + 1 < nc) ? u.cell_average(j + 1) : rga;
    const Cons1 uw = (j > 0) ? u.cell_average(j - 1) : lga;
    endpoint_deviations_1d(u, j, dl, dr);
    for (int comp = 0; comp < 3; ++comp) {
      const double fwd = up[comp] - um[comp];
      const double bwd = um[comp] - uw[comp];
      if (minmod_tvb(dr[comp], bwd, fwd, mh2) != dr[comp] ||
          minmod_tvb(dl[comp], bwd, fwd, mh2) != dl[comp]) {
        mask[j] = 1;
        break;
      }
    }
  }
  return mask;
}

void characteristic_slope_limit(Field1D& u, const std::vector<char>& mask,
                                const Cons1& lga, const Cons1& rga, const EosModel& eos,
                                const LimiterParams& params) {
  const int nc = u.mesh->ncells();
  const int nm = u.nmodes();
  if (u.basis.degree == 0) return;
  const bool characteristic = eos.kind() == EosModel::Kind::Ideal;
  double R[3][3], L[3][3];
  const double s1 = std::sqrt(3.0);  // phi_1(+1)
  for (int j = 0; j < nc; ++j) {
    if (!mask[j]) continue;
    const double mh2 = params.tvb_m * u.mesh->h(j) * u.mesh->h(j);
    const Cons1 um = u.cell_average(j);
    const Cons1 up = (j + 1 < nc) ? u.cell_average(j + 1) : rga;
    const Cons1 uw = (j > 0) ? u.cell_average(j - 1) : lga;
    if (characteristic) euler_eigensystem_1d(um, eos.gamma(), R, L);

    double slope[3], fwd[3], bwd[3];
    for (int comp = 0; comp < 3; ++comp) {
      slope[comp] = s1 * u.coeff(j, comp, 1);  // endpoint deviation of the linear part
      fwd[comp] = up[comp] - um[comp];
      bwd[comp] = um[comp] - uw[comp];
    }
    double ws[3], wf[3], wb[3];
    for (int r = 0; r < 3; ++r) {
      if (characteristic) {
        ws[r] = L[r][0] * slope[0] + L[r][1] * slope[1] + L[r][2] * slope[2];
        wf[r] = L[r][0] * fwd[0] + L[r][1] * fwd[1] + L[r][2] * fwd[2];
        wb[r] = L[r][0] * bwd[0] + L[r][1] * bwd[1] + L[r][2] * bwd[2];
      } else {
        ws[r] = slope[r];
        wf[r] = fwd[r];
        wb[r] = bwd[r];
      }
    }
    bool changed = false;
    double wlim[3];
    for (int r = 0; r < 3; ++r) {
      wlim[r] = minmod_tvb(ws[r], wb[r], wf[r], mh2);
      if (wlim[r] != ws[r]) changed = true;
    }
    if (!changed) continue;
    double lim[3];
    for (int comp = 0; comp < 3; ++comp) {
      if (characteristic)
        lim[comp] = R[comp][0] * wlim[0] + R[comp][1] * wlim[1] + R[comp][2] * wlim[2];
      else
        lim[comp] = wlim[comp];
    }
    for (int comp = 0; comp < 3; ++comp) {
      u.coeff(j, comp, 1) = lim[comp] / s1;
      for (int m = 2; m < nm; ++m) u.coeff(j, comp, m) = 0.0;
    }
  }
}

std::vector<char> detect_trouble_cells(const Field2D& u,
                                       const std::vector<Cons2>& gxl,
                                       const std::vector<Cons2>& gxh,
                                       const std::vector<Cons2>& gyl,
                                       const std::vector<Cons2>& gyh,
                                       const LimiterParams& params) {
  const int nx = u.mesh->nx(), ny = u.mesh->ny();
  std::vector<char> mask(u.mesh->ncells(), 0);
  if (u.basis.degree == 0) return mask;
  const int nm = u.nmodes();
  const double s1 = std::sqrt(3.0);
  // mode indices of the linear modes in the (i,j) ordering: (1,0) is mode 1,
  // (0,1) is mode 2
  for (int l = 0; l < ny; ++l) {
    for (int i = 0; i < nx; ++i) {
      const int id = u.mesh->cell(i, l);
      const double* cc = u.cell(id);
      const Cons2 um = u.cell_average(id);
      const Cons2 ue = (i + 1 < nx) ? u.cell_average(u.mesh->cell(i + 1, l)) : gxh[l];
      const Cons2 uw = (i > 0) ? u.cell_average(u.mesh->cell(i - 1, l)) : gxl[l];
      const Cons2 un = (l + 1 < ny) ? u.cell_average(u.mesh->cell(i, l + 1)) : gyh[i];
      const Cons2 us = (l > 0) ? u.cell_average(u.mesh->cell(i, l - 1)) : gyl[i];
      const double mhx = params.tvb_m * u.mesh->dx(i) * u.mesh->dx(i);
      const double mhy = params.tvb_m * u.mesh->dy(l) * u.mesh->dy(l);
      bool flag = false;
      for (int comp = 0; comp < 4 && !flag; ++comp) {
        const double sx = s1 * cc[comp * nm + 1];
        const double sy = s1 * cc[comp * nm + 2];
        if (minmod_tvb(sx, um[comp] - uw[comp], ue[comp] - um[comp], mhx) != sx) flag = true;
        if (minmod_tvb(sy, um[comp] - us[comp], un[comp] - um[comp], mhy) != sy) flag = true;
      }
      if (flag) mask[id] = 1;
    }
  }
  return mask;
}

void characteristic_slope_limit(Field2D& u, const std::vector<char>& mask,
                                const std::vector<Cons2>& gxl,
                                const std::vector<Cons2>& gxh,
                                const std::vector<Cons2>& gyl,
                                const std::vector<Cons2>& gyh, const EosModel& eos,
                                const LimiterParams& params) {
  const int nx = u.mesh->nx(), ny = u.mesh->ny();
  if (u.basis.degree == 0) return;
  const int nm = u.nmodes();
  const double s1 = std::sqrt(3.0);
  const bool characteristic = eos.kind() == EosModel::Kind::Ideal;
  double R[4][4], L[4][4];
  for (int l = 0; l < ny; ++l) {
    for (int i = 0; i < nx; ++i) {
      const int id = u.mesh->cell(i, l);
      if (!mask[id]) continue;
      const Cons2 um = u.cell_average(id);
      const Cons2 ue = (i + 1 < nx) ? u.cell_average(u.mesh->cell(i + 1, l)) : gxh[l];
      const Cons2 uw = (i > 0) ? u.cell_average(u.mesh->cell(i - 1, l)) : gxl[l];
      const Cons2 un = (l + 1 < ny) ? u.cell_average(u.mesh->cell(i, l + 1)) : gyh[i];
      const Cons2 us = (l > 0) ? u.cell_average(u.mesh->cell(i, l - 1)) : gyl[i];
      const double mhx = params.tvb_m * u.mesh->dx(i) * u.mesh->dx(i);
      const double mhy = params.tvb_m * u.mesh->dy(l) * u.mesh->dy(l);

      bool changed = false;
      double newsx[4], newsy[4];
      for (int dir = 0; dir < 2; ++dir) {
        const int mode = dir == 0 ? 1 : 2;
        const double mh2 = dir == 0 ? mhx : mhy;
        const Cons2& fw = dir == 0 ? ue : un;
        const Cons2& bw = dir == 0 ? uw : us;
        if (characteristic)
          euler_eigensystem_2d(um, eos.gamma(), dir == 0 ? 1.0 : 0.0,
                               dir == 0 ? 0.0 : 1.0, R, L);
        double ws[4], wf[4], wb[4];
        for (int r = 0; r < 4; ++r) {
          double s = 0.0, f = 0.0, b = 0.0;
          for (int c2 = 0; c2 < 4; ++c2) {
            const double lc = characteristic ? L[r][c2] : (r == c2 ? 1.0 : 0.0);
            s += lc * s1 * u.cell(id)[c2 * nm + mode];
            f += lc * (fw[c2] - um[c2]);
            b += lc * (um[c2] - bw[c2]);
          }
          ws[r] = s;
          wf[r] = f;
          wb[r] = b;
        }
        double wlim[4];
        for (int r = 0; r < 4; ++r) {
          wlim[r] = minmod_tvb(ws[r], wb[r], wf[r], mh2);
          if (wlim[r] != ws[r]) changed = true;
        }
        double* out = dir == 0 ? newsx : newsy;
        for (int c2 = 0; c2 < 4; ++c2) {
          double v = 0.0;
          for (int r = 0; r < 4; ++r)
            v += (characteristic ? R[c2][r] : (c2 == r ? 1.0 : 0.0)) * wlim[r];
          out[c2] = v / s1;
        }
      }
      if (!changed) continue;
      for (int c2 = 0; c2 < 4; ++c2) {
        u.coeff(id, c2, 1) = newsx[c2];
        u.coeff(id, c2, 2) = newsy[c2];
        for (int m = 3; m < nm; ++m) u.coeff(id, c2, m) = 0.0;
      }
    }
  }
}

}  // namespace bdg
