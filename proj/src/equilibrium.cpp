#include "bdg/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "bdg/errors.hpp"
#include "bdg/kernels.hpp"
#include "bdg/points.hpp"
#include "bdg/ref_tables.hpp"

namespace bdg {

namespace {

double sinc(double z) {
  if (std::abs(z) < 1e-4) {
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return std::sin(z) / z;
}

double dsinc(double z) {
  if (std::abs(z) < 1e-4) {
    const double z2 = z * z;
    return -z / 3.0 + z * z2 / 30.0;
  }
  return (z * std::cos(z) - std::sin(z)) / (z * z);
}

}  // namespace

EquilibriumProfile isothermal_profile(
    double rho0, double p0, std::function<double(double, double)> phi,
    std::function<std::array<double, 2>(double, double)> grad_phi) {
  if (!(rho0 > 0.0) || !(p0 > 0.0))
    throw DomainError("isothermal_profile: rho0, p0 > 0 required");
  const double rt0 = p0 / rho0;
  EquilibriumProfile e;
  e.isothermal = true;
  e.phi = phi;
  e.grad_phi = grad_phi;
  e.rho_e = [rho0, rt0, phi](double x, double y) {
    return rho0 * std::exp(-phi(x, y) / rt0);
  };
  e.p_e = [p0, rt0, phi](double x, double y) {
    return p0 * std::exp(-phi(x, y) / rt0);
  };
  return e;
}

EquilibriumProfile polytropic_profile(
    double K0, double gamma, double rho0, std::function<double(double, double)> phi,
    std::function<std::array<double, 2>(double, double)> grad_phi) {
  if (!(K0 > 0.0) || !(gamma > 1.0) || !(rho0 > 0.0))
    throw DomainError("polytropic_profile: K0 > 0, gamma > 1, rho0 > 0 required");
  EquilibriumProfile e;
  e.phi = phi;
  e.grad_phi = grad_phi;
  const double gm1 = gamma - 1.0;
  e.rho_e = [=](double x, double y) {
    const double b = std::pow(rho0, gm1) - gm1 * phi(x, y) / (K0 * gamma);
    if (!(b > 0.0)) throw DomainError("polytropic_profile: nonpositive density");
    return std::pow(b, 1.0 / gm1);
  };
  e.p_e = [=](double x, double y) {
    const double b = std::pow(rho0, gm1) - gm1 * phi(x, y) / (K0 * gamma);
    if (!(b > 0.0)) throw DomainError("polytropic_profile: nonpositive density");
    return K0 * std::pow(b, gamma / gm1);
  };
  return e;
}

EquilibriumProfile gas_sphere_profile(double K0, double rho_c, double g) {
  if (!(K0 > 0.0) || !(rho_c > 0.0) || !(g > 0.0))
    throw DomainError("gas_sphere_profile: positive parameters required");
  const double alpha = std::sqrt(2.0 * M_PI * g / K0);
  EquilibriumProfile e;
  e.phi = [=](double x, double y) {
    const double r = std::sqrt(x * x + y * y);
    return -2.0 * K0 * rho_c * sinc(alpha * r);
  };
  e.grad_phi = [=](double x, double y) -> std::array<double, 2> {
    const double r = std::sqrt(x * x + y * y);
    // d/dr phi = -2 K0 rho_c alpha sinc'(alpha r); times (x/r, y/r)
    if (r < 1e-14) {
      const double s = 2.0 * K0 * rho_c * alpha * alpha / 3.0;
      return {s * x, s * y};
    }
    const double dr = -2.0 * K0 * rho_c * alpha * dsinc(alpha * r);
    return {dr * x / r, dr * y / r};
  };
  e.rho_e = [=](double x, double y) {
    const double r = std::sqrt(x * x + y * y);
    const double v = rho_c * sinc(alpha * r);
    if (!(v > 0.0)) throw DomainError("gas_sphere_profile: density zero crossing in domain");
    return v;
  };
  e.p_e = [ep = e.rho_e, K0](double x, double y) {
    const double r = ep(x, y);
    return K0 * r * r;
  };
  return e;
}

EquilibriumProfile constant_density_profile(
    double rho_star, double C, std::function<double(double, double)> phi,
    std::function<std::array<double, 2>(double, double)> grad_phi) {
  if (!(rho_star > 0.0)) throw DomainError("constant_density_profile: rho > 0");
  EquilibriumProfile e;
  e.phi = phi;
  e.grad_phi = grad_phi;
  e.rho_e = [rho_star](double, double) { return rho_star; };
  e.p_e = [=](double x, double y) {
    const double p = C - rho_star * phi(x, y);
    if (!(p > 0.0)) throw DomainError("constant_density_profile: nonpositive pressure");
    return p;
  };
  return e;
}

namespace {

// Fritsch-Carlson monotone cubic interpolation
struct Pchip {
  std::vector<double> x, y, d;  // nodes, values, derivatives

  void build() {
    const size_t n = x.size();
    d.assign(n, 0.0);
    if (n == 1) return;
    std::vector<double> h(n - 1), del(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
      h[i] = x[i + 1] - x[i];
      del[i] = (y[i + 1] - y[i]) / h[i];
    }
    if (n == 2) {
      d[0] = d[1] = del[0];
      return;
    }
    for (size_t i = 1; i + 1 < n; ++i) {
      if (del[i - 1] * del[i] <= 0.0) {
        d[i] = 0.0;
      } else {
        const double w1 = 2.0 * h[i] + h[i - 1];
        const double w2 = h[i] + 2.0 * h[i - 1];
        d[i] = (w1 + w2) / (w1 / del[i - 1] + w2 / del[i]);
      }
    }
    auto endslope = [](double h0, double h1, double d0, double d1) {
      double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
      if (s * d0 <= 0.0) s = 0.0;
      else if (d0 * d1 <= 0.0 && std::abs(s) > 3.0 * std::abs(d0)) s = 3.0 * d0;
      return s;
    };
    d[0] = endslope(h[0], h[1], del[0], del[1]);
    d[n - 1] = endslope(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
  }

  double eval(double t) const {
    if (t <= x.front()) return y.front() + d.front() * (t - x.front());
    if (t >= x.back()) return y.back() + d.back() * (t - x.back());
    size_t i = std::upper_bound(x.begin(), x.end(), t) - x.begin() - 1;
    const double h = x[i + 1] - x[i];
    const double s = (t - x[i]) / h;
    const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
    const double h10 = s * (1.0 - s) * (1.0 - s);
    const double h01 = s * s * (3.0 - 2.0 * s);
    const double h11 = s * s * (s - 1.0);
    return h00 * y[i] + h * h10 * d[i] + h01 * y[i + 1] + h * h11 * d[i + 1];
  }
};

}  // namespace

EquilibriumProfile tabulated_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("tabulated_profile: cannot open " + path);
  auto rho = std::make_shared<Pchip>();
  auto pre = std::make_shared<Pchip>();
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double x, r, p;
    if (ss >> x >> r >> p) {
      if (!(r > 0.0) || !(p > 0.0))
        throw DomainError("tabulated_profile: nonpositive record");
      rho->x.push_back(x);
      rho->y.push_back(r);
      pre->x.push_back(x);
      pre->y.push_back(p);
    }
  }
  if (rho->x.size() < 2) throw DomainError("tabulated_profile: need at least 2 records");
  for (size_t i = 0; i + 1 < rho->x.size(); ++i)
    if (!(rho->x[i + 1] > rho->x[i]))
      throw DomainError("tabulated_profile: positions must increase");
  rho->build();
  pre->build();
  EquilibriumProfile e;
  e.rho_e = [rho](double x, double) { return rho->eval(x); };
  e.p_e = [pre](double x, double) { return pre->eval(x); };
  return e;
}

void validate_profile(const EquilibriumProfile& p, double xmin, double xmax,
                      double ymin, double ymax, bool two_d, double margin) {
  const int ns = 200;
  for (int i = 0; i <= ns; ++i) {
    const double x = (xmin - margin) + (xmax - xmin + 2.0 * margin) * i / ns;
    if (!two_d) {
      if (!(p.rho_e(x, 0.0) > 0.0) || !(p.p_e(x, 0.0) > 0.0))
        throw DomainError("equilibrium profile nonpositive in the domain");
      continue;
    }
    for (int j = 0; j <= ns; ++j) {
      const double y = (ymin - margin) + (ymax - ymin + 2.0 * margin) * j / ns;
      if (!(p.rho_e(x, y) > 0.0) || !(p.p_e(x, y) > 0.0))
        throw DomainError("equilibrium profile nonpositive in the domain");
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

// energy channel of the projected triple
double energy_channel(const EquilibriumProfile& prof, const EosModel& eos, double x,
                      double y) {
  const double r = prof.rho_e(x, y);
  const double p = prof.p_e(x, y);
  if (eos.kind() == EosModel::Kind::Ideal) return p / (eos.gamma() - 1.0);
  return r * eos.internal_energy(r, p);
}

// project prof onto one detached cell [a,b]; returns the [3*nm] block
std::vector<double> project_ghost_cell_1d(const EquilibriumProfile& prof,
                                          const EosModel& eos, double a, double b,
                                          int degree, const LimiterParams& params) {
  Mesh1D gm;
  gm.edges = {a, b};
  Field1D f = l2_project(
      [&](double x, double* out) {
        out[0] = prof.rho_e(x, 0.0);
        out[1] = 0.0;
        out[2] = energy_channel(prof, eos, x, 0.0);
      },
      gm, degree, 3);
  pp_limit(f, params);
  return {f.data.begin(), f.data.end()};
}

}  // namespace

ProjectedEquilibrium1D project_equilibrium(const EquilibriumProfile& prof,
                                           const Mesh1D& mesh, int degree,
                                           const EosModel& eos, EqGhost left,
                                           EqGhost right, const LimiterParams& params) {
  const bool ideal = eos.kind() == EosModel::Kind::Ideal;
  const double gm1 = ideal ? eos.gamma() - 1.0 : 0.0;
  ProjectedEquilibrium1D out;
  out.triple = l2_project(
      [&](double x, double* o) {
        o[0] = prof.rho_e(x, 0.0);
        o[1] = 0.0;
        o[2] = energy_channel(prof, eos, x, 0.0);
      },
      mesh, degree, 3);

  // positivity fix (identity when the projection already clears the floors)
  const PpStats fix = pp_limit(out.triple, params);
  out.fix_applied = fix.cells_density_limited + fix.cells_energy_limited > 0;

  const int nc = mesh.ncells();
  const RefTables1D rt(degree);
  const int nm = rt.nm, N = rt.N;
  out.ngauss = N;

  if (left == EqGhost::Extension)
    out.ghost_left =
        project_ghost_cell_1d(prof, eos, mesh.edges[0] - mesh.h(0), mesh.edges[0], degree, params);
  if (right == EqGhost::Extension)
    out.ghost_right = project_ghost_cell_1d(prof, eos, mesh.edges[nc],
                                            mesh.edges[nc] + mesh.h(nc - 1), degree, params);

  const auto& kern = kernels::active();

  // endpoint traces of (rho, E) for every cell: [cell][comp in {rho,E}][side]
  std::vector<double> tr(static_cast<size_t>(nc) * 3 * 2);
  for (int j = 0; j < nc; ++j)
    kern.eval_block(out.triple.cell(j), 3, nm, rt.Bend.data(), 2, tr.data() + j * 6);

  auto trace_rho = [&](int j, int side) { return tr[j * 6 + side]; };
  auto trace_E = [&](int j, int side) { return tr[j * 6 + 4 + side]; };

  auto ghost_vals = [&](const std::vector<double>& g, int side, double& r, double& E) {
    std::vector<double> v(6);
    kern.eval_block(g.data(), 3, nm, rt.Bend.data(), 2, v.data());
    r = v[side];
    E = v[4 + side];
  };

  const int ni = nc + 1;
  out.pe_m.resize(ni);
  out.pe_p.resize(ni);
  out.pstar.resize(ni);
  out.jump.resize(ni);
  out.rho_m.resize(ni);
  out.rho_p.resize(ni);
  out.ee_m.resize(ni);
  out.ee_p.resize(ni);
  out.estar_m.resize(ni);
  out.estar_p.resize(ni);

  for (int i = 0; i <= nc; ++i) {
    double rm, Em, rp, Ep;
    if (i > 0) {
      rm = trace_rho(i - 1, 1);
      Em = trace_E(i - 1, 1);
    } else {
      switch (left) {
        case EqGhost::Extension: ghost_vals(out.ghost_left, 1, rm, Em); break;
        case EqGhost::Wrap: rm = trace_rho(nc - 1, 1); Em = trace_E(nc - 1, 1); break;
        default: rm = trace_rho(0, 0); Em = trace_E(0, 0); break;  // Mirror/CopyTrace
      }
    }
    if (i < nc) {
      rp = trace_rho(i, 0);
      Ep = trace_E(i, 0);
    } else {
      switch (right) {
        case EqGhost::Extension: ghost_vals(out.ghost_right, 0, rp, Ep); break;
        case EqGhost::Wrap: rp = trace_rho(0, 0); Ep = trace_E(0, 0); break;
        default: rp = trace_rho(nc - 1, 1); Ep = trace_E(nc - 1, 1); break;
      }
    }
    const double pm = ideal ? gm1 * Em : eos.pressure(rm, Em);
    const double pp = ideal ? gm1 * Ep : eos.pressure(rp, Ep);
    out.pe_m[i] = pm;
    out.pe_p[i] = pp;
    out.pstar[i] = 0.5 * (pm + pp);
    out.jump[i] = pp - pm;
    out.rho_m[i] = rm;
    out.rho_p[i] = rp;
    out.ee_m[i] = Em / rm;
    out.ee_p[i] = Ep / rp;
    out.estar_m[i] = eos.internal_energy(rm, out.pstar[i]);
    out.estar_p[i] = eos.internal_energy(rp, out.pstar[i]);
  }

  // Gauss tables
  out.rho_g.resize(static_cast<size_t>(nc) * N);
  out.p_g.resize(static_cast<size_t>(nc) * N);
  out.dpdx_g.resize(static_cast<size_t>(nc) * N);
  out.rho_bar.resize(nc);
  out.p_bar.resize(nc);
  out.e_center.resize(nc);

  const QuadratureRule& pq = gauss_rule(degree + 3);  // general-EOS reprojection rule
  const Basis1D basis(degree);
  std::vector<double> vals(3 * N);
  for (int j = 0; j < nc; ++j) {
    const double* c = out.triple.cell(j);
    kern.eval_block(c, 3, nm, rt.Bg.data(), N, vals.data());
    const double invh2 = 2.0 / mesh.h(j);
    for (int mu = 0; mu < N; ++mu) {
      out.rho_g[j * N + mu] = vals[mu];
      const double Eg = vals[2 * N + mu];
      out.p_g[j * N + mu] = ideal ? gm1 * Eg : eos.pressure(vals[mu], Eg);
    }
    if (ideal) {
      for (int mu = 0; mu < N; ++mu) {
        double dE = 0.0;
        for (int m = 0; m < nm; ++m) dE += c[2 * nm + m] * rt.Dg[m * N + mu];
        out.dpdx_g[j * N + mu] = gm1 * dE * invh2;
      }
    } else {
      // p_h^e is pointwise EOS-inverted, not a polynomial: differentiate its
      // per-cell L2 reprojection
      std::vector<double> pc(nm, 0.0);
      for (size_t q = 0; q < pq.nodes.size(); ++q) {
        double rq = 0.0, Eq = 0.0;
        for (int m = 0; m < nm; ++m) {
          rq += c[m] * basis.value(m, pq.nodes[q]);
          Eq += c[2 * nm + m] * basis.value(m, pq.nodes[q]);
        }
        const double pv = eos.pressure(rq, Eq);
        for (int m = 0; m < nm; ++m) pc[m] += pq.weights[q] * pv * basis.value(m, pq.nodes[q]);
      }
      for (int mu = 0; mu < N; ++mu) {
        double dp = 0.0;
        for (int m = 0; m < nm; ++m) dp += pc[m] * rt.Dg[m * N + mu];
        out.dpdx_g[j * N + mu] = dp * invh2;
      }
    }
    out.rho_bar[j] = c[0];
    if (ideal) {
      out.p_bar[j] = gm1 * c[2 * nm];
    } else {
      double pb = 0.0;
      for (size_t q = 0; q < pq.nodes.size(); ++q) {
        double rq = 0.0, Eq = 0.0;
        for (int m = 0; m < nm; ++m) {
          rq += c[m] * basis.value(m, pq.nodes[q]);
          Eq += c[2 * nm + m] * basis.value(m, pq.nodes[q]);
        }
        pb += pq.weights[q] * eos.pressure(rq, Eq);
      }
      out.p_bar[j] = pb;
    }
    double rc = 0.0, Ec = 0.0;
    for (int m = 0; m < nm; ++m) {
      rc += c[m] * basis.value(m, 0.0);
      Ec += c[2 * nm + m] * basis.value(m, 0.0);
    }
    out.e_center[j] = Ec / rc;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<double> project_ghost_cell_2d(const EquilibriumProfile& prof,
                                          const EosModel& eos, double ax, double bx,
                                          double ay, double by, int degree,
                                          const LimiterParams& params) {
  Mesh2D gm;
  gm.x_edges = {ax, bx};
  gm.y_edges = {ay, by};
  Field2D f = l2_project(
      [&](double x, double y, double* out) {
        out[0] = prof.rho_e(x, y);
        out[1] = 0.0;
        out[2] = 0.0;
        out[3] = energy_channel(prof, eos, x, y);
      },
      gm, degree, 4);
  pp_limit(f, params);
  return {f.data.begin(), f.data.end()};
}

}  // namespace

ProjectedEquilibrium2D project_equilibrium(const EquilibriumProfile& prof,
                                           const Mesh2D& mesh, int degree,
                                           const EosModel& eos, EqGhost xlo, EqGhost xhi,
                                           EqGhost ylo, EqGhost yhi,
                                           const LimiterParams& params) {
  const bool ideal = eos.kind() == EosModel::Kind::Ideal;
  const double gm1 = ideal ? eos.gamma() - 1.0 : 0.0;
  ProjectedEquilibrium2D out;
  out.triple = l2_project(
      [&](double x, double y, double* o) {
        o[0] = prof.rho_e(x, y);
        o[1] = 0.0;
        o[2] = 0.0;
        o[3] = energy_channel(prof, eos, x, y);
      },
      mesh, degree, 4);
  const PpStats fix = pp_limit(out.triple, params);
  out.fix_applied = fix.cells_density_limited + fix.cells_energy_limited > 0;

  const int nx = mesh.nx(), ny = mesh.ny();
  const RefTables2D rt(degree);
  const int nm = rt.nm, N = rt.N, nq = rt.nq;
  out.ngauss = N;
  const auto& kern = kernels::active();

  // edge-trace evaluation per cell: order [L | R | B | T], each N points
  const int ne = 4 * N;
  std::vector<double> edgeB(static_cast<size_t>(nm) * ne);
  for (int m = 0; m < nm; ++m) {
    for (int mu = 0; mu < N; ++mu) {
      edgeB[m * ne + mu] = rt.BL[m * N + mu];
      edgeB[m * ne + N + mu] = rt.BR[m * N + mu];
      edgeB[m * ne + 2 * N + mu] = rt.BB[m * N + mu];
      edgeB[m * ne + 3 * N + mu] = rt.BT[m * N + mu];
    }
  }
  std::vector<double> etr(static_cast<size_t>(mesh.ncells()) * 4 * ne);
  for (int id = 0; id < mesh.ncells(); ++id)
    kern.eval_block(out.triple.cell(id), 4, nm, edgeB.data(), ne, etr.data() + static_cast<size_t>(id) * 4 * ne);
  // component c value at edge point: etr[id*4*ne + c*ne + (edge offset + mu)]
  auto edge_val = [&](int id, int comp, int edge, int mu) {
    return etr[static_cast<size_t>(id) * 4 * ne + comp * ne + edge * N + mu];
  };
  // edge ids: 0=L, 1=R, 2=B, 3=T

  // ghost projections where needed (strip of ghost cells per side)
  std::vector<std::vector<double>> gxl(ny), gxh(ny), gyl(nx), gyh(nx);
  if (xlo == EqGhost::Extension)
    for (int l = 0; l < ny; ++l)
      gxl[l] = project_ghost_cell_2d(prof, eos, mesh.x_edges[0] - mesh.dx(0), mesh.x_edges[0],
                                     mesh.y_edges[l], mesh.y_edges[l + 1], degree, params);
  if (xhi == EqGhost::Extension)
    for (int l = 0; l < ny; ++l)
      gxh[l] = project_ghost_cell_2d(prof, eos, mesh.x_edges[nx], mesh.x_edges[nx] + mesh.dx(nx - 1),
                                     mesh.y_edges[l], mesh.y_edges[l + 1], degree, params);
  if (ylo == EqGhost::Extension)
    for (int i = 0; i < nx; ++i)
      gyl[i] = project_ghost_cell_2d(prof, eos, mesh.x_edges[i], mesh.x_edges[i + 1],
                                     mesh.y_edges[0] - mesh.dy(0), mesh.y_edges[0], degree, params);
  if (yhi == EqGhost::Extension)
    for (int i = 0; i < nx; ++i)
      gyh[i] = project_ghost_cell_2d(prof, eos, mesh.x_edges[i], mesh.x_edges[i + 1],
                                     mesh.y_edges[ny], mesh.y_edges[ny] + mesh.dy(ny - 1), degree, params);

  auto ghost_edge_val = [&](const std::vector<double>& block, int comp, int edge, int mu) {
    std::vector<double> v(static_cast<size_t>(4) * ne);
    kern.eval_block(block.data(), 4, nm, edgeB.data(), ne, v.data());
    return v[comp * ne + edge * N + mu];
  };

  auto fill_face = [&](double rm, double Em, double rp, double Ep, size_t idx,
                       std::vector<double>& pe_m, std::vector<double>& pe_p,
                       std::vector<double>& pstar, std::vector<double>& jump,
                       std::vector<double>& rho_m, std::vector<double>& rho_p,
                       std::vector<double>& ee_m, std::vector<double>& ee_p,
                       std::vector<double>& estar_m, std::vector<double>& estar_p) {
    const double pm = ideal ? gm1 * Em : eos.pressure(rm, Em);
    const double pp = ideal ? gm1 * Ep : eos.pressure(rp, Ep);
    pe_m[idx] = pm;
    pe_p[idx] = pp;
    pstar[idx] = 0.5 * (pm + pp);
    jump[idx] = pp - pm;
    rho_m[idx] = rm;
    rho_p[idx] = rp;
    ee_m[idx] = Em / rm;
    ee_p[idx] = Ep / rp;
    estar_m[idx] = eos.internal_energy(rm, pstar[idx]);
    estar_p[idx] = eos.internal_energy(rp, pstar[idx]);
  };

  // x-interfaces
  {
    const size_t nxt = static_cast<size_t>(nx + 1) * ny * N;
    out.x_pe_m.resize(nxt); out.x_pe_p.resize(nxt); out.x_pstar.resize(nxt);
    out.x_jump.resize(nxt); out.x_rho_m.resize(nxt); out.x_rho_p.resize(nxt);
    out.x_ee_m.resize(nxt); out.x_ee_p.resize(nxt); out.x_estar_m.resize(nxt);
    out.x_estar_p.resize(nxt);
    for (int l = 0; l < ny; ++l) {
      for (int i = 0; i <= nx; ++i) {
        for (int mu = 0; mu < N; ++mu) {
          double rm, Em, rp, Ep;
          if (i > 0) {
            rm = edge_val(mesh.cell(i - 1, l), 0, 1, mu);
            Em = edge_val(mesh.cell(i - 1, l), 3, 1, mu);
          } else {
            switch (xlo) {
              case EqGhost::Extension:
                rm = ghost_edge_val(gxl[l], 0, 1, mu);
                Em = ghost_edge_val(gxl[l], 3, 1, mu);
                break;
              case EqGhost::Wrap:
                rm = edge_val(mesh.cell(nx - 1, l), 0, 1, mu);
                Em = edge_val(mesh.cell(nx - 1, l), 3, 1, mu);
                break;
              default:
                rm = edge_val(mesh.cell(0, l), 0, 0, mu);
                Em = edge_val(mesh.cell(0, l), 3, 0, mu);
                break;
            }
          }
          if (i < nx) {
            rp = edge_val(mesh.cell(i, l), 0, 0, mu);
            Ep = edge_val(mesh.cell(i, l), 3, 0, mu);
          } else {
            switch (xhi) {
              case EqGhost::Extension:
                rp = ghost_edge_val(gxh[l], 0, 0, mu);
                Ep = ghost_edge_val(gxh[l], 3, 0, mu);
                break;
              case EqGhost::Wrap:
                rp = edge_val(mesh.cell(0, l), 0, 0, mu);
                Ep = edge_val(mesh.cell(0, l), 3, 0, mu);
                break;
              default:
                rp = edge_val(mesh.cell(nx - 1, l), 0, 1, mu);
                Ep = edge_val(mesh.cell(nx - 1, l), 3, 1, mu);
                break;
            }
          }
          const size_t idx = (static_cast<size_t>(i) + static_cast<size_t>(nx + 1) * l) * N + mu;
          fill_face(rm, Em, rp, Ep, idx, out.x_pe_m, out.x_pe_p, out.x_pstar, out.x_jump,
                    out.x_rho_m, out.x_rho_p, out.x_ee_m, out.x_ee_p, out.x_estar_m,
                    out.x_estar_p);
        }
      }
    }
  }

  // y-interfaces
  {
    const size_t nyt = static_cast<size_t>(nx) * (ny + 1) * N;
    out.y_pe_m.resize(nyt); out.y_pe_p.resize(nyt); out.y_pstar.resize(nyt);
    out.y_jump.resize(nyt); out.y_rho_m.resize(nyt); out.y_rho_p.resize(nyt);
    out.y_ee_m.resize(nyt); out.y_ee_p.resize(nyt); out.y_estar_m.resize(nyt);
    out.y_estar_p.resize(nyt);
    for (int l = 0; l <= ny; ++l) {
      for (int i = 0; i < nx; ++i) {
        for (int mu = 0; mu < N; ++mu) {
          double rm, Em, rp, Ep;
          if (l > 0) {
            rm = edge_val(mesh.cell(i, l - 1), 0, 3, mu);
            Em = edge_val(mesh.cell(i, l - 1), 3, 3, mu);
          } else {
            switch (ylo) {
              case EqGhost::Extension:
                rm = ghost_edge_val(gyl[i], 0, 3, mu);
                Em = ghost_edge_val(gyl[i], 3, 3, mu);
                break;
              case EqGhost::Wrap:
                rm = edge_val(mesh.cell(i, ny - 1), 0, 3, mu);
                Em = edge_val(mesh.cell(i, ny - 1), 3, 3, mu);
                break;
              default:
                rm = edge_val(mesh.cell(i, 0), 0, 2, mu);
                Em = edge_val(mesh.cell(i, 0), 3, 2, mu);
                break;
            }
          }
          if (l < ny) {
            rp = edge_val(mesh.cell(i, l), 0, 2, mu);
            Ep = edge_val(mesh.cell(i, l), 3, 2, mu);
          } else {
            switch (yhi) {
              case EqGhost::Extension:
                rp = ghost_edge_val(gyh[i], 0, 2, mu);
                Ep = ghost_edge_val(gyh[i], 3, 2, mu);
                break;
              case EqGhost::Wrap:
                rp = edge_val(mesh.cell(i, 0), 0, 2, mu);
                Ep = edge_val(mesh.cell(i, 0), 3, 2, mu);
                break;
              default:
                rp = edge_val(mesh.cell(i, ny - 1), 0, 3, mu);
                Ep = edge_val(mesh.cell(i, ny - 1), 3, 3, mu);
                break;
            }
          }
          const size_t idx = (static_cast<size_t>(i) + static_cast<size_t>(nx) * l) * N + mu;
          fill_face(rm, Em, rp, Ep, idx, out.y_pe_m, out.y_pe_p, out.y_pstar, out.y_jump,
                    out.y_rho_m, out.y_rho_p, out.y_ee_m, out.y_ee_p, out.y_estar_m,
                    out.y_estar_p);
        }
      }
    }
  }

  // interior Gauss tables
  const int ncl = mesh.ncells();
  out.rho_g.resize(static_cast<size_t>(ncl) * nq);
  out.p_g.resize(static_cast<size_t>(ncl) * nq);
  out.dpdx_g.resize(static_cast<size_t>(ncl) * nq);
  out.dpdy_g.resize(static_cast<size_t>(ncl) * nq);
  out.rho_bar.resize(ncl);
  out.p_bar.resize(ncl);
  out.e_center.resize(ncl);

  const Basis2D basis(degree);
  const QuadratureRule& pq = gauss_rule(degree + 3);
  std::vector<double> vals(static_cast<size_t>(4) * nq);
  for (int l = 0; l < ny; ++l) {
    for (int i = 0; i < nx; ++i) {
      const int id = mesh.cell(i, l);
      const double* c = out.triple.cell(id);
      kern.eval_block(c, 4, nm, rt.Bq.data(), nq, vals.data());
      const double sx = 2.0 / mesh.dx(i), sy = 2.0 / mesh.dy(l);
      for (int q = 0; q < nq; ++q) {
        out.rho_g[static_cast<size_t>(id) * nq + q] = vals[q];
        const double Eq = vals[3 * nq + q];
        out.p_g[static_cast<size_t>(id) * nq + q] =
            ideal ? gm1 * Eq : eos.pressure(vals[q], Eq);
      }
      if (ideal) {
        for (int q = 0; q < nq; ++q) {
          double dEx = 0.0, dEy = 0.0;
          for (int m = 0; m < nm; ++m) {
            dEx += c[3 * nm + m] * rt.Dxq[m * nq + q];
            dEy += c[3 * nm + m] * rt.Dyq[m * nq + q];
          }
          out.dpdx_g[static_cast<size_t>(id) * nq + q] = gm1 * dEx * sx;
          out.dpdy_g[static_cast<size_t>(id) * nq + q] = gm1 * dEy * sy;
        }
        out.p_bar[id] = gm1 * c[3 * nm];
      } else {
        // reproject the pointwise pressure, then differentiate
        std::vector<double> pc(nm, 0.0);
        double pb = 0.0;
        for (size_t qb = 0; qb < pq.nodes.size(); ++qb) {
          for (size_t qa = 0; qa < pq.nodes.size(); ++qa) {
            double rq = 0.0, Eq = 0.0;
            for (int m = 0; m < nm; ++m) {
              const double bv = basis.value(m, pq.nodes[qa], pq.nodes[qb]);
              rq += c[m] * bv;
              Eq += c[3 * nm + m] * bv;
            }
            const double pv = eos.pressure(rq, Eq);
            const double w = pq.weights[qa] * pq.weights[qb];
            pb += w * pv;
            for (int m = 0; m < nm; ++m)
              pc[m] += w * pv * basis.value(m, pq.nodes[qa], pq.nodes[qb]);
          }
        }
        out.p_bar[id] = pb;
        for (int q = 0; q < nq; ++q) {
          double dpx = 0.0, dpy = 0.0;
          for (int m = 0; m < nm; ++m) {
            dpx += pc[m] * rt.Dxq[m * nq + q];
            dpy += pc[m] * rt.Dyq[m * nq + q];
          }
          out.dpdx_g[static_cast<size_t>(id) * nq + q] = dpx * sx;
          out.dpdy_g[static_cast<size_t>(id) * nq + q] = dpy * sy;
        }
      }
      out.rho_bar[id] = c[0];
      double rc = 0.0, Ec = 0.0;
      for (int m = 0; m < nm; ++m) {
        const double bv = basis.value(m, 0.0, 0.0);
        rc += c[m] * bv;
        Ec += c[3 * nm + m] * bv;
      }
      out.e_center[id] = Ec / rc;
    }
  }
  return out;
}

}  // namespace bdg
