#include "bdg/points.hpp"

#include <algorithm>
#include <cmath>

#include "bdg/errors.hpp"
#include "bdg/quadrature.hpp"

namespace bdg {

namespace {

int lobatto_order_for(int degree) {
  // smallest L >= 2 with L >= (k+3)/2, so the L-point rule is exact to degree k
  int l = (degree + 3 + 1) / 2;  // ceil((k+3)/2)
  return l < 2 ? 2 : l;
}

constexpr double kSamePt = 1e-13;

}  // namespace

PositivityPointSet1D pp_point_set_1d(int degree) {
  if (degree < 0) throw DomainError("pp_point_set_1d: degree >= 0");
  const int L = lobatto_order_for(degree);
  const int N = degree + 1;
  const QuadratureRule& lob = gauss_lobatto_rule(L);
  const QuadratureRule& gau = gauss_rule(N);

  PositivityPointSet1D s;
  s.degree = degree;
  s.lobatto_order = L;
  s.gauss_order = N;
  s.w1_hat = lob.weights.front();

  for (int v = 0; v < L; ++v) {
    s.xi.push_back(lob.nodes[v]);
    s.tags.push_back((v == 0 || v == L - 1) ? PointTag::Edge : PointTag::Interior);
    s.decomposition_weights.push_back(lob.weights[v]);
  }
  for (int mu = 0; mu < N; ++mu) {
    const double x = gau.nodes[mu];
    bool dup = false;
    for (double xi : s.xi)
      if (std::abs(xi - x) < kSamePt) {
        dup = true;
        break;
      }
    if (!dup) {
      s.xi.push_back(x);
      s.tags.push_back(PointTag::SourceQuad);
      s.decomposition_weights.push_back(0.0);
    }
  }
  // sort ascending, keeping tags/weights aligned
  std::vector<int> idx(s.xi.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return s.xi[a] < s.xi[b]; });
  PositivityPointSet1D out = s;
  for (size_t i = 0; i < idx.size(); ++i) {
    out.xi[i] = s.xi[idx[i]];
    out.tags[i] = s.tags[idx[i]];
    out.decomposition_weights[i] = s.decomposition_weights[idx[i]];
  }
  return out;
}

PositivityPointSet2D pp_point_set_2d(int degree, double dx, double dy) {
  if (degree < 0) throw DomainError("pp_point_set_2d: degree >= 0");
  if (!(dx > 0.0) || !(dy > 0.0)) throw DomainError("pp_point_set_2d: dx, dy > 0");
  const int L = lobatto_order_for(degree);
  const int N = degree + 1;
  const QuadratureRule& lob = gauss_lobatto_rule(L);
  const QuadratureRule& gau = gauss_rule(N);
  const double denom = dx + dy;

  PositivityPointSet2D s;
  s.degree = degree;
  s.lobatto_order = L;
  s.gauss_order = N;
  s.w1_hat = lob.weights.front();

  auto add = [&](double x, double y, PointTag tag, double w) {
    for (size_t i = 0; i < s.pts.size(); ++i) {
      if (std::abs(s.pts[i][0] - x) < kSamePt && std::abs(s.pts[i][1] - y) < kSamePt) {
        s.decomposition_weights[i] += w;
        if (tag == PointTag::Edge) s.tags[i] = PointTag::Edge;
        else if (tag == PointTag::Interior && s.tags[i] == PointTag::SourceQuad)
          s.tags[i] = PointTag::Interior;
        return;
      }
    }
    s.pts.push_back({x, y});
    s.tags.push_back(tag);
    s.decomposition_weights.push_back(w);
  };

  // Gauss_x x Lobatto_y: rows nu = 1..L; the nu = 1, L rows are the bottom
  // and top edge Gauss points with weight dx*w1*omega/(dx+dy)
  for (int nu = 0; nu < L; ++nu) {
    const bool edge = (nu == 0 || nu == L - 1);
    for (int mu = 0; mu < N; ++mu) {
      const double w = dx * lob.weights[nu] * gau.weights[mu] / denom;
      add(gau.nodes[mu], lob.nodes[nu], edge ? PointTag::Edge : PointTag::Interior, w);
    }
  }
  // Lobatto_x x Gauss_y: left/right edge Gauss points with dy weights
  for (int nu = 0; nu < L; ++nu) {
    const bool edge = (nu == 0 || nu == L - 1);
    for (int mu = 0; mu < N; ++mu) {
      const double w = dy * lob.weights[nu] * gau.weights[mu] / denom;
      add(lob.nodes[nu], gau.nodes[mu], edge ? PointTag::Edge : PointTag::Interior, w);
    }
  }
  // interior flux/source quadrature points (Gauss x Gauss)
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) add(gau.nodes[a], gau.nodes[b], PointTag::SourceQuad, 0.0);

  return s;
}

}  // namespace bdg
