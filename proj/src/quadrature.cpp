#include "bdg/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "bdg/errors.hpp"

namespace bdg {

double legendre(int n, double x) {
  if (n == 0) return 1.0;
  double pm1 = 1.0, p = x;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p - (k - 1.0) * pm1) / k;
    pm1 = p;
    p = pk;
  }
  return p;
}

double legendre_deriv(int n, double x) {
  if (n == 0) return 0.0;
  // (1-x^2) P_n' = n (P_{n-1} - x P_n); endpoints from P_n'(+-1) = (+-1)^{n-1} n(n+1)/2
  if (std::abs(std::abs(x) - 1.0) < 1e-14) {
    const double v = 0.5 * n * (n + 1.0);
    return (x > 0.0) ? v : ((n - 1) % 2 == 0 ? v : -v);
  }
  return n * (legendre(n - 1, x) - x * legendre(n, x)) / (1.0 - x * x);
}

namespace {

QuadratureRule make_gauss(int n) {
  if (n < 1) throw DomainError("gauss_rule: N >= 1 required");
  QuadratureRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, Newton on P_n
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const double f = legendre(n, x);
      const double df = n * (legendre(n - 1, x) - x * f) / (1.0 - x * x);
      const double dx = f / df;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = n * (legendre(n - 1, x) - x * legendre(n, x)) / (1.0 - x * x);
    r.nodes[n - 1 - i] = x;  // store ascending
    r.weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);  // = (2/((1-x^2)P'^2)) / 2
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

QuadratureRule make_lobatto(int l) {
  if (l < 2) throw DomainError("gauss_lobatto_rule: L >= 2 required");
  QuadratureRule r;
  r.nodes.resize(l);
  r.weights.resize(l);
  r.nodes[0] = -1.0;
  r.nodes[l - 1] = 1.0;
  const double wend = 1.0 / (l * (l - 1.0));  // 2/(L(L-1)) halved by normalization
  r.weights[0] = r.weights[l - 1] = wend;
  // interior nodes: roots of P'_{L-1}
  const int n = l - 1;
  for (int i = 1; i < l - 1; ++i) {
    double x = std::cos(M_PI * (l - 1.0 - i) / (l - 1.0));  // GLL-ish guess, ascending
    for (int it = 0; it < 100; ++it) {
      // f = P'_n, f' = P''_n from the Legendre ODE: (1-x^2)P'' = 2xP' - n(n+1)P
      const double p = legendre(n, x);
      const double dp = n * (legendre(n - 1, x) - x * p) / (1.0 - x * x);
      const double ddp = (2.0 * x * dp - n * (n + 1.0) * p) / (1.0 - x * x);
      const double dx = dp / ddp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double p = legendre(n, x);
    r.nodes[i] = x;
    r.weights[i] = 1.0 / (l * (l - 1.0) * p * p);  // normalized
  }
  if (l % 2 == 1) r.nodes[l / 2] = 0.0;
  return r;
}

std::mutex g_mtx;

}  // namespace

const QuadratureRule& gauss_rule(int n) {
  std::lock_guard<std::mutex> lock(g_mtx);
  static std::map<int, QuadratureRule> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gauss(n)).first;
  return it->second;
}

const QuadratureRule& gauss_lobatto_rule(int l) {
  std::lock_guard<std::mutex> lock(g_mtx);
  static std::map<int, QuadratureRule> cache;
  auto it = cache.find(l);
  if (it == cache.end()) it = cache.emplace(l, make_lobatto(l)).first;
  return it->second;
}

}  // namespace bdg
