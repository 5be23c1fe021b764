#include "bdg/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace bdg::kernels {

namespace {

void eval_block_scalar(const double* coeff, int ncomp, int nm, const double* B,
                       int np, double* out) {
  for (int c = 0; c < ncomp; ++c) {
    const double* cc = coeff + c * nm;
    double* o = out + c * np;
    for (int p = 0; p < np; ++p) o[p] = cc[0] * B[p];
    for (int m = 1; m < nm; ++m) {
      const double cm = cc[m];
      const double* Bm = B + m * np;
      for (int p = 0; p < np; ++p) o[p] += cm * Bm[p];
    }
  }
}

void accumulate_scalar(const double* x, const double* Wt, int nq, int nm,
                       double* acc) {
  for (int q = 0; q < nq; ++q) {
    const double xq = x[q];
    const double* w = Wt + q * nm;
    for (int m = 0; m < nm; ++m) acc[m] += xq * w[m];
  }
}

void axpby_scalar(double a, const double* x, double b, const double* y, int n,
                  double* out) {
  for (int i = 0; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

void min_rho_g_scalar(const double* rho, const double* mx, const double* my,
                      const double* en, int n, double* rmin, double* gmin) {
  double r = rho[0];
  double ke = mx[0] * mx[0];
  if (my) ke += my[0] * my[0];
  double g = en[0] - 0.5 * ke / rho[0];
  for (int i = 1; i < n; ++i) {
    double k = mx[i] * mx[i];
    if (my) k += my[i] * my[i];
    const double gi = en[i] - 0.5 * k / rho[i];
    if (rho[i] < r) r = rho[i];
    if (gi < g) g = gi;
  }
  *rmin = r;
  *gmin = g;
}

const Dispatch kScalar{"scalar", eval_block_scalar, accumulate_scalar,
                       axpby_scalar, min_rho_g_scalar};

}  // namespace

#if defined(__x86_64__) || defined(_M_X64)
extern const Dispatch kAvx2;  // defined in kernels_avx2.cpp
static bool avx2_supported() { return __builtin_cpu_supports("avx2"); }
#else
static bool avx2_supported() { return false; }
#endif

const Dispatch& scalar() { return kScalar; }

namespace {

const Dispatch* pick_default() {
  if (const char* env = std::getenv("BALANCEDG_KERNEL")) {
    const std::string want(env);
#if defined(__x86_64__) || defined(_M_X64)
    if (want == "avx2" && avx2_supported()) return &kAvx2;
#endif
    if (want == "scalar") return &kScalar;
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_supported()) return &kAvx2;
#endif
  return &kScalar;
}

const Dispatch* g_active = nullptr;

}  // namespace

const Dispatch& active() {
  if (!g_active) g_active = pick_default();
  return *g_active;
}

void select(const std::string& name) {
  if (name == "scalar") {
    g_active = &kScalar;
    return;
  }
  if (name == "avx2") {
#if defined(__x86_64__) || defined(_M_X64)
    if (!avx2_supported()) throw std::runtime_error("avx2 not supported by this CPU");
    g_active = &kAvx2;
    return;
#else
    throw std::runtime_error("avx2 kernels not built for this architecture");
#endif
  }
  throw std::invalid_argument("unknown kernel table: " + name);
}

std::string available() {
  std::string s = "scalar";
  if (avx2_supported()) s += ",avx2";
  return s;
}

}  // namespace bdg::kernels
