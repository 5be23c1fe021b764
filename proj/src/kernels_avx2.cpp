// AVX2 kernel variants. Lanes run across the contiguous output index; the
// per-output operation order matches the scalar reference, so results are
// bitwise identical to it.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "bdg/kernels.hpp"

namespace bdg::kernels {

namespace {

__attribute__((target("avx2"))) void eval_block_avx2(const double* coeff,
                                                     int ncomp, int nm,
                                                     const double* B, int np,
                                                     double* out) {
  const int np4 = np & ~3;
  for (int c = 0; c < ncomp; ++c) {
    const double* cc = coeff + c * nm;
    double* o = out + c * np;
    {
      const __m256d c0 = _mm256_set1_pd(cc[0]);
      for (int p = 0; p < np4; p += 4)
        _mm256_storeu_pd(o + p, _mm256_mul_pd(c0, _mm256_loadu_pd(B + p)));
      for (int p = np4; p < np; ++p) o[p] = cc[0] * B[p];
    }
    for (int m = 1; m < nm; ++m) {
      const double cm = cc[m];
      const __m256d vc = _mm256_set1_pd(cm);
      const double* Bm = B + m * np;
      for (int p = 0; p < np4; p += 4) {
        __m256d acc = _mm256_loadu_pd(o + p);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(vc, _mm256_loadu_pd(Bm + p)));
        _mm256_storeu_pd(o + p, acc);
      }
      for (int p = np4; p < np; ++p) o[p] += cm * Bm[p];
    }
  }
}

__attribute__((target("avx2"))) void accumulate_avx2(const double* x,
                                                     const double* Wt, int nq,
                                                     int nm, double* acc) {
  const int nm4 = nm & ~3;
  for (int q = 0; q < nq; ++q) {
    const double xq = x[q];
    const __m256d vx = _mm256_set1_pd(xq);
    const double* w = Wt + q * nm;
    for (int m = 0; m < nm4; m += 4) {
      __m256d a = _mm256_loadu_pd(acc + m);
      a = _mm256_add_pd(a, _mm256_mul_pd(vx, _mm256_loadu_pd(w + m)));
      _mm256_storeu_pd(acc + m, a);
    }
    for (int m = nm4; m < nm; ++m) acc[m] += xq * w[m];
  }
}

__attribute__((target("avx2"))) void axpby_avx2(double a, const double* x,
                                                double b, const double* y,
                                                int n, double* out) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  const int n4 = n & ~3;
  for (int i = 0; i < n4; i += 4) {
    const __m256d t = _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(x + i)),
                                    _mm256_mul_pd(vb, _mm256_loadu_pd(y + i)));
    _mm256_storeu_pd(out + i, t);
  }
  for (int i = n4; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

__attribute__((target("avx2"))) void min_rho_g_avx2(const double* rho,
                                                    const double* mx,
                                                    const double* my,
                                                    const double* en, int n,
                                                    double* rmin,
                                                    double* gmin) {
  const __m256d half = _mm256_set1_pd(0.5);
  __m256d vr = _mm256_set1_pd(__builtin_huge_val());
  __m256d vg = vr;
  const int n4 = n & ~3;
  for (int i = 0; i < n4; i += 4) {
    const __m256d r = _mm256_loadu_pd(rho + i);
    const __m256d a = _mm256_loadu_pd(mx + i);
    __m256d k = _mm256_mul_pd(a, a);
    if (my) {
      const __m256d b = _mm256_loadu_pd(my + i);
      k = _mm256_add_pd(k, _mm256_mul_pd(b, b));
    }
    const __m256d g = _mm256_sub_pd(
        _mm256_loadu_pd(en + i), _mm256_div_pd(_mm256_mul_pd(half, k), r));
    vr = _mm256_min_pd(vr, r);
    vg = _mm256_min_pd(vg, g);
  }
  double lr[4], lg[4];
  _mm256_storeu_pd(lr, vr);
  _mm256_storeu_pd(lg, vg);
  double r = lr[0], g = lg[0];
  for (int l = 1; l < 4; ++l) {
    if (lr[l] < r) r = lr[l];
    if (lg[l] < g) g = lg[l];
  }
  for (int i = n4; i < n; ++i) {
    double k = mx[i] * mx[i];
    if (my) k += my[i] * my[i];
    const double gi = en[i] - 0.5 * k / rho[i];
    if (rho[i] < r) r = rho[i];
    if (gi < g) g = gi;
  }
  *rmin = r;
  *gmin = g;
}

}  // namespace

extern const Dispatch kAvx2;
const Dispatch kAvx2{"avx2", eval_block_avx2, accumulate_avx2, axpby_avx2,
                     min_rho_g_avx2};

}  // namespace bdg::kernels

#endif  // x86_64
