// Runtime-dispatched arithmetic kernels for the hot inner loops.
//
// Every kernel has a scalar reference implementation and (where the CPU
// supports it) an AVX2 variant. Vector variants keep the per-output
// operation order of the scalar reference (vectorization runs across the
// contiguous output index only), so scalar and SIMD results are bitwise
// identical; the equivalence suite asserts exactly that.

#ifndef BDG_KERNELS_HPP
#define BDG_KERNELS_HPP

#include <string>

namespace bdg::kernels {

// out[c*np + p] = sum_m coeff[c*nm + m] * B[m*np + p]
// Modal evaluation of ncomp components at np points; B is a basis-value
// table shared across cells.
using EvalBlockFn = void (*)(const double* coeff, int ncomp, int nm,
                             const double* B, int np, double* out);

// acc[m] += sum_q x[q] * Wt[q*nm + m]
// Quadrature accumulation of one integrand against nm test modes; Wt is a
// point-major weight table (quadrature weight folded in).
using AccumulateFn = void (*)(const double* x, const double* Wt, int nq,
                              int nm, double* acc);

// out[i] = a*x[i] + b*y[i]
using AxpbyFn = void (*)(double a, const double* x, double b, const double* y,
                         int n, double* out);

// Pointwise admissibility scan: rmin = min_i rho[i],
// gmin = min_i (en[i] - 0.5*(mx[i]^2 (+ my[i]^2)) / rho[i]).
// my may be null (1D). Assumes finite inputs and rho != 0.
using MinRhoGFn = void (*)(const double* rho, const double* mx,
                           const double* my, const double* en, int n,
                           double* rmin, double* gmin);

struct Dispatch {
  const char* name;
  EvalBlockFn eval_block;
  AccumulateFn accumulate;
  AxpbyFn axpby;
  MinRhoGFn min_rho_g;
};

// Scalar reference table (always available).
const Dispatch& scalar();

// Best table for this CPU, or the one forced by select() /
// BALANCEDG_KERNEL={scalar,avx2}.
const Dispatch& active();

// Force a table by name; throws std::invalid_argument for unknown names and
// std::runtime_error if the CPU lacks the requested features.
void select(const std::string& name);

// Names available on this CPU.
std::string available();

}  // namespace bdg::kernels

#endif
