#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qws {

// One (configuration, tuned peak) measurement used by the scaling fits.
struct ScalingSample {
  int d = 0;
  int L = 0;
  double s = 0;
  int t1 = 0;
  double P = 0;
  long t2 = 0;

  double volume() const;            // N = L^d
  double t2_over_sqrt_n() const;    // t2 / sqrt(N)
  double t2_over_sqrt_np() const;   // t2 / sqrt(N P)
};

struct FitResult {
  double a = 0;    // intercept
  double b = 0;    // slope
  double rms = 0;  // root mean square residual
  std::string model;
};

// Ordinary least squares y = a + b x. Needs at least two distinct x.
FitResult fit_linear(std::span<const double> xs, std::span<const double> ys,
                     std::string model = "linear");

// P = a1 + b1 / L over the samples with matching d and t1. L = 4 is skipped:
// the smallest lattice sits too far from the large-L regime.
FitResult fit_P_vs_L(const std::vector<ScalingSample>& samples, int d, int t1);

// t2 / sqrt(N) = a2 + b2 / L, same selection rules as fit_P_vs_L.
FitResult fit_t2_vs_L(const std::vector<ScalingSample>& samples, int d, int t1);

// log2(a) = c + e d over the large-L intercepts for d in 3..8.
FitResult fit_dimension_scaling(const std::vector<std::pair<int, double>>& a_by_d);

// a2 / sqrt(a1) = c + e / d for d in 3..8; the intercept is the infinite-d
// query cost relative to sqrt(N P).
FitResult fit_ratio_vs_inverse_d(const std::vector<std::pair<int, double>>& ratio_by_d);

// t2 / sqrt(N P) = a + b / d over the samples at one lattice size and t1.
FitResult fit_queries_vs_inverse_d_at_fixed_L(const std::vector<ScalingSample>& samples, int L,
                                              int t1);

// Per-dimension summary: large-L fits where two or more sizes are present,
// plain means otherwise (b absent), plus the a2 / sqrt(a1) ratio and its
// quotient by the Grover constant pi / 4.
struct ScalingRow {
  int d = 0;
  int L_min = 0;
  int L_max = 0;
  int sizes = 0;
  double a1 = 0;
  std::optional<double> b1;
  double a2 = 0;
  std::optional<double> b2;
  double ratio = 0;
  double ratio_over_grover = 0;
};

std::vector<ScalingRow> scaling_table(const std::vector<ScalingSample>& samples, int t1);

// Constrained sinusoid P sin^2(omega (t + phi)) fitted to a probability
// trace sampled at t = 1, 2, ...; used by the periodicity checks.
struct SinusoidFit {
  double P = 0;
  double omega = 0;
  double phi = 0;
  double rel_residual = 0;  // rms residual / P
};

SinusoidFit fit_sin_squared(std::span<const double> probs);

}  // namespace qws
