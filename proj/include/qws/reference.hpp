#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qws/lattice.hpp"

namespace qws {

// Published benchmark values the reproduce command compares against.
// Dataset ids follow the CLI convention: 1 = tuning, 2 = finite-size
// scaling, 5 = multiple marked vertices.

// Optimal-parameter determination per (d, L, t1): the tuned search
// (s, t2, P, theta) and the tuned walk (s, A_min, theta).
struct TuningRow {
  int d;
  int L;
  int t1;
  double s_search;
  long t2;
  double P;
  double theta_search;
  double s_walk;
  double A_min;
  double theta_walk;
};

std::span<const TuningRow> reference_tuning();

// Finite-size fits P = a1 + b1/L and t2/sqrt(N) = a2 + b2/L per (t1, d).
// b and rms-error entries are absent where the source lists none (d >= 8).
struct FiniteSizeRow {
  int t1;
  int d;
  std::vector<int> sizes;
  double a1;
  std::optional<double> b1;
  std::optional<double> err1;
  double a2;
  std::optional<double> b2;
  std::optional<double> err2;
  double ratio;  // a2 / sqrt(a1)
};

const std::vector<FiniteSizeRow>& reference_finite_size();

// Coupling used by the scaling runs for t1 in {2, 3, 4}.
double reference_scaling_s(int t1);

// Dimension fits log2(a) = c + e d and a2/sqrt(a1) = c3 + d3/d, per t1.
struct DimensionFitRow {
  int t1;
  double c1, e1;
  double c2, e2;
  double c3, e3;
};

const std::vector<DimensionFitRow>& reference_dimension_fits();

// Fixed-L fits t2/sqrt(NP) = a_l + b_l/d.
struct FixedLRow {
  int t1;
  int L;
  std::vector<int> fitted_d;
  double a_l;
  double b_l;
};

const std::vector<FixedLRow>& reference_fixed_L();

// Multi-vertex search results on the 64^3 lattice at s = 1/sqrt(2), t1 = 3:
// per-vertex peak probabilities and peak times for each marked pattern.
struct MultiVertexRow {
  const char* label;
  std::vector<VertexCoords> marked;
  std::vector<double> P;
  std::vector<long> t2;
};

const std::vector<MultiVertexRow>& reference_multi_vertex();

}  // namespace qws
