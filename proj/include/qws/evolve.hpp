#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qws/dirac.hpp"
#include "qws/lattice.hpp"
#include "qws/peak.hpp"

namespace qws {

// Mixing amplitude s = sin(sqrt(d) tau / 2) and walk steps per oracle query.
struct WalkParams {
  double s = 0;
  int t1 = 1;

  static WalkParams make(double s, int t1);
  double c() const { return std::sqrt(1.0 - s * s); }
  double tau(int d) const { return 2.0 * std::asin(s) / std::sqrt(static_cast<double>(d)); }
};

// Real state vector over the lattice. The walk operator is real, so no
// imaginary parts are ever needed.
struct AmplitudeField {
  LatticeConfig cfg;
  Eigen::VectorXd amp;
};

struct MarkedSet {
  std::vector<Index> vertices;

  static MarkedSet single(Index v, const LatticeConfig& cfg);
  static MarkedSet of(std::vector<Index> vs, const LatticeConfig& cfg);
};

AmplitudeField uniform_state(const LatticeConfig& cfg);
AmplitudeField point_state(const LatticeConfig& cfg, Index v);

// R = I - 2 sum_v |v><v| over the marked set: negates marked amplitudes.
void apply_oracle(AmplitudeField& field, const MarkedSet& marked);

double marked_probability(const AmplitudeField& field, const MarkedSet& marked);
double norm_error(const AmplitudeField& field);

// One walk step is W = U_e U_o: the odd half-step followed by the even one.
// Each half-step rotates every elementary hypercube of its parity by the
// 2^d x 2^d block rotation, touching no other amplitudes. Blocks are
// independent, so the work is split over threads by contiguous ranges of
// lattice rows; the result is bitwise identical for any thread count.
class WalkOperator {
 public:
  WalkOperator(const LatticeConfig& cfg, const WalkParams& params, int threads = 1);

  void half_step(AmplitudeField& field, Parity parity) const;
  void step(AmplitudeField& field) const;

  const LatticeConfig& config() const { return cfg_; }
  const WalkParams& params() const { return params_; }
  int threads() const { return threads_; }

 private:
  template <int D>
  void process_range(double* amp, Parity parity, Index ub_begin, Index ub_end) const;
  void dispatch(double* amp, Parity parity, Index ub_begin, Index ub_end) const;

  LatticeConfig cfg_;
  WalkParams params_;
  int threads_;
  Eigen::MatrixXd coef_[2];     // coef[p](code, i) = U_p(code, code ^ 2^i)
  std::vector<Index> stride_;   // stride_[j] = L^j
  Index n_upper_ = 1;           // (L/2)^(d-1) axis-1 lattice rows per parity
};

// Convenience wrappers matching the operator contracts; they rebuild the
// coefficient tables on every call, so hot loops should hold a WalkOperator.
void apply_half_step(AmplitudeField& field, Parity parity, const WalkParams& params);
void walk_step(AmplitudeField& field, const WalkParams& params);

struct StopRule {
  long max_queries = 0;        // 0 means ceil(3 sqrt(N))
  bool stop_after_peak = true; // stop once every tracked peak is confirmed
};

struct TraceRecord {
  long t2 = 0;
  double prob = 0;
  double norm_err = 0;
};

struct SearchTrace {
  std::vector<TraceRecord> records;
};

struct SearchOutcome {
  bool valid = false;
  double P = 0;
  long t2 = 0;
  double effective_queries = 0;        // t2 / sqrt(P)
  std::vector<PeakResult> per_vertex;  // per marked vertex, from its own trace
};

long default_query_budget(const LatticeConfig& cfg);

// Search iteration psi(t1, t2) = [W^t1 R]^t2 |uniform>: each query applies
// the oracle and then t1 walk steps, recording the marked probability.
std::pair<SearchTrace, SearchOutcome> run_search(const LatticeConfig& cfg,
                                                 const WalkParams& params,
                                                 const MarkedSet& marked,
                                                 const StopRule& stop,
                                                 int threads = 1);

// A(t1) = <start| W^t1 |start>; independent of the start vertex.
double return_amplitude(const LatticeConfig& cfg, const WalkParams& params, int threads = 1,
                        Index start = 0);

// The 2x2 matrix of W^t1 R projected onto span{|s>, |s_perp>}, computed by
// direct evolution with a single marked vertex at the origin.
Eigen::Matrix2d projection_matrix(const LatticeConfig& cfg, const WalkParams& params,
                                  int threads = 1);

// Same matrix from the closed form: a Grover rotation followed by shrinking
// the |s_perp> component by (1 - N A) / (N - 1).
Eigen::Matrix2d projection_closed_form(Index N, double A);

}  // namespace qws
