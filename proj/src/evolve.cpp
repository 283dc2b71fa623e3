#include "qws/evolve.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <thread>

namespace qws {

namespace {

// Largest dimension the templated kernel is instantiated for.
constexpr int kMaxKernelDim = 12;

// Elements per tile row; groups of lattice rows are batched until the
// unit-stride compute loops reach roughly this length.
constexpr Index kTileSpan = 192;

}  // namespace

WalkParams WalkParams::make(double s, int t1) {
  if (!(s >= 0.0 && s <= 1.0))
    throw std::invalid_argument("walk params: s must lie in [0, 1]");
  if (t1 < 1) throw std::invalid_argument("walk params: t1 must be >= 1");
  return WalkParams{s, t1};
}

MarkedSet MarkedSet::single(Index v, const LatticeConfig& cfg) {
  return MarkedSet::of({v}, cfg);
}

MarkedSet MarkedSet::of(std::vector<Index> vs, const LatticeConfig& cfg) {
  if (vs.empty()) throw std::invalid_argument("marked set: must be nonempty");
  std::set<Index> seen;
  for (Index v : vs) {
    if (v < 0 || v >= cfg.N) throw std::invalid_argument("marked set: vertex out of range");
    if (!seen.insert(v).second)
      throw std::invalid_argument("marked set: vertices must be distinct");
  }
  return MarkedSet{std::move(vs)};
}

AmplitudeField uniform_state(const LatticeConfig& cfg) {
  return {cfg, Eigen::VectorXd::Constant(cfg.N, 1.0 / std::sqrt(static_cast<double>(cfg.N)))};
}

AmplitudeField point_state(const LatticeConfig& cfg, Index v) {
  if (v < 0 || v >= cfg.N) throw std::invalid_argument("point_state: vertex out of range");
  AmplitudeField field{cfg, Eigen::VectorXd::Zero(cfg.N)};
  field.amp[v] = 1.0;
  return field;
}

void apply_oracle(AmplitudeField& field, const MarkedSet& marked) {
  for (Index v : marked.vertices) field.amp[v] = -field.amp[v];
}

double marked_probability(const AmplitudeField& field, const MarkedSet& marked) {
  double p = 0;
  for (Index v : marked.vertices) p += field.amp[v] * field.amp[v];
  return p;
}

double norm_error(const AmplitudeField& field) {
  return std::abs(field.amp.squaredNorm() - 1.0);
}

WalkOperator::WalkOperator(const LatticeConfig& cfg, const WalkParams& params, int threads)
    : cfg_(cfg), params_(params), threads_(std::max(1, threads)) {
  if (cfg_.d > kMaxKernelDim)
    throw std::invalid_argument("walk operator: dimension exceeds the kernel limit");
  const Index nc = Index{1} << cfg_.d;
  for (auto parity : {Parity::odd, Parity::even}) {
    auto rot = build_block_rotation(cfg_.d, parity, params_.s);
    Eigen::MatrixXd coef(nc, cfg_.d);
    for (Index code = 0; code < nc; ++code)
      for (int i = 0; i < cfg_.d; ++i) coef(code, i) = rot.U(code, code ^ (Index{1} << i));
    coef_[parity == Parity::odd ? 0 : 1] = std::move(coef);
  }
  stride_.resize(cfg_.d);
  stride_[0] = 1;
  for (int j = 1; j < cfg_.d; ++j) stride_[j] = stride_[j - 1] * cfg_.L;
  n_upper_ = 1;
  for (int j = 1; j < cfg_.d; ++j) n_upper_ *= cfg_.L / 2;
}

// One contiguous range of axis-1 lattice rows. Every block with its base in
// these rows is gathered corner-by-corner into a deinterleaved tile, rotated
// with unit-stride arithmetic, and scattered back.
template <int D>
void WalkOperator::process_range(double* amp, Parity parity, Index ub_begin,
                                 Index ub_end) const {
  constexpr Index nc = Index{1} << D;      // corners per block
  constexpr Index nu = Index{1} << (D - 1);  // axis-1 rows per block
  const int L = cfg_.L;
  const Index Lh = L / 2;
  const bool even = parity == Parity::even;
  const double c = params_.c();

  const Eigen::MatrixXd& coefm = coef_[even ? 1 : 0];
  double coef[nc * D];
  for (Index code = 0; code < nc; ++code)
    for (int i = 0; i < D; ++i) coef[code * D + i] = coefm(code, i);

  const Index group = std::max<Index>(1, kTileSpan / Lh);
  std::vector<double> tile_in(nc * group * Lh), tile_out(nc * group * Lh);
  std::vector<double*> row(group * nu);

  // Mixed-radix coordinates of the current row base over axes 2..d.
  int u[D > 1 ? D - 1 : 1];
  {
    Index rest = ub_begin;
    for (int j = 0; j + 1 < D; ++j) {
      u[j] = static_cast<int>(rest % Lh);
      rest /= Lh;
    }
  }

  Index ub = ub_begin;
  while (ub < ub_end) {
    const Index g_count = std::min<Index>(group, ub_end - ub);
    const Index span = g_count * Lh;

    for (Index g = 0; g < g_count; ++g, ++ub) {
      Index rowoff[nu];
      rowoff[0] = 0;
      for (int j = 0; j + 1 < D; ++j)
        rowoff[0] += static_cast<Index>(2 * u[j] + (even ? 1 : 0)) * stride_[j + 1];
      for (Index cu = 1; cu < nu; ++cu) {
        const int i = std::countr_zero(static_cast<unsigned long long>(cu));
        Index step = stride_[i + 1];
        if (even && 2 * u[i] + 1 == L - 1) step -= static_cast<Index>(L) * stride_[i + 1];
        rowoff[cu] = rowoff[cu ^ (Index{1} << i)] + step;
      }
      for (Index cu = 0; cu < nu; ++cu) row[g * nu + cu] = amp + rowoff[cu];

      // Advance the row-base counter.
      for (int j = 0; j + 1 < D; ++j) {
        if (++u[j] < Lh) break;
        u[j] = 0;
      }
    }

    for (Index g = 0; g < g_count; ++g) {
      for (Index cu = 0; cu < nu; ++cu) {
        const double* __restrict__ r = row[g * nu + cu];
        double* __restrict__ te = tile_in.data() + (2 * cu) * span + g * Lh;
        double* __restrict__ to = tile_in.data() + (2 * cu + 1) * span + g * Lh;
        if (!even) {
          for (Index t = 0; t < Lh; ++t) {
            te[t] = r[2 * t];
            to[t] = r[2 * t + 1];
          }
        } else {
          for (Index t = 0; t + 1 < Lh; ++t) {
            te[t] = r[2 * t + 1];
            to[t] = r[2 * t + 2];
          }
          te[Lh - 1] = r[L - 1];
          to[Lh - 1] = r[0];
        }
      }
    }

    for (Index code = 0; code < nc; ++code) {
      const double* __restrict__ in0 = tile_in.data() + code * span;
      double* __restrict__ out = tile_out.data() + code * span;
      const double* w = coef + code * D;
      const double* src[D];
      for (int i = 0; i < D; ++i) src[i] = tile_in.data() + (code ^ (Index{1} << i)) * span;
      for (Index v = 0; v < span; ++v) {
        double acc = c * in0[v];
        for (int i = 0; i < D; ++i) acc += w[i] * src[i][v];
        out[v] = acc;
      }
    }

    for (Index g = 0; g < g_count; ++g) {
      for (Index cu = 0; cu < nu; ++cu) {
        double* __restrict__ r = row[g * nu + cu];
        const double* __restrict__ te = tile_out.data() + (2 * cu) * span + g * Lh;
        const double* __restrict__ to = tile_out.data() + (2 * cu + 1) * span + g * Lh;
        if (!even) {
          for (Index t = 0; t < Lh; ++t) {
            r[2 * t] = te[t];
            r[2 * t + 1] = to[t];
          }
        } else {
          for (Index t = 0; t + 1 < Lh; ++t) {
            r[2 * t + 1] = te[t];
            r[2 * t + 2] = to[t];
          }
          r[L - 1] = te[Lh - 1];
          r[0] = to[Lh - 1];
        }
      }
    }
  }
}

void WalkOperator::dispatch(double* amp, Parity parity, Index ub_begin, Index ub_end) const {
  switch (cfg_.d) {
    case 1: process_range<1>(amp, parity, ub_begin, ub_end); break;
    case 2: process_range<2>(amp, parity, ub_begin, ub_end); break;
    case 3: process_range<3>(amp, parity, ub_begin, ub_end); break;
    case 4: process_range<4>(amp, parity, ub_begin, ub_end); break;
    case 5: process_range<5>(amp, parity, ub_begin, ub_end); break;
    case 6: process_range<6>(amp, parity, ub_begin, ub_end); break;
    case 7: process_range<7>(amp, parity, ub_begin, ub_end); break;
    case 8: process_range<8>(amp, parity, ub_begin, ub_end); break;
    case 9: process_range<9>(amp, parity, ub_begin, ub_end); break;
    case 10: process_range<10>(amp, parity, ub_begin, ub_end); break;
    case 11: process_range<11>(amp, parity, ub_begin, ub_end); break;
    case 12: process_range<12>(amp, parity, ub_begin, ub_end); break;
    default: throw std::logic_error("walk operator: unsupported dimension");
  }
}

void WalkOperator::half_step(AmplitudeField& field, Parity parity) const {
  if (field.cfg.d != cfg_.d || field.cfg.L != cfg_.L)
    throw std::invalid_argument("half_step: field does not match the operator lattice");
  double* amp = field.amp.data();
  const int nthreads = static_cast<int>(std::min<Index>(threads_, n_upper_));
  if (nthreads <= 1) {
    dispatch(amp, parity, 0, n_upper_);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(nthreads - 1);
  for (int k = 1; k < nthreads; ++k)
    workers.emplace_back([this, amp, parity, k, nthreads] {
      dispatch(amp, parity, n_upper_ * k / nthreads, n_upper_ * (k + 1) / nthreads);
    });
  dispatch(amp, parity, 0, n_upper_ / nthreads);
  for (auto& w : workers) w.join();
}

void WalkOperator::step(AmplitudeField& field) const {
  half_step(field, Parity::odd);
  half_step(field, Parity::even);
}

void apply_half_step(AmplitudeField& field, Parity parity, const WalkParams& params) {
  WalkOperator(field.cfg, params).half_step(field, parity);
}

void walk_step(AmplitudeField& field, const WalkParams& params) {
  WalkOperator(field.cfg, params).step(field);
}

long default_query_budget(const LatticeConfig& cfg) {
  return static_cast<long>(std::ceil(3.0 * std::sqrt(static_cast<double>(cfg.N))));
}

std::pair<SearchTrace, SearchOutcome> run_search(const LatticeConfig& cfg,
                                                 const WalkParams& params,
                                                 const MarkedSet& marked, const StopRule& stop,
                                                 int threads) {
  WalkOperator walk(cfg, params, threads);
  AmplitudeField field = uniform_state(cfg);
  const long budget = stop.max_queries > 0 ? stop.max_queries : default_query_budget(cfg);
  const size_t n_marked = marked.vertices.size();

  SearchTrace trace;
  trace.records.reserve(std::min<long>(budget, 1 << 20));
  PeakDetector joint;
  std::vector<PeakDetector> per_vertex(n_marked);

  for (long q = 1; q <= budget; ++q) {
    apply_oracle(field, marked);
    for (int t = 0; t < params.t1; ++t) walk.step(field);

    const double prob = marked_probability(field, marked);
    const double nerr = norm_error(field);
    if (nerr > 1e-6) throw std::runtime_error("run_search: norm drift out of tolerance");
    trace.records.push_back({q, prob, nerr});

    bool all_done = joint.feed(prob);
    for (size_t m = 0; m < n_marked; ++m) {
      const double a = field.amp[marked.vertices[m]];
      all_done = per_vertex[m].feed(a * a) && all_done;
    }
    if (all_done && stop.stop_after_peak) break;
  }

  SearchOutcome out;
  const PeakResult joint_peak = joint.result();
  out.valid = joint_peak.valid;
  out.P = joint_peak.P;
  out.t2 = joint_peak.t2;
  out.effective_queries =
      joint_peak.valid && joint_peak.P > 0 ? joint_peak.t2 / std::sqrt(joint_peak.P) : 0.0;
  out.per_vertex.reserve(n_marked);
  for (auto& det : per_vertex) out.per_vertex.push_back(det.result());
  return {std::move(trace), std::move(out)};
}

double return_amplitude(const LatticeConfig& cfg, const WalkParams& params, int threads,
                        Index start) {
  WalkOperator walk(cfg, params, threads);
  AmplitudeField field = point_state(cfg, start);
  for (int t = 0; t < params.t1; ++t) walk.step(field);
  return field.amp[start];
}

Eigen::Matrix2d projection_matrix(const LatticeConfig& cfg, const WalkParams& params,
                                  int threads) {
  WalkOperator walk(cfg, params, threads);
  const MarkedSet marked = MarkedSet::single(0, cfg);
  const double root_n = std::sqrt(static_cast<double>(cfg.N));
  const double perp_norm = std::sqrt(static_cast<double>(cfg.N) - 1.0);

  // |s_perp> = (|s> - sqrt(N) |0>) / sqrt(N - 1)
  const auto s_comp = [&](const AmplitudeField& f) { return f.amp.sum() / root_n; };
  const auto perp_comp = [&](const AmplitudeField& f) {
    return (s_comp(f) - root_n * f.amp[0]) / perp_norm;
  };

  AmplitudeField phi_s = uniform_state(cfg);
  AmplitudeField phi_p = uniform_state(cfg);
  phi_p.amp[0] -= root_n;
  phi_p.amp /= perp_norm;

  for (AmplitudeField* f : {&phi_s, &phi_p}) {
    apply_oracle(*f, marked);
    for (int t = 0; t < params.t1; ++t) walk.step(*f);
  }

  Eigen::Matrix2d proj;
  proj << s_comp(phi_s), s_comp(phi_p), perp_comp(phi_s), perp_comp(phi_p);
  return proj;
}

Eigen::Matrix2d projection_closed_form(Index N, double A) {
  const double n = static_cast<double>(N);
  const double shrink = (1.0 - n * A) / (n - 1.0);
  const double off = 2.0 / n * std::sqrt(n - 1.0);
  Eigen::Matrix2d proj;
  proj << 1.0 - 2.0 / n, off, -off * shrink, (1.0 - 2.0 / n) * shrink;
  return proj;
}

}  // namespace qws
