#include "qws/tune.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace qws {

double theta(double s, int t1) {
  if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("theta: s must lie in [0, 1]");
  if (t1 < 1) throw std::invalid_argument("theta: t1 must be positive");
  return std::sqrt(2.0) * static_cast<double>(t1) * std::asin(s);
}

double effective_queries(double P, long t2) {
  if (!(P > 0.0)) throw std::domain_error("effective_queries: P must be positive");
  if (t2 < 1) throw std::invalid_argument("effective_queries: t2 must be positive");
  return static_cast<double>(t2) / std::sqrt(P);
}

PeakResult detect_first_peak(const SearchTrace& trace) {
  std::vector<double> probs;
  probs.reserve(trace.records.size());
  for (const TraceRecord& rec : trace.records) probs.push_back(rec.prob);
  return detect_first_peak(probs);
}

namespace {

constexpr double kResolution = 1e-4;

void check_grid_args(double s_lo, double s_hi, double coarse_step, int t1) {
  if (!(s_lo >= 0.0 && s_lo <= s_hi && s_hi <= 1.0))
    throw std::invalid_argument("scan: need 0 <= s_lo <= s_hi <= 1");
  if (!(coarse_step > 0.0)) throw std::invalid_argument("scan: coarse_step must be positive");
  if (t1 < 1) throw std::invalid_argument("scan: t1 must be positive");
}

// Visits lo, lo + step, ... and the right endpoint, clamped to [s_lo, s_hi].
// Points already seen (to within well below the finest spacing) are skipped,
// so refinement passes never re-run the centre point.
template <typename Visit>
void visit_grid(double lo, double hi, double step, double s_lo, double s_hi,
                std::set<long long>& seen, Visit&& visit) {
  lo = std::max(lo, s_lo);
  hi = std::min(hi, s_hi);
  auto key_of = [](double s) { return std::llround(s * 1e7); };
  const long n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long k = 0; k <= n; ++k) {
    const double s = std::min(lo + static_cast<double>(k) * step, hi);
    if (seen.insert(key_of(s)).second) visit(s);
  }
  if (hi - (lo + static_cast<double>(n) * step) > 1e-12 && seen.insert(key_of(hi)).second)
    visit(hi);
}

}  // namespace

ScanResult scan_s(const LatticeConfig& cfg, int t1, const MarkedSet& marked, double s_lo,
                  double s_hi, double coarse_step, int threads, long max_queries) {
  check_grid_args(s_lo, s_hi, coarse_step, t1);

  ScanResult out;
  ScanPoint best;
  bool have_best = false;
  auto better = [](const ScanPoint& a, const ScanPoint& b) {
    if (a.valid != b.valid) return a.valid;
    if (!a.valid) return false;
    if (a.P != b.P) return a.P > b.P;
    if (a.t2 != b.t2) return a.t2 < b.t2;
    return a.s < b.s;
  };
  auto visit = [&](double s) {
    const WalkParams params = WalkParams::make(s, t1);
    const SearchOutcome res =
        run_search(cfg, params, marked, StopRule{max_queries, true}, threads).second;
    const ScanPoint pt{s, res.P, res.t2, theta(s, t1), res.valid};
    out.grid.push_back(pt);
    if (!have_best || better(pt, best)) {
      best = pt;
      have_best = true;
    }
  };

  std::set<long long> seen;
  visit_grid(s_lo, s_hi, coarse_step, s_lo, s_hi, seen, visit);
  if (!best.valid) throw std::runtime_error("scan_s: no valid peak on the scan grid");
  double step = coarse_step;
  while (step > kResolution * (1.0 + 1e-9)) {
    const double next = std::max(step / 10.0, kResolution);
    visit_grid(best.s - step, best.s + step, next, s_lo, s_hi, seen, visit);
    step = next;
  }

  std::sort(out.grid.begin(), out.grid.end(),
            [](const ScanPoint& a, const ScanPoint& b) { return a.s < b.s; });
  out.s_best = best.s;
  out.best = PeakResult{best.P, best.t2, best.valid};
  out.theta_best = best.theta;
  return out;
}

AmplitudeScanResult scan_return_amplitude(const LatticeConfig& cfg, int t1, double s_lo,
                                          double s_hi, double coarse_step, int threads) {
  check_grid_args(s_lo, s_hi, coarse_step, t1);

  AmplitudeScanResult out;
  AmplitudeScanPoint best;
  bool have_best = false;
  auto better = [](const AmplitudeScanPoint& a, const AmplitudeScanPoint& b) {
    if (a.A != b.A) return a.A < b.A;
    return a.s < b.s;
  };
  auto visit = [&](double s) {
    const AmplitudeScanPoint pt{s, return_amplitude(cfg, WalkParams::make(s, t1), threads)};
    out.grid.push_back(pt);
    if (!have_best || better(pt, best)) {
      best = pt;
      have_best = true;
    }
  };

  std::set<long long> seen;
  visit_grid(s_lo, s_hi, coarse_step, s_lo, s_hi, seen, visit);
  double step = coarse_step;
  while (step > kResolution * (1.0 + 1e-9)) {
    const double next = std::max(step / 10.0, kResolution);
    visit_grid(best.s - step, best.s + step, next, s_lo, s_hi, seen, visit);
    step = next;
  }

  std::sort(out.grid.begin(), out.grid.end(),
            [](const AmplitudeScanPoint& a, const AmplitudeScanPoint& b) { return a.s < b.s; });
  out.s_min = best.s;
  out.A_min = best.A;
  return out;
}

}  // namespace qws
