#pragma once

#include <vector>

#include "qws/evolve.hpp"
#include "qws/peak.hpp"

namespace qws {

// theta = sqrt(2) t1 asin(s), the effective rotation angle of W^t1.
// Optimal tuning puts it near pi.
double theta(double s, int t1);

// t2 / sqrt(P): queries after amplitude amplification is accounted for.
double effective_queries(double P, long t2);

PeakResult detect_first_peak(const SearchTrace& trace);

struct ScanPoint {
  double s = 0;
  double P = 0;
  long t2 = 0;
  double theta = 0;
  bool valid = false;
};

struct ScanResult {
  std::vector<ScanPoint> grid;  // every evaluated point, ascending in s
  double s_best = 0;
  PeakResult best;
  double theta_best = 0;
};

// Maximise P over s: a coarse grid pass, then repeated 10x shrinking of the
// grid around the best point until s is resolved to 1e-4. Ties are broken
// toward smaller t2, then smaller s. Throws when no grid point yields a
// valid peak.
ScanResult scan_s(const LatticeConfig& cfg, int t1, const MarkedSet& marked, double s_lo,
                  double s_hi, double coarse_step, int threads = 1, long max_queries = 0);

struct AmplitudeScanPoint {
  double s = 0;
  double A = 0;
};

struct AmplitudeScanResult {
  std::vector<AmplitudeScanPoint> grid;  // ascending in s
  double s_min = 0;
  double A_min = 0;
};

// Minimise the return amplitude A(t1) over s with the same grid-refinement
// schedule as scan_s.
AmplitudeScanResult scan_return_amplitude(const LatticeConfig& cfg, int t1, double s_lo,
                                          double s_hi, double coarse_step, int threads = 1);

}  // namespace qws
