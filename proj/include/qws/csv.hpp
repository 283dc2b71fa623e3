#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qws/evolve.hpp"
#include "qws/fitting.hpp"
#include "qws/tune.hpp"

namespace qws {

// Floats in CSV output carry 10 significant digits.
std::string format_double(double v);

void write_trace_csv(std::ostream& os, const SearchTrace& trace);

// Valid scan points only; invalid points have no peak to report.
void write_scan_csv(std::ostream& os, const ScanResult& scan);

void write_amplitude_csv(std::ostream& os, const AmplitudeScanResult& scan);

void write_samples_csv(std::ostream& os, const std::vector<ScalingSample>& samples);

// Parses the `d,L,s,t1,P,t2` layout produced by write_samples_csv.
std::vector<ScalingSample> read_samples_csv(std::istream& is);

}  // namespace qws
