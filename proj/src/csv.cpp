#include "qws/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qws {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_trace_csv(std::ostream& os, const SearchTrace& trace) {
  os << "t2,prob,norm_err\n";
  for (const TraceRecord& rec : trace.records)
    os << rec.t2 << ',' << format_double(rec.prob) << ',' << format_double(rec.norm_err) << '\n';
}

void write_scan_csv(std::ostream& os, const ScanResult& scan) {
  os << "s,P,t2,theta\n";
  for (const ScanPoint& pt : scan.grid) {
    if (!pt.valid) continue;
    os << format_double(pt.s) << ',' << format_double(pt.P) << ',' << pt.t2 << ','
       << format_double(pt.theta) << '\n';
  }
}

void write_amplitude_csv(std::ostream& os, const AmplitudeScanResult& scan) {
  os << "s,A\n";
  for (const AmplitudeScanPoint& pt : scan.grid)
    os << format_double(pt.s) << ',' << format_double(pt.A) << '\n';
}

void write_samples_csv(std::ostream& os, const std::vector<ScalingSample>& samples) {
  os << "d,L,s,t1,P,t2\n";
  for (const ScalingSample& smp : samples)
    os << smp.d << ',' << smp.L << ',' << format_double(smp.s) << ',' << smp.t1 << ','
       << format_double(smp.P) << ',' << smp.t2 << '\n';
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace

std::vector<ScalingSample> read_samples_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("samples CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "d,L,s,t1,P,t2")
    throw std::invalid_argument("samples CSV: expected header d,L,s,t1,P,t2");

  std::vector<ScalingSample> samples;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 6)
      throw std::invalid_argument("samples CSV: line " + std::to_string(lineno) +
                                  ": expected 6 fields");
    try {
      ScalingSample smp;
      smp.d = std::stoi(fields[0]);
      smp.L = std::stoi(fields[1]);
      smp.s = std::stod(fields[2]);
      smp.t1 = std::stoi(fields[3]);
      smp.P = std::stod(fields[4]);
      smp.t2 = std::stol(fields[5]);
      samples.push_back(smp);
    } catch (const std::exception&) {
      throw std::invalid_argument("samples CSV: line " + std::to_string(lineno) +
                                  ": malformed number");
    }
  }
  return samples;
}

}  // namespace qws
