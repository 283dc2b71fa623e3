#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

fs::path temp_path(const std::string& tag) {
  return fs::temp_directory_path() / ("qwsearch_test_" + tag);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

// Runs the installed binary with stderr dropped; returns exit status and stdout.
CliResult run_cli(const std::string& args) {
  static int call = 0;
  const fs::path out = temp_path("stdout_" + std::to_string(call++));
  const std::string cmd =
      std::string(QWSEARCH_PATH) + " " + args + " > " + out.string() + " 2> /dev/null";
  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  fs::remove(out);
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream is(line);
  for (std::string f; std::getline(is, f, ',');) fields.push_back(f);
  return fields;
}

}  // namespace

TEST_CASE("search emits a JSON summary and a well-formed trace CSV") {
  const fs::path trace = temp_path("trace.csv");
  const CliResult r = run_cli("search --d 3 --L 8 --t1 3 --s 0.7 --trace-out " + trace.string());
  REQUIRE(r.status == 0);

  const json summary = json::parse(r.out);
  CHECK(summary.at("command") == "search");
  CHECK(summary.at("config").at("d") == 3);
  CHECK(summary.at("config").at("L") == 8);
  CHECK(summary.at("config").at("t1") == 3);
  CHECK(summary.at("config").at("s") == doctest::Approx(0.7));
  CHECK(summary.at("config").at("max_queries") == 68);  // ceil(3 sqrt(512))
  CHECK(summary.at("config").at("stop_after_peak") == true);
  CHECK(summary.at("config").at("marked") == json::array({json::array({0, 0, 0})}));
  REQUIRE(summary.at("valid") == true);
  const double P = summary.at("P");
  const long t2 = summary.at("t2");
  CHECK(P > 0.0);
  CHECK(t2 >= 1);
  CHECK(summary.at("effective_queries").get<double>() ==
        doctest::Approx(t2 / std::sqrt(P)).epsilon(1e-12));
  REQUIRE(summary.at("per_vertex").size() == 1);
  CHECK(summary.at("per_vertex")[0].at("marked") == json::array({0, 0, 0}));
  CHECK(summary.at("per_vertex")[0].at("P") == doctest::Approx(P).epsilon(1e-12));

  const std::vector<std::string> lines = lines_of(slurp(trace));
  REQUIRE(lines.size() >= 4);
  CHECK(lines[0] == "t2,prob,norm_err");
  double max_prob = 0.0;
  long argmax = 0;
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> f = split_fields(lines[i]);
    REQUIRE(f.size() == 3);
    CHECK(std::stol(f[0]) == long(i));  // 1-based, contiguous
    const double prob = std::stod(f[1]);
    CHECK(std::stod(f[2]) < 1e-9);
    if (prob > max_prob) {
      max_prob = prob;
      argmax = long(i);
    }
  }
  CHECK(max_prob == doctest::Approx(P).epsilon(1e-9));  // CSV keeps 10 significant digits
  CHECK(argmax == t2);
  CHECK(slurp(trace).back() == '\n');
  fs::remove(trace);
}

TEST_CASE("search output does not depend on the thread count") {
  const fs::path t1 = temp_path("trace_threads1.csv");
  const fs::path t2 = temp_path("trace_threads2.csv");
  const fs::path t4 = temp_path("trace_threads4.csv");
  const std::string base = "search --d 4 --L 6 --t1 2 --s 0.75 --trace-out ";
  const CliResult r1 = run_cli("--threads 1 " + base + t1.string());
  const CliResult r2 = run_cli("--threads 2 " + base + t2.string());
  const CliResult r4 = run_cli("--threads 4 " + base + t4.string());
  REQUIRE(r1.status == 0);
  REQUIRE(r2.status == 0);
  REQUIRE(r4.status == 0);

  const std::string bytes = slurp(t1);
  CHECK(bytes == slurp(t2));
  CHECK(bytes == slurp(t4));

  const json s1 = json::parse(r1.out), s2 = json::parse(r2.out), s4 = json::parse(r4.out);
  CHECK(s1.at("P").get<double>() == s2.at("P").get<double>());
  CHECK(s1.at("P").get<double>() == s4.at("P").get<double>());
  CHECK(s1.at("t2").get<long>() == s2.at("t2").get<long>());
  CHECK(s1.at("t2").get<long>() == s4.at("t2").get<long>());
  fs::remove(t1);
  fs::remove(t2);
  fs::remove(t4);
}

TEST_CASE("scan-s maximises P and writes the grid CSV") {
  const fs::path grid = temp_path("scan.csv");
  const CliResult r = run_cli(
      "scan-s --d 3 --L 8 --t1 3 --s-min 0.55 --s-max 0.85 --step 0.05 --scan-out " +
      grid.string());
  REQUIRE(r.status == 0);

  const json summary = json::parse(r.out);
  const double s_best = summary.at("s_best");
  CHECK(s_best >= 0.55);
  CHECK(s_best <= 0.85);
  CHECK(summary.at("P").get<double>() > 0.0);
  CHECK(summary.at("t2").get<long>() >= 1);
  CHECK(summary.at("theta").get<double>() ==
        doctest::Approx(std::sqrt(2.0) * 3 * std::asin(s_best)).epsilon(1e-9));
  CHECK(summary.at("grid_points").get<size_t>() >= 7);

  const std::vector<std::string> lines = lines_of(slurp(grid));
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] == "s,P,t2,theta");
  double prev_s = -1.0;
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> f = split_fields(lines[i]);
    REQUIRE(f.size() == 4);
    const double s = std::stod(f[0]);
    CHECK(s > prev_s);  // ascending, no duplicates
    prev_s = s;
    CHECK(std::stod(f[3]) ==
          doctest::Approx(std::sqrt(2.0) * 3 * std::asin(s)).epsilon(1e-6));
  }
  fs::remove(grid);
}

TEST_CASE("return-amp reports a single amplitude or a grid minimum") {
  const CliResult single = run_cli("return-amp --d 3 --L 32 --t1 3 --s 0.6737");
  REQUIRE(single.status == 0);
  CHECK(json::parse(single.out).at("A").get<double>() ==
        doctest::Approx(-0.7618).epsilon(0.003));

  const fs::path grid = temp_path("amp.csv");
  const CliResult scan = run_cli(
      "return-amp --d 3 --L 8 --t1 4 --s-min 0.3 --s-max 0.9 --step 0.1 --scan-out " +
      grid.string());
  REQUIRE(scan.status == 0);
  const json summary = json::parse(scan.out);
  const double A_min = summary.at("A_min");
  CHECK(summary.at("s_min_A").get<double>() >= 0.3);
  CHECK(summary.at("s_min_A").get<double>() <= 0.9);

  const std::vector<std::string> lines = lines_of(slurp(grid));
  REQUIRE(lines.size() >= 8);
  CHECK(lines[0] == "s,A");
  for (size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> f = split_fields(lines[i]);
    REQUIRE(f.size() == 2);
    const double A = std::stod(f[1]);
    CHECK(A >= A_min - 1e-8);  // grid minimum up to the CSV's 10-digit rounding
    CHECK(A >= -1.0 - 1e-12);
    CHECK(A <= 1.0 + 1e-12);
  }
  fs::remove(grid);
}

TEST_CASE("fit consumes a results CSV and reports the requested model") {
  const fs::path csv = temp_path("samples.csv");
  {
    std::ofstream os(csv);
    os << "d,L,s,t1,P,t2\n";
    os.precision(12);
    for (int L : {32, 64, 128, 256}) {
      const double P = 0.0968 + 0.0920 / L;
      const double n = double(L) * L * L;
      const long t2 = std::lround(std::sqrt(n) * (0.3141 + 0.0922 / L));
      os << "3," << L << ",0.707106781187,3," << P << "," << t2 << "\n";
    }
    os << "4,32,0.707106781187,3,0.9,1\n";   // wrong dimension: must be ignored
    os << "3,32,0.953900000000,2,0.9,1\n";   // wrong t1: must be ignored
  }

  const CliResult r =
      run_cli("fit --input " + csv.string() + " --model inverse-L --d 3 --t1 3");
  REQUIRE(r.status == 0);
  const json report = json::parse(r.out);
  CHECK(report.at("model") == "inverse-L");
  CHECK(report.at("P").at("a").get<double>() == doctest::Approx(0.0968).epsilon(1e-9));
  CHECK(report.at("P").at("b").get<double>() == doctest::Approx(0.0920).epsilon(1e-9));
  CHECK(report.at("P").at("model") == "inverse-L");
  CHECK(report.at("t2_over_sqrt_N").at("a").get<double>() ==
        doctest::Approx(0.3141).epsilon(0.02));  // t2 rounding adds noise
  CHECK(report.at("t2_over_sqrt_N").at("rms").get<double>() < 0.005);

  // the d=4 decoy row gives the dimension fit its second point
  const CliResult dims = run_cli("fit --input " + csv.string() + " --model log2-d --t1 3");
  REQUIRE(dims.status == 0);
  CHECK(json::parse(dims.out).at("log2_a1").at("model") == "log2-vs-d");
  CHECK(json::parse(dims.out).at("log2_a2").at("model") == "log2-vs-d");

  // a single dimension cannot support a dimension fit
  const fs::path narrow = temp_path("samples_single_d.csv");
  {
    std::ofstream os(narrow);
    os << "d,L,s,t1,P,t2\n";
    os << "3,32,0.707106781187,3,0.09968,61\n";
    os << "3,64,0.707106781187,3,0.09824,164\n";
  }
  CHECK(run_cli("fit --input " + narrow.string() + " --model log2-d --t1 3").status == 1);
  fs::remove(narrow);

  CHECK(run_cli("fit --input " + csv.string() + " --model fixed-L --t1 3").status == 1);
  CHECK(run_cli("fit --input " + csv.string() + " --model no-such-model --t1 3").status == 1);
  CHECK(run_cli("fit --input /no/such/file.csv --model inverse-L --d 3 --t1 3").status == 1);
  fs::remove(csv);
}

TEST_CASE("exit codes separate usage errors from numerical failures") {
  CHECK(run_cli("").status == 1);                                      // no subcommand
  CHECK(run_cli("no-such-command").status == 1);
  CHECK(run_cli("search --d 3 --L 8 --t1 3").status == 1);             // missing --s
  CHECK(run_cli("search --d 3 --L 7 --t1 3 --s 0.7").status == 1);     // odd side
  CHECK(run_cli("search --d 3 --L 8 --t1 3 --s 1.5").status == 1);     // s outside [0, 1]
  CHECK(run_cli("search --d 3 --L 8 --t1 3 --s 0.7 --marked 1,2").status == 1);
  CHECK(run_cli("return-amp --d 3 --L 8 --t1 3").status == 1);         // neither --s nor bounds
  CHECK(run_cli("return-amp --d 3 --L 8 --t1 3 --s 0.5 --s-min 0.1 --s-max 0.2").status == 1);
  CHECK(run_cli("reproduce --table 3").status == 1);                   // unknown dataset id
  CHECK(run_cli("--help").status == 0);
  CHECK(run_cli("search --help").status == 0);

  // too small a budget for a detectable peak: contract failure, not usage
  CHECK(run_cli("scan-s --d 2 --L 4 --t1 1 --s-min 0.1 --s-max 0.2 --step 0.05 "
                "--max-queries 5").status == 2);
}

TEST_CASE("reproduce replays the multi-vertex dataset") {
  const CliResult r = run_cli("reproduce --table 5");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("RESULT: PASS (28/28 checks)") != std::string::npos);
}
