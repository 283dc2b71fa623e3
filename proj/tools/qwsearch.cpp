#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qws/csv.hpp"
#include "qws/evolve.hpp"
#include "qws/reproduce.hpp"
#include "qws/tune.hpp"

using nlohmann::json;

namespace {

int default_threads() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

qws::VertexCoords parse_coords(const std::string& spec, int d) {
  qws::VertexCoords coords;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', pos), spec.size());
    std::size_t used = 0;
    int value;
    try {
      value = std::stoi(spec.substr(pos, comma - pos), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("--marked: malformed coordinate tuple '" + spec + "'");
    }
    if (used != comma - pos)
      throw std::invalid_argument("--marked: malformed coordinate tuple '" + spec + "'");
    coords.push_back(value);
    pos = comma + 1;
  }
  if (static_cast<int>(coords.size()) != d)
    throw std::invalid_argument("--marked: expected " + std::to_string(d) +
                                " comma-separated coordinates, got '" + spec + "'");
  return coords;
}

struct MarkedArg {
  std::vector<qws::VertexCoords> coords;
  std::vector<qws::Index> vertices;
};

MarkedArg resolve_marked(const std::vector<std::string>& specs, const qws::LatticeConfig& cfg) {
  MarkedArg out;
  if (specs.empty()) {
    out.coords.push_back(qws::VertexCoords(cfg.d, 0));
    out.vertices.push_back(0);
    return out;
  }
  for (const std::string& spec : specs) {
    const qws::VertexCoords coords = parse_coords(spec, cfg.d);
    out.coords.push_back(coords);
    out.vertices.push_back(qws::vertex_index(coords, cfg));
  }
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("cannot open output file '" + path + "'");
  return os;
}

json config_json(int d, int L, int t1, int threads) {
  return json{{"d", d}, {"L", L}, {"t1", t1}, {"threads", threads}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spatial search by quantum walk on hypercubic lattices"};
  app.require_subcommand(1);

  int threads = default_threads();
  app.add_option("--threads", threads, "worker threads (output is thread-count independent)")
      ->check(CLI::PositiveNumber);

  int d = 0, L = 0, t1 = 0;
  double s = 0, s_min = 0, s_max = 0, step = 0.02;
  long max_queries = 0;
  bool full_trace = false, full = false;
  int table = 0;
  std::vector<std::string> marked_specs;
  std::string trace_out, scan_out, input_path, model, samples_out;

  CLI::App* cmd_search = app.add_subcommand("search", "run the search and report the first peak");
  cmd_search->add_option("--d", d, "lattice dimension")->required();
  cmd_search->add_option("--L", L, "lattice side (even, >= 4)")->required();
  cmd_search->add_option("--t1", t1, "walk steps per oracle query")->required();
  cmd_search->add_option("--s", s, "coupling in [0, 1]")->required();
  cmd_search->add_option("--marked", marked_specs,
                         "marked vertex as d comma-separated coordinates (repeatable; "
                         "default origin)");
  cmd_search->add_option("--max-queries", max_queries, "query budget (0 = 3 sqrt(N))");
  cmd_search->add_flag("--full-trace", full_trace, "run the whole budget, not just past the peak");
  cmd_search->add_option("--trace-out", trace_out, "write the t2,prob,norm_err trace CSV here");

  CLI::App* cmd_scan = app.add_subcommand("scan-s", "maximise P over the coupling s");
  cmd_scan->add_option("--d", d, "lattice dimension")->required();
  cmd_scan->add_option("--L", L, "lattice side (even, >= 4)")->required();
  cmd_scan->add_option("--t1", t1, "walk steps per oracle query")->required();
  cmd_scan->add_option("--s-min", s_min, "lower scan bound")->required();
  cmd_scan->add_option("--s-max", s_max, "upper scan bound")->required();
  cmd_scan->add_option("--step", step, "coarse grid step (refined to 1e-4)");
  cmd_scan->add_option("--marked", marked_specs,
                       "marked vertex coordinates (repeatable; default origin)");
  cmd_scan->add_option("--max-queries", max_queries, "query budget per grid point (0 = auto)");
  cmd_scan->add_option("--scan-out", scan_out, "write the s,P,t2,theta grid CSV here");

  CLI::App* cmd_amp = app.add_subcommand("return-amp", "return amplitude A(t1) at s or over an s-grid");
  cmd_amp->add_option("--d", d, "lattice dimension")->required();
  cmd_amp->add_option("--L", L, "lattice side (even, >= 4)")->required();
  cmd_amp->add_option("--t1", t1, "walk steps")->required();
  CLI::Option* amp_s = cmd_amp->add_option("--s", s, "evaluate at a single coupling");
  CLI::Option* amp_lo = cmd_amp->add_option("--s-min", s_min, "lower scan bound");
  CLI::Option* amp_hi = cmd_amp->add_option("--s-max", s_max, "upper scan bound");
  cmd_amp->add_option("--step", step, "coarse grid step (refined to 1e-4)");
  cmd_amp->add_option("--scan-out", scan_out, "write the s,A grid CSV here");
  amp_s->excludes(amp_lo)->excludes(amp_hi);
  amp_lo->needs(amp_hi);
  amp_hi->needs(amp_lo);

  CLI::App* cmd_fit = app.add_subcommand("fit", "least-squares scaling fits over a results CSV");
  cmd_fit->add_option("--input", input_path, "results CSV with header d,L,s,t1,P,t2")->required();
  cmd_fit->add_option("--model", model, "inverse-L | log2-d | inverse-d | fixed-L")
      ->required()
      ->check(CLI::IsMember({"inverse-L", "log2-d", "inverse-d", "fixed-L"}));
  cmd_fit->add_option("--t1", t1, "walk steps per query selecting the series")->required();
  cmd_fit->add_option("--d", d, "dimension (inverse-L model)");
  cmd_fit->add_option("--L", L, "lattice side (fixed-L model)");

  CLI::App* cmd_repro = app.add_subcommand("reproduce", "rerun an embedded reference dataset");
  cmd_repro->add_option("--table", table, "dataset id: 1 tuning, 2 scaling, 5 multi-vertex")
      ->required()
      ->check(CLI::IsMember({1, 2, 5}));
  cmd_repro->add_option("--t1", t1, "scaling series to rerun (dataset 2; default 3)");
  cmd_repro->add_flag("--full", full, "include the d=3 sizes beyond L=128 (hours)");
  cmd_repro->add_option("--samples-out", samples_out, "write the runs behind dataset 2 as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_search->parsed()) {
      const qws::LatticeConfig cfg = qws::LatticeConfig::make(d, L);
      const qws::WalkParams params = qws::WalkParams::make(s, t1);
      const MarkedArg marked = resolve_marked(marked_specs, cfg);
      const qws::StopRule stop{max_queries, !full_trace};
      const auto [trace, outcome] =
          qws::run_search(cfg, params, qws::MarkedSet::of(marked.vertices, cfg), stop, threads);

      if (!trace_out.empty()) {
        std::ofstream os = open_output(trace_out);
        qws::write_trace_csv(os, trace);
      }

      json summary;
      summary["command"] = "search";
      summary["config"] = config_json(d, L, t1, threads);
      summary["config"]["s"] = s;
      summary["config"]["marked"] = marked.coords;
      summary["config"]["max_queries"] =
          max_queries > 0 ? max_queries : qws::default_query_budget(cfg);
      summary["config"]["stop_after_peak"] = !full_trace;
      summary["valid"] = outcome.valid;
      summary["P"] = outcome.P;
      summary["t2"] = outcome.t2;
      summary["effective_queries"] = outcome.effective_queries;
      json per_vertex = json::array();
      for (std::size_t k = 0; k < outcome.per_vertex.size(); ++k) {
        const qws::PeakResult& peak = outcome.per_vertex[k];
        per_vertex.push_back(json{{"marked", marked.coords[k]},
                                  {"valid", peak.valid},
                                  {"P", peak.P},
                                  {"t2", peak.t2}});
      }
      summary["per_vertex"] = per_vertex;
      std::cout << summary.dump(2) << '\n';
    } else if (cmd_scan->parsed()) {
      const qws::LatticeConfig cfg = qws::LatticeConfig::make(d, L);
      const MarkedArg marked = resolve_marked(marked_specs, cfg);
      const qws::ScanResult scan =
          qws::scan_s(cfg, t1, qws::MarkedSet::of(marked.vertices, cfg), s_min, s_max, step,
                      threads, max_queries);

      if (!scan_out.empty()) {
        std::ofstream os = open_output(scan_out);
        qws::write_scan_csv(os, scan);
      }

      json summary;
      summary["command"] = "scan-s";
      summary["config"] = config_json(d, L, t1, threads);
      summary["config"]["s_min"] = s_min;
      summary["config"]["s_max"] = s_max;
      summary["config"]["step"] = step;
      summary["config"]["marked"] = marked.coords;
      summary["s_best"] = scan.s_best;
      summary["P"] = scan.best.P;
      summary["t2"] = scan.best.t2;
      summary["theta"] = scan.theta_best;
      summary["grid_points"] = scan.grid.size();
      std::cout << summary.dump(2) << '\n';
    } else if (cmd_amp->parsed()) {
      const qws::LatticeConfig cfg = qws::LatticeConfig::make(d, L);
      json summary;
      summary["command"] = "return-amp";
      summary["config"] = config_json(d, L, t1, threads);
      if (amp_s->count() > 0) {
        summary["config"]["s"] = s;
        summary["A"] = qws::return_amplitude(cfg, qws::WalkParams::make(s, t1), threads);
      } else if (amp_lo->count() > 0) {
        const qws::AmplitudeScanResult scan =
            qws::scan_return_amplitude(cfg, t1, s_min, s_max, step, threads);
        if (!scan_out.empty()) {
          std::ofstream os = open_output(scan_out);
          qws::write_amplitude_csv(os, scan);
        }
        summary["config"]["s_min"] = s_min;
        summary["config"]["s_max"] = s_max;
        summary["config"]["step"] = step;
        summary["s_min_A"] = scan.s_min;
        summary["A_min"] = scan.A_min;
        summary["grid_points"] = scan.grid.size();
      } else {
        throw std::invalid_argument("return-amp: pass either --s or --s-min/--s-max");
      }
      std::cout << summary.dump(2) << '\n';
    } else if (cmd_fit->parsed()) {
      std::ifstream is(input_path);
      if (!is) throw std::invalid_argument("cannot open input file '" + input_path + "'");
      const std::vector<qws::ScalingSample> samples = qws::read_samples_csv(is);

      json report;
      report["command"] = "fit";
      report["model"] = model;
      report["t1"] = t1;
      report["input"] = input_path;
      auto fit_json = [](const qws::FitResult& fit) {
        return json{{"a", fit.a}, {"b", fit.b}, {"rms", fit.rms}, {"model", fit.model}};
      };
      if (model == "inverse-L") {
        if (cmd_fit->count("--d") == 0)
          throw std::invalid_argument("fit: --d is required for the inverse-L model");
        report["d"] = d;
        report["P"] = fit_json(qws::fit_P_vs_L(samples, d, t1));
        report["t2_over_sqrt_N"] = fit_json(qws::fit_t2_vs_L(samples, d, t1));
      } else if (model == "log2-d") {
        std::vector<std::pair<int, double>> a1, a2;
        for (const qws::ScalingRow& row : qws::scaling_table(samples, t1)) {
          a1.push_back({row.d, row.a1});
          a2.push_back({row.d, row.a2});
        }
        report["log2_a1"] = fit_json(qws::fit_dimension_scaling(a1));
        report["log2_a2"] = fit_json(qws::fit_dimension_scaling(a2));
      } else if (model == "inverse-d") {
        std::vector<std::pair<int, double>> ratios;
        for (const qws::ScalingRow& row : qws::scaling_table(samples, t1))
          ratios.push_back({row.d, row.ratio});
        report["ratio"] = fit_json(qws::fit_ratio_vs_inverse_d(ratios));
      } else {  // fixed-L
        if (cmd_fit->count("--L") == 0)
          throw std::invalid_argument("fit: --L is required for the fixed-L model");
        report["L"] = L;
        report["queries"] = fit_json(qws::fit_queries_vs_inverse_d_at_fixed_L(samples, L, t1));
      }
      std::cout << report.dump(2) << '\n';
    } else if (cmd_repro->parsed()) {
      qws::ReproduceReport report;
      if (table == 1) {
        report = qws::reproduce_tuning(threads);
      } else if (table == 2) {
        const int series_t1 = cmd_repro->count("--t1") > 0 ? t1 : 3;
        report = qws::reproduce_scaling(series_t1, full, threads);
      } else {
        report = qws::reproduce_multi_vertex(threads);
      }
      qws::print_report(std::cout, report);
      if (!samples_out.empty() && !report.samples.empty()) {
        std::ofstream os = open_output(samples_out);
        qws::write_samples_csv(os, report.samples);
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
