#pragma once

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "walkreg/walkreg.hpp"

namespace walkreg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Input-side failure that already carries its location (file:line).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads one graph per non-empty line. Errors name the file and line number.
inline std::vector<Graph> read_g6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::vector<Graph> graphs;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const Error& e) {
      throw InputError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return graphs;
}

/// An existing file is read as .g6; anything else is parsed as one graph6 record.
inline std::vector<Graph> read_graphs(const std::string& source) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) return read_g6_file(source);
  try {
    return {parse_graph6(source)};
  } catch (const Error& e) {
    throw InputError("'" + source + "' is neither a file nor a valid graph6 record: " + e.what());
  }
}

inline Graph read_single_graph(const std::string& source) {
  auto graphs = read_graphs(source);
  if (graphs.size() != 1) {
    throw InputError(source + ": expected exactly one graph, found " + std::to_string(graphs.size()));
  }
  return graphs.front();
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string fixed(double v, int digits = 9) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

inline void print_report_text(std::ostream& out, const ClassificationReport& r) {
  out << "graph6: " << r.graph6 << '\n';
  out << "n: " << r.n << "\nm: " << r.m << '\n';
  out << "regular: " << yes_no(r.regular);
  if (r.degree) out << " (degree " << *r.degree << ")";
  out << '\n';
  out << "walk_regular: " << yes_no(r.walk_regular) << '\n';
  out << "vertex_transitive: " << yes_no(r.vertex_transitive) << '\n';
  out << "distance_regular: " << yes_no(r.distance_regular);
  if (r.intersection_array) out << ' ' << r.intersection_array->str();
  out << '\n';
  out << "reversible: " << yes_no(r.reversible) << '\n';
  out << "R_d:";
  for (const auto& q : r.r_d) out << ' ' << q;
  out << '\n';
  out << "R_pi: " << (r.r_pi ? r.r_pi->str() : "undefined") << '\n';
  out << "spectral_gap: " << (r.spectral_gap ? fixed(*r.spectral_gap) : "undefined") << '\n';
  out << "max_hitting_asymmetry: " << r.max_hitting_asymmetry << '\n';
}

inline void print_matrix_text(std::ostream& out, const RatMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& q : m.entries()) {
    cells.push_back(q.str());
    width = std::max(width, cells.back().size());
  }
  const std::size_t label = std::to_string(m.rows()).size();
  out << std::string(label, ' ');
  for (std::size_t j = 0; j < m.cols(); ++j) out << "  " << std::setw(static_cast<int>(width)) << j;
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << std::setw(static_cast<int>(label)) << i;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << "  " << std::setw(static_cast<int>(width)) << cells[i * m.cols() + j];
    }
    out << '\n';
  }
}

inline Json matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact random-walk symmetry analysis for small simple graphs", "walkreg"};
  app.require_subcommand(1);

  bool json = false;
  std::string input;

  auto* analyze = app.add_subcommand("analyze", "Classification report per graph");
  analyze->add_option("input", input, "graph6 record or .g6 file")->required();
  analyze->add_flag("--json", json, "emit JSON (one object per line)");

  std::string family_name;
  std::vector<int> params;
  auto* gen = app.add_subcommand("gen", "Emit graph6 of a standard family member");
  gen->add_option("family", family_name,
                  "complete | cycle | path | star | complete_bipartite | hypercube | petersen")
      ->required();
  gen->add_option("params", params, "family parameters");

  int enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Canonical graph6 of every connected graph on n <= 7 vertices");
  enumerate->add_option("n", enum_n, "vertex count")->required();

  std::vector<std::string> filter_texts;
  unsigned jobs = 1;
  std::string out_path;
  auto* scan = app.add_subcommand("scan", "Classify a .g6 corpus and collect filter buckets");
  scan->add_option("input", input, ".g6 file or graph6 record")->required();
  scan->add_option("--filter", filter_texts, "property expression, e.g. 'reversible & !regular'")->required();
  scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--out", out_path, "write the JSON summary to this file");
  scan->add_flag("--json", json, "print the JSON summary to stdout");

  std::string csv_path;
  auto* spectrum = app.add_subcommand("spectrum", "Sorted exact R_pi values of the reversible graphs");
  spectrum->add_option("input", input, ".g6 file or graph6 record")->required();
  spectrum->add_option("--csv", csv_path, "write value_num,value_den,witness_graph6 rows to this file");
  spectrum->add_flag("--json", json, "emit JSON");

  int vertex = 0, steps = 0;
  std::uint64_t trials = 0, seed = 0;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo return frequency next to the exact value");
  simulate->add_option("input", input, "graph6 record")->required();
  simulate->add_option("--vertex", vertex, "start vertex")->required();
  simulate->add_option("--steps", steps, "walk length t")->required()->check(CLI::NonNegativeNumber);
  simulate->add_option("--trials", trials, "number of walks")->required()->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed, "64-bit seed")->required();
  simulate->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  simulate->add_flag("--json", json, "emit JSON");

  auto* hitting = app.add_subcommand("hitting", "All-pairs exact hitting times H(x,y)");
  hitting->add_option("input", input, "graph6 record")->required();
  hitting->add_flag("--json", json, "emit JSON");

  auto* resistance = app.add_subcommand("resistance", "All-pairs exact effective resistances r(v,w)");
  resistance->add_option("input", input, "graph6 record")->required();
  resistance->add_flag("--json", json, "emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*analyze) {
      bool first = true;
      for (const auto& g : read_graphs(input)) {
        const auto report = classify(g);
        if (json) {
          out << to_json(report).dump() << '\n';
        } else {
          if (!first) out << '\n';
          print_report_text(out, report);
        }
        first = false;
      }
    } else if (*gen) {
      const auto family = family_from_name(family_name);
      if (!family) {
        err << "error: unknown family '" << family_name << "'\n\n" << gen->help();
        return kExitUsage;
      }
      out << write_graph6(make_family(*family, params)) << '\n';
    } else if (*enumerate) {
      for (const auto& s : enumerate_connected_graph6(enum_n)) out << s << '\n';
    } else if (*scan) {
      std::vector<PropertyFilter> filters;
      for (const auto& t : filter_texts) filters.push_back(PropertyFilter::parse(t));
      const auto summary = scan_stream(read_graphs(input), filters, jobs);
      const std::string doc = to_json(summary).dump(2) + "\n";
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw InputError(out_path + ": cannot open for writing");
        f << doc;
      }
      if (json) {
        out << doc;
      } else {
        out << "total: " << summary.total << "\nclassified: " << summary.classified
            << "\nskipped_disconnected: " << summary.skipped_disconnected
            << "\nerrors: " << summary.errors.size() << '\n';
        for (const auto& e : summary.errors) out << "  #" << e.index << ' ' << e.graph6 << ": " << e.message << '\n';
        for (const auto& [name, count] : summary.counts) out << name << ": " << count << '\n';
        for (const auto& b : summary.buckets) {
          out << "bucket [" << b.filter << "]: " << b.members.size() << '\n';
          for (const auto& g6 : b.members) out << "  " << g6 << '\n';
        }
        out << "distinct R_pi values: " << summary.r_pi_spectrum.size() << '\n';
      }
    } else if (*spectrum) {
      const auto values = r_pi_spectrum(read_graphs(input));
      if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw InputError(csv_path + ": cannot open for writing");
        write_spectrum_csv(f, values);
      }
      if (json) {
        Json a = Json::array();
        for (const auto& e : values) a.push_back({{"value", e.value.str()}, {"witness", e.witness}});
        out << a.dump(2) << '\n';
      } else {
        for (const auto& e : values) out << e.value << ' ' << fixed(e.value.to_double(), 6) << ' ' << e.witness << '\n';
      }
    } else if (*simulate) {
      const Graph g = read_single_graph(input);
      const SimEstimate est = simulate_return_frequency(g, vertex, steps, trials, seed, jobs);
      const Rational exact = closed_walk_count_profile(g, steps).return_probs[steps][vertex];
      const double diff = est.point - exact.to_double();
      if (json) {
        Json j;
        j["point"] = est.point;
        j["trials"] = est.trials;
        j["std_error"] = est.std_error;
        j["seed"] = est.seed;
        j["exact"] = exact.str();
        out << j.dump() << '\n';
      } else {
        out << "estimate: " << fixed(est.point) << " (stderr " << fixed(est.std_error) << ", trials "
            << est.trials << ", seed " << est.seed << ")\n";
        out << "exact: " << exact << " (" << fixed(exact.to_double()) << ")\n";
        out << "difference: " << fixed(diff);
        if (est.std_error > 0) out << " (" << fixed(diff / est.std_error, 3) << " stderr)";
        out << '\n';
      }
    } else if (*hitting || *resistance) {
      const Graph g = read_single_graph(input);
      const RatMatrix m = *hitting ? hitting_matrix(g) : resistance_matrix(g);
      if (json) {
        out << matrix_json(m).dump() << '\n';
      } else {
        print_matrix_text(out, m);
      }
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace walkreg::cli
