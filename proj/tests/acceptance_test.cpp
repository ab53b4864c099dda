// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Exact criteria compare rationals; the two floating-point checks
// pin their tolerances below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "walkreg/cli.hpp"
#include "walkreg/walkreg.hpp"

using namespace walkreg;

namespace {

constexpr double kGapTolerance = 1e-9;
constexpr double kMonteCarloSigmas = 4.0;
constexpr int kMonteCarloSeeds = 20;
constexpr int kMonteCarloRequired = 19;
constexpr std::uint64_t kMonteCarloTrials = 100000;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

const std::vector<Graph>& corpus() {
  static const std::vector<Graph> graphs = connected_corpus(7);
  return graphs;
}

Outcome observation_one() {
  Outcome o;
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
  std::size_t total = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto s = enumerate_connected_graph6(n);
    total += s.size();
    if (s.size() != expected[n - 1]) o.fail("n=" + std::to_string(n) + " gave " + std::to_string(s.size()));
    if (n <= 6 && std::set<std::string>(s.begin(), s.end()) != oracle::brute_connected_classes(n)) {
      o.fail("brute-force class mismatch at n=" + std::to_string(n));
    }
  }
  if (total != 996 || corpus().size() != 996) o.fail("corpus size " + std::to_string(total));
  std::size_t holders = 0;
  for (const auto& g : corpus()) {
    const bool cond = satisfies_return_condition(g);
    holders += cond;
    if (cond != is_walk_regular(g)) o.fail("condition differs from walk-regularity on " + write_graph6(g));
    if (!is_regular(g) && cond) o.fail("non-regular graph satisfies condition: " + write_graph6(g));
  }
  if (o.pass) o.detail = "996 graphs, " + std::to_string(holders) + " satisfy the return condition, all walk-regular";
  return o;
}

Outcome return_time() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& g : corpus()) {
    if (g.n() < 2) continue;  // no walk on K_1
    for (int x = 0; x < g.n(); ++x, ++checked) {
      if (expected_return_time_exact(g, x) != Rational(2 * g.m(), g.degree(x))) {
        o.fail(write_graph6(g) + " vertex " + std::to_string(x));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " vertices, all equal 2m/d(x)";
  return o;
}

Outcome walk_regular_implies_reversible() {
  Outcome o;
  std::size_t wr = 0, vt = 0, dr = 0;
  for (const auto& g : corpus()) {
    const bool w = is_walk_regular(g);
    wr += w;
    if (w && g.n() >= 2 && !is_reversible(g).reversible) o.fail("walk-regular, not reversible: " + write_graph6(g));
    if (is_vertex_transitive(g)) {
      ++vt;
      if (!w) o.fail("vertex-transitive, not walk-regular: " + write_graph6(g));
    }
    if (is_distance_regular(g)) {
      ++dr;
      if (!w) o.fail("distance-regular, not walk-regular: " + write_graph6(g));
    }
  }
  if (o.pass) {
    o.detail = std::to_string(wr) + " walk-regular, " + std::to_string(vt) + " vertex-transitive, " +
               std::to_string(dr) + " distance-regular; no violations";
  }
  return o;
}

Outcome reversibility_characterization() {
  Outcome o;
  std::size_t reversible = 0;
  for (const auto& g : corpus()) {
    if (g.n() < 2) continue;
    const auto h = hitting_matrix(g);
    bool symmetric = true;
    for (int x = 0; x < g.n(); ++x)
      for (int y = x + 1; y < g.n(); ++y) symmetric = symmetric && h(x, y) == h(y, x);
    const auto rd = degree_weighted_resistance(g, resistance_matrix(g));
    const bool constant = std::all_of(rd.begin(), rd.end(), [&](const Rational& v) { return v == rd[0]; });
    reversible += symmetric;
    if (symmetric != constant) o.fail(write_graph6(g));
  }
  if (o.pass) o.detail = std::to_string(reversible) + " reversible graphs, equivalence holds on all 995 with n >= 2";
  return o;
}

Outcome commute_identity() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& g : corpus()) {
    if (g.n() < 2) continue;
    const auto h = hitting_matrix(g);
    const auto r = resistance_matrix(g);
    const Rational two_m(2 * g.m());
    for (int x = 0; x < g.n(); ++x) {
      for (int y = x + 1; y < g.n(); ++y, ++pairs) {
        if (h(x, y) + h(y, x) != two_m * r(x, y)) o.fail(write_graph6(g));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

Outcome cycle_growth() {
  Outcome o;
  for (int n = 3; n <= 12; ++n) {
    const Rational v = r_pi(cycle_graph(n));
    if (v != oracle::cycle_r_pi(n) || v != Rational(long(n) * n - 1, 6L * n)) {
      o.fail("C_" + std::to_string(n) + " gave " + v.str());
    }
    const Rational ratio = v / Rational(n);
    if (n >= 6 && (ratio < Rational(1, 7) || ratio > Rational(1, 5))) o.fail("ratio out of band at n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "(n^2-1)/(6n) for n = 3..12, R_pi/n within [1/7, 1/5] from n = 6; C_12 gives " + r_pi(cycle_graph(12)).str();
  return o;
}

Outcome complete_graphs() {
  Outcome o;
  std::string table;
  for (int n = 2; n <= 8; ++n) {
    const Rational v = r_pi(complete_graph(n));
    if (v != oracle::complete_r_pi(n) || v != Rational(2L * (n - 1), long(n) * n)) {
      o.fail("K_" + std::to_string(n) + " gave " + v.str());
    }
    const Rational closed(2, long(n) * n);
    if (n == 2 && v != closed) o.fail("K_2 disagrees with 2/n^2");
    table += " K_" + std::to_string(n) + "=" + v.str() + (v == closed ? "" : "(2/n^2=" + closed.str() + ")");
  }
  if (o.pass) {
    o.detail = "2(n-1)/n^2 for n = 2..8; the closed form 2/n^2 agrees only at n = 2 and is off by a factor n-1 "
               "for n >= 3:" + table;
  }
  return o;
}

Outcome named_panel() {
  Outcome o;
  const Graph p3 = path_graph(3);  // a - b - c with b = 1
  if (hitting_time(p3, 0, 1) != Rational(1) || hitting_time(p3, 1, 0) != Rational(3)) o.fail("P_3 hitting times");
  const auto rp = is_reversible(p3);
  if (rp.reversible) o.fail("P_3 reported reversible");
  if (rp.r_d != std::vector<Rational>{Rational(4), Rational(2), Rational(4)}) o.fail("P_3 R_d");
  const auto c4 = is_reversible(cycle_graph(4));
  if (!c4.reversible || c4.r_pi != Rational(5, 8)) o.fail("C_4 R_pi");
  const auto pet = classify(petersen_graph());
  if (!pet.vertex_transitive) o.fail("Petersen not vertex-transitive");
  if (!pet.intersection_array || pet.intersection_array->str() != "{3,2;1,1}") o.fail("Petersen intersection array");
  if (!pet.walk_regular || !pet.reversible) o.fail("Petersen walk-regular/reversible");
  if (!pet.spectral_gap || std::abs(*pet.spectral_gap - 2.0) > kGapTolerance) o.fail("Petersen spectral gap");
  if (o.pass) {
    std::ostringstream os;
    os << std::setprecision(12) << "P_3 H=1,3 R_d=(4,2,4); C_4 R_pi=5/8; Petersen {3,2;1,1} gap=" << *pet.spectral_gap;
    o.detail = os.str();
  }
  return o;
}

Outcome monte_carlo() {
  Outcome o;
  const Graph k3 = complete_graph(3);
  const double exact = closed_walk_count_profile(k3, 2).return_probs[2][0].to_double();
  int within = 0;
  for (int seed = 1; seed <= kMonteCarloSeeds; ++seed) {
    const SimEstimate a = simulate_return_frequency(k3, 0, 2, kMonteCarloTrials, seed);
    const SimEstimate b = simulate_return_frequency(k3, 0, 2, kMonteCarloTrials, seed);
    if (!(a == b)) o.fail("seed " + std::to_string(seed) + " not reproducible");
    if (std::abs(a.point - exact) <= kMonteCarloSigmas * a.std_error) ++within;
  }
  if (within < kMonteCarloRequired) o.fail(std::to_string(within) + "/20 within 4 stderr");
  if (o.pass) o.detail = std::to_string(within) + "/20 seeds within 4 stderr of 1/2, repeats bit-identical";
  return o;
}

Outcome scan_determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "walkreg_acceptance";
  std::filesystem::create_directories(dir);
  const std::string corpus_path = (dir / "connected7.g6").string();
  {
    std::ofstream f(corpus_path);
    for (const auto& g : corpus()) f << write_graph6(g) << '\n';
  }
  const std::string filter = "walk_regular ∧ ¬vertex_transitive";
  std::string outputs[2];
  const unsigned jobs[2] = {1, 8};
  for (int i = 0; i < 2; ++i) {
    std::ostringstream out, err;
    const int code = cli::run({"scan", corpus_path, "--filter", filter, "--jobs", std::to_string(jobs[i]), "--json"},
                              out, err);
    if (code != 0) o.fail("scan exited " + std::to_string(code) + ": " + err.str());
    outputs[i] = out.str();
  }
  if (outputs[0] != outputs[1]) o.fail("jobs 1 and 8 differ");
  const Json summary = Json::parse(outputs[0]);
  if (summary["classified"] != 996) o.fail("classified " + summary["classified"].dump());
  if (!summary["buckets"][0]["members"].empty()) o.fail("non-transitive walk-regular graph found");

  const std::string csv_path = (dir / "spectrum.csv").string();
  std::ostringstream out, err;
  if (cli::run({"spectrum", corpus_path, "--csv", csv_path}, out, err) != 0) o.fail("spectrum failed: " + err.str());
  std::ifstream csv(csv_path);
  std::string line;
  std::getline(csv, line);
  if (line != "value_num,value_den,witness_graph6") o.fail("bad CSV header");
  std::size_t rows = 0;
  Rational prev(-1);
  while (std::getline(csv, line)) {
    std::stringstream ss(line);
    std::string num, den, witness, extra;
    if (!std::getline(ss, num, ',') || !std::getline(ss, den, ',') || !std::getline(ss, witness, ',') ||
        std::getline(ss, extra, ',')) {
      o.fail("malformed CSV row: " + line);
      break;
    }
    const Rational value = Rational::parse(num + "/" + den);
    if (!(prev < value)) o.fail("spectrum not strictly ascending at row " + std::to_string(rows + 1));
    prev = value;
    if (rows < 10) {
      const auto r = classify(parse_graph6(witness));
      if (!r.reversible || r.r_pi != value) o.fail("witness " + witness + " does not re-verify");
    }
    ++rows;
  }
  if (rows == 0) o.fail("empty spectrum");
  if (o.pass) {
    o.detail = "byte-identical at jobs 1/8, empty bucket, " + std::to_string(rows) +
               " distinct R_pi values, first 10 re-verified";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"C1 return condition equals walk-regularity on all connected graphs n<=7", observation_one},
      {"C2 expected return time equals 2m/d(x)", return_time},
      {"C3 walk-regular implies reversible; VT and DR imply walk-regular", walk_regular_implies_reversible},
      {"C4 symmetric hitting times iff constant R_d", reversibility_characterization},
      {"C5 commute identity H_xy + H_yx = 2m r(x,y)", commute_identity},
      {"C6 R_pi(C_n) = (n^2-1)/(6n), linear growth", cycle_growth},
      {"C7 R_pi(K_n) = 2(n-1)/n^2", complete_graphs},
      {"C8 named-graph panel", named_panel},
      {"C9 Monte Carlo return frequency on K_3", monte_carlo},
      {"C10 scan determinism, empty bucket, spectrum CSV", scan_determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::printf("[%s] %s -- %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
