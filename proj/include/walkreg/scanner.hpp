#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"
#include "walkreg/electrical.hpp"
#include "walkreg/graph.hpp"
#include "walkreg/graph6.hpp"
#include "walkreg/spectral.hpp"
#include "walkreg/symmetry.hpp"
#include "walkreg/walks.hpp"

namespace walkreg {

struct ClassificationReport {
  std::string graph6;
  int n = 0;
  int m = 0;
  bool regular = false;
  std::optional<int> degree;
  bool walk_regular = false;
  bool vertex_transitive = false;
  bool distance_regular = false;
  std::optional<IntersectionArray> intersection_array;
  bool reversible = false;
  std::vector<Rational> r_d;
  std::optional<Rational> r_pi;
  std::optional<double> spectral_gap;
  Rational max_hitting_asymmetry;
};

enum class Property { Regular, WalkRegular, VertexTransitive, DistanceRegular, Reversible };

inline constexpr std::array<std::pair<std::string_view, Property>, 5> kPropertyNames{{
    {"regular", Property::Regular},
    {"walk_regular", Property::WalkRegular},
    {"vertex_transitive", Property::VertexTransitive},
    {"distance_regular", Property::DistanceRegular},
    {"reversible", Property::Reversible},
}};

inline bool has_property(const ClassificationReport& r, Property p) {
  switch (p) {
    case Property::Regular: return r.regular;
    case Property::WalkRegular: return r.walk_regular;
    case Property::VertexTransitive: return r.vertex_transitive;
    case Property::DistanceRegular: return r.distance_regular;
    case Property::Reversible: return r.reversible;
  }
  return false;
}

/// Checks the implications the classification must satisfy; any failure is an
/// internal error and names the offending graph.
inline void check_property_lattice(const ClassificationReport& r) {
  auto fail = [&](const char* rule) {
    throw Error(Errc::InvariantViolation, std::string(rule) + " violated on graph6 '" + r.graph6 + "'");
  };
  if (r.walk_regular && !r.regular) fail("walk_regular => regular");
  if (r.distance_regular && !r.walk_regular) fail("distance_regular => walk_regular");
  if (r.vertex_transitive && !r.walk_regular) fail("vertex_transitive => walk_regular");
  if (r.walk_regular && !r.reversible) fail("walk_regular => reversible");
}

inline ClassificationReport classify(const Graph& g) {
  require_connected(g);
  ClassificationReport r;
  r.graph6 = write_graph6(g);
  r.n = g.n();
  r.m = g.m();
  const int k = regular_degree(g);
  r.regular = k >= 0;
  if (r.regular) r.degree = k;
  r.walk_regular = is_walk_regular(g);
  r.vertex_transitive = is_vertex_transitive(g);
  r.intersection_array = is_distance_regular(g);
  r.distance_regular = r.intersection_array.has_value();

  if (g.n() == 1) {
    // One vertex: hitting times are vacuously symmetric, while R_pi (2m = 0)
    // and the spectral gap (no second eigenvalue) are undefined.
    r.reversible = true;
    r.r_d = {Rational(0)};
  } else {
    ReversibilityReport rev = is_reversible(g);
    r.reversible = rev.reversible;
    r.r_d = std::move(rev.r_d);
    r.r_pi = rev.r_pi;
    r.max_hitting_asymmetry = rev.max_asymmetry;
    if (r.regular) r.spectral_gap = spectral_gap_estimate(g);
  }
  check_property_lattice(r);
  return r;
}

/// Conjunction of possibly negated property flags, e.g.
/// "walk_regular & !vertex_transitive" (also accepts ∧, ¬, "and", "not").
class PropertyFilter {
 public:
  struct Literal {
    Property property;
    bool negated;
  };

  static PropertyFilter parse(std::string_view text) {
    PropertyFilter f;
    std::size_t i = 0;
    bool expect_term = true;
    bool negated = false;
    auto bad = [&](const std::string& why) {
      return Error(Errc::BadFilter, why + " in filter '" + std::string(text) + "'");
    };
    while (i < text.size()) {
      const unsigned char c = text[i];
      if (std::isspace(c)) {
        ++i;
      } else if (text.substr(i).starts_with("¬") || c == '!' || c == '~') {
        if (!expect_term) throw bad("negation after a term");
        negated = !negated;
        i += c == '!' || c == '~' ? 1 : std::string_view("¬").size();
      } else if (text.substr(i).starts_with("∧") || c == '&' || c == ',') {
        if (expect_term) throw bad("missing term before conjunction");
        expect_term = true;
        i += text.substr(i).starts_with("&&") ? 2 : c == '&' || c == ',' ? 1 : std::string_view("∧").size();
      } else if (std::isalpha(c) || c == '_') {
        std::size_t j = i;
        while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
        const std::string_view word = text.substr(i, j - i);
        i = j;
        if (word == "not") {
          if (!expect_term) throw bad("negation after a term");
          negated = !negated;
          continue;
        }
        if (word == "and") {
          if (expect_term) throw bad("missing term before conjunction");
          expect_term = true;
          continue;
        }
        if (!expect_term) throw bad("missing conjunction before '" + std::string(word) + "'");
        auto it = std::find_if(kPropertyNames.begin(), kPropertyNames.end(),
                               [&](const auto& kv) { return kv.first == word; });
        if (it == kPropertyNames.end()) throw bad("unknown property '" + std::string(word) + "'");
        f.literals_.push_back({it->second, negated});
        negated = false;
        expect_term = false;
      } else {
        throw bad("unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
      }
    }
    if (f.literals_.empty() || expect_term) throw bad("incomplete expression");
    return f;
  }

  bool matches(const ClassificationReport& r) const {
    return std::all_of(literals_.begin(), literals_.end(),
                       [&](const Literal& l) { return has_property(r, l.property) != l.negated; });
  }

  /// Normalized ASCII form, used as the bucket key.
  std::string str() const {
    std::string s;
    for (const auto& l : literals_) {
      if (!s.empty()) s += " & ";
      if (l.negated) s += "!";
      for (auto [name, p] : kPropertyNames) {
        if (p == l.property) s += name;
      }
    }
    return s;
  }

  const std::vector<Literal>& literals() const { return literals_; }

 private:
  std::vector<Literal> literals_;
};

struct SpectrumEntry {
  Rational value;
  std::string witness;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct ScanError {
  std::size_t index;  // 0-based position in the input stream
  std::string graph6;
  std::string message;
};

struct Bucket {
  std::string filter;
  std::vector<std::string> members;
};

struct ScanSummary {
  std::size_t total = 0;
  std::size_t classified = 0;
  std::size_t skipped_disconnected = 0;
  std::vector<ScanError> errors;
  std::map<std::string, std::size_t> counts;
  std::vector<Bucket> buckets;
  std::vector<SpectrumEntry> r_pi_spectrum;
};

/// Sorted ascending by value; equal values keep the earliest witness.
inline std::vector<SpectrumEntry> dedup_spectrum(std::vector<SpectrumEntry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value < b.value; });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value == b.value; }),
                entries.end());
  return entries;
}

namespace detail {

struct ScanSlot {
  enum class State { Done, Disconnected, Failed } state = State::Failed;
  std::optional<ClassificationReport> report;
  std::string message;
};

/// Runs fn(i) for i in [0, count) on `jobs` workers. The first internal error
/// (InvariantViolation / CharacterizationMismatch) is rethrown after joining.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr fatal;
  std::atomic<bool> stop{false};
  std::mutex fatal_mutex;
  auto worker = [&] {
    for (std::size_t i; !stop && (i = next++) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(fatal_mutex);
        if (!fatal) fatal = std::current_exception();
        stop = true;
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (fatal) std::rethrow_exception(fatal);
}

inline bool is_internal_error(const Error& e) {
  return e.code() == Errc::InvariantViolation || e.code() == Errc::CharacterizationMismatch;
}

}  // namespace detail

/// Classifies every graph and aggregates in input order, so the summary does
/// not depend on `jobs`. Disconnected inputs are counted and skipped; other
/// per-graph errors are tallied; internal invariant failures abort.
inline ScanSummary scan_stream(const std::vector<Graph>& graphs, const std::vector<PropertyFilter>& filters,
                               unsigned jobs = 1) {
  std::vector<detail::ScanSlot> slots(graphs.size());
  detail::parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    auto& slot = slots[i];
    if (!is_connected(graphs[i])) {
      slot.state = detail::ScanSlot::State::Disconnected;
      return;
    }
    try {
      slot.report = classify(graphs[i]);
      slot.state = detail::ScanSlot::State::Done;
    } catch (const Error& e) {
      if (detail::is_internal_error(e)) throw;
      slot.state = detail::ScanSlot::State::Failed;
      slot.message = e.what();
    }
  });

  ScanSummary s;
  s.total = graphs.size();
  for (auto [name, p] : kPropertyNames) s.counts[std::string(name)] = 0;
  for (const auto& f : filters) s.buckets.push_back({f.str(), {}});
  std::vector<SpectrumEntry> spectrum;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto& slot = slots[i];
    if (slot.state == detail::ScanSlot::State::Disconnected) {
      ++s.skipped_disconnected;
      continue;
    }
    if (slot.state == detail::ScanSlot::State::Failed) {
      s.errors.push_back({i, write_graph6(graphs[i]), slot.message});
      continue;
    }
    const auto& r = *slot.report;
    ++s.classified;
    for (auto [name, p] : kPropertyNames) {
      if (has_property(r, p)) ++s.counts[std::string(name)];
    }
    for (std::size_t b = 0; b < filters.size(); ++b) {
      if (filters[b].matches(r)) s.buckets[b].members.push_back(r.graph6);
    }
    if (r.r_pi) spectrum.push_back({*r.r_pi, r.graph6});
  }
  s.r_pi_spectrum = dedup_spectrum(std::move(spectrum));
  return s;
}

/// Exact R_pi of every reversible graph in the stream, sorted and deduplicated.
inline std::vector<SpectrumEntry> r_pi_spectrum(const std::vector<Graph>& graphs) {
  std::vector<SpectrumEntry> entries;
  for (const auto& g : graphs) {
    if (g.n() < 2 || !is_connected(g)) continue;
    const auto rev = is_reversible(g);
    if (rev.r_pi) entries.push_back({*rev.r_pi, write_graph6(g)});
  }
  return dedup_spectrum(std::move(entries));
}

// ---- serialization -------------------------------------------------------

using Json = nlohmann::ordered_json;

inline Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(q.str());
  return a;
}

inline Json to_json(const ClassificationReport& r) {
  Json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["regular"] = r.regular;
  j["degree"] = r.degree ? Json(*r.degree) : Json(nullptr);
  j["walk_regular"] = r.walk_regular;
  j["vertex_transitive"] = r.vertex_transitive;
  j["distance_regular"] = r.distance_regular;
  if (r.intersection_array) {
    j["intersection_array"] = {{"diameter", r.intersection_array->diameter},
                               {"b", r.intersection_array->b},
                               {"c", r.intersection_array->c}};
  } else {
    j["intersection_array"] = nullptr;
  }
  j["reversible"] = r.reversible;
  j["r_d"] = rationals_json(r.r_d);
  j["r_pi"] = r.r_pi ? Json(r.r_pi->str()) : Json(nullptr);
  j["spectral_gap"] = r.spectral_gap ? Json(*r.spectral_gap) : Json(nullptr);
  j["max_hitting_asymmetry"] = r.max_hitting_asymmetry.str();
  return j;
}

inline Json to_json(const ReversibilityReport& r) {
  Json j;
  j["reversible"] = r.reversible;
  j["r_d"] = rationals_json(r.r_d);
  j["r_d_constant"] = r.r_d_constant ? Json(r.r_d_constant->str()) : Json(nullptr);
  j["r_pi"] = r.r_pi ? Json(r.r_pi->str()) : Json(nullptr);
  j["max_asymmetry"] = r.max_asymmetry.str();
  return j;
}

inline Json to_json(const ScanSummary& s) {
  Json j;
  j["total"] = s.total;
  j["classified"] = s.classified;
  j["skipped_disconnected"] = s.skipped_disconnected;
  Json errors = Json::array();
  for (const auto& e : s.errors) {
    errors.push_back({{"index", e.index}, {"graph6", e.graph6}, {"message", e.message}});
  }
  j["errors"] = errors;
  Json counts = Json::object();
  for (auto [name, p] : kPropertyNames) counts[std::string(name)] = s.counts.at(std::string(name));
  j["counts"] = counts;
  Json buckets = Json::array();
  for (const auto& b : s.buckets) buckets.push_back({{"filter", b.filter}, {"members", b.members}});
  j["buckets"] = buckets;
  Json spectrum = Json::array();
  for (const auto& e : s.r_pi_spectrum) spectrum.push_back({{"value", e.value.str()}, {"witness", e.witness}});
  j["r_pi_spectrum"] = spectrum;
  return j;
}

/// Header plus one row per entry: value_num,value_den,witness_graph6.
inline void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumEntry>& spectrum) {
  os << "value_num,value_den,witness_graph6\n";
  for (const auto& e : spectrum) os << e.value.num().get_str() << ',' << e.value.den().get_str() << ',' << e.witness << '\n';
}

}  // namespace walkreg
