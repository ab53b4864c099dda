#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "walkreg/enumerate.hpp"
#include "walkreg/families.hpp"
#include "walkreg/scanner.hpp"

namespace walkreg {
namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

TEST(ClassifyTest, Petersen) {
  const auto r = classify(petersen_graph());
  EXPECT_EQ(r.n, 10);
  EXPECT_EQ(r.m, 15);
  EXPECT_TRUE(r.regular);
  EXPECT_EQ(r.degree, 3);
  EXPECT_TRUE(r.walk_regular);
  EXPECT_TRUE(r.vertex_transitive);
  EXPECT_TRUE(r.distance_regular);
  ASSERT_TRUE(r.intersection_array);
  EXPECT_EQ(r.intersection_array->str(), "{3,2;1,1}");
  EXPECT_TRUE(r.reversible);
  ASSERT_TRUE(r.spectral_gap);
  EXPECT_NEAR(*r.spectral_gap, 2.0, 1e-9);
  EXPECT_EQ(r.max_hitting_asymmetry, q(0));
}

TEST(ClassifyTest, PathAndSquare) {
  const auto p3 = classify(path_graph(3));
  EXPECT_FALSE(p3.regular);
  EXPECT_FALSE(p3.degree);
  EXPECT_FALSE(p3.walk_regular);
  EXPECT_FALSE(p3.reversible);
  EXPECT_EQ(p3.r_d, (std::vector<Rational>{q(4), q(2), q(4)}));
  EXPECT_FALSE(p3.r_pi);
  EXPECT_FALSE(p3.spectral_gap);

  const auto c4 = classify(cycle_graph(4));
  EXPECT_EQ(c4.graph6, "Cl");
  EXPECT_EQ(c4.r_pi, q(5, 8));
  EXPECT_TRUE(c4.distance_regular);
}

TEST(ClassifyTest, SingleVertex) {
  const auto r = classify(Graph(1));
  EXPECT_TRUE(r.reversible);
  EXPECT_FALSE(r.r_pi);
  EXPECT_FALSE(r.spectral_gap);
}

TEST(ClassifyTest, PropertyLatticeHoldsOnCorpus) {
  for (const auto& g : connected_corpus(7)) {
    const auto r = classify(g);
    ASSERT_NO_THROW(check_property_lattice(r));
    if (r.walk_regular) {
      ASSERT_TRUE(r.regular && r.reversible) << r.graph6;
    }
    if (r.vertex_transitive || r.distance_regular) {
      ASSERT_TRUE(r.walk_regular) << r.graph6;
    }
  }
}

TEST(ClassifyTest, LatticeViolationIsAnInternalError) {
  auto r = classify(cycle_graph(5));
  r.reversible = false;
  try {
    check_property_lattice(r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvariantViolation);
    EXPECT_NE(std::string(e.what()).find(r.graph6), std::string::npos);
  }
}

TEST(FilterTest, ParsesAsciiAndUnicodeForms) {
  EXPECT_EQ(PropertyFilter::parse("walk_regular & !vertex_transitive").str(), "walk_regular & !vertex_transitive");
  EXPECT_EQ(PropertyFilter::parse("walk_regular ∧ ¬vertex_transitive").str(), "walk_regular & !vertex_transitive");
  EXPECT_EQ(PropertyFilter::parse("reversible and not regular").str(), "reversible & !regular");
  EXPECT_EQ(PropertyFilter::parse("regular,reversible&&distance_regular").str(),
            "regular & reversible & distance_regular");
  EXPECT_EQ(PropertyFilter::parse("!!regular").str(), "regular");
}

TEST(FilterTest, RejectsBadExpressions) {
  for (const char* bad : {"", "&", "regular &", "regular reversible", "bogus", "regular | reversible", "regular !"}) {
    try {
      PropertyFilter::parse(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::BadFilter) << bad;
    }
  }
}

TEST(FilterTest, Matches) {
  const auto f = PropertyFilter::parse("reversible & !regular");
  EXPECT_FALSE(f.matches(classify(cycle_graph(5))));
  EXPECT_FALSE(f.matches(classify(path_graph(3))));
  for (const auto& g : connected_corpus(6)) {
    const auto r = classify(g);
    ASSERT_EQ(f.matches(r), r.reversible && !r.regular) << r.graph6;
  }
}

TEST(ScanTest, DeterministicAcrossJobCounts) {
  const auto graphs = connected_corpus(6);
  const std::vector<PropertyFilter> filters{PropertyFilter::parse("reversible"),
                                            PropertyFilter::parse("walk_regular & !vertex_transitive")};
  const std::string one = to_json(scan_stream(graphs, filters, 1)).dump();
  EXPECT_EQ(to_json(scan_stream(graphs, filters, 8)).dump(), one);
  EXPECT_EQ(to_json(scan_stream(graphs, filters, 3)).dump(), one);
}

TEST(ScanTest, BucketsAtFiveAndSix) {
  const auto five = scan_stream(enumerate_connected(5), {PropertyFilter::parse("reversible")});
  const auto& members = five.buckets[0].members;
  EXPECT_NE(std::find(members.begin(), members.end(), canonical_form(cycle_graph(5)).bytes), members.end());
  EXPECT_NE(std::find(members.begin(), members.end(), canonical_form(complete_graph(5)).bytes), members.end());
  EXPECT_EQ(five.classified, 21u);

  const auto six = scan_stream(enumerate_connected(6), {PropertyFilter::parse("walk_regular & !vertex_transitive")});
  EXPECT_TRUE(six.buckets[0].members.empty());
}

TEST(ScanTest, SkipsDisconnectedAndCountsProperties) {
  const std::vector<Graph> graphs{complete_graph(3), Graph(3, {{0, 1}}), path_graph(3), Graph(2)};
  const auto s = scan_stream(graphs, {});
  EXPECT_EQ(s.total, 4u);
  EXPECT_EQ(s.classified, 2u);
  EXPECT_EQ(s.skipped_disconnected, 2u);
  EXPECT_EQ(s.counts.at("regular"), 1u);
  EXPECT_EQ(s.counts.at("reversible"), 1u);
  EXPECT_TRUE(s.errors.empty());
}

TEST(SpectrumTest, SmallStream) {
  const auto spec = r_pi_spectrum({complete_graph(2), complete_graph(3), cycle_graph(4), cycle_graph(6)});
  ASSERT_EQ(spec.size(), 4u);
  EXPECT_EQ(spec[0].value, q(4, 9));
  EXPECT_EQ(spec[1].value, q(1, 2));
  EXPECT_EQ(spec[2].value, q(5, 8));
  EXPECT_EQ(spec[3].value, q(35, 36));
  EXPECT_EQ(spec[0].witness, "Bw");
  EXPECT_EQ(spec[2].witness, "Cl");
}

TEST(SpectrumTest, EmptyAndNonReversibleStreams) {
  EXPECT_TRUE(r_pi_spectrum({}).empty());
  EXPECT_TRUE(r_pi_spectrum({path_graph(3), star_graph(4), path_graph(5)}).empty());
}

TEST(SpectrumTest, DuplicatesKeepFirstWitness) {
  const auto spec = r_pi_spectrum({cycle_graph(4), cycle_graph(4).relabeled({1, 0, 2, 3}), complete_graph(2)});
  ASSERT_EQ(spec.size(), 2u);
  EXPECT_EQ(spec[1].witness, "Cl");
}

TEST(SpectrumTest, CsvLayout) {
  std::ostringstream os;
  write_spectrum_csv(os, r_pi_spectrum({complete_graph(3), cycle_graph(4)}));
  EXPECT_EQ(os.str(), "value_num,value_den,witness_graph6\n4,9,Bw\n5,8,Cl\n");
}

TEST(JsonTest, RationalsSerializeAsExactStrings) {
  const Json j = to_json(classify(cycle_graph(6)));
  EXPECT_EQ(j["r_pi"], "35/36");
  EXPECT_EQ(Rational::parse(j["r_pi"].get<std::string>()), q(35, 36));
  EXPECT_EQ(j["intersection_array"]["b"], Json({2, 1, 1}));
  const Json p = to_json(classify(path_graph(3)));
  EXPECT_TRUE(p["r_pi"].is_null());
  EXPECT_EQ(p["r_d"], Json({"4", "2", "4"}));
  EXPECT_EQ(Json::parse(p.dump()), p);
}

}  // namespace
}  // namespace walkreg
