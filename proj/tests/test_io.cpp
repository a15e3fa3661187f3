#include <gtest/gtest.h>

#include <cstdio>

#include "helpers.hpp"

using namespace orient;

TEST(Io, RoundTripsEveryGenerator) {
  for (const auto& name : paper_generator_names()) {
    const Instance inst = gen_paper(name);
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst) << name;
  }
}

TEST(Io, RoundTripsRandomInstances) {
  Rng rng = make_rng(2, 0);
  for (int i = 0; i < 50; ++i) {
    RandomSpec spec;
    spec.family = RandomFamily::random_hypergraph;
    spec.unit_costs = false;
    const Instance inst = gen_random(spec, rng);
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst);
  }
}

TEST(Io, FileRoundTrip) {
  const std::string path = ::testing::TempDir() + "orient_io_test.json";
  const Instance inst = fig1(0.05);
  save_instance(inst, path);
  EXPECT_EQ(load_instance(path), inst);
  std::remove(path.c_str());
}

TEST(Io, MalformedDocumentsRaiseValidationError) {
  EXPECT_THROW(parse_instance("not json"), ValidationError);
  EXPECT_THROW(parse_instance("{}"), ValidationError);
  EXPECT_THROW(parse_instance(R"({"vertices": [{"id": "a"}]})"), ValidationError);
  EXPECT_THROW(parse_instance(R"({"vertices": [{"id": "a", "cost": 1, "interval": [0, 1],
      "pmf": [{"cell": [0, 1], "mass": 0.5}]}]})"),
               ValidationError);
  EXPECT_THROW(parse_instance(R"({"vertices": [{"id": "a", "cost": 1, "interval": [0, 1],
      "pmf": [{"cell": [0, 1], "mass": 1}]}], "hyperedges": [["a", "b"]]})"),
               ValidationError);
  EXPECT_THROW(parse_instance(R"({"vertices": [{"id": "a", "cost": "x", "interval": [0, 1],
      "pmf": [{"cell": [0, 1], "mass": 1}]}]})"),
               ValidationError);
  EXPECT_THROW(load_instance("/nonexistent/instance.json"), ValidationError);
}

TEST(Io, AcceptsInstanceWithoutHyperedges) {
  const Instance inst = parse_instance(R"({"vertices": [{"id": "a", "cost": 2, "interval": [0, 1],
      "pmf": [{"cell": [0, 1], "mass": 1}]}]})");
  EXPECT_EQ(inst.size(), 1u);
  EXPECT_TRUE(inst.hyperedges().empty());
  EXPECT_DOUBLE_EQ(inst.cost(0), 2.0);
}
