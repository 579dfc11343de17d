#include <string>

#include <gtest/gtest.h>

#include "posetdet/identities.hpp"
#include "posetdet/io.hpp"

using namespace posetdet;

namespace {

const std::string fixtures = POSETDET_FIXTURES;

}  // namespace

TEST(PosetFiles, FigureOne) {
  const auto pf = load_poset(fixtures + "/figure1.json");
  EXPECT_EQ(pf.poset.size(), 3u);
  EXPECT_EQ(pf.poset.labels(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(pf.poset.leq(0, 2));
  EXPECT_FALSE(pf.big_f.has_value());
}

TEST(PosetFiles, EmbeddedIncidenceFunctions) {
  const auto pf = load_poset(fixtures + "/figure1_weights.json");
  ASSERT_TRUE(pf.big_f && pf.big_g && pf.f);
  EXPECT_EQ((*pf.big_f)(0, 1), RingValue(3));
  EXPECT_EQ((*pf.big_g)(2, 2), RingValue(2));
  EXPECT_EQ((*pf.big_f)(1, 2), RingValue(0));
  EXPECT_EQ(verify_pfg(pf.poset, *pf.big_f, *pf.big_g).computed, RingValue(2 * 1 * 5 * 3 * -2 * 2));
  EXPECT_EQ(verify_lindstrom(pf.poset, *pf.f).verdict, Verdict::pass);
}

TEST(PosetFiles, PolynomialValues) {
  const auto pf = load_poset(fixtures + "/poly_weights.json");
  ASSERT_TRUE(pf.big_f && pf.big_g);
  EXPECT_EQ(pf.big_f->tag(), RingTag::polynomial);
  EXPECT_EQ((*pf.big_f)(1, 1), RingValue(Polynomial{-1, 0, 1}));
  const auto r = verify_pfg(pf.poset, *pf.big_f, *pf.big_g);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.computed, RingValue(Polynomial{0, 1} * Polynomial{2} * Polynomial{-1, 0, 1} * Polynomial{0, 1}));
}

TEST(PosetFiles, Errors) {
  EXPECT_THROW(load_poset(fixtures + "/cycle.json"), InputError);
  EXPECT_THROW(load_poset(fixtures + "/missing.json"), InputError);
  EXPECT_THROW(parse_poset(json::parse(R"({"covers": []})")), InputError);
  EXPECT_THROW(parse_poset(json::parse(R"({"labels": []})")), InputError);
  EXPECT_THROW(parse_poset(json::parse(R"({"labels": ["a"], "covers": [[0, 1]]})")), InputError);
  EXPECT_THROW(parse_poset(json::parse(R"({"labels": ["a", "b"], "covers": [[0]]})")), InputError);
  EXPECT_THROW(parse_poset(json::parse(R"({"labels": ["a", "b"], "F": {"entries": [[1, 0, 4]]}})")), InputError);
  EXPECT_THROW(parse_poset(json::parse(R"({"labels": ["a"], "F": {"entries": [[0, 0, "x"]]}})")), InputError);
  EXPECT_THROW(parse_poset(json::parse(R"({"labels": ["a", "b"], "covers": [[0, 1]],
                                          "F": {"entries": [[0, 0, 1], [1, 1, [1, 1]]]}})")),
               InputError);
}

TEST(PosetFiles, BigIntegerStrings) {
  const auto pf = parse_poset(json::parse(R"({"labels": ["a"], "F": {"entries": [[0, 0, "123456789012345678901234567890"]]}})"));
  EXPECT_EQ((*pf.big_f)(0, 0), RingValue(Integer("123456789012345678901234567890")));
}

TEST(DigraphFiles, Fixtures) {
  const auto d = load_digraph(fixtures + "/diamond.json");
  EXPECT_EQ(d.vertex_count(), 4u);
  EXPECT_EQ(d.sources(), (std::vector<std::size_t>{0}));
  EXPECT_EQ(d.sinks(), (std::vector<std::size_t>{3}));
  EXPECT_EQ(d.layer(0), Layer::source);
  EXPECT_EQ(d.arc_weight(0, 1), RingValue(1));
}

TEST(DigraphFiles, Errors) {
  EXPECT_THROW(parse_digraph(json::parse(R"({"arcs": []})")), InputError);
  EXPECT_THROW(parse_digraph(json::parse(R"({"vertices": 2, "arcs": [[0, 1, 1], [1, 0, 1]], "sources": [0], "sinks": [1]})")),
               InputError);
  EXPECT_THROW(parse_digraph(json::parse(R"({"vertices": 2, "arcs": [], "sources": [0]})")), InputError);
  EXPECT_THROW(parse_digraph(json::parse(R"({"vertices": 2, "arcs": [[0, 5, 1]], "sources": [0], "sinks": [1]})")),
               InputError);
  EXPECT_THROW(parse_digraph(json::parse(R"({"vertices": 2, "arcs": [], "sources": [0], "sinks": [0]})")), InputError);
}
