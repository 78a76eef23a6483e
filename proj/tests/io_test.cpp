#include <gtest/gtest.h>

#include "hyperlag/instances.hpp"
#include "hyperlag/io.hpp"

namespace hyperlag {
namespace {

TEST(ParseGraph, TextFormat) {
  auto h = io::parse_graph("# K2 with loops\nn 2\n1\n2\n1 2\n");
  EXPECT_EQ(h, complete(2, {1, 2}));
}

TEST(ParseGraph, JsonFormat) {
  auto h = io::parse_graph(R"({"n": 3, "edges": [[1, 2], [2, 3]]})");
  EXPECT_EQ(h, Hypergraph::build(3, {{1, 2}, {2, 3}}));
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  auto line_of = [](std::string_view text) {
    try {
      io::parse_graph(text);
    } catch (const io::ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("n 3\n1 2\n1 2\n"), 3);  // duplicate
  EXPECT_EQ(line_of("n 3\n1 4\n"), 2);       // out of range
  EXPECT_EQ(line_of("n 3\n2 1\n"), 2);       // not increasing
  EXPECT_EQ(line_of("n 3\n1 x\n"), 2);
  EXPECT_EQ(line_of("# c\n1 2\n"), 2);       // missing header
  EXPECT_EQ(line_of("n 0\n"), 1);
  EXPECT_THROW(io::parse_graph(R"({"n": 3, "edges": [[1, 1]]})"), io::ParseError);
  EXPECT_THROW(io::parse_graph(R"({"n": 3})"), io::ParseError);
}

TEST(ParseGraph, RoundTripsThroughBothFormats) {
  instances::Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 9;
    std::set<int> types;
    for (int r = 1; r <= std::min(n, 4); ++r)
      if (rng() % 2) types.insert(r);
    if (types.empty()) types.insert(1);
    auto h = instances::random_hypergraph(rng, n, types, 0.4);
    EXPECT_EQ(io::parse_graph(io::format_graph_text(h)), h);
    EXPECT_EQ(io::graph_from_json(io::graph_to_json(h)), h);
    EXPECT_EQ(io::parse_graph(io::graph_to_json(h).dump()), h);
  }
}

TEST(Weights, Formats) {
  EXPECT_EQ(io::parse_weights("0.5\n# c\n0.5\n"), (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(io::parse_weights("[0.25, 0.75]"), (std::vector<double>{0.25, 0.75}));
  EXPECT_THROW(io::parse_weights("0.5\nabc\n"), io::ParseError);
}

TEST(Settings, JsonBlock) {
  auto s = io::settings_from_json(io::json::parse(R"({"restarts": 7, "seed": 3, "tol": 1e-8})"));
  EXPECT_EQ(s.restarts, 7);
  EXPECT_EQ(s.seed, 3u);
  EXPECT_EQ(s.tol, 1e-8);
  EXPECT_EQ(s.max_iters, 10000);
  EXPECT_THROW(io::settings_from_json(io::json::parse(R"({"bogus": 1})")), io::ParseError);
  auto back = io::settings_from_json(io::settings_to_json(s));
  EXPECT_EQ(back.restarts, 7);
}

TEST(Numbers, TwelveSignificantDigits) {
  EXPECT_EQ(io::format12(1.48), "1.48");
  EXPECT_EQ(io::format12(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(io::round12(1.4800000000001), 1.48);
}

TEST(Reports, CounterexampleJsonUsesExactStrings) {
  auto rep = build_counterexample(ConstructionId::ce_t3, {.s = 4, .t = {}, .n = {}});
  auto j = io::to_json(rep);
  EXPECT_EQ(j.at("lhs"), "38204757/31250000");
  EXPECT_EQ(j.at("rhs"), "11/9");
  EXPECT_EQ(j.at("strict"), true);
}

}  // namespace
}  // namespace hyperlag
