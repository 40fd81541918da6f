#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "warpdist/io.hpp"

using namespace warpdist;
using nlohmann::json;

namespace {

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream in(text);
  return io::read_tokens(in);
}

}  // namespace

TEST(ReadTokens, WhitespaceAndCompactRuns) {
  EXPECT_EQ(tokens("a b\n c"), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(tokens("a*3 c*2"), (std::vector<std::string>{"a", "a", "a", "c", "c"}));
  EXPECT_EQ(tokens("x*y *2 2*"), (std::vector<std::string>{"x*y", "*2", "2*"}));
  EXPECT_THROW(tokens("a*0"), std::invalid_argument);
  EXPECT_TRUE(tokens("  \n").empty());
}

TEST(ParseReals, RejectsNonFinite) {
  EXPECT_EQ(io::parse_reals({"1", "-2.5", "3e2"}), (std::vector<double>{1.0, -2.5, 300.0}));
  EXPECT_THROW(io::parse_real("nan"), std::invalid_argument);
  EXPECT_THROW(io::parse_real("inf"), std::invalid_argument);
  EXPECT_THROW(io::parse_real("1e999"), std::invalid_argument);
  EXPECT_THROW(io::parse_real("abc"), std::invalid_argument);
  EXPECT_THROW(io::parse_real("1.5x"), std::invalid_argument);
}

TEST(ParseMetric, HammingWithAndWithoutAlphabet) {
  auto open = io::parse_metric(json{{"kind", "hamming"}});
  EXPECT_TRUE(open.open_alphabet);
  auto closed = io::parse_metric(json{{"kind", "hamming"}, {"alphabet", {"a", "b"}}, {"null", "-"}});
  EXPECT_FALSE(closed.open_alphabet);
  EXPECT_EQ(closed.alphabet.size(), 3u);
  EXPECT_THROW(io::lookup_all(closed.alphabet, {"a", "z"}), std::invalid_argument);
  EXPECT_THROW(io::parse_metric(json{{"kind", "hamming"}, {"alphabet", {"a", "a"}}}), std::invalid_argument);
}

TEST(ParseMetric, TableIsValidatedAtLoad) {
  const json good{{"kind", "table"}, {"alphabet", {"a", "b"}}, {"distances", {{0, 3}, {3, 0}}}, {"null", "a"}};
  const auto spec = io::parse_metric(good);
  EXPECT_EQ(spec.table->dist(0, 1), 3.0);
  const json bad{{"kind", "table"}, {"alphabet", {"a", "b", "c"}}, {"distances", {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}}};
  EXPECT_THROW(io::parse_metric(bad), std::invalid_argument);
  const json ragged{{"kind", "table"}, {"alphabet", {"a", "b"}}, {"distances", {{0, 1}, {1}}}};
  EXPECT_THROW(io::parse_metric(ragged), std::invalid_argument);
  const json bad_null{{"kind", "table"}, {"alphabet", {"a", "b"}}, {"distances", {{0, 1}, {1, 0}}}, {"null", "z"}};
  EXPECT_THROW(io::parse_metric(bad_null), std::invalid_argument);
}

TEST(ParseMetric, Tree) {
  const json j{{"kind", "tree"},
               {"nodes",
                {{{"id", "r"}, {"parent", "r"}},
                 {{"id", "a"}, {"parent", "r"}, {"weight", 4}},
                 {{"id", 7}, {"parent", "a"}, {"weight", 2}}}}};
  const auto spec = io::parse_metric(j);
  ASSERT_TRUE(spec.tree.has_value());
  EXPECT_EQ(spec.tree->dist(spec.alphabet.at("r"), spec.alphabet.at("7")), 4.0);
  EXPECT_TRUE(spec.warnings.empty());
}

TEST(ParseMetric, TreeErrors) {
  const json increasing{{"kind", "tree"},
                        {"nodes",
                         {{{"id", "r"}},
                          {{"id", "a"}, {"parent", "r"}, {"weight", 1}},
                          {{"id", "b"}, {"parent", "a"}, {"weight", 2}}}}};
  EXPECT_THROW(io::parse_metric(increasing), std::invalid_argument);
  const json orphan{{"kind", "tree"}, {"nodes", {{{"id", "r"}}, {{"id", "a"}, {"parent", "q"}, {"weight", 1}}}}};
  EXPECT_THROW(io::parse_metric(orphan), std::invalid_argument);
  const json no_weight{{"kind", "tree"}, {"nodes", {{{"id", "r"}}, {{"id", "a"}, {"parent", "r"}}}}};
  EXPECT_THROW(io::parse_metric(no_weight), std::invalid_argument);
}

TEST(ParseMetric, DeepTreeWarns) {
  json nodes = json::array({{{"id", 0}}});
  for (int v = 1; v < 40; ++v) nodes.push_back({{"id", v}, {"parent", v - 1}, {"weight", 1}});
  const auto spec = io::parse_metric(json{{"kind", "tree"}, {"nodes", nodes}});
  EXPECT_EQ(spec.warnings.size(), 1u);
}

TEST(ParseMetric, UnknownKind) {
  EXPECT_THROW(io::parse_metric(json{{"kind", "cosine"}}), std::invalid_argument);
  EXPECT_THROW(io::parse_metric(json{{"alphabet", {"a"}}}), std::invalid_argument);
}

TEST(TreeJson, RoundTrips) {
  WellSeparatedTree t({0, 0, 0, 1}, {0, 6, 6, 3});
  const auto j = io::tree_to_json(t, [](Symbol v) { return "v" + std::to_string(v); });
  const auto spec = io::parse_metric(j);
  for (Symbol a = 0; a < 4; ++a)
    for (Symbol b = 0; b < 4; ++b)
      EXPECT_EQ(spec.tree->dist(spec.alphabet.at("v" + std::to_string(a)), spec.alphabet.at("v" + std::to_string(b))),
                t.dist(a, b));
}
