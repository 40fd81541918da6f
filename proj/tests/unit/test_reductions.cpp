#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "support.hpp"
#include "warpdist/generate.hpp"
#include "warpdist/oracles.hpp"
#include "warpdist/reductions.hpp"

using namespace warpdist;
using testing_support::sym;

namespace {

// Letters a, b, c, ... with the null one past the last letter.
const auto kUnit = hamming_with_null(4);
constexpr Symbol kNull = 4;

}  // namespace

TEST(Pad, InterleavesNull) {
  EXPECT_EQ(pad(sym("ab"), kNull), (std::vector<Symbol>{kNull, 0, kNull, 1, kNull}));
  EXPECT_EQ(pad(std::vector<Symbol>{}, kNull), (std::vector<Symbol>{kNull}));
  EXPECT_EQ(pad(sym("aaa"), kNull).size(), 7u);
}

TEST(EdGeneral, Examples) {
  EXPECT_EQ(ed_general(kUnit, sym("abc"), sym("abc")), 0.0);
  EXPECT_EQ(ed_general(kUnit, sym("ab"), sym("b")), 1.0);
  EXPECT_EQ(ed_general(kUnit, sym("ab"), sym("ba")), 2.0);
  EXPECT_EQ(ed_general(kUnit, std::vector<Symbol>{}, sym("abc")), 3.0);
}

TEST(EdViaDtw, Examples) {
  EXPECT_EQ(ed_via_dtw(kUnit, sym("abc"), sym("abc")), 0.0);
  EXPECT_EQ(ed_via_dtw(kUnit, sym("ab"), sym("b")), 1.0);
  EXPECT_EQ(ed_via_dtw(kUnit, std::vector<Symbol>{}, sym("ab")), 2.0);
}

TEST(EdViaDtw, MatchesGeneralOnWeightedMetric) {
  TableMetric table(4, {0, 2, 3, 2, 2, 0, 1, 1, 3, 1, 0, 2, 2, 1, 2, 0});
  NullAugmented<TableMetric> m(table, 3);
  auto rng = derive_rng(53);
  for (int i = 0; i < 500; ++i) {
    const auto x = gen::random_symbols(rng, gen::uniform_size(rng, 0, 12), 3);
    const auto y = gen::random_symbols(rng, gen::uniform_size(rng, 0, 12), 3);
    EXPECT_EQ(ed_via_dtw(m, x, y), ed_general(m, x, y));
  }
}

TEST(EdSimple, Examples) {
  EXPECT_EQ(ed_simple<Symbol>(sym("abc"), sym("abc")), 0.0);
  EXPECT_EQ(ed_simple<Symbol>(sym("ab"), sym("ba")), 2.0);
  EXPECT_EQ(ed_simple<Symbol>(sym("abc"), std::vector<Symbol>{}), 3.0);
}

TEST(Lcs, Examples) {
  EXPECT_EQ(lcs<Symbol>(sym("abcd"), sym("abcd")), 4u);
  EXPECT_EQ(lcs<Symbol>(sym("ab"), sym("ba")), 1u);
  EXPECT_EQ(lcs<Symbol>(sym("abcbdab"), sym("bdcaba")), 4u);
}

TEST(EdViaLcs, Examples) {
  EXPECT_EQ(ed_via_lcs(kUnit, sym("abc"), sym("abc")), 0.0);
  EXPECT_EQ(ed_via_lcs(kUnit, sym("ab"), sym("ba")), 2.0);
  EXPECT_EQ(ed_simple<Symbol>(pad(sym("ab"), kNull), pad(sym("ba"), kNull)), 4.0);
}

TEST(EdViaLcs, RejectsNullInInput) {
  EXPECT_THROW(ed_via_lcs(kUnit, std::vector<Symbol>{kNull}, sym("a")), std::domain_error);
  EXPECT_THROW(ed_via_lcs(kUnit, std::vector<Symbol>{9}, sym("a")), std::domain_error);
}

TEST(EdViaLcs, ScalesWithUnit) {
  const auto m = hamming_with_null(2, 3.0);
  EXPECT_EQ(ed_via_lcs(m, sym("ab"), sym("b")), 3.0);
  EXPECT_EQ(ed_general(m, sym("ab"), sym("b")), 3.0);
}

TEST(Reductions, PaddedIndelDistanceIsEven) {
  auto rng = derive_rng(59);
  for (int i = 0; i < 500; ++i) {
    const auto x = gen::random_symbols(rng, gen::uniform_size(rng, 0, 15), 4);
    const auto y = gen::random_symbols(rng, gen::uniform_size(rng, 0, 15), 4);
    const Cost padded = ed_simple<Symbol>(pad(x, kNull), pad(y, kNull));
    EXPECT_EQ(padded, 2.0 * ed_general(kUnit, x, y));
    EXPECT_EQ(static_cast<long>(padded) % 2, 0);
    EXPECT_EQ(ed_via_lcs(kUnit, x, y), ed_general(kUnit, x, y));
  }
}

TEST(Reductions, SimpleDistanceMatchesIndelEnumeration) {
  auto rng = derive_rng(61);
  for (int i = 0; i < 300; ++i) {
    const auto x = gen::random_symbols(rng, gen::uniform_size(rng, 0, 6), 3);
    const auto y = gen::random_symbols(rng, gen::uniform_size(rng, 0, 6), 3);
    EXPECT_EQ(ed_simple<Symbol>(x, y), oracle::ed_simple_bruteforce<NullAugmented<HammingMetric>>(kUnit, x, y));
  }
}

TEST(Reductions, EditDistanceObeysTriangle) {
  auto rng = derive_rng(67);
  for (int i = 0; i < 300; ++i) {
    const auto x = gen::random_symbols(rng, gen::uniform_size(rng, 0, 10), 4);
    const auto y = gen::random_symbols(rng, gen::uniform_size(rng, 0, 10), 4);
    const auto z = gen::random_symbols(rng, gen::uniform_size(rng, 0, 10), 4);
    EXPECT_LE(ed_general(kUnit, x, z), ed_general(kUnit, x, y) + ed_general(kUnit, y, z));
  }
}

TEST(Reductions, IdentityEmbeddingDistortsByTwo) {
  // 0^n vs 1^n: n substitutions, but 2n indels without substitution.
  for (std::size_t n = 1; n <= 20; ++n) {
    const std::vector<Symbol> x(n, 0), y(n, 1);
    EXPECT_EQ(ed_general(kUnit, x, y), static_cast<Cost>(n));
    EXPECT_EQ(ed_simple<Symbol>(x, y), static_cast<Cost>(2 * n));
  }
}

// 0^n against 1^n: substitutions give ed = n, while the indel distance has to
// delete and reinsert every letter, so the identity map stretches by exactly 2.
TEST(IndelDistance, IdentityMapHasDistortionTwoOnConstantStrings) {
  for (std::size_t n : {1u, 2u, 7u, 64u}) {
    const std::vector<Symbol> zeros(n, 0), ones(n, 1);
    const Cost ed = ed_general(kUnit, zeros, ones);
    EXPECT_EQ(ed, static_cast<Cost>(n));
    EXPECT_EQ(static_cast<Cost>(ed_simple(zeros, ones)), 2.0 * ed);
  }
}
