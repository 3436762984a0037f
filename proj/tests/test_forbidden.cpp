#include <gtest/gtest.h>

#include <functional>

#include "oracles.hpp"
#include "powergraph/forbidden.hpp"

using namespace powergraph;

namespace {

// Lexicographically least ordered tuple realizing the pattern, by brute force.
std::optional<std::vector<Vertex>> least_embedding(const Graph& g, Pattern p) {
  const auto n = g.vertex_count();
  std::vector<Vertex> t(p.size, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == p.size) return true;
    for (Vertex v = 0; v < n; ++v) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = t[j] != v && g.adjacent(t[j], v) == p.adjacent(i, j);
      if (!ok) continue;
      t[i] = v;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  if (rec(0)) return t;
  return std::nullopt;
}

}  // namespace

TEST(Pattern, Names) {
  EXPECT_EQ(Pattern::p4().name(), "P4");
  EXPECT_EQ(Pattern::c4().name(), "C4");
  EXPECT_EQ(Pattern::two_k2().name(), "2K2");
  EXPECT_EQ(Pattern::antihole(7).name(), "antiC7");
}

TEST(FindForbidden, KnownGraphs) {
  EXPECT_FALSE(find_forbidden(complete_graph(6), Pattern::p3()));
  const auto w = find_forbidden(path_graph(4), Pattern::p4());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(find_forbidden(cycle_graph(4), Pattern::c4()));
  EXPECT_FALSE(find_forbidden(cycle_graph(4), Pattern::p4()));
  EXPECT_FALSE(find_forbidden(cycle_graph(5), Pattern::c4()));
  EXPECT_TRUE(find_forbidden(complement(cycle_graph(4)), Pattern::two_k2()));
  EXPECT_FALSE(find_forbidden(star_graph(7), Pattern::p4()));
  EXPECT_FALSE(find_forbidden(Graph(3), Pattern::p4()));
  EXPECT_THROW(find_forbidden(Graph(3), Pattern{}), std::invalid_argument);
}

TEST(FindForbidden, ReturnsLexicographicallyLeastEmbedding) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 400; ++t) {
    const auto g = oracle::random_graph(rng, 4 + t % 6, 0.2 + 0.1 * (t % 6));
    for (auto p : {Pattern::p3(), Pattern::p4(), Pattern::c4(), Pattern::c5(), Pattern::two_k2()}) {
      const auto w = find_forbidden(g, p);
      const auto ref = least_embedding(g, p);
      ASSERT_EQ(w.has_value(), ref.has_value()) << p.name();
      if (w) {
        EXPECT_EQ(w->vertices, *ref);
        EXPECT_TRUE(witness_holds(g, *w));
      }
    }
  }
}

TEST(FindOddHole, HolesAndAntiholes) {
  const auto c7 = cycle_graph(7);
  const auto w = find_odd_hole_or_antihole(c7, 7, false);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->pattern, Pattern::hole(7));
  EXPECT_EQ(w->vertices.front(), 0u);
  EXPECT_TRUE(witness_holds(c7, *w));
  EXPECT_FALSE(find_odd_hole_or_antihole(c7, 5, false));
  const auto anti = complement(c7);
  const auto a = find_odd_hole_or_antihole(anti, 7, true);
  ASSERT_TRUE(a);
  EXPECT_TRUE(witness_holds(anti, *a));
  EXPECT_FALSE(find_odd_hole_or_antihole(anti, 7, false));
  EXPECT_FALSE(find_odd_hole_or_antihole(cycle_graph(6), 9, false));
  EXPECT_THROW(find_odd_hole_or_antihole(c7, 6, false), std::invalid_argument);
}

TEST(FindOddHole, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const auto g = oracle::random_graph(rng, 5 + t % 6, 0.25 + 0.1 * (t % 5));
    for (std::size_t len = 5; len <= 9; len += 2) {
      const auto w = find_odd_hole_or_antihole(g, len, false);
      const auto a = find_odd_hole_or_antihole(g, len, true);
      bool hole = false, antihole = false;
      for (std::size_t k = 5; k <= len; k += 2) {
        hole = hole || oracle::has_cycle(g, k);
        antihole = antihole || oracle::has_anticycle(g, k);
      }
      EXPECT_EQ(w.has_value(), hole);
      EXPECT_EQ(a.has_value(), antihole);
      if (w) {
        EXPECT_TRUE(witness_holds(g, *w));
      }
      if (a) {
        EXPECT_TRUE(witness_holds(g, *a));
      }
    }
  }
}

TEST(WitnessHolds, RejectsWrongWitnesses) {
  const auto g = path_graph(4);
  EXPECT_TRUE(witness_holds(g, {Pattern::p4(), {3, 2, 1, 0}, {}}));
  EXPECT_FALSE(witness_holds(g, {Pattern::p4(), {0, 2, 1, 3}, {}}));
  EXPECT_FALSE(witness_holds(g, {Pattern::p4(), {0, 1, 2}, {}}));
  EXPECT_FALSE(witness_holds(g, {Pattern::p4(), {0, 1, 2, 9}, {}}));
  EXPECT_FALSE(witness_holds(g, {Pattern::c4(), {0, 1, 2, 3}, {}}));
  EXPECT_FALSE(witness_holds(g, {Pattern::p3(), {0, 1, 1}, {}}));
}
