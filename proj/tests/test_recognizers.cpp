#include <gtest/gtest.h>

#include "oracles.hpp"
#include "powergraph/finite_group.hpp"
#include "powergraph/power_graphs.hpp"
#include "powergraph/recognizers.hpp"

using namespace powergraph;

namespace {

std::vector<std::uint32_t> orders_of(const FiniteGroup& g, const std::vector<Vertex>& vs) {
  std::vector<std::uint32_t> out;
  for (auto v : vs) out.push_back(g.element_order(v));
  return out;
}

void expect_agrees_with_oracle(const Graph& g) {
  const auto cog = is_cograph(g);
  const auto cho = is_chordal(g);
  const auto spl = is_split(g);
  const auto thr = is_threshold(g);
  const auto per = is_perfect_bounded(g, 9);
  EXPECT_EQ(cog.member, oracle::cograph(g));
  EXPECT_EQ(cho.member, oracle::chordal(g));
  EXPECT_EQ(spl.member, oracle::split(g));
  EXPECT_EQ(thr.member, oracle::threshold(g));
  EXPECT_EQ(per.member, oracle::perfect_up_to(g, 9));
  for (const auto* v : {&cog, &cho, &spl, &thr, &per}) EXPECT_TRUE(verdict_holds(g, *v)) << to_string(v->graph_class);
}

}  // namespace

TEST(Recognizers, RandomGraphsMatchSubsetEnumeration) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 600; ++t) {
    const std::size_t n = 1 + t % 11;
    expect_agrees_with_oracle(oracle::random_graph(rng, n, 0.15 + 0.7 * (t % 7) / 6.0));
  }
}

TEST(Recognizers, StructuredFamiliesMatchSubsetEnumeration) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + t % 10;
    expect_agrees_with_oracle(oracle::random_threshold_graph(rng, n));
    expect_agrees_with_oracle(oracle::random_split_graph(rng, n));
    expect_agrees_with_oracle(oracle::random_cograph(rng, n));
    expect_agrees_with_oracle(oracle::random_chordal_graph(rng, n));
  }
  for (std::size_t k = 4; k <= 9; ++k) {
    expect_agrees_with_oracle(cycle_graph(k));
    expect_agrees_with_oracle(complement(cycle_graph(k)));
  }
}

TEST(Threshold, CreationSequences) {
  const auto star = is_threshold(star_graph(7));
  ASSERT_TRUE(star.member);
  EXPECT_EQ(std::get<CreationSequence>(star.certificate).bits, "00000001");
  const auto k4 = is_threshold(complete_graph(4));
  ASSERT_TRUE(k4.member);
  EXPECT_EQ(std::get<CreationSequence>(k4.certificate).bits, "0111");
  EXPECT_EQ(std::get<CreationSequence>(is_threshold(Graph(3)).certificate).bits, "000");
  EXPECT_EQ(std::get<CreationSequence>(is_threshold(Graph(0)).certificate).bits, "");
  const auto p4 = is_threshold(path_graph(4));
  EXPECT_FALSE(p4.member);
  ASSERT_TRUE(p4.witness);
  EXPECT_EQ(p4.witness->pattern, Pattern::p4());
  EXPECT_TRUE(witness_holds(path_graph(4), *p4.witness));
}

TEST(Threshold, StuckSubgraphWitnessMapsBack) {
  // Dominating vertex 0 joined to a C4 on 1..4 and an isolated vertex 5.
  const std::vector<Edge> e{{1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 1}, {0, 2}, {0, 3}, {0, 4}};
  const auto g = Graph::from_edges(6, e);
  const auto r = threshold_sequence(g);
  ASSERT_FALSE(r.sequence);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->pattern, Pattern::c4());
  EXPECT_TRUE(witness_holds(g, *r.witness));
}

TEST(Chordal, LexBfsVisitsEveryVertexOnce) {
  std::mt19937_64 rng(1);
  const auto g = oracle::random_graph(rng, 30, 0.2);
  auto order = lex_bfs(g);
  std::sort(order.begin(), order.end());
  for (Vertex i = 0; i < 30; ++i) EXPECT_EQ(order[i], i);
  EXPECT_EQ(lex_bfs(Graph(0)).size(), 0u);
}

TEST(Chordal, HoleWitnesses) {
  for (std::size_t k = 4; k <= 12; ++k) {
    const auto v = is_chordal(cycle_graph(k));
    EXPECT_FALSE(v.member);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->pattern, Pattern::hole(k));
    EXPECT_TRUE(witness_holds(cycle_graph(k), *v.witness));
  }
  const auto tree = is_chordal(star_graph(5));
  EXPECT_TRUE(tree.member);
  EXPECT_TRUE(elimination_order_holds(star_graph(5), std::get<EliminationOrder>(tree.certificate)));
}

TEST(Split, DegreeSequencePartition) {
  const auto d4 = build_group("D4");
  const auto v = is_split(power_graph(d4));
  ASSERT_TRUE(v.member);
  const auto& sp = std::get<SplitPartition>(v.certificate);
  EXPECT_EQ(sp.clique, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(sp.independent, (std::vector<Vertex>{4, 5, 6, 7}));
  const auto c42 = is_split(power_graph(build_group("C4xC2")));
  EXPECT_FALSE(c42.member);
  EXPECT_EQ(c42.witness->pattern, Pattern::two_k2());
  EXPECT_FALSE(split_partition_from_degrees(cycle_graph(5)));
}

TEST(Certificates, RejectTamperedData) {
  const auto g = star_graph(3);
  EXPECT_FALSE(creation_sequence_holds(g, {"0011", {1, 2, 3, 0}}));
  EXPECT_TRUE(creation_sequence_holds(g, {"0001", {1, 2, 3, 0}}));
  EXPECT_FALSE(creation_sequence_holds(g, {"1001", {1, 2, 3, 0}}));
  EXPECT_FALSE(elimination_order_holds(cycle_graph(4), {{0, 1, 2, 3}}));
  EXPECT_FALSE(split_partition_holds(g, {{1, 2}, {0, 3}}));
  EXPECT_TRUE(split_partition_holds(g, {{0}, {1, 2, 3}}));
}

TEST(PowerGraphClasses, CographExamples) {
  EXPECT_TRUE(is_cograph(power_graph(build_group("C15"))).member);
  EXPECT_TRUE(is_cograph(power_graph(build_group("Heis3"))).member);
  const auto c30 = build_group("C30");
  const auto v = is_cograph(power_graph(c30));
  ASSERT_FALSE(v.member);
  // The path runs through orders p, pq, q, qr for distinct primes, read in
  // either direction.
  auto o = orders_of(c30, v.witness->vertices);
  if (!is_prime(o[0])) std::reverse(o.begin(), o.end());
  EXPECT_TRUE(is_prime(o[0]) && is_prime(o[2]) && o[0] != o[2]);
  EXPECT_EQ(o[1], o[0] * o[2]);
  EXPECT_EQ(o[3] % o[2], 0u);
  EXPECT_TRUE(is_prime(o[3] / o[2]) && o[3] / o[2] != o[0] && o[3] / o[2] != o[2]);
}

TEST(PowerGraphClasses, ChordalExamples) {
  EXPECT_TRUE(is_chordal(power_graph(build_group("C12"))).member);
  const auto c36 = build_group("C36");
  const auto v = is_chordal(power_graph(c36));
  ASSERT_FALSE(v.member);
  EXPECT_EQ(v.witness->pattern, Pattern::c4());
  EXPECT_FALSE(is_chordal(power_graph(build_group("C30"))).member);
}
