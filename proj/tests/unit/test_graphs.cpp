#include <gtest/gtest.h>

#include "adespec/error.hpp"
#include "adespec/graphs/graph.hpp"

using namespace adespec;
using namespace adespec::graphs;

namespace {

// Closed walks at vertex 0 by dynamic programming over the edge list.
std::vector<BigInt> walks_by_dp(const BipartiteGraph& g, std::size_t max_length) {
  std::vector<BigInt> cur(g.vertex_count(), 0), out;
  cur[0] = 1;
  const auto edges = g.edges();
  for (std::size_t l = 0; l <= max_length; ++l) {
    out.push_back(cur[0]);
    std::vector<BigInt> next(g.vertex_count(), 0);
    for (auto [u, v] : edges) {
      next[u] += cur[v];
      next[v] += cur[u];
    }
    cur = std::move(next);
  }
  return out;
}

BigInt binom(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no adespec::Error thrown";
  return ErrorKind::consistency;
}

}  // namespace

TEST(GraphName, RoundTrip) {
  for (const auto& n : full_catalog()) EXPECT_EQ(GraphName::parse(n.str()), n) << n.str();
  EXPECT_EQ(GraphName::parse("a(4)"), GraphName::A(4));
  EXPECT_THROW(GraphName::parse("A( 4)"), Error);
  EXPECT_EQ(GraphName::parse("f(2,1,3)"), GraphName::F(2, 1, 3));
  EXPECT_EQ(GraphName::parse("e7EXT"), GraphName::E7ext());
}

TEST(GraphName, Errors) {
  EXPECT_EQ(kind_of([] { GraphName::parse("Q(3)"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { GraphName::parse("A(x)"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { GraphName::parse("A1ext(5)"); }), ErrorKind::range);
  EXPECT_EQ(kind_of([] { GraphName::parse("D(2)"); }), ErrorKind::range);
  EXPECT_EQ(kind_of([] { build_graph(GraphName::AInf()); }), ErrorKind::not_finite);
  EXPECT_EQ(kind_of([] { truncate_infinite(GraphName::E6(), 10); }), ErrorKind::type);
  EXPECT_EQ(kind_of([] { loop_count(build_graph(GraphName::A(3)), 3); }), ErrorKind::parity);
}

TEST(BipartiteGraph, RejectsBadInput) {
  EXPECT_EQ(kind_of([] { BipartiteGraph(3, {{0, 1}, {1, 2}, {2, 0}}, 0); }), ErrorKind::range);
  EXPECT_EQ(kind_of([] { BipartiteGraph(3, {{0, 1}}, 0); }), ErrorKind::range);
  EXPECT_EQ(kind_of([] { BipartiteGraph(2, {{0, 1}, {1, 0}}, 0); }), ErrorKind::range);
  EXPECT_EQ(kind_of([] { BipartiteGraph(2, {{0, 0}}, 0); }), ErrorKind::range);
  EXPECT_EQ(kind_of([] { BipartiteGraph(2, {{0, 1}}, 5); }), ErrorKind::range);
}

TEST(BipartiteGraph, DistinguishedVertexIsRenumberedFirst) {
  // Path 0-1-2-3 distinguished at vertex 1.
  BipartiteGraph g(4, {{0, 1}, {1, 2}, {2, 3}}, 1);
  EXPECT_EQ(g.degree(0), 2u);
  EXPECT_TRUE(g.is_even(0));
  const auto d = decompose(g);
  EXPECT_EQ(d.even_vertices.front(), 0u);
  EXPECT_EQ(d.L, d.M * d.M.transposed());
  EXPECT_EQ(d.N, d.M.transposed() * d.M);
}

TEST(Loops, SmallValues) {
  std::vector<BigInt> a4{1, 1, 2, 5, 13};
  EXPECT_EQ(loop_counts(build_graph(GraphName::A(4)), 4), a4);
  // E6 from the end of a long arm: the triple point adds one walk at length 6.
  std::vector<BigInt> e6{1, 1, 2, 6};
  EXPECT_EQ(loop_counts(build_graph(GraphName::E6()), 3), e6);
}

TEST(Loops, MatchDynamicProgrammingOnWholeCatalog) {
  for (const auto& name : finite_catalog()) {
    const auto g = build_graph(name);
    const auto dp = walks_by_dp(g, 24);
    EXPECT_EQ(walk_counts(g, 24), dp) << name.str();
    const auto loops = loop_counts(g, 12);
    for (std::size_t k = 0; k <= 12; ++k) EXPECT_EQ(loops[k], dp[2 * k]) << name.str();
    for (std::size_t l = 1; l <= 24; l += 2) EXPECT_EQ(dp[l], 0) << name.str();
  }
}

TEST(Loops, CycleBelowItsLengthGivesCentralBinomials) {
  for (long v = 4; v <= 16; v += 2) {
    const auto loops = loop_counts(build_graph(GraphName::A1ext(v)), 10);
    for (unsigned long k = 0; 2 * k < static_cast<unsigned long>(v); ++k)
      EXPECT_EQ(loops[k], binom(2 * k, k)) << v << " " << k;
  }
}

TEST(Loops, MatrixPowerAgrees) {
  const auto g = build_graph(GraphName::E8ext());
  const auto p = matrix_power(g.adjacency(), 10);
  EXPECT_EQ(p(0, 0), loop_count(g, 10));
}

TEST(Truncation, SizesAndDistinguishedVertex) {
  EXPECT_EQ(truncate_infinite(GraphName::AInf(), 7).vertex_count(), 7u);
  EXPECT_EQ(truncate_infinite(GraphName::AZZ(), 5).vertex_count(), 10u);
  const auto d = truncate_infinite(GraphName::DInf(), 9);
  EXPECT_EQ(d.vertex_count(), 9u);
  EXPECT_EQ(d.degree(0), 1u);
  EXPECT_EQ(kind_of([] { truncate_infinite(GraphName::DInf(), 3); }), ErrorKind::range);
}

TEST(Catalog, Contents) {
  EXPECT_EQ(finite_catalog().size(), 11u + 9u + 3u + 7u + 9u + 3u);
  EXPECT_EQ(full_catalog().size(), finite_catalog().size() + 3u);
  EXPECT_EQ(build_graph(GraphName::E8ext()).vertex_count(), 9u);
  EXPECT_EQ(build_graph(GraphName::D1ext(6)).vertex_count(), 7u);
}
