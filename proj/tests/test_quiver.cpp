#include <gtest/gtest.h>

#include "quandle.hpp"
#include "support/oracles.hpp"

using namespace quandle;
using namespace quandle::testing;

namespace {

const Quandle& p3() {
  static const Quandle q = p_quandle(2, parse_cycles("(1 2)", 2));
  return q;
}

LinkDiagram two_component(long long lk, bool shuffle = false, std::uint64_t seed = 1) {
  return synthesize_link(LinkingGraph::from_weights({{0, lk}, {lk, 0}}), {shuffle, seed, false});
}

}  // namespace

TEST(GroupRing, Arithmetic) {
  const GroupRingElement a = GroupRingElement::monomial(0, 5) + GroupRingElement::monomial(2, 4);
  EXPECT_EQ(a.to_string(), "5 + 4t^2");
  EXPECT_EQ(a.augmentation(), 9);
  EXPECT_EQ(GroupRingElement::monomial(-2).to_string(), "t^-2");
  EXPECT_EQ(GroupRingElement::monomial(1, -3).to_string(), "-3t");
  EXPECT_EQ(GroupRingElement{}.to_string(), "0");
  const GroupRingElement b = GroupRingElement::monomial(1) + GroupRingElement::monomial(-1);
  EXPECT_EQ((b * b).to_string(), "t^-2 + 2 + t^2");
  EXPECT_EQ(a + GroupRingElement::monomial(2, -4), GroupRingElement::monomial(0, 5));
  EXPECT_TRUE((GroupRingElement::monomial(3, 2) + GroupRingElement::monomial(3, -2)).is_zero());
  EXPECT_EQ((GroupRingElement::monomial(0, 1) + GroupRingElement::monomial(1, -1)).to_string(), "1 - t");
}

TEST(Quiver, HopfWithAllEndomorphisms) {
  const Quiver q = quiver(load_link("hopf_pos.lnk"), p3(), endomorphisms(p3()));
  EXPECT_EQ(q.vertex_count(), 5u);
  EXPECT_EQ(q.edges.size(), 35u);
  std::vector<int> out(q.vertex_count(), 0);
  for (auto [u, v] : q.edges) ++out[static_cast<std::size_t>(u)];
  for (int d : out) EXPECT_EQ(d, 7);
}

TEST(Quiver, IdentityGivesOneLoopPerVertex) {
  const Quiver q = quiver(load_link("torus_2_4.lnk"), p3(), {identity_map(3)});
  EXPECT_EQ(q.edges.size(), q.vertex_count());
  for (std::size_t v = 0; v < q.edges.size(); ++v) EXPECT_EQ(q.edges[v], std::make_pair(static_cast<int>(v), static_cast<int>(v)));
}

TEST(Quiver, UnknotOverTrivialQuandle) {
  const Quiver q = quiver(load_link("unknot.lnk"), trivial(2), endomorphisms(trivial(2)));
  EXPECT_EQ(q.vertex_count(), 2u);
  EXPECT_EQ(q.edges.size(), 8u);
}

TEST(Quiver, RejectsNonEndomorphisms) {
  EXPECT_THROW(quiver(load_link("hopf_pos.lnk"), p3(), {QuandleMap{3, 3, {1, 0, 0}}}), AxiomViolation);
}

TEST(Quiver, VerticesOrderedByBaseColors) {
  const Quiver q = quiver(load_link("torus_2_4.lnk"), p3(), {});
  for (std::size_t v = 1; v < q.vertex_count(); ++v) EXPECT_LT(q.labels[v - 1], q.labels[v]);
  EXPECT_TRUE(q.edges.empty());
}

TEST(Quiver, DotMatchesGoldenFile) {
  const Quiver q = quiver(load_link("hopf_pos.lnk"), p3(), endomorphisms(p3()));
  const std::string golden = read_text(std::string(QUANDLE_GOLDEN_DIR) + "/hopf_p3_end.dot");
  EXPECT_EQ(quiver_dot(q), golden);
  EXPECT_EQ(quiver_dot(quiver(load_link("unknot.lnk"), trivial(1), {identity_map(1)})),
            "digraph quiver {\n  v0 [label=\"(0)\"];\n  v0 -> v0;\n}\n");
}

TEST(Quiver, IsomorphismOfRelabelledQuivers) {
  const Quiver a = quiver(load_link("hopf_pos.lnk"), p3(), endomorphisms(p3()));
  const Quiver b = quiver(load_link("hopf_r2.lnk"), p3(), endomorphisms(p3()));
  const auto f = quiver_isomorphism(a, b);
  ASSERT_TRUE(f);
  EXPECT_TRUE(induces_edge_bijection(a, b, *f));
  EXPECT_TRUE(quiver_isomorphic(a, b));
}

TEST(Quiver, DifferentLinkingNumbersGiveDifferentQuivers) {
  const Quiver a = quiver(load_link("hopf_pos.lnk"), p3(), endomorphisms(p3()));
  const Quiver b = quiver(load_link("torus_2_4.lnk"), p3(), endomorphisms(p3()));
  EXPECT_FALSE(quiver_isomorphic(a, b));
}

TEST(Quiver, DetectsEqualDegreeNonIsomorphicGraphs) {
  // A 6-cycle of loops-free edges versus two 3-cycles: same degrees.
  Quiver six, two_triangles;
  six.vertices.resize(6);
  six.labels.resize(6);
  two_triangles.vertices.resize(6);
  two_triangles.labels.resize(6);
  for (int v = 0; v < 6; ++v) six.edges.emplace_back(v, (v + 1) % 6);
  for (int v = 0; v < 6; ++v) two_triangles.edges.emplace_back(v, v < 3 ? (v + 1) % 3 : 3 + (v + 1) % 3);
  EXPECT_FALSE(quiver_isomorphic(six, two_triangles));
  EXPECT_TRUE(quiver_isomorphic(six, six));
}

TEST(Quiver, VertexBound) {
  const Quiver a = quiver(synthesize_link(LinkingGraph::from_weights({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})), p3(), {});
  EXPECT_EQ(a.vertex_count(), 27u);
  EXPECT_THROW(quiver_isomorphic(a, a), LimitExceeded);
  EXPECT_TRUE(quiver_isomorphic(a, a, 27));
}

TEST(CocycleInvariant, SmallExamples) {
  const Cocycle2 theta = theta_cocycle(2);
  EXPECT_EQ(cocycle_invariant(load_link("hopf_pos.lnk"), p3(), theta).to_string(), "5");
  EXPECT_EQ(cocycle_invariant(load_link("torus_2_4.lnk"), p3(), theta).to_string(), "5 + 4t^2");
  EXPECT_EQ(cocycle_invariant(load_link("hopf_r2.lnk"), p3(), theta).to_string(), "5");
  EXPECT_EQ(cocycle_invariant(load_link("hopf_kink.lnk"), p3(), theta).to_string(), "5");
  for (int n = 2; n <= 4; ++n)
    EXPECT_EQ(cocycle_invariant(load_link("trefoil.lnk"), p_quandle(n, long_cycle(n)), theta_cocycle(n)),
              GroupRingElement::monomial(0, n + 1));
}

TEST(CocycleInvariant, NegativeLinkingNumber) {
  for (int n = 2; n <= 3; ++n) {
    const Quandle q = p_quandle(n, long_cycle(n));
    const auto phi = cocycle_invariant(two_component(-n), q, theta_cocycle(n));
    EXPECT_EQ(phi, GroupRingElement::monomial(0, 1 + n * n) + GroupRingElement::monomial(-n, 2 * n));
  }
}

TEST(CocycleInvariant, AugmentationIsColoringCount) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const LinkingGraph g = random_linking_graph(3, 3, seed);
    const LinkDiagram d = synthesize_link(g);
    const Quandle q = p_quandle(3, parse_cycles("(1 2)", 3));
    EXPECT_EQ(static_cast<std::size_t>(cocycle_invariant(d, q, theta_cocycle(3)).augmentation()),
              colorings(d, q).size());
  }
}

TEST(CocycleInvariant, RejectsNonCocycles) {
  Cocycle2 bad = Cocycle2::zero(3);
  bad.values[1][0] = 1;
  EXPECT_THROW(cocycle_invariant(load_link("hopf_pos.lnk"), dihedral(3), bad), AxiomViolation);
  EXPECT_THROW(cocycle_invariant(load_link("hopf_pos.lnk"), p3(), theta_cocycle(3)), AxiomViolation);
  EXPECT_THROW(cocycle_invariant(load_link("hopf_pos.lnk"), p3(), Cocycle2::zero(3, Coefficients::integers_mod(2))),
               InvalidArgument);
}

TEST(CocycleInvariant, QuiverAndPhiAgreeAcrossDiagramsOfOneGraph) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& sigma : conjugacy_class_representatives(n)) {
      const Quandle q = p_quandle(n, sigma);
      const auto endos = endomorphisms(q);
      const LinkingGraph g = LinkingGraph::from_weights({{0, 2, 1}, {2, 0, 0}, {1, 0, 0}});
      const LinkDiagram a = synthesize_link(g);
      const LinkDiagram b = synthesize_link(g, {true, 3, true});
      ASSERT_NE(format_diagram(a), format_diagram(b));
      EXPECT_TRUE(quiver_isomorphic(quiver(a, q, endos), quiver(b, q, endos), 64)) << sigma.format_cycles();
      EXPECT_EQ(cocycle_invariant(a, q, theta_cocycle(n)), cocycle_invariant(b, q, theta_cocycle(n)));
    }
}

TEST(CocycleInvariant, LinkingWeightsOneTwoAndDoubledAgree) {
  const Quandle q = p_quandle(2, parse_cycles("(1 2)", 2));
  const auto endos = endomorphisms(q);
  auto graph = [](long long a, long long b, long long c) {
    return LinkingGraph::from_weights({{0, a, b}, {a, 0, c}, {b, c, 0}});
  };
  const LinkDiagram first = synthesize_link(graph(1, 1, 2));
  const LinkDiagram second = synthesize_link(graph(1, 1, 4));
  const LinkDiagram third = synthesize_link(graph(2, 2, 2));
  const Quiver q1 = quiver(first, q, endos), q2 = quiver(second, q, endos), q3 = quiver(third, q, endos);
  EXPECT_TRUE(quiver_isomorphic(q1, q2));
  EXPECT_EQ(cocycle_invariant(first, q, theta_cocycle(2)), cocycle_invariant(second, q, theta_cocycle(2)));
  EXPECT_FALSE(quiver_isomorphic(q1, q3, 32));
  EXPECT_NE(cocycle_invariant(first, q, theta_cocycle(2)), cocycle_invariant(third, q, theta_cocycle(2)));
}
