#include <gtest/gtest.h>

#include <map>
#include <set>

#include "garside/enumerate.hpp"
#include "garside/error.hpp"
#include "garside/hyp_metrics.hpp"
#include "oracles.hpp"

using namespace garside;
using oracle::Burau;

namespace {

GroupPtr group(const std::string& spec) { return CoxeterGroup::build(parse_group_spec(spec)); }
GarsideElement el(const GroupPtr& g, const std::string& w) { return parse_element(g, w); }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Io;
}

// Gromov-product form of the four-point condition, over all ordered tuples.
int twice_delta_oracle(const MetricGraph& g) {
  const auto d = all_pairs_distances(g);
  const int n = static_cast<int>(g.vertex_count());
  int best = 0;
  for (int w = 0; w < n; ++w)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          // 2 (x|y)_w = d(x,w) + d(y,w) - d(x,y)
          const int xy = d[x][w] + d[y][w] - d[x][y];
          const int xz = d[x][w] + d[z][w] - d[x][z];
          const int yz = d[y][w] + d[z][w] - d[y][z];
          best = std::max(best, std::min(xz, yz) - xy);
        }
  return best;
}

MetricGraph path_graph(int n) {
  MetricGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

MetricGraph cycle_graph(int n) {
  MetricGraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

}  // namespace

TEST(MetricGraph, BasicsAndExport) {
  MetricGraph g;
  const int a = g.add_vertex("a"), b = g.add_vertex("b");
  EXPECT_EQ(g.add_vertex("a"), a);
  EXPECT_TRUE(g.add_edge(a, b));
  EXPECT_FALSE(g.add_edge(b, a));
  EXPECT_FALSE(g.add_edge(a, a));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(code_of([&] { g.add_edge(0, 7); }), ErrorCode::IndexOutOfRange);
  g.provenance()["kind"] = "test";
  EXPECT_EQ(MetricGraph::from_json(g.to_json()), g);
  EXPECT_EQ(g.to_dot().rfind("// provenance: kind=test", 0), 0u);
  const MetricGraph empty;
  EXPECT_EQ(MetricGraph::from_json(empty.to_json()), empty);
  EXPECT_NE(empty.to_dot().find("graph G {"), std::string::npos);
  EXPECT_EQ(code_of([] { MetricGraph::from_json("{"); }), ErrorCode::ParseError);
}

TEST(GensetOracle, MembershipExamples) {
  const GroupPtr i5 = group("I2(5)"), a3 = group("A3");
  const GeneratingSetOracle xp(i5, GensetKind::XP);
  for (int n = 1; n <= 9; ++n) EXPECT_TRUE(xp.membership(el(i5, "a^" + std::to_string(n))));
  EXPECT_TRUE(xp.membership(el(i5, "D^2")));
  EXPECT_TRUE(xp.membership(el(i5, "D^-4")));
  EXPECT_FALSE(xp.membership(el(i5, "D")));
  EXPECT_FALSE(xp.membership(el(i5, "a b")));
  EXPECT_TRUE(GeneratingSetOracle(a3, GensetKind::XNP).membership(el(a3, "D")));
  EXPECT_FALSE(GeneratingSetOracle(a3, GensetKind::Xabs).membership(el(a3, "D")));
  EXPECT_TRUE(GeneratingSetOracle(a3, GensetKind::Xabs).membership(el(a3, "s3^5")));
  EXPECT_FALSE(GeneratingSetOracle(a3, GensetKind::XP).membership(el(a3, "D^2 s1")));
  const GeneratingSetOracle fs(a3, GensetKind::FiniteSPlusDelta2);
  EXPECT_TRUE(fs.membership(el(a3, "s2^-1")));
  EXPECT_FALSE(fs.membership(el(a3, "s1 s2")));
  EXPECT_EQ(parse_genset_kind("XNP"), GensetKind::XNP);
  EXPECT_EQ(code_of([] { parse_genset_kind("nope"); }), ErrorCode::ParseError);
}

TEST(GensetOracle, SymmetricAndContainsGenerators) {
  for (const char* spec : {"A2", "I2(5)", "A3"}) {
    const GroupPtr g = group(spec);
    const auto ball = simple_length_ball(g, 2);
    for (GensetKind kind : {GensetKind::XP, GensetKind::XNP, GensetKind::Xabs,
                            GensetKind::Simples, GensetKind::FiniteSPlusDelta2}) {
      const GeneratingSetOracle o(g, kind);
      for (int s = 0; s < g->rank(); ++s)
        EXPECT_TRUE(o.membership(GarsideElement::from_simple(g, g->generator(s))))
            << spec << " " << o.name();
      if (kind == GensetKind::Xabs && std::string(spec) == "A3") continue;
      for (const auto& x : ball)
        EXPECT_EQ(o.verdict(x), o.verdict(x.inverse())) << spec << " " << o.name() << " " << x;
    }
  }
}

TEST(GensetOracle, XPContainedInXNP) {
  for (const char* spec : {"A3", "B3", "I2(5)"}) {
    const GroupPtr g = group(spec);
    const GeneratingSetOracle xp(g, GensetKind::XP), xnp(g, GensetKind::XNP);
    for (const auto& x : simple_length_ball(g, 2))
      if (xp.membership(x)) EXPECT_TRUE(xnp.membership(x)) << spec << " " << x;
  }
}

TEST(GensetOracle, Enumeration) {
  const GroupPtr a2 = group("A2");
  const auto simples = enumerate_genset(GeneratingSetOracle(a2, GensetKind::Simples), 1);
  EXPECT_EQ(simples.size(), 10u);

  const GroupPtr a3 = group("A3");
  for (const auto& x : enumerate_genset(GeneratingSetOracle(a3, GensetKind::XP), 1)) {
    ASSERT_EQ(x.simple_length(), 1);
    const GarsideElement& pos = x.inf() == 0 ? x : x.inverse();
    ASSERT_EQ(pos.canonical_length(), 1) << x;
    const GenSet supp = a3->support(pos.factors()[0]);
    EXPECT_TRUE(a3->graph().is_connected(supp) && supp != full_set(3)) << x;
  }

  const GroupPtr i3 = group("I2(3)");
  const auto abs = enumerate_genset(GeneratingSetOracle(i3, GensetKind::Xabs), 8);
  int central = 0;
  for (const auto& x : abs) central += x.canonical_length() == 0;
  EXPECT_EQ(central, 8);
  EXPECT_EQ(abs.size() - central, 4u);
  EXPECT_TRUE(std::is_sorted(abs.begin(), abs.end(), shortlex_less));
}

TEST(BallGraph, NeighborsOfIdentity) {
  const GroupPtr i5 = group("I2(5)");
  const int universe = 6;
  const MetricGraph g = bounded_ball_graph(GeneratingSetOracle(i5, GensetKind::XP), 1, universe);
  std::set<std::string> expected;
  for (int n = 1; n <= universe; ++n)
    for (const char* s : {"a^", "a^-", "b^", "b^-"}) expected.insert(el(i5, s + std::to_string(n)).render());
  for (int k = 2; k <= universe; k += 2)
    for (int sign : {1, -1}) expected.insert(el(i5, "D^" + std::to_string(sign * k)).render());
  const int id = g.find(el(i5, "1").render());
  ASSERT_GE(id, 0);
  std::set<std::string> got;
  for (int v : g.neighbors(id)) got.insert(g.keys()[v]);
  EXPECT_EQ(got, expected);
  EXPECT_EQ(g.vertex_count(), expected.size() + 1);
  EXPECT_EQ(g.keys().front(), el(i5, "1").render());
}

TEST(BallGraph, RadiusZeroAndUniverseTooSmall) {
  const GroupPtr a2 = group("A2");
  const GeneratingSetOracle o(a2, GensetKind::Simples);
  EXPECT_EQ(bounded_ball_graph(o, 0, 3).vertex_count(), 1u);
  EXPECT_EQ(code_of([&] { bounded_ball_graph(o, 4, 1); }), ErrorCode::UniverseTooSmall);
}

TEST(BallGraph, MatchesBurauBfs) {
  // Generators s1^{+-1}, s2^{+-1}, Delta^{+-2}; the universe never binds at
  // radius 3 so layer sizes must match an independent Burau-matrix BFS.
  const GroupPtr a2 = group("I2(3)");
  const auto gens = GeneratingSetOracle(a2, GensetKind::FiniteSPlusDelta2).enumerate_up_to(2);
  const MetricGraph g =
      bounded_ball_graph(GeneratingSetOracle(a2, GensetKind::FiniteSPlusDelta2), 3, 6, 2);

  std::vector<Burau> burau_gens;
  for (int i = 0; i < 2; ++i)
    for (int sign : {1, -1}) burau_gens.push_back(oracle::burau_generator(3, i, sign));
  const Burau delta2 = oracle::burau_word(3, {{0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}});
  const Burau delta2_inv =
      oracle::burau_word(3, {{1, -1}, {0, -1}, {1, -1}, {0, -1}, {1, -1}, {0, -1}});
  burau_gens.push_back(delta2);
  burau_gens.push_back(delta2_inv);
  ASSERT_EQ(burau_gens.size(), gens.size());

  std::set<Burau> seen{oracle::burau_identity(3)};
  std::vector<Burau> frontier{oracle::burau_identity(3)};
  std::vector<std::size_t> layer_sizes{1};
  for (int d = 0; d < 3; ++d) {
    std::vector<Burau> next;
    for (const auto& m : frontier)
      for (const auto& x : burau_gens) {
        const Burau h = oracle::burau_times(m, x);
        if (seen.insert(h).second) next.push_back(h);
      }
    layer_sizes.push_back(next.size());
    frontier = std::move(next);
  }
  const std::vector<int> dist = g.bfs(g.find(el(a2, "1").render()));
  std::vector<std::size_t> ours(4, 0);
  for (int d : dist) {
    ASSERT_GE(d, 0);
    ASSERT_LE(d, 3);
    ++ours[d];
  }
  EXPECT_EQ(ours, layer_sizes);
}

TEST(WordLength, Examples) {
  const GroupPtr i5 = group("I2(5)");
  const GeneratingSetOracle xp(i5, GensetKind::XP);
  for (int n = 1; n <= 6; ++n) {
    const WordLength w = word_length_bound(el(i5, "a^" + std::to_string(n)), xp, 6);
    EXPECT_EQ(w.kind, WordLength::Kind::Exact);
    EXPECT_EQ(w.value, 1);
  }
  EXPECT_EQ(word_length_bound(el(i5, "1"), xp, 1).render(), "exact 0");
  EXPECT_EQ(word_length_bound(el(i5, "a b"), xp, 3).render(), "exact 2");
  EXPECT_EQ(word_length_bound(el(i5, "a b a b a b"), xp, 1).render(), "unknown");
}

TEST(WordLength, MonotoneInUniverse) {
  const GroupPtr a3 = group("A3");
  const GeneratingSetOracle fs(a3, GensetKind::FiniteSPlusDelta2);
  for (const char* w : {"s1 s2 s3", "s1 s2 s1 s3", "s2 s1 s3 s2"}) {
    int previous = 1 << 20;
    for (int u = 3; u <= 5; ++u) {
      const WordLength r = word_length_bound(el(a3, w), fs, u);
      if (r.kind == WordLength::Kind::Unknown) continue;
      EXPECT_LE(r.value, previous) << w << " universe " << u;
      previous = r.value;
    }
  }
}

TEST(QuotientCayley, Examples) {
  const GroupPtr i3 = group("I2(3)");
  const MetricGraph q3 = quotient_cayley_graph(i3, 3);
  const auto d3 = q3.bfs(q3.find(coset_key(el(i3, "1"))));
  EXPECT_EQ(d3[q3.find(coset_key(el(i3, "a")))], 1);
  EXPECT_EQ(coset_key(el(i3, "D^3")), coset_key(el(i3, "1")));
  EXPECT_EQ(coset_key(el(i3, "a D^-5")), coset_key(el(i3, "a")));

  const GroupPtr a2 = group("A2");
  const MetricGraph q2 = quotient_cayley_graph(a2, 2);
  EXPECT_EQ(q2.bfs(q2.find(coset_key(el(a2, "1"))))[q2.find(coset_key(el(a2, "s1 s2")))], 1);

  const GroupPtr a3 = group("A3");
  const MetricGraph q = quotient_cayley_graph(a3, 4);
  EXPECT_EQ(q.bfs(q.find(coset_key(el(a3, "1"))))[q.find(coset_key(el(a3, "s1^3")))], 3);
}

TEST(QuotientCayley, DistanceFormulaCrossCheck) {
  // d(a<D>, b<D>) = canonical_length(a^-1 b); truncation can only lengthen.
  for (const char* spec : {"A2", "I2(5)", "A3"}) {
    const GroupPtr g = group(spec);
    const int len = std::string(spec) == "A3" ? 2 : 4;
    const MetricGraph q = quotient_cayley_graph(g, len);
    std::vector<GarsideElement> reps;
    for (const auto& key : q.keys()) reps.push_back(el(g, key));
    const auto d = all_pairs_distances(q);
    for (std::size_t a = 0; a < reps.size(); ++a) {
      EXPECT_EQ(d[0][a], reps[a].canonical_length());
      for (std::size_t b = 0; b < reps.size(); ++b) {
        const int formula = (reps[a].inverse() * reps[b]).canonical_length();
        ASSERT_GE(d[a][b], formula) << spec << " " << reps[a] << " ~ " << reps[b];
      }
    }
  }
}

TEST(CalGraph, KeysAndEdges) {
  // Dihedral absorbables are all simples or their inverses, so the edge sets agree.
  const GroupPtr i5 = group("I2(5)");
  EXPECT_EQ(build_cal_graph(i5, 3).edges(), quotient_cayley_graph(i5, 3).edges());

  const GroupPtr a3 = group("A3");
  const MetricGraph cal = build_cal_graph(a3, 2);
  const MetricGraph quo = quotient_cayley_graph(a3, 2);
  EXPECT_EQ(cal.keys(), quo.keys());
  EXPECT_GT(cal.edge_count(), quo.edge_count());
  for (const auto& [a, b] : quo.edges()) EXPECT_TRUE(cal.has_edge(a, b));
  EXPECT_TRUE(cal.has_edge(cal.find(coset_key(el(a3, "1"))), cal.find(coset_key(el(a3, "s1")))));
  EXPECT_TRUE(cal.has_edge(cal.find(coset_key(el(a3, "1"))), cal.find(coset_key(el(a3, "s3^2")))));
  for (const auto& key : cal.keys()) {
    const GarsideElement rep = el(a3, key);
    for (int k = -3; k <= 3; ++k)
      EXPECT_EQ(coset_key(rep * GarsideElement::delta_power(a3, k)), key);
  }
  EXPECT_EQ(cal.provenance().at("kind"), "cal");
}

TEST(Cparab, NeighborhoodExample) {
  const GroupPtr a3 = group("A3");
  const ParabolicSubgroup p0 = standard_parabolic(a3, gen_bit(0));
  const CparabGraph g = build_cparab_neighborhood(p0, 0, 1);
  std::set<std::string> nbrs;
  for (int v : g.graph.neighbors(g.center)) nbrs.insert(g.graph.keys()[v]);
  EXPECT_TRUE(nbrs.count(standard_parabolic(a3, gen_bit(2)).key()));
  EXPECT_TRUE(nbrs.count(standard_parabolic(a3, gen_bit(0) | gen_bit(1)).key()));
  EXPECT_FALSE(nbrs.count(standard_parabolic(a3, gen_bit(1)).key()));
  for (std::size_t v = 0; v < g.graph.vertex_count(); ++v)
    for (int w : g.graph.neighbors(static_cast<int>(v))) EXPECT_TRUE(g.graph.has_edge(w, static_cast<int>(v)));
}

TEST(Cparab, TranslationIsAnIsomorphism) {
  const GroupPtr a3 = group("A3");
  const CparabGraph base = cparab_graph_on(parabolic_conjugates(a3, 1));
  const GarsideElement s2 = el(a3, "s2");
  std::vector<ParabolicSubgroup> moved;
  for (const auto& p : base.subgroups) moved.push_back(left_act(s2, p));
  const CparabGraph image = cparab_graph_on(moved);
  ASSERT_EQ(image.graph.vertex_count(), base.graph.vertex_count());
  EXPECT_EQ(image.graph.edge_count(), base.graph.edge_count());
  for (const auto& [a, b] : base.graph.edges())
    EXPECT_TRUE(image.graph.has_edge(image.graph.find(moved[a].key()), image.graph.find(moved[b].key())));
}

TEST(FatTriangle, DistancesInQuotient) {
  const GroupPtr a3 = group("A3");
  const MetricGraph q = quotient_cayley_graph(a3, 5);
  const FatTriangle t = build_fat_triangle(el(a3, "s1^3"), el(a3, "s3^3"));
  const FatTriangleReport r = fat_triangle_distances(t, q);
  EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_EQ(r.pair_checks, 3 * 16);
  EXPECT_EQ(r.corner_checks, 3 * 4);
  // The same distances from the closed form.
  const auto& sx = t.side_x;
  const auto& sxy = t.side_xy;
  EXPECT_EQ((coset_representative(sx[3]).inverse() * coset_representative(sxy[2])).canonical_length(), 3);

  const FatTriangle small = build_fat_triangle(el(a3, "s1"), el(a3, "s3"));
  EXPECT_TRUE(fat_triangle_distances(small, quotient_cayley_graph(a3, 2)).passed());
  EXPECT_EQ(code_of([&] { fat_triangle_distances(t, quotient_cayley_graph(a3, 2)); }),
            ErrorCode::UniverseTooSmall);
}

TEST(FatTriangle, DihedralPairs) {
  for (const char* spec : {"I2(3)", "I2(4)"}) {
    const GroupPtr g = group(spec);
    for (const auto& y : enumerate_absorbable(g, 4).elements) {
      if (y.inf() != 0) continue;
      const MetricGraph q = quotient_cayley_graph(g, y.canonical_length() + 2);
      for (const auto& x : all_witnesses(y)) {
        const FatTriangleReport r = fat_triangle_distances(build_fat_triangle(x, y), q);
        EXPECT_TRUE(r.passed()) << spec << " " << x << " / " << y;
      }
    }
  }
}

TEST(ImageDiameter, SmallTriangles) {
  const GroupPtr a3 = group("A3");
  const DiameterBound d = cparab_image_diameter(build_fat_triangle(el(a3, "s1"), el(a3, "s3")), 0);
  EXPECT_LE(d.diameter, 4);
  EXPECT_GT(d.images, 5);
  EXPECT_EQ(parabolic_set_diameter({standard_parabolic(a3, gen_bit(1))}, 1).diameter, 0);
}

TEST(DeltaEstimate, SmallGraphs) {
  EXPECT_EQ(estimate_delta(path_graph(7), 1000).twice_delta, 0);
  EXPECT_TRUE(estimate_delta(path_graph(7), 1000).exact);
  for (int n : {4, 5, 6, 7}) {
    const MetricGraph c = cycle_graph(n);
    EXPECT_EQ(estimate_delta(c, 100000).twice_delta, twice_delta_oracle(c)) << n;
  }
  EXPECT_EQ(estimate_delta(cycle_graph(4), 1).twice_delta, 2);
  const GroupPtr i3 = group("I2(3)");
  const MetricGraph q = quotient_cayley_graph(i3, 3);
  EXPECT_EQ(estimate_delta(q, 1u << 30).twice_delta, twice_delta_oracle(q));
  const DeltaEstimate s1 = estimate_delta(q, 500, 7), s2 = estimate_delta(q, 500, 7);
  EXPECT_EQ(s1.twice_delta, s2.twice_delta);
  EXPECT_FALSE(s1.exact);
  EXPECT_LE(s1.twice_delta, twice_delta_oracle(q));
}

TEST(DeltaEstimate, Disconnected) {
  MetricGraph g = path_graph(5);
  const int a = g.add_vertex("x"), b = g.add_vertex("y");
  g.add_edge(a, b);
  EXPECT_EQ(code_of([&] { estimate_delta(g, 10); }), ErrorCode::DisconnectedInput);
  EXPECT_EQ(estimate_delta(g, 1000, 1, true).twice_delta, 0);
}

TEST(QiConstants, A3StandardParabolics) {
  const GroupPtr a3 = group("A3");
  const CparabGraph q = cparab_graph_on(parabolic_conjugates(a3, 0));
  ASSERT_EQ(q.graph.vertex_count(), 5u);
  std::vector<int> all{0, 1, 2, 3, 4};
  QiOptions opts;
  opts.lipschitz_samples = 150;
  const QiReport r = qi_constants(q, all, q.graph.edges(), opts);
  EXPECT_EQ(r.m1, 2);
  EXPECT_EQ(r.a0.size(), 2u);
  EXPECT_EQ(r.m3, 0);
  EXPECT_GE(r.m2, 1);
  EXPECT_EQ(r.samples, 150);
  EXPECT_EQ(r.lipschitz_failures, 0);

  const int s1 = q.graph.find(standard_parabolic(a3, gen_bit(0)).key());
  opts.lipschitz_samples = 10;
  EXPECT_EQ(qi_constants(q, {s1}, {}, opts).m1, 0);
  EXPECT_EQ(code_of([&] { qi_constants(q, {}, {}, opts); }), ErrorCode::RepresentativeMissing);
  EXPECT_EQ(code_of([&] { qi_constants(q, {9}, {}, opts); }), ErrorCode::RepresentativeMissing);
}
