#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <variant>

#include "circk/canonical.hpp"
#include "circk/errors.hpp"
#include "circk/graph.hpp"
#include "support.hpp"

using namespace circk;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Graph out(g.vertex_count());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace

TEST(Graph, RejectsLoopsAndMergesDuplicates) {
  Graph g(3);
  EXPECT_TRUE(g.add_edge(0, 1));
  EXPECT_FALSE(g.add_edge(1, 0));
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::invalid_argument);
}

TEST(OddGirth, Examples) {
  EXPECT_EQ(odd_girth(cycle_graph(5)), Length(5));
  EXPECT_TRUE(odd_girth(cycle_graph(6)).is_infinite());
  EXPECT_EQ(odd_girth(complete_graph(4)), Length(3));
  EXPECT_EQ(odd_girth(petersen_graph()), Length(5));
}

TEST(OddGirth, MatchesCycleEnumeration) {
  for (const Graph& g : corpus::mixed(150, 11, 10)) {
    const int expected = oracle::odd_girth_by_cycles(g);
    const Length got = odd_girth(g);
    if (expected < 0) EXPECT_TRUE(got.is_infinite());
    else EXPECT_EQ(got, Length(expected));
  }
}

TEST(Bipartition, Examples) {
  Graph edge(2);
  edge.add_edge(0, 1);
  const auto b = std::get<Bipartition>(bipartition(edge));
  EXPECT_EQ(b.red(), std::vector<Vertex>{0});
  EXPECT_EQ(b.blue(), std::vector<Vertex>{1});

  const auto w = std::get<OddCycleWitness>(bipartition(cycle_graph(5)));
  EXPECT_EQ(w.length(), 5);

  const auto empty = std::get<Bipartition>(bipartition(Graph(3)));
  EXPECT_EQ(empty.red(), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(empty.blue().empty());
}

TEST(Bipartition, AgreesWithOddGirthAndWitnessIsAnOddCycle) {
  for (const Graph& g : corpus::mixed(200, 12)) {
    const auto result = bipartition(g);
    EXPECT_EQ(std::holds_alternative<Bipartition>(result), odd_girth(g).is_infinite());
    if (const auto* b = std::get_if<Bipartition>(&result)) {
      for (const Edge& e : g.edges()) EXPECT_NE(b->side(e.u), b->side(e.v));
    } else {
      const auto& cycle = std::get<OddCycleWitness>(result).cycle;
      EXPECT_EQ(cycle.size() % 2, 1u);
      for (std::size_t i = 0; i < cycle.size(); ++i)
        EXPECT_TRUE(g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
    }
  }
}

TEST(Distances, Examples) {
  const Graph p = path_graph(3);
  EXPECT_EQ(distances(p, 0), (std::vector<Length>{Length(0), Length(1), Length(2)}));
  const std::vector<Vertex> both{0, 2};
  EXPECT_EQ(distances(p, both), (std::vector<Length>{Length(0), Length(1), Length(0)}));
  Graph lonely(2);
  EXPECT_TRUE(distances(lonely, 0)[1].is_infinite());
}

TEST(Distances, MatchFloydWarshall) {
  for (const Graph& g : corpus::mixed(80, 5)) {
    const auto d = oracle::all_distances(g);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      const auto got = distances(g, s);
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (d[s][v] < 0) EXPECT_TRUE(got[v].is_infinite());
        else EXPECT_EQ(got[v], Length(d[s][v]));
      }
    }
  }
}

TEST(Contraction, Examples) {
  const Contraction s = contract_closed_neighborhood(star(3), 0);
  EXPECT_EQ(s.graph.vertex_count(), 1);
  EXPECT_EQ(s.graph.edge_count(), 0);

  const Contraction p = contract_closed_neighborhood(path_graph(5), 2);
  EXPECT_EQ(p.graph.vertex_count(), 3);
  EXPECT_TRUE(p.graph.has_edge(p.mapping[0], p.merged));
  EXPECT_TRUE(p.graph.has_edge(p.mapping[4], p.merged));
  EXPECT_FALSE(p.graph.has_edge(p.mapping[0], p.mapping[4]));

  const Contraction c = contract_closed_neighborhood(cycle_graph(6), 3);
  EXPECT_EQ(canonical_form(c.graph), canonical_form(cycle_graph(4)));
  EXPECT_EQ(c.merged, 3);
}

TEST(Contraction, DistancesShrinkByAtMostTwo) {
  for (const Graph& g : corpus::mixed(60, 21)) {
    for (Vertex v = 0; v < g.vertex_count(); v += 3) {
      const Contraction c = contract_closed_neighborhood(g, v);
      std::vector<char> ball(g.vertex_count(), 0);
      ball[v] = 1;
      for (Vertex w : g.neighbors(v)) ball[w] = 1;
      for (Vertex a = 0; a < g.vertex_count(); ++a) {
        if (ball[a]) continue;
        const auto before = distances(g, a);
        const auto after = distances(c.graph, c.mapping[a]);
        for (Vertex b = 0; b < g.vertex_count(); ++b) {
          if (ball[b]) continue;
          const Length x = before[b], y = after[c.mapping[b]];
          EXPECT_LE(y, x);
          if (x.finite()) EXPECT_GE(y.value(), x.value() - 2);
        }
      }
    }
  }
}

TEST(Canonical, Examples) {
  Graph c4a = cycle_graph(4);
  Graph c4b(4);
  c4b.add_edge(0, 2);
  c4b.add_edge(2, 1);
  c4b.add_edge(1, 3);
  c4b.add_edge(3, 0);
  EXPECT_EQ(canonical_form(c4a), canonical_form(c4b));
  EXPECT_NE(canonical_form(c4a), canonical_form(path_graph(4)));

  Graph k4e = complete_graph(4);
  Graph k4e_a(4), k4e_b(4);
  for (const Edge& e : k4e.edges()) {
    if (!(e.u == 0 && e.v == 1)) k4e_a.add_edge(e.u, e.v);
    if (!(e.u == 2 && e.v == 3)) k4e_b.add_edge(e.u, e.v);
  }
  EXPECT_EQ(canonical_form(k4e_a), canonical_form(k4e_b));
  EXPECT_THROW(canonical_form(Graph(13)), TooLarge);
}

TEST(Canonical, InvariantUnderRelabelingAndSeparatesNonIsomorphic) {
  std::mt19937_64 rng(3);
  const auto graphs = corpus::mixed(120, 8, 9);
  for (const Graph& g : graphs) {
    std::vector<Vertex> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_form(g), canonical_form(relabel(g, perm)));
  }
  for (std::size_t i = 0; i < graphs.size(); i += 2)
    for (std::size_t j = i + 1; j < graphs.size(); j += 3)
      EXPECT_EQ(canonical_form(graphs[i]) == canonical_form(graphs[j]),
                oracle::isomorphic(graphs[i], {}, graphs[j], {}));
}

TEST(Canonical, RootedFormFixesRoots) {
  const Graph p = path_graph(3);
  const std::vector<Vertex> end_roots{0, 1};
  const std::vector<Vertex> swapped{1, 0};
  EXPECT_NE(canonical_form(p, end_roots), canonical_form(p, swapped));
  const std::vector<Vertex> other_end{2, 1};
  EXPECT_EQ(canonical_form(p, end_roots), canonical_form(p, other_end));
}
