#include <doctest.h>

#include <algorithm>

#include "boxfam/graph.hpp"
#include "boxfam/solvers.hpp"
#include "support.hpp"

using namespace boxfam;
using namespace testsupport;

TEST_CASE("build_graph_naive: d=2,s=2,k=1 family is the 4-cycle") {
  BlockFamily fam = full_family(2, 2, 1);
  IntersectionGraph g = build_graph_naive(family_to_boxes(fam));
  CHECK(g.n == 4);
  CHECK(g.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
  // triangle-free (it is C4)
  CHECK(max_clique(g).value == 2);
}

TEST_CASE("build_graph_naive: trivial shapes") {
  std::vector<Box> one{Box::closed({0}, {1})};
  CHECK(build_graph_naive(one).n == 1);
  CHECK(build_graph_naive(one).edge_count() == 0);

  std::vector<Box> same(5, Box::closed({0, 0}, {1, 1}));
  IntersectionGraph ks = build_graph_naive(same);
  CHECK(ks.edge_count() == 10);  // K5

  CHECK_THROWS_AS(build_graph_naive({}), DomainError);
  CHECK_THROWS_AS(build_graph_naive({Box::closed({0}, {1}), Box::closed({0, 0}, {1, 1})}),
                  DomainError);
  CHECK_THROWS_AS(build_graph_naive(std::vector<Box>(3, Box::closed({0}, {1})), 2),
                  ResourceError);
}

TEST_CASE("block and naive graph builders agree") {
  for (auto [d, s, k] : {std::tuple{2, 2, 2}, {2, 3, 2}, {3, 2, 2}}) {
    BlockFamily fam = full_family(d, s, k);
    IntersectionGraph a = build_graph_blocks(fam);
    IntersectionGraph b = build_graph_naive(family_to_boxes(fam));
    REQUIRE(a.n == b.n);
    CHECK(a.adj == b.adj);
  }
}

TEST_CASE("biclique decomposition partitions the edge set") {
  for (auto [d, s, k] : {std::tuple{2, 2, 1}, {2, 2, 2}, {2, 3, 2}, {3, 2, 2}}) {
    BlockFamily fam = full_family(d, s, k);
    BicliqueDecomposition dec = build_biclique_decomposition(fam);
    std::vector<std::pair<int, int>> de = dec.edges();
    std::sort(de.begin(), de.end());
    CHECK(std::adjacent_find(de.begin(), de.end()) == de.end());  // edge-disjoint
    std::vector<std::pair<int, int>> ge = build_graph_naive(family_to_boxes(fam)).edges();
    std::sort(ge.begin(), ge.end());
    CHECK(de == ge);
    for (const BicliquePart& p : dec.parts) {
      CHECK_FALSE(p.left.empty());
      CHECK_FALSE(p.right.empty());
      CHECK(p.w == join_type(p.t, p.u));
    }
  }
}

TEST_CASE("decomposition shape for d=2,s=2,k=1: one K_{2,2} part") {
  // the only w-block of type (1,1) is [0,2)^2, holding both rows and both
  // columns, so C4 is covered by a single complete bipartite part
  BlockFamily fam = full_family(2, 2, 1);
  BicliqueDecomposition dec = build_biclique_decomposition(fam);
  REQUIRE(dec.part_count() == 1);
  CHECK(dec.parts[0].left.size() == 2);
  CHECK(dec.parts[0].right.size() == 2);
  CHECK(dec.edges().size() == 4);
}

TEST_CASE("decomposition part count bound for d=2,s=2,k=2") {
  BlockFamily fam = full_family(2, 2, 2);
  BicliqueDecomposition dec = build_biclique_decomposition(fam);
  // at most |T|^2 * M/s parts
  CHECK(dec.part_count() <= 9 * 2);
}

TEST_CASE("single-type family has an empty decomposition") {
  BlockFamily fam = full_family(2, 2, 1);
  BlockFamily sub;
  sub.params = fam.params;
  for (const Block& b : fam.blocks)
    if (b.t == fam.blocks.front().t) sub.blocks.push_back(b);
  CHECK(build_biclique_decomposition(sub).part_count() == 0);
}

TEST_CASE("blow_up laws") {
  BlockFamily fam = full_family(2, 2, 1);
  std::vector<Box> base = family_to_boxes(fam);

  CHECK(blow_up(base, 1) == base);
  CHECK_THROWS_AS(blow_up(base, 0), DomainError);

  std::vector<Box> k1{Box::closed({0}, {1})};
  IntersectionGraph k5 = build_graph_naive(blow_up(k1, 5));
  CHECK(k5.n == 5);
  CHECK(k5.edge_count() == 10);

  std::vector<Box> tripled = blow_up(base, 3);
  REQUIRE(tripled.size() == 12);
  IntersectionGraph g = build_graph_naive(tripled);
  CHECK(max_clique(g).value == 6);            // 3 * omega(C4)
  CHECK(max_independent_set(g).value == 2);   // alpha unchanged
}

TEST_CASE("induced subgraph") {
  IntersectionGraph c4 = cycle_graph(4);
  std::vector<int> all{0, 1, 2, 3};
  CHECK(induced_subgraph(c4, all).adj == c4.adj);
  CHECK(induced_subgraph(c4, {}).n == 0);
  IntersectionGraph p3 = induced_subgraph(c4, {0, 1, 2});
  CHECK(p3.edge_count() == 2);
  CHECK(p3.degree(1) == 2);
  CHECK_THROWS_AS(induced_subgraph(c4, {4}), DomainError);
}

TEST_CASE("d=2 families are perfect on small induced subgraphs (chi = omega)") {
  BlockFamily fam = full_family(2, 2, 2);
  IntersectionGraph g = build_graph_blocks(fam);
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v)
      if (rng.bernoulli(1, 2)) verts.push_back(v);
    if (verts.empty()) continue;
    IntersectionGraph h = induced_subgraph(g, verts);
    Certificate chi = chromatic_number(h);
    REQUIRE(chi.exact);
    CHECK(chi.value == max_clique(h).value);
  }
}
