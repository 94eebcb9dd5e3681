#include <doctest.h>

#include "boxfam/dnc.hpp"
#include "boxfam/family.hpp"
#include "support.hpp"

using namespace boxfam;
using namespace testsupport;

static Int pierce_bound(int nu, int d) {
  return Int(nu) * ipow(Int(detail::ceil_log2(nu) + 1), static_cast<unsigned>(d - 1));
}

TEST_CASE("split_by_hyperplane on the 12-block family at y=2") {
  BlockFamily fam = full_family(2, 2, 2);
  std::vector<Box> boxes = family_to_boxes(fam);
  SweepSplit sp = split_by_hyperplane(boxes, Rat(2));
  CHECK(sp.below.size() == 4);     // 2 rows + 2 squares under y=2 (half-open tops)
  CHECK(sp.above.size() == 4);     // 2 rows + 2 squares above
  CHECK(sp.crossing.size() == 4);  // the 4 full-height columns
  for (int i : sp.crossing)
    CHECK(fam.blocks[static_cast<size_t>(i)].t == ExponentVector{0, 2});
  REQUIRE(sp.slice.size() == 4);
  for (const Box& s : sp.slice) CHECK(s.dim() == 1);

  // slice graph isomorphic to the crossing graph
  std::vector<Box> crossing_boxes;
  for (int i : sp.crossing) crossing_boxes.push_back(boxes[static_cast<size_t>(i)]);
  CHECK(build_graph_naive(sp.slice).adj == build_graph_naive(crossing_boxes).adj);

  // t below all boxes
  SweepSplit low = split_by_hyperplane(boxes, Rat(-1));
  CHECK(low.below.empty());
  CHECK(low.above.size() == 12);

  CHECK_THROWS_AS(split_by_hyperplane({Box::closed({0}, {1})}, Rat(0)), DomainError);
}

TEST_CASE("split separation invariant") {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Box> boxes = random_closed_boxes(2, 10, rng);
    Rat t = Rat(Int(rng.next_below(40)));
    SweepSplit sp = split_by_hyperplane(boxes, t);
    CHECK(sp.below.size() + sp.above.size() + sp.crossing.size() == boxes.size());
    for (int i : sp.below)
      for (int j : sp.above)
        CHECK_FALSE(boxes_intersect(boxes[static_cast<size_t>(i)],
                                    boxes[static_cast<size_t>(j)]));
  }
}

TEST_CASE("interval_stab") {
  std::vector<Box> iv{Box::closed({0}, {1}), Box::closed({Rat(1, 2)}, {2}),
                      Box::closed({3}, {4})};
  std::vector<Rat> pts = interval_stab(iv);
  CHECK(pts.size() == 2);
  std::vector<std::vector<Rat>> lifted;
  for (const Rat& p : pts) lifted.push_back({p});
  CHECK(verify_piercing(iv, lifted));

  // nested intervals: 1 point
  std::vector<Box> nested{Box::closed({0}, {10}), Box::closed({2}, {8}),
                          Box::closed({4}, {6})};
  CHECK(interval_stab(nested).size() == 1);

  // disjoint intervals: n points
  std::vector<Box> disj;
  for (int i = 0; i < 6; ++i) disj.push_back(Box::closed({Rat(3 * i)}, {Rat(3 * i + 1)}));
  CHECK(interval_stab(disj).size() == 6);

  // half-open intervals: greedy must stab strictly below the open top
  std::vector<Box> ho{Box::half_open({0}, {1}), Box::half_open({Rat(1, 2)}, {2})};
  std::vector<Rat> hpts = interval_stab(ho);
  CHECK(hpts.size() == 1);
  lifted.clear();
  for (const Rat& p : hpts) lifted.push_back({p});
  CHECK(verify_piercing(ho, lifted));
}

TEST_CASE("interval_stab size is exactly nu on random inputs") {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(14));
    std::vector<Box> iv = random_closed_boxes(1, n, rng);
    std::vector<Rat> pts = interval_stab(iv);
    int nu = max_independent_set(build_graph_naive(iv)).value;
    CHECK(static_cast<int>(pts.size()) == nu);
    std::vector<std::vector<Rat>> lifted;
    for (const Rat& p : pts) lifted.push_back({p});
    CHECK(verify_piercing(iv, lifted));
  }
}

TEST_CASE("interval_color") {
  std::vector<Box> disj;
  for (int i = 0; i < 5; ++i) disj.push_back(Box::closed({Rat(3 * i)}, {Rat(3 * i + 1)}));
  std::vector<int> col = interval_color(disj);
  CHECK(*std::max_element(col.begin(), col.end()) == 0);

  std::vector<Box> same(4, Box::closed({0}, {1}));
  col = interval_color(same);
  CHECK(*std::max_element(col.begin(), col.end()) == 3);

  std::vector<Box> chain{Box::closed({0}, {2}), Box::closed({1}, {3}), Box::closed({2}, {4})};
  col = interval_color(chain);
  CHECK(*std::max_element(col.begin(), col.end()) == 2);  // all meet at x=2

  Rng rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(14));
    std::vector<Box> iv = random_closed_boxes(1, n, rng);
    IntersectionGraph g = build_graph_naive(iv);
    std::vector<int> c = interval_color(iv);
    int used = *std::max_element(c.begin(), c.end()) + 1;
    CHECK(verify_coloring(g, c, used));
    CHECK(used == max_clique(g).value);
  }
}

TEST_CASE("find_balanced_nu_cut on the 12-block family") {
  BlockFamily fam = full_family(2, 2, 2);
  std::vector<Box> boxes = family_to_boxes(fam);
  NuCut cut = find_balanced_nu_cut(boxes);
  CHECK(cut.t == Rat(2));
  CHECK(cut.nu_below == 2);  // floor(4/2)
  CHECK(cut.balanced);
}

TEST_CASE("nu(below) is nondecreasing in t") {
  Rng rng(37);
  std::vector<Box> boxes = general_position_boxes(2, 12, rng);
  int prev = 0;
  for (const Rat& t : detail::cut_candidates(boxes)) {
    SweepSplit sp = split_by_hyperplane(boxes, t);
    std::vector<Box> below;
    for (int i : sp.below) below.push_back(boxes[static_cast<size_t>(i)]);
    int nu = below.empty() ? 0 : max_independent_set(build_graph_naive(below)).value;
    CHECK(nu >= prev);
    prev = nu;
  }
}

TEST_CASE("find_median_cut") {
  Rng rng(41);
  std::vector<Box> gp = general_position_boxes(2, 10, rng);
  MedianCut cut = find_median_cut(gp);
  CHECK(cut.balanced);
  CHECK(cut.below_count == 5);

  std::vector<Box> same(2, Box::closed({0, 0}, {1, 1}));
  MedianCut deg = find_median_cut(same);
  CHECK_FALSE(deg.balanced);  // |below| is 0 or 2, never 1
}

TEST_CASE("dnc_pierce basics") {
  // disjoint boxes: one point per box
  std::vector<Box> disj;
  for (int i = 0; i < 5; ++i)
    disj.push_back(Box::closed({Rat(3 * i), Rat(3 * i)}, {Rat(3 * i + 1), Rat(3 * i + 1)}));
  DncPierceResult r = dnc_pierce(disj);
  CHECK(r.nu == 5);
  CHECK(r.points.size() == 5);

  // 12-block family: valid and within the bound (exact tau = 4)
  std::vector<Box> fam = family_to_boxes(full_family(2, 2, 2));
  DncPierceResult f = dnc_pierce(fam);
  CHECK(f.nu == 4);
  CHECK(Int(f.points.size()) <= f.bound);
  CHECK(verify_piercing(fam, f.points));
}

TEST_CASE("dnc_color basics") {
  std::vector<Box> disj;
  for (int i = 0; i < 5; ++i)
    disj.push_back(Box::closed({Rat(3 * i), Rat(3 * i)}, {Rat(3 * i + 1), Rat(3 * i + 1)}));
  DncColorResult r = dnc_color(disj);
  CHECK(r.colors == 1);

  std::vector<Box> same(4, Box::closed({0, 0}, {1, 1}));
  DncColorResult k = dnc_color(same);
  CHECK(k.colors == 4);

  std::vector<Box> fam = family_to_boxes(full_family(2, 2, 2));
  DncColorResult f = dnc_color(fam);
  CHECK(f.omega == 3);
  CHECK(Int(f.colors) <= f.bound);
  CHECK(verify_coloring(build_graph_naive(fam), f.coloring, f.colors));
}

TEST_CASE("dnc guarantees on random instances") {
  Rng rng(53);
  for (int d : {1, 2, 3}) {
    for (int trial = 0; trial < 25; ++trial) {
      int n = 2 + static_cast<int>(rng.next_below(15));
      std::vector<Box> boxes = general_position_boxes(d, n, rng);
      IntersectionGraph g = build_graph_naive(boxes);

      DncPierceResult p = dnc_pierce(boxes);
      CHECK(verify_piercing(boxes, p.points));
      CHECK(p.bound == pierce_bound(p.nu, d));
      if (d == 1) CHECK(static_cast<int>(p.points.size()) == p.nu);
      if (p.balanced) CHECK(Int(p.points.size()) <= p.bound);

      DncColorResult c = dnc_color(boxes);
      CHECK(verify_coloring(g, c.coloring, c.colors));
      if (d == 1) CHECK(c.colors == c.omega);
      if (c.balanced) CHECK(Int(c.colors) <= c.bound);
    }
  }
}

TEST_CASE("dnc handles degenerate (identical) boxes without violating validity") {
  std::vector<Box> same(6, Box::closed({0, 0}, {2, 2}));
  DncPierceResult p = dnc_pierce(same);
  CHECK(p.nu == 1);
  CHECK(p.points.size() == 1);  // Helly point
  DncColorResult c = dnc_color(same);
  CHECK(c.colors == 6);
  CHECK(verify_coloring(build_graph_naive(same), c.coloring, c.colors));
}
