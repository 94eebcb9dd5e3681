#pragma once

// Shared test helpers: small canonical graphs and seeded random box
// generators. The general-position generator guarantees globally distinct
// endpoint coordinates per axis.

#include <set>
#include <vector>

#include "boxfam/family.hpp"
#include "boxfam/graph.hpp"
#include "boxfam/rng.hpp"

namespace testsupport {

using namespace boxfam;

inline IntersectionGraph cycle_graph(int n) {
  IntersectionGraph g = empty_graph(n);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    g.adj[static_cast<size_t>(i)].set(static_cast<size_t>(j));
    g.adj[static_cast<size_t>(j)].set(static_cast<size_t>(i));
  }
  return g;
}

inline IntersectionGraph path_graph(int n) {
  IntersectionGraph g = empty_graph(n);
  for (int i = 0; i + 1 < n; ++i) {
    g.adj[static_cast<size_t>(i)].set(static_cast<size_t>(i + 1));
    g.adj[static_cast<size_t>(i + 1)].set(static_cast<size_t>(i));
  }
  return g;
}

inline IntersectionGraph complete_graph(int n) {
  IntersectionGraph g = empty_graph(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      g.adj[static_cast<size_t>(i)].set(static_cast<size_t>(j));
      g.adj[static_cast<size_t>(j)].set(static_cast<size_t>(i));
    }
  return g;
}

/// n random closed boxes with small integer corners in [0, 4n)^d.
inline std::vector<Box> random_closed_boxes(int d, int n, Rng& rng) {
  std::vector<Box> out;
  std::uint64_t range = static_cast<std::uint64_t>(4 * n);
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> lo(static_cast<size_t>(d)), hi(static_cast<size_t>(d));
    for (int a = 0; a < d; ++a) {
      std::uint64_t x = rng.next_below(range);
      std::uint64_t y = rng.next_below(range);
      if (x == y) ++y;
      lo[static_cast<size_t>(a)] = Rat(Int(std::min(x, y)));
      hi[static_cast<size_t>(a)] = Rat(Int(std::max(x, y)));
    }
    out.push_back(Box::closed(std::move(lo), std::move(hi)));
  }
  return out;
}

/// n closed boxes whose 2n endpoint coordinates on each axis are all
/// distinct (general position for the sweep cuts).
inline std::vector<Box> general_position_boxes(int d, int n, Rng& rng) {
  std::vector<std::vector<std::uint64_t>> axis_vals(static_cast<size_t>(d));
  std::uint64_t range = static_cast<std::uint64_t>(20 * n + 2);
  for (int a = 0; a < d; ++a) {
    std::set<std::uint64_t> seen;
    while (static_cast<int>(seen.size()) < 2 * n) seen.insert(rng.next_below(range));
    std::vector<std::uint64_t> vals(seen.begin(), seen.end());
    rng.shuffle(vals);
    axis_vals[static_cast<size_t>(a)] = std::move(vals);
  }
  std::vector<Box> out;
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> lo(static_cast<size_t>(d)), hi(static_cast<size_t>(d));
    for (int a = 0; a < d; ++a) {
      std::uint64_t x = axis_vals[static_cast<size_t>(a)][static_cast<size_t>(2 * i)];
      std::uint64_t y = axis_vals[static_cast<size_t>(a)][static_cast<size_t>(2 * i + 1)];
      lo[static_cast<size_t>(a)] = Rat(Int(std::min(x, y)));
      hi[static_cast<size_t>(a)] = Rat(Int(std::max(x, y)));
    }
    out.push_back(Box::closed(std::move(lo), std::move(hi)));
  }
  return out;
}

/// Random independent sets of g: shuffled order, greedy keep with prob 3/4.
inline std::vector<int> random_independent_set(const IntersectionGraph& g, Rng& rng) {
  std::vector<int> perm(static_cast<size_t>(g.n));
  for (int i = 0; i < g.n; ++i) perm[static_cast<size_t>(i)] = i;
  rng.shuffle(perm);
  std::vector<int> ind;
  Bitset blocked(static_cast<size_t>(g.n));
  for (int v : perm) {
    if (blocked.test(static_cast<size_t>(v)) || !rng.bernoulli(3, 4)) continue;
    ind.push_back(v);
    blocked.set(static_cast<size_t>(v));
    blocked |= g.adj[static_cast<size_t>(v)];
  }
  return ind;
}

inline BlockFamily full_family(int d, int s, int k) {
  return generate_family(FamilyParams(d, s, k));
}

}  // namespace testsupport
