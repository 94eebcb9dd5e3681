#pragma once

// Intersection graphs of box families, biclique decompositions, induced
// subgraphs and multiplicity blow-ups.

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "boxfam/family.hpp"

namespace boxfam {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

inline constexpr int kDefaultGraphVertexCap = 50'000;

struct IntersectionGraph {
  int n = 0;
  std::vector<int> labels;  // indices into the originating family
  std::vector<Bitset> adj;  // symmetric, no self-loops

  bool edge(int u, int v) const { return adj[static_cast<size_t>(u)].test(static_cast<size_t>(v)); }

  std::int64_t edge_count() const {
    std::int64_t twice = 0;
    for (const Bitset& row : adj) twice += static_cast<std::int64_t>(row.count());
    return twice / 2;
  }

  int degree(int v) const { return static_cast<int>(adj[static_cast<size_t>(v)].count()); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
      for (size_t v = adj[static_cast<size_t>(u)].find_first(); v != Bitset::npos;
           v = adj[static_cast<size_t>(u)].find_next(v))
        if (static_cast<int>(v) > u) out.emplace_back(u, static_cast<int>(v));
    return out;
  }
};

inline IntersectionGraph empty_graph(int n) {
  IntersectionGraph g;
  g.n = n;
  g.labels.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) g.labels[static_cast<size_t>(i)] = i;
  g.adj.assign(static_cast<size_t>(n), Bitset(static_cast<size_t>(n)));
  return g;
}

/// Reference graph builder: all-pairs boxes_intersect.
inline IntersectionGraph build_graph_naive(const std::vector<Box>& family,
                                           int vertex_cap = kDefaultGraphVertexCap) {
  if (family.empty()) throw DomainError("build_graph_naive: empty family");
  if (static_cast<int>(family.size()) > vertex_cap)
    throw ResourceError("build_graph_naive: " + std::to_string(family.size()) +
                        " vertices exceed cap " + std::to_string(vertex_cap));
  int d = family.front().dim();
  for (const Box& b : family)
    if (b.dim() != d) throw DomainError("build_graph_naive: dimension mismatch");
  IntersectionGraph g = empty_graph(static_cast<int>(family.size()));
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (boxes_intersect(family[static_cast<size_t>(u)], family[static_cast<size_t>(v)])) {
        g.adj[static_cast<size_t>(u)].set(static_cast<size_t>(v));
        g.adj[static_cast<size_t>(v)].set(static_cast<size_t>(u));
      }
  return g;
}

/// Graph of a block family via the O(d) block predicate.
inline IntersectionGraph build_graph_blocks(const BlockFamily& family,
                                            int vertex_cap = kDefaultGraphVertexCap) {
  if (family.blocks.empty()) throw DomainError("build_graph_blocks: empty family");
  if (static_cast<int>(family.size()) > vertex_cap)
    throw ResourceError("build_graph_blocks: vertex cap exceeded");
  IntersectionGraph g = empty_graph(static_cast<int>(family.size()));
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (blocks_intersect(family.blocks[static_cast<size_t>(u)],
                           family.blocks[static_cast<size_t>(v)], family.params.s)) {
        g.adj[static_cast<size_t>(u)].set(static_cast<size_t>(v));
        g.adj[static_cast<size_t>(v)].set(static_cast<size_t>(u));
      }
  return g;
}

/// One part per (t, u, w-block) with both sides nonempty. Vertex sets are
/// indices into the family's canonical order.
struct BicliquePart {
  ExponentVector t, u, w;
  Block w_block;
  std::vector<int> left;   // the t-blocks inside the w-block
  std::vector<int> right;  // the u-blocks inside the w-block
};

struct BicliqueDecomposition {
  std::vector<BicliquePart> parts;
  size_t part_count() const { return parts.size(); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (const BicliquePart& part : parts)
      for (int a : part.left)
        for (int b : part.right) out.emplace_back(std::min(a, b), std::max(a, b));
    return out;
  }
};

inline BicliqueDecomposition build_biclique_decomposition(const BlockFamily& family) {
  const int s = family.params.s;
  std::vector<ExponentVector> types = enumerate_T(family.params.d, family.params.k);

  // group family members by type
  std::map<ExponentVector, std::vector<int>> by_type;
  for (size_t i = 0; i < family.blocks.size(); ++i)
    by_type[family.blocks[i].t].push_back(static_cast<int>(i));

  BicliqueDecomposition dec;
  for (size_t a = 0; a < types.size(); ++a) {
    for (size_t b = a + 1; b < types.size(); ++b) {
      const ExponentVector& t = types[a];
      const ExponentVector& u = types[b];
      ExponentVector w = join_type(t, u);
      // bucket the t-blocks and u-blocks by their containing w-block
      std::map<Block, std::pair<std::vector<int>, std::vector<int>>> buckets;
      auto it = by_type.find(t);
      if (it != by_type.end())
        for (int idx : it->second)
          buckets[containing_block(family.blocks[static_cast<size_t>(idx)], w, s)].first.push_back(idx);
      it = by_type.find(u);
      if (it != by_type.end())
        for (int idx : it->second)
          buckets[containing_block(family.blocks[static_cast<size_t>(idx)], w, s)].second.push_back(idx);
      for (auto& [wb, sides] : buckets) {
        if (sides.first.empty() || sides.second.empty()) continue;
        BicliquePart part;
        part.t = t;
        part.u = u;
        part.w = w;
        part.w_block = wb;
        part.left = std::move(sides.first);
        part.right = std::move(sides.second);
        dec.parts.push_back(std::move(part));
      }
    }
  }
  return dec;
}

/// Each box repeated `multiplicity` times; copies of one box are distinct
/// vertices and pairwise intersect.
inline std::vector<Box> blow_up(const std::vector<Box>& family, int multiplicity) {
  if (multiplicity < 1) throw DomainError("blow_up: multiplicity must be >= 1");
  std::vector<Box> out;
  out.reserve(family.size() * static_cast<size_t>(multiplicity));
  for (const Box& b : family)
    for (int i = 0; i < multiplicity; ++i) out.push_back(b);
  return out;
}

inline IntersectionGraph induced_subgraph(const IntersectionGraph& g,
                                          const std::vector<int>& vertices) {
  for (int v : vertices)
    if (v < 0 || v >= g.n) throw DomainError("induced_subgraph: vertex out of range");
  IntersectionGraph h = empty_graph(static_cast<int>(vertices.size()));
  for (size_t i = 0; i < vertices.size(); ++i)
    h.labels[i] = g.labels[static_cast<size_t>(vertices[i])];
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (g.edge(vertices[i], vertices[j])) {
        h.adj[i].set(j);
        h.adj[j].set(i);
      }
  return h;
}

}  // namespace boxfam
