#pragma once

// Supersaturation check, the fingerprint/container algorithm, and the
// maximal-independent-set family derived from the biclique decomposition.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "boxfam/graph.hpp"
#include "boxfam/solvers.hpp"

namespace boxfam {

/// Max degree of the induced subgraph G[S].
inline int supersaturation_degree(const IntersectionGraph& g, const std::vector<int>& s) {
  Bitset in(static_cast<size_t>(g.n));
  for (int v : s) {
    if (v < 0 || v >= g.n) throw DomainError("supersaturation_degree: vertex out of range");
    in.set(static_cast<size_t>(v));
  }
  int best = 0;
  for (int v : s)
    best = std::max(best, static_cast<int>((g.adj[static_cast<size_t>(v)] & in).count()));
  return best;
}

struct FingerprintStep {
  int vertex;
  bool in_independent_set;
  int removed;  // vertices deleted from the residual graph by this step
};

struct FingerprintResult {
  std::vector<int> fingerprint;   // S, in pick order
  std::vector<int> residual;      // f(S), sorted
  std::vector<int> container;     // S union f(S), sorted
  std::vector<FingerprintStep> trace;
};

/// The three-branch container algorithm. The total order is the vertex index
/// order (the family's canonical order). M is passed explicitly so the
/// algorithm can run on induced subgraphs with the ambient family's M.
inline FingerprintResult fingerprint(const IntersectionGraph& g,
                                     const std::vector<int>& independent_set, int M) {
  if (!verify_independent(g, independent_set))
    throw DomainError("fingerprint: input set is not independent");
  Bitset in_i(static_cast<size_t>(g.n));
  for (int v : independent_set) {
    if (v < 0 || v >= g.n) throw DomainError("fingerprint: vertex out of range");
    in_i.set(static_cast<size_t>(v));
  }

  Bitset alive(static_cast<size_t>(g.n));
  alive.set();
  FingerprintResult res;
  while (alive.count() > static_cast<size_t>(2) * static_cast<size_t>(M)) {
    // first vertex (lowest index) of maximum degree in the residual graph
    int pick = -1, pick_deg = -1;
    for (size_t v = alive.find_first(); v != Bitset::npos; v = alive.find_next(v)) {
      int deg = static_cast<int>((g.adj[v] & alive).count());
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = static_cast<int>(v);
      }
    }
    if (in_i.test(static_cast<size_t>(pick))) {
      Bitset gone = g.adj[static_cast<size_t>(pick)] & alive;
      gone.set(static_cast<size_t>(pick));
      res.fingerprint.push_back(pick);
      res.trace.push_back({pick, true, static_cast<int>(gone.count())});
      alive -= gone;
    } else {
      res.trace.push_back({pick, false, 1});
      alive.reset(static_cast<size_t>(pick));
    }
  }
  for (size_t v = alive.find_first(); v != Bitset::npos; v = alive.find_next(v))
    res.residual.push_back(static_cast<int>(v));
  res.container = res.residual;
  res.container.insert(res.container.end(), res.fingerprint.begin(), res.fingerprint.end());
  std::sort(res.container.begin(), res.container.end());
  return res;
}

struct ContainerCollection {
  std::set<std::vector<int>> containers;  // deduplicated, sorted vertex lists
  std::map<std::vector<int>, std::vector<int>> source;  // fingerprint -> container
};

/// Fingerprint every supplied independent set; coverage is verified here.
inline ContainerCollection build_containers(const IntersectionGraph& g, int M,
                                            const std::vector<std::vector<int>>& sets) {
  ContainerCollection coll;
  for (const std::vector<int>& ind : sets) {
    FingerprintResult fp = fingerprint(g, ind, M);
    Bitset cov(static_cast<size_t>(g.n));
    for (int v : fp.container) cov.set(static_cast<size_t>(v));
    for (int v : ind)
      if (!cov.test(static_cast<size_t>(v)))
        throw std::logic_error("build_containers: coverage violated");
    std::vector<int> key = fp.fingerprint;
    std::sort(key.begin(), key.end());
    coll.containers.insert(fp.container);
    coll.source[key] = fp.container;
  }
  return coll;
}

/// The set I(Z_1,...,Z_q): vertices lying on the chosen side of every part
/// containing them. choices[i] = false picks the left side, true the right.
inline std::vector<int> maximal_is_family(const BicliqueDecomposition& dec, int n,
                                          const std::vector<bool>& choices) {
  if (choices.size() != dec.parts.size())
    throw DomainError("maximal_is_family: one side choice per part required");
  std::vector<bool> keep(static_cast<size_t>(n), true);
  for (size_t i = 0; i < dec.parts.size(); ++i) {
    const std::vector<int>& rejected = choices[i] ? dec.parts[i].left : dec.parts[i].right;
    for (int v : rejected) keep[static_cast<size_t>(v)] = false;
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (keep[static_cast<size_t>(v)]) out.push_back(v);
  return out;
}

}  // namespace boxfam
