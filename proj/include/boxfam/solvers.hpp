#pragma once

// Exact desk-scale solvers for clique, independent set, piercing and
// chromatic number, each returning a re-verifiable certificate, plus the
// exhaustive oracles used by the test suites.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "boxfam/graph.hpp"

namespace boxfam {

enum class CertKind { Clique, IndependentSet, Piercing, Coloring };

inline const char* cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::Clique: return "clique";
    case CertKind::IndependentSet: return "independent-set";
    case CertKind::Piercing: return "piercing";
    case CertKind::Coloring: return "coloring";
  }
  return "?";
}

/// Witness for a solved quantity. `exact` is false only for the greedy
/// coloring fallback (value is then an upper bound).
struct Certificate {
  CertKind kind = CertKind::Clique;
  int value = 0;
  bool exact = true;
  std::vector<int> vertices;           // clique / independent-set witness
  std::vector<std::vector<Rat>> points;  // piercing witness
  std::vector<int> coloring;           // color per vertex, 0-based
};

struct SolverBudgets {
  int clique = 2000;
  int mis = 128;
  int piercing = 64;
  int chromatic_exact = 64;
  int oracle = 20;
};

// ---------------------------------------------------------------------------
// certificate re-verification

inline bool verify_clique(const IntersectionGraph& g, const std::vector<int>& verts) {
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (!g.edge(verts[i], verts[j])) return false;
  return true;
}

inline bool verify_independent(const IntersectionGraph& g, const std::vector<int>& verts) {
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.edge(verts[i], verts[j])) return false;
  return true;
}

inline bool verify_coloring(const IntersectionGraph& g, const std::vector<int>& colors,
                            int color_count) {
  if (static_cast<int>(colors.size()) != g.n) return false;
  for (int c : colors)
    if (c < 0 || c >= color_count) return false;
  for (int u = 0; u < g.n; ++u)
    for (size_t v = g.adj[static_cast<size_t>(u)].find_first(); v != Bitset::npos;
         v = g.adj[static_cast<size_t>(u)].find_next(v))
      if (colors[static_cast<size_t>(u)] == colors[v]) return false;
  return true;
}

inline bool verify_piercing(const std::vector<Box>& boxes,
                            const std::vector<std::vector<Rat>>& points) {
  for (const Box& b : boxes) {
    bool hit = false;
    for (const auto& p : points)
      if (b.contains(p)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// max clique: branch and bound with a greedy coloring bound; ties broken by
// lowest vertex index throughout, so results are deterministic.

namespace detail {

class CliqueSolver {
 public:
  explicit CliqueSolver(const std::vector<Bitset>& adj) : adj_(adj), n_(static_cast<int>(adj.size())) {}

  std::vector<int> solve() {
    best_.clear();
    Bitset all(static_cast<size_t>(n_));
    all.set();
    std::vector<int> cur;
    expand(cur, all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void expand(std::vector<int>& cur, Bitset cand) {
    // greedy coloring of cand in index order; color classes give the bound
    std::vector<int> order, color;
    Bitset uncolored = cand;
    int c = 0;
    while (uncolored.any()) {
      ++c;
      Bitset avail = uncolored;
      while (avail.any()) {
        size_t v = avail.find_first();
        order.push_back(static_cast<int>(v));
        color.push_back(c);
        uncolored.reset(v);
        avail.reset(v);
        avail -= adj_[v];
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (cur.size() + static_cast<size_t>(color[static_cast<size_t>(i)]) <= best_.size()) return;
      int v = order[static_cast<size_t>(i)];
      cand.reset(static_cast<size_t>(v));
      Bitset next = cand & adj_[static_cast<size_t>(v)];
      cur.push_back(v);
      if (next.any())
        expand(cur, next);
      else if (cur.size() > best_.size())
        best_ = cur;
      cur.pop_back();
    }
  }

  const std::vector<Bitset>& adj_;
  int n_;
  std::vector<int> best_;
};

inline std::vector<Bitset> complement_adj(const IntersectionGraph& g) {
  std::vector<Bitset> comp(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    comp[static_cast<size_t>(v)] = ~g.adj[static_cast<size_t>(v)];
    comp[static_cast<size_t>(v)].reset(static_cast<size_t>(v));
  }
  return comp;
}

}  // namespace detail

inline Certificate max_clique(const IntersectionGraph& g, int budget = 2000) {
  if (g.n > budget)
    throw ResourceError("max_clique: n=" + std::to_string(g.n) + " exceeds budget " +
                        std::to_string(budget) + "; consider the o-cell scan");
  Certificate cert;
  cert.kind = CertKind::Clique;
  if (g.n == 0) return cert;
  cert.vertices = detail::CliqueSolver(g.adj).solve();
  cert.value = static_cast<int>(cert.vertices.size());
  return cert;
}

inline Certificate max_independent_set(const IntersectionGraph& g, int budget = 128) {
  if (g.n > budget)
    throw ResourceError("max_independent_set: n=" + std::to_string(g.n) +
                        " exceeds budget " + std::to_string(budget));
  Certificate cert;
  cert.kind = CertKind::IndependentSet;
  if (g.n == 0) return cert;
  cert.vertices = detail::CliqueSolver(detail::complement_adj(g)).solve();
  cert.value = static_cast<int>(cert.vertices.size());
  return cert;
}

// ---------------------------------------------------------------------------
// geometric clique via o-cells: the common intersection of a clique of blocks
// contains a unit cell, so omega is the max stabbing count over covered cells.

inline Certificate clique_via_cells(const FamilyParams& params,
                                    const std::vector<Block>& members,
                                    std::int64_t cell_budget = 50'000'000) {
  Certificate cert;
  cert.kind = CertKind::Clique;
  if (members.empty()) return cert;

  Int work = 0;
  for (const Block& b : members) {
    int sum = 0;
    for (int v : b.t) sum += v;
    work += ipow(params.s, static_cast<unsigned>(sum));
  }
  if (work > cell_budget)
    throw ResourceError("clique_via_cells: cell scan of size " + work.str() +
                        " exceeds budget " + std::to_string(cell_budget));

  // count, per covered o-cell, the members containing it
  std::map<std::vector<Int>, int> counts;
  for (const Block& b : members) {
    std::vector<Int> lo(b.p.size()), span(b.p.size());
    for (size_t i = 0; i < b.p.size(); ++i) {
      Int side = ipow(params.s, static_cast<unsigned>(b.t[i]));
      lo[i] = b.p[i] * side;
      span[i] = side;
    }
    std::vector<Int> cell = lo;
    bool done = false;
    while (!done) {
      ++counts[cell];
      size_t axis = cell.size();
      while (true) {
        if (axis == 0) {
          done = true;
          break;
        }
        --axis;
        cell[axis] += 1;
        if (cell[axis] < lo[axis] + span[axis]) break;
        cell[axis] = lo[axis];
      }
    }
  }

  std::vector<Int> best_cell;
  int best = 0;
  for (const auto& [cell, cnt] : counts)
    if (cnt > best) {
      best = cnt;
      best_cell = cell;
    }
  cert.value = best;
  // witness: the members containing the best cell
  for (size_t idx = 0; idx < members.size(); ++idx) {
    const Block& b = members[idx];
    bool in = true;
    for (size_t i = 0; i < b.p.size() && in; ++i) {
      Int side = ipow(params.s, static_cast<unsigned>(b.t[i]));
      if (best_cell[i] < b.p[i] * side || best_cell[i] >= (b.p[i] + 1) * side) in = false;
    }
    if (in) cert.vertices.push_back(static_cast<int>(idx));
  }
  return cert;
}

// ---------------------------------------------------------------------------
// exact piercing via finite candidate grid + branch-and-bound set cover

namespace detail {

/// Candidate coordinate values per axis. If every box has a closed lower
/// side on the axis, the distinct lower endpoints suffice (any piercing
/// point can be pushed down to one). Otherwise fall back to the endpoint
/// arrangement: all endpoints plus midpoints of consecutive ones.
inline std::vector<Rat> piercing_axis_candidates(const std::vector<Box>& boxes, int axis) {
  bool all_lo_closed = true;
  for (const Box& b : boxes)
    if (!b.lo_closed[static_cast<size_t>(axis)]) all_lo_closed = false;
  std::vector<Rat> vals;
  if (all_lo_closed) {
    for (const Box& b : boxes) vals.push_back(b.lo[static_cast<size_t>(axis)]);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
  }
  for (const Box& b : boxes) {
    vals.push_back(b.lo[static_cast<size_t>(axis)]);
    vals.push_back(b.hi[static_cast<size_t>(axis)]);
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<Rat> out;
  for (size_t i = 0; i < vals.size(); ++i) {
    out.push_back(vals[i]);
    if (i + 1 < vals.size()) out.push_back((vals[i] + vals[i + 1]) / 2);
  }
  return out;
}

struct CoverCandidate {
  std::vector<Rat> point;
  Bitset covers;
};

inline std::vector<CoverCandidate> piercing_candidates(const std::vector<Box>& boxes) {
  int d = boxes.front().dim();
  std::vector<std::vector<Rat>> axis_vals(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) axis_vals[static_cast<size_t>(i)] = piercing_axis_candidates(boxes, i);

  std::vector<CoverCandidate> cands;
  std::vector<size_t> idx(static_cast<size_t>(d), 0);
  while (true) {
    std::vector<Rat> pt(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) pt[static_cast<size_t>(i)] = axis_vals[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
    Bitset cov(boxes.size());
    for (size_t b = 0; b < boxes.size(); ++b)
      if (boxes[b].contains(pt)) cov.set(b);
    if (cov.any()) cands.push_back({std::move(pt), std::move(cov)});
    int axis = d - 1;
    while (axis >= 0) {
      if (++idx[static_cast<size_t>(axis)] < axis_vals[static_cast<size_t>(axis)].size()) break;
      idx[static_cast<size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  // drop candidates whose coverage is dominated by an earlier-or-larger one
  std::vector<CoverCandidate> kept;
  for (size_t i = 0; i < cands.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < cands.size() && !dominated; ++j) {
      if (i == j) continue;
      if (cands[i].covers.is_subset_of(cands[j].covers) &&
          (cands[i].covers != cands[j].covers || j < i))
        dominated = true;
    }
    if (!dominated) kept.push_back(cands[i]);
  }
  return kept;
}

class SetCoverSolver {
 public:
  SetCoverSolver(size_t universe, const std::vector<Bitset>& sets)
      : universe_(universe), sets_(sets) {}

  // returns chosen set indices; empty optional impossible here because the
  // candidate grid always covers every box
  std::vector<size_t> solve() {
    // greedy initial solution
    Bitset covered(universe_);
    std::vector<size_t> greedy;
    while (covered.count() < universe_) {
      size_t best = sets_.size();
      size_t best_gain = 0;
      for (size_t i = 0; i < sets_.size(); ++i) {
        size_t gain = (sets_[i] - covered).count();
        if (gain > best_gain) {
          best_gain = gain;
          best = i;
        }
      }
      if (best == sets_.size()) throw DomainError("set cover: uncoverable element");
      covered |= sets_[best];
      greedy.push_back(best);
    }
    best_ = greedy;
    Bitset none(universe_);
    std::vector<size_t> chosen;
    search(none, chosen);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void search(const Bitset& covered, std::vector<size_t>& chosen) {
    size_t uncovered = universe_ - covered.count();
    if (uncovered == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    size_t max_gain = 0;
    for (const Bitset& s : sets_) max_gain = std::max(max_gain, (s - covered).count());
    size_t lb = (uncovered + max_gain - 1) / max_gain;
    if (chosen.size() + lb >= best_.size()) return;
    // branch on the uncovered element with the fewest covering sets
    size_t pick = Bitset::npos;
    size_t pick_options = sets_.size() + 1;
    for (size_t e = covered.size(); e-- > 0;) {
      if (covered.test(e)) continue;
      size_t options = 0;
      for (const Bitset& s : sets_)
        if (s.test(e)) ++options;
      if (options < pick_options) {
        pick_options = options;
        pick = e;
      }
    }
    for (size_t i = 0; i < sets_.size(); ++i) {
      if (!sets_[i].test(pick)) continue;
      chosen.push_back(i);
      search(covered | sets_[i], chosen);
      chosen.pop_back();
    }
  }

  size_t universe_;
  const std::vector<Bitset>& sets_;
  std::vector<size_t> best_;
};

}  // namespace detail

inline Certificate min_piercing(const std::vector<Box>& boxes, int budget = 64) {
  Certificate cert;
  cert.kind = CertKind::Piercing;
  if (boxes.empty()) return cert;
  if (static_cast<int>(boxes.size()) > budget)
    throw ResourceError("min_piercing: n=" + std::to_string(boxes.size()) +
                        " exceeds budget " + std::to_string(budget));
  int d = boxes.front().dim();
  for (const Box& b : boxes)
    if (b.dim() != d) throw DomainError("min_piercing: dimension mismatch");

  std::vector<detail::CoverCandidate> cands = detail::piercing_candidates(boxes);
  std::vector<Bitset> sets;
  sets.reserve(cands.size());
  for (const auto& c : cands) sets.push_back(c.covers);
  detail::SetCoverSolver solver(boxes.size(), sets);
  for (size_t i : solver.solve()) cert.points.push_back(cands[i].point);
  cert.value = static_cast<int>(cert.points.size());
  return cert;
}

// ---------------------------------------------------------------------------
// exact chromatic number: DSATUR greedy upper bound, then k-colorability
// backtracking from the clique lower bound upward

namespace detail {

inline std::vector<int> dsatur_greedy(const IntersectionGraph& g, int& colors_used) {
  std::vector<int> color(static_cast<size_t>(g.n), -1);
  std::vector<Bitset> neighbor_colors(static_cast<size_t>(g.n), Bitset(static_cast<size_t>(g.n)));
  colors_used = 0;
  for (int step = 0; step < g.n; ++step) {
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < g.n; ++v) {
      if (color[static_cast<size_t>(v)] != -1) continue;
      int sat = static_cast<int>(neighbor_colors[static_cast<size_t>(v)].count());
      int deg = g.degree(v);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    int c = 0;
    while (neighbor_colors[static_cast<size_t>(pick)].test(static_cast<size_t>(c))) ++c;
    color[static_cast<size_t>(pick)] = c;
    colors_used = std::max(colors_used, c + 1);
    for (size_t u = g.adj[static_cast<size_t>(pick)].find_first(); u != Bitset::npos;
         u = g.adj[static_cast<size_t>(pick)].find_next(u))
      neighbor_colors[u].set(static_cast<size_t>(c));
  }
  return color;
}

class KColorability {
 public:
  KColorability(const IntersectionGraph& g, int k) : g_(g), k_(k) {}

  bool solve(std::vector<int>& out) {
    color_.assign(static_cast<size_t>(g_.n), -1);
    used_ = 0;
    if (rec(0)) {
      out = color_;
      return true;
    }
    return false;
  }

 private:
  bool rec(int placed) {
    if (placed == g_.n) return true;
    // DSATUR selection: max saturation, then max degree, then lowest index
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < g_.n; ++v) {
      if (color_[static_cast<size_t>(v)] != -1) continue;
      int sat = saturation(v);
      int deg = g_.degree(v);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    if (pick_sat >= k_) return false;
    int limit = std::min(k_ - 1, used_);  // first use of a fresh color is canonical
    for (int c = 0; c <= limit; ++c) {
      if (neighbor_has_color(pick, c)) continue;
      color_[static_cast<size_t>(pick)] = c;
      int prev_used = used_;
      used_ = std::max(used_, c + 1);
      if (rec(placed + 1)) return true;
      used_ = prev_used;
      color_[static_cast<size_t>(pick)] = -1;
    }
    return false;
  }

  int saturation(int v) const {
    Bitset seen(static_cast<size_t>(k_));
    for (size_t u = g_.adj[static_cast<size_t>(v)].find_first(); u != Bitset::npos;
         u = g_.adj[static_cast<size_t>(v)].find_next(u))
      if (color_[u] != -1) seen.set(static_cast<size_t>(color_[u]));
    return static_cast<int>(seen.count());
  }

  bool neighbor_has_color(int v, int c) const {
    for (size_t u = g_.adj[static_cast<size_t>(v)].find_first(); u != Bitset::npos;
         u = g_.adj[static_cast<size_t>(v)].find_next(u))
      if (color_[u] == c) return true;
    return false;
  }

  const IntersectionGraph& g_;
  int k_;
  std::vector<int> color_;
  int used_;
};

}  // namespace detail

inline Certificate chromatic_number(const IntersectionGraph& g, int exact_budget = 64) {
  Certificate cert;
  cert.kind = CertKind::Coloring;
  if (g.n == 0) return cert;
  int greedy_colors = 0;
  std::vector<int> greedy = detail::dsatur_greedy(g, greedy_colors);
  if (g.n > exact_budget) {
    cert.value = greedy_colors;
    cert.coloring = greedy;
    cert.exact = false;  // upper bound only
    return cert;
  }
  int lb = max_clique(g, exact_budget).value;
  for (int k = lb; k <= greedy_colors; ++k) {
    std::vector<int> coloring;
    if (k == greedy_colors || detail::KColorability(g, k).solve(coloring)) {
      cert.value = k;
      cert.coloring = (k == greedy_colors) ? greedy : coloring;
      return cert;
    }
  }
  throw std::logic_error("chromatic_number: unreachable");
}

// ---------------------------------------------------------------------------
// exhaustive oracles (test-only; deliberately independent of the main path)

inline Certificate brute_oracle(const IntersectionGraph& g, CertKind kind, int budget = 20) {
  if (g.n > budget)
    throw ResourceError("brute_oracle: n=" + std::to_string(g.n) + " exceeds budget " +
                        std::to_string(budget));
  Certificate cert;
  cert.kind = kind;
  if (g.n == 0) return cert;

  std::vector<std::uint32_t> mask(static_cast<size_t>(g.n), 0);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (g.edge(u, v)) mask[static_cast<size_t>(u)] |= 1u << v;

  if (kind == CertKind::Clique || kind == CertKind::IndependentSet) {
    std::uint32_t best_set = 0;
    int best = 0;
    for (std::uint32_t s = 1; s < (1u << g.n); ++s) {
      int size = __builtin_popcount(s);
      if (size <= best) continue;
      bool ok = true;
      for (int v = 0; v < g.n && ok; ++v) {
        if (!(s & (1u << v))) continue;
        std::uint32_t others = s & ~(1u << v);
        if (kind == CertKind::Clique)
          ok = (mask[static_cast<size_t>(v)] & others) == others;
        else
          ok = (mask[static_cast<size_t>(v)] & s) == 0;
      }
      if (ok) {
        best = size;
        best_set = s;
      }
    }
    cert.value = best;
    for (int v = 0; v < g.n; ++v)
      if (best_set & (1u << v)) cert.vertices.push_back(v);
    return cert;
  }

  if (kind == CertKind::Coloring) {
    for (int k = 1;; ++k) {
      std::vector<int> color(static_cast<size_t>(g.n), -1);
      // plain index-order backtracking; color classes are canonicalized by
      // only allowing one fresh color per step (breaks palette symmetry)
      auto rec = [&](auto&& self, int v, int used) -> bool {
        if (v == g.n) return true;
        int limit = std::min(k - 1, used);
        for (int c = 0; c <= limit; ++c) {
          bool ok = true;
          for (int u = 0; u < v && ok; ++u)
            if (g.edge(u, v) && color[static_cast<size_t>(u)] == c) ok = false;
          if (!ok) continue;
          color[static_cast<size_t>(v)] = c;
          if (self(self, v + 1, std::max(used, c + 1))) return true;
          color[static_cast<size_t>(v)] = -1;
        }
        return false;
      };
      if (rec(rec, 0, 0)) {
        cert.value = k;
        cert.coloring = color;
        return cert;
      }
    }
  }

  throw DomainError("brute_oracle: piercing requires geometry, use brute_piercing");
}

/// Exhaustive piercing oracle on the full endpoint/midpoint grid, by
/// iterative deepening without bounds.
inline Certificate brute_piercing(const std::vector<Box>& boxes, int budget = 20) {
  if (static_cast<int>(boxes.size()) > budget)
    throw ResourceError("brute_piercing: budget exceeded");
  Certificate cert;
  cert.kind = CertKind::Piercing;
  if (boxes.empty()) return cert;

  int d = boxes.front().dim();
  std::vector<std::vector<Rat>> axis_vals(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    std::vector<Rat> vals;
    for (const Box& b : boxes) {
      vals.push_back(b.lo[static_cast<size_t>(i)]);
      vals.push_back(b.hi[static_cast<size_t>(i)]);
    }
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<Rat>& out = axis_vals[static_cast<size_t>(i)];
    for (size_t j = 0; j < vals.size(); ++j) {
      out.push_back(vals[j]);
      if (j + 1 < vals.size()) out.push_back((vals[j] + vals[j + 1]) / 2);
    }
  }
  std::vector<std::vector<Rat>> pts;
  std::vector<std::uint32_t> covs;
  std::vector<size_t> idx(static_cast<size_t>(d), 0);
  while (true) {
    std::vector<Rat> pt(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) pt[static_cast<size_t>(i)] = axis_vals[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
    std::uint32_t cov = 0;
    for (size_t b = 0; b < boxes.size(); ++b)
      if (boxes[b].contains(pt)) cov |= 1u << b;
    if (cov) {
      pts.push_back(pt);
      covs.push_back(cov);
    }
    int axis = d - 1;
    while (axis >= 0) {
      if (++idx[static_cast<size_t>(axis)] < axis_vals[static_cast<size_t>(axis)].size()) break;
      idx[static_cast<size_t>(axis)] = 0;
      --axis;
    }
    if (axis < 0) break;
  }

  // keep the first point per distinct coverage mask, then drop masks
  // strictly contained in another (a dominating point covers all they do)
  {
    std::map<std::uint32_t, std::vector<Rat>> by_mask;
    for (size_t i = 0; i < covs.size(); ++i) by_mask.emplace(covs[i], pts[i]);
    std::vector<std::vector<Rat>> dpts;
    std::vector<std::uint32_t> dcovs;
    for (const auto& [mask, pt] : by_mask) {
      bool dominated = false;
      for (const auto& [other, pt2] : by_mask)
        if (other != mask && (mask & other) == mask) {
          dominated = true;
          break;
        }
      if (!dominated) {
        dpts.push_back(pt);
        dcovs.push_back(mask);
      }
    }
    pts = std::move(dpts);
    covs = std::move(dcovs);
  }

  std::uint32_t all = (boxes.size() == 32) ? ~0u : ((1u << boxes.size()) - 1);
  std::vector<size_t> chosen;
  auto rec = [&](auto&& self, std::uint32_t covered, size_t depth_left) -> bool {
    if (covered == all) return true;
    if (depth_left == 0) return false;
    // cover the lowest uncovered box
    int e = __builtin_ctz(~covered & all);
    for (size_t i = 0; i < covs.size(); ++i) {
      if (!(covs[i] & (1u << e))) continue;
      chosen.push_back(i);
      if (self(self, covered | covs[i], depth_left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (size_t k = 0;; ++k) {
    chosen.clear();
    if (rec(rec, 0, k)) {
      for (size_t i : chosen) cert.points.push_back(pts[i]);
      cert.value = static_cast<int>(k);
      return cert;
    }
  }
}

}  // namespace boxfam
