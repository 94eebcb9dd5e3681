#pragma once

// Divide-and-conquer piercing and coloring: balanced hyperplane cuts on the
// last axis, recursion into below/above/slice, exact interval algorithms as
// the d=1 base.

#include <algorithm>
#include <vector>

#include "boxfam/graph.hpp"
#include "boxfam/solvers.hpp"

namespace boxfam {

struct SweepSplit {
  Rat t;
  std::vector<int> below, above, crossing;  // indices into the input
  std::vector<Box> slice;                   // crossing boxes, last axis dropped
};

/// Partition by the hyperplane {x(d) = t}. A box is below iff it lies
/// entirely in the open half-space {x(d) < t} (open upper sides count);
/// above iff it lies in {x(d) >= t}. Every crossing box therefore contains
/// the hyperplane, which is what the slice re-embedding needs.
inline SweepSplit split_by_hyperplane(const std::vector<Box>& boxes, const Rat& t) {
  if (boxes.empty() || boxes.front().dim() < 2)
    throw DomainError("split_by_hyperplane: requires d >= 2");
  int axis = boxes.front().dim() - 1;
  SweepSplit sp;
  sp.t = t;
  for (size_t i = 0; i < boxes.size(); ++i) {
    const Box& b = boxes[i];
    size_t a = static_cast<size_t>(axis);
    bool is_below = b.hi[a] < t || (b.hi[a] == t && !b.hi_closed[a]);
    bool is_above = !is_below && b.lo[a] >= t;
    if (is_below)
      sp.below.push_back(static_cast<int>(i));
    else if (is_above)
      sp.above.push_back(static_cast<int>(i));
    else {
      sp.crossing.push_back(static_cast<int>(i));
      Box s = b;
      s.lo.pop_back();
      s.hi.pop_back();
      s.lo_closed.pop_back();
      s.hi_closed.pop_back();
      sp.slice.push_back(std::move(s));
    }
  }
  return sp;
}

// ---------------------------------------------------------------------------
// d=1 bases

/// Greedy right-endpoint stabbing: |points| = nu = tau (Gallai). Open upper
/// endpoints are handled by stabbing just below them.
inline std::vector<Rat> interval_stab(const std::vector<Box>& intervals) {
  for (const Box& b : intervals)
    if (b.dim() != 1) throw DomainError("interval_stab: d=1 input required");
  // symbolic upper key: open upper b counts as b - epsilon
  std::vector<size_t> order(intervals.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (intervals[a].hi[0] != intervals[b].hi[0]) return intervals[a].hi[0] < intervals[b].hi[0];
    if (intervals[a].hi_closed[0] != intervals[b].hi_closed[0])
      return !intervals[a].hi_closed[0];  // open sorts first
    return a < b;
  });

  struct SymPoint {
    Rat v;
    bool minus_eps;
    bool hits(const Box& b) const {
      // above the lower side: v - eps > lo needs v > lo; v itself also needs
      // lo attained when equal
      if (v < b.lo[0]) return false;
      if (v == b.lo[0] && (minus_eps || !b.lo_closed[0])) return false;
      if (v > b.hi[0]) return false;
      if (v == b.hi[0] && !minus_eps && !b.hi_closed[0]) return false;
      return true;
    }
  };

  std::vector<SymPoint> chosen;
  for (size_t i : order) {
    const Box& b = intervals[i];
    if (!chosen.empty() && chosen.back().hits(b)) continue;
    chosen.push_back({b.hi[0], !b.hi_closed[0]});
  }

  // materialize: a point v-eps is replaced by a rational strictly between
  // the max lower endpoint of the intervals it hits and v
  std::vector<Rat> out;
  for (const SymPoint& p : chosen) {
    if (!p.minus_eps) {
      out.push_back(p.v);
      continue;
    }
    Rat lo_max = p.v - 1;
    for (const Box& b : intervals)
      if (p.hits(b)) lo_max = std::max(lo_max, b.lo[0]);
    out.push_back((lo_max + p.v) / 2);
  }
  return out;
}

/// Greedy left-endpoint coloring: exactly omega colors, proper.
inline std::vector<int> interval_color(const std::vector<Box>& intervals) {
  for (const Box& b : intervals)
    if (b.dim() != 1) throw DomainError("interval_color: d=1 input required");
  std::vector<size_t> order(intervals.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (intervals[a].lo[0] != intervals[b].lo[0]) return intervals[a].lo[0] < intervals[b].lo[0];
    if (intervals[a].lo_closed[0] != intervals[b].lo_closed[0])
      return intervals[a].lo_closed[0];  // closed start sorts first
    return a < b;
  });
  std::vector<int> color(intervals.size(), -1);
  for (size_t i : order) {
    std::vector<bool> used;
    for (size_t j : order) {
      if (color[j] == -1 || j == i) continue;
      if (boxes_intersect(intervals[i], intervals[j])) {
        if (used.size() <= static_cast<size_t>(color[j])) used.resize(static_cast<size_t>(color[j]) + 1, false);
        used[static_cast<size_t>(color[j])] = true;
      }
    }
    int c = 0;
    while (static_cast<size_t>(c) < used.size() && used[static_cast<size_t>(c)]) ++c;
    color[i] = c;
  }
  return color;
}

// ---------------------------------------------------------------------------
// cut selection

struct NuCut {
  Rat t;
  int nu_below = 0;
  bool balanced = true;  // false when no candidate achieves exactly floor(k/2)
};

namespace detail {

/// One candidate per distinct upper coordinate u: u itself when every box
/// topping out at u is open there (the box already lies in {x < u}); else a
/// value just past u (before the next endpoint), so the box falls below.
/// A final sentinel puts everything below.
inline std::vector<Rat> cut_candidates(const std::vector<Box>& boxes) {
  size_t a = boxes.front().lo.size() - 1;
  std::vector<Rat> endpoints;
  for (const Box& b : boxes) {
    endpoints.push_back(b.lo[a]);
    endpoints.push_back(b.hi[a]);
  }
  std::sort(endpoints.begin(), endpoints.end());
  endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());

  std::vector<Rat> ts;
  for (const Box& b : boxes) {
    const Rat& u = b.hi[a];
    if (!b.hi_closed[a]) {
      ts.push_back(u);
      continue;
    }
    auto next = std::upper_bound(endpoints.begin(), endpoints.end(), u);
    ts.push_back(next == endpoints.end() ? Rat(u + 1) : Rat((u + *next) / 2));
  }
  ts.push_back(endpoints.back() + 1);  // sentinel: everything below
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

inline int nu_exact(const std::vector<Box>& boxes, const SolverBudgets& budgets) {
  if (boxes.empty()) return 0;
  return max_independent_set(build_graph_naive(boxes), budgets.mis).value;
}

}  // namespace detail

/// Smallest candidate cut (drawn from the distinct upper last-coordinates)
/// with nu(below) = floor(k/2); if general position fails, the smallest with
/// nu(below) >= floor(k/2), flagged.
inline NuCut find_balanced_nu_cut(const std::vector<Box>& boxes,
                                  const SolverBudgets& budgets = {}) {
  if (boxes.empty() || boxes.front().dim() < 2)
    throw DomainError("find_balanced_nu_cut: requires d >= 2 and nonempty input");
  int k = detail::nu_exact(boxes, budgets);
  int target = k / 2;
  NuCut first_over;
  bool have_over = false;
  for (const Rat& t : detail::cut_candidates(boxes)) {
    SweepSplit sp = split_by_hyperplane(boxes, t);
    std::vector<Box> below;
    for (int i : sp.below) below.push_back(boxes[static_cast<size_t>(i)]);
    int nu = detail::nu_exact(below, budgets);
    if (nu == target) return {t, nu, true};
    if (nu > target && !have_over) {
      first_over = {t, nu, false};
      have_over = true;
    }
  }
  if (have_over) return first_over;
  throw std::logic_error("find_balanced_nu_cut: sentinel candidate must reach nu(B)");
}

struct MedianCut {
  Rat t;
  int below_count = 0;
  bool balanced = true;
};

/// Cut with |below| = floor(n/2) when distinct upper coordinates permit;
/// otherwise the closest achievable count, flagged.
inline MedianCut find_median_cut(const std::vector<Box>& boxes) {
  if (boxes.empty() || boxes.front().dim() < 2)
    throw DomainError("find_median_cut: requires d >= 2 and nonempty input");
  int target = static_cast<int>(boxes.size()) / 2;
  MedianCut best;
  bool have = false;
  for (const Rat& t : detail::cut_candidates(boxes)) {
    SweepSplit sp = split_by_hyperplane(boxes, t);
    int cnt = static_cast<int>(sp.below.size());
    if (!have || std::abs(cnt - target) < std::abs(best.below_count - target)) {
      best = {t, cnt, cnt == target};
      have = true;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// recursion

struct DncPierceResult {
  std::vector<std::vector<Rat>> points;
  int nu = 0;      // exact independence number of the input
  Int bound;       // nu * (ceil(log2 nu) + 1)^(d-1)
  bool balanced = true;
};

struct DncColorResult {
  std::vector<int> coloring;
  int colors = 0;
  int omega = 0;   // exact clique number of the input
  Int bound;       // omega * (ceil(log2 n) + 1)^(d-1)
  bool balanced = true;
};

namespace detail {

inline int ceil_log2(long long x) {
  int r = 0;
  long long p = 1;
  while (p < x) {
    p *= 2;
    ++r;
  }
  return r;
}

inline void check_separation(const std::vector<Box>& boxes, const SweepSplit& sp) {
  for (int i : sp.below)
    for (int j : sp.above)
      if (boxes_intersect(boxes[static_cast<size_t>(i)], boxes[static_cast<size_t>(j)]))
        throw std::logic_error("dnc: below/above separation violated");
}

/// A point in the common intersection of pairwise-intersecting boxes.
inline std::vector<Rat> helly_point(const std::vector<Box>& boxes) {
  int d = boxes.front().dim();
  std::vector<Rat> pt(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    size_t a = static_cast<size_t>(i);
    Rat lo = boxes.front().lo[a], hi = boxes.front().hi[a];
    for (const Box& b : boxes) {
      lo = std::max(lo, b.lo[a]);
      hi = std::min(hi, b.hi[a]);
    }
    pt[a] = (lo == hi) ? lo : (lo + hi) / 2;
  }
  for (const Box& b : boxes)
    if (!b.contains(pt)) throw std::logic_error("dnc: helly point outside a box");
  return pt;
}

/// Pick a cut for piercing, with progress guards; sets `balanced` false on
/// any deviation from the exact floor(k/2) rule.
inline Rat pierce_cut(const std::vector<Box>& boxes, int k, const SolverBudgets& budgets,
                      bool& balanced) {
  int target = k / 2;
  size_t n = boxes.size();
  bool have = false;
  Rat fallback_over;
  for (const Rat& t : cut_candidates(boxes)) {
    SweepSplit sp = split_by_hyperplane(boxes, t);
    if (sp.below.size() >= n) continue;  // no progress on this candidate
    std::vector<Box> below;
    for (int i : sp.below) below.push_back(boxes[static_cast<size_t>(i)]);
    int nu = nu_exact(below, budgets);
    if (nu == target) return t;
    if (nu > target && !have) {
      fallback_over = t;
      have = true;
    }
  }
  balanced = false;
  if (have) return fallback_over;
  // all useful candidates degenerate: cut through the first box's interior
  size_t a = boxes.front().lo.size() - 1;
  return (boxes.front().lo[a] + boxes.front().hi[a]) / 2;
}

inline std::vector<std::vector<Rat>> dnc_pierce_rec(const std::vector<Box>& boxes,
                                                    const SolverBudgets& budgets,
                                                    bool& balanced) {
  if (boxes.empty()) return {};
  int d = boxes.front().dim();
  if (d == 1) {
    std::vector<std::vector<Rat>> out;
    for (const Rat& v : interval_stab(boxes)) out.push_back({v});
    return out;
  }
  int k = nu_exact(boxes, budgets);
  if (k == 1) return {helly_point(boxes)};

  Rat t = pierce_cut(boxes, k, budgets, balanced);
  SweepSplit sp = split_by_hyperplane(boxes, t);
  check_separation(boxes, sp);
  std::vector<Box> below, above;
  for (int i : sp.below) below.push_back(boxes[static_cast<size_t>(i)]);
  for (int i : sp.above) above.push_back(boxes[static_cast<size_t>(i)]);

  std::vector<std::vector<Rat>> out = dnc_pierce_rec(below, budgets, balanced);
  for (auto& p : dnc_pierce_rec(above, budgets, balanced)) out.push_back(std::move(p));
  for (auto& p : dnc_pierce_rec(sp.slice, budgets, balanced)) {
    p.push_back(t);  // lift back to dimension d
    out.push_back(std::move(p));
  }
  return out;
}

inline std::vector<int> dnc_color_rec(const std::vector<Box>& boxes,
                                      const SolverBudgets& budgets, int& colors,
                                      bool& balanced) {
  colors = 0;
  if (boxes.empty()) return {};
  int d = boxes.front().dim();
  if (d == 1) {
    std::vector<int> col = interval_color(boxes);
    for (int c : col) colors = std::max(colors, c + 1);
    return col;
  }
  if (boxes.size() == 1) {
    colors = 1;
    return {0};
  }

  MedianCut cut = find_median_cut(boxes);
  Rat t = cut.t;
  SweepSplit sp = split_by_hyperplane(boxes, t);
  if (sp.below.size() == boxes.size() || sp.above.size() == boxes.size()) {
    // degenerate: cut through the first box's interior instead
    balanced = false;
    size_t a = boxes.front().lo.size() - 1;
    t = (boxes.front().lo[a] + boxes.front().hi[a]) / 2;
    sp = split_by_hyperplane(boxes, t);
  } else if (!cut.balanced) {
    balanced = false;
  }
  check_separation(boxes, sp);

  std::vector<Box> below, above;
  for (int i : sp.below) below.push_back(boxes[static_cast<size_t>(i)]);
  for (int i : sp.above) above.push_back(boxes[static_cast<size_t>(i)]);

  int cb = 0, ca = 0, cs = 0;
  std::vector<int> col_b = dnc_color_rec(below, budgets, cb, balanced);
  std::vector<int> col_a = dnc_color_rec(above, budgets, ca, balanced);
  std::vector<int> col_s = dnc_color_rec(sp.slice, budgets, cs, balanced);
  int shared = std::max(cb, ca);  // below and above reuse one palette

  std::vector<int> out(boxes.size(), -1);
  for (size_t i = 0; i < sp.below.size(); ++i) out[static_cast<size_t>(sp.below[i])] = col_b[i];
  for (size_t i = 0; i < sp.above.size(); ++i) out[static_cast<size_t>(sp.above[i])] = col_a[i];
  for (size_t i = 0; i < sp.crossing.size(); ++i)
    out[static_cast<size_t>(sp.crossing[i])] = shared + col_s[i];
  colors = shared + cs;
  return out;
}

}  // namespace detail

/// Valid piercing set of size at most nu * (ceil(log2 nu) + 1)^(d-1), the
/// exact solution of the cut recursion with the d=1 base.
inline DncPierceResult dnc_pierce(const std::vector<Box>& boxes,
                                  const SolverBudgets& budgets = {}) {
  DncPierceResult res;
  if (boxes.empty()) {
    res.bound = 0;
    return res;
  }
  res.nu = detail::nu_exact(boxes, budgets);
  res.points = detail::dnc_pierce_rec(boxes, budgets, res.balanced);
  int d = boxes.front().dim();
  res.bound = Int(res.nu) * ipow(Int(detail::ceil_log2(res.nu) + 1),
                                 static_cast<unsigned>(d - 1));
  if (!verify_piercing(boxes, res.points))
    throw std::logic_error("dnc_pierce: produced an invalid piercing set");
  return res;
}

/// Proper coloring with at most omega * (ceil(log2 n) + 1)^(d-1) colors.
inline DncColorResult dnc_color(const std::vector<Box>& boxes,
                                const SolverBudgets& budgets = {}) {
  DncColorResult res;
  if (boxes.empty()) {
    res.bound = 0;
    return res;
  }
  IntersectionGraph g = build_graph_naive(boxes);
  res.omega = max_clique(g, budgets.clique).value;
  res.coloring = detail::dnc_color_rec(boxes, budgets, res.colors, res.balanced);
  int d = boxes.front().dim();
  res.bound = Int(res.omega) *
              ipow(Int(detail::ceil_log2(static_cast<long long>(boxes.size())) + 1),
                   static_cast<unsigned>(d - 1));
  if (!verify_coloring(g, res.coloring, res.colors))
    throw std::logic_error("dnc_color: produced an improper coloring");
  return res;
}

}  // namespace boxfam
