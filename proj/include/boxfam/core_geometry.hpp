#pragma once

// Exact representation of blocks and boxes, and the intersection predicates.
// All arithmetic is arbitrary precision; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <vector>

#include "boxfam/errors.hpp"

namespace boxfam {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(Int base, unsigned exp) {
  Int r = 1;
  while (exp--) r *= base;
  return r;
}

inline Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Parameters of a block family: dimension d, scale base s, exponent budget k,
/// with m = s^k and M = m^(d-1).
struct FamilyParams {
  int d = 1;
  int s = 2;
  int k = 0;
  Int m = 1;
  Int M = 1;

  FamilyParams() = default;
  FamilyParams(int d_, int s_, int k_) : d(d_), s(s_), k(k_) {
    if (d < 1) throw DomainError("FamilyParams: d must be >= 1");
    if (s < 2) throw DomainError("FamilyParams: s must be >= 2");
    if (k < 0) throw DomainError("FamilyParams: k must be >= 0");
    m = ipow(s, static_cast<unsigned>(k));
    M = ipow(m, static_cast<unsigned>(d - 1));
  }

  /// |T| = C(k+d-1, d-1), the number of exponent vectors summing to k.
  Int type_count() const {
    return binomial(static_cast<unsigned>(k + d - 1), static_cast<unsigned>(d - 1));
  }
  /// |B| = |T| * M.
  Int family_size() const { return type_count() * M; }

  bool operator==(const FamilyParams&) const = default;
};

/// Exponent vector t; members of T have components summing to k.
using ExponentVector = std::vector<int>;

inline ExponentVector join_type(const ExponentVector& t, const ExponentVector& u) {
  if (t.size() != u.size()) throw DomainError("join_type: length mismatch");
  ExponentVector w(t.size());
  for (size_t i = 0; i < t.size(); ++i) w[i] = std::max(t[i], u[i]);
  return w;
}

/// A t-block: the half-open box prod_i [s^t(i) * p(i), s^t(i) * (p(i)+1)).
struct Block {
  ExponentVector t;
  std::vector<Int> p;

  bool operator==(const Block&) const = default;
  auto operator<=>(const Block&) const = default;
};

/// An axis-parallel box with exact rational endpoints and per-side
/// closed/open flags. Nonempty interior required (lo < hi on every axis).
struct Box {
  std::vector<Rat> lo, hi;
  std::vector<bool> lo_closed, hi_closed;

  int dim() const { return static_cast<int>(lo.size()); }

  static Box closed(std::vector<Rat> lo, std::vector<Rat> hi) {
    Box b;
    b.lo = std::move(lo);
    b.hi = std::move(hi);
    b.lo_closed.assign(b.lo.size(), true);
    b.hi_closed.assign(b.hi.size(), true);
    b.validate();
    return b;
  }

  static Box half_open(std::vector<Rat> lo, std::vector<Rat> hi) {
    Box b;
    b.lo = std::move(lo);
    b.hi = std::move(hi);
    b.lo_closed.assign(b.lo.size(), true);
    b.hi_closed.assign(b.hi.size(), false);
    b.validate();
    return b;
  }

  void validate() const {
    if (lo.size() != hi.size() || lo.size() != lo_closed.size() ||
        lo.size() != hi_closed.size())
      throw DomainError("Box: inconsistent axis counts");
    for (size_t i = 0; i < lo.size(); ++i)
      if (!(lo[i] < hi[i]))
        throw DomainError("Box: empty interior on axis " + std::to_string(i));
  }

  /// Point membership, respecting the open/closed flags.
  bool contains(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != dim())
      throw DomainError("Box::contains: dimension mismatch");
    for (int i = 0; i < dim(); ++i) {
      if (x[i] < lo[i] || (x[i] == lo[i] && !lo_closed[i])) return false;
      if (x[i] > hi[i] || (x[i] == hi[i] && !hi_closed[i])) return false;
    }
    return true;
  }

  bool operator==(const Box&) const = default;
};

inline void check_block(const Block& b, const FamilyParams& params) {
  if (static_cast<int>(b.t.size()) != params.d || static_cast<int>(b.p.size()) != params.d)
    throw DomainError("block: dimension mismatch with params");
  for (int i = 0; i < params.d; ++i) {
    if (b.t[i] < 0 || b.t[i] > params.k)
      throw DomainError("block: exponent out of range on axis " + std::to_string(i));
    Int cells = ipow(params.s, static_cast<unsigned>(params.k - b.t[i]));
    if (b.p[i] < 0 || b.p[i] >= cells)
      throw DomainError("block: position out of range on axis " + std::to_string(i));
  }
}

/// Materialize the half-open box of a block.
inline Box block_to_box(const Block& b, const FamilyParams& params) {
  check_block(b, params);
  std::vector<Rat> lo(params.d), hi(params.d);
  for (int i = 0; i < params.d; ++i) {
    Int side = ipow(params.s, static_cast<unsigned>(b.t[i]));
    lo[i] = Rat(side * b.p[i]);
    hi[i] = Rat(side * (b.p[i] + 1));
  }
  return Box::half_open(std::move(lo), std::move(hi));
}

/// The unique w-block containing b; requires w >= t pointwise.
inline Block containing_block(const Block& b, const ExponentVector& w, int s) {
  if (w.size() != b.t.size()) throw DomainError("containing_block: length mismatch");
  Block c;
  c.t = w;
  c.p.resize(b.p.size());
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < b.t[i])
      throw DomainError("containing_block: w coarser than t required on axis " +
                        std::to_string(i));
    c.p[i] = b.p[i] / ipow(s, static_cast<unsigned>(w[i] - b.t[i]));
  }
  return c;
}

/// Two blocks intersect iff they lie in the same w-block, w = join of types.
inline bool blocks_intersect(const Block& b1, const Block& b2, int s) {
  ExponentVector w = join_type(b1.t, b2.t);
  return containing_block(b1, w, s) == containing_block(b2, w, s);
}

/// Per-axis interval overlap, open/closed aware.
inline bool boxes_intersect(const Box& a, const Box& b) {
  if (a.dim() != b.dim()) throw DomainError("boxes_intersect: dimension mismatch");
  for (int i = 0; i < a.dim(); ++i) {
    // low endpoint of the overlap is max(a.lo, b.lo), high is min(a.hi, b.hi)
    const Rat& lo = std::max(a.lo[i], b.lo[i]);
    const Rat& hi = std::min(a.hi[i], b.hi[i]);
    if (lo > hi) return false;
    if (lo == hi) {
      bool lo_ok = (a.lo[i] < lo || a.lo_closed[i]) && (b.lo[i] < lo || b.lo_closed[i]);
      bool hi_ok = (a.hi[i] > hi || a.hi_closed[i]) && (b.hi[i] > hi || b.hi_closed[i]);
      if (!(lo_ok && hi_ok)) return false;
    }
  }
  return true;
}

/// Containment test (b inside a), open/closed aware.
inline bool box_contains_box(const Box& a, const Box& b) {
  if (a.dim() != b.dim()) throw DomainError("box_contains_box: dimension mismatch");
  for (int i = 0; i < a.dim(); ++i) {
    if (b.lo[i] < a.lo[i]) return false;
    if (b.lo[i] == a.lo[i] && b.lo_closed[i] && !a.lo_closed[i]) return false;
    if (b.hi[i] > a.hi[i]) return false;
    if (b.hi[i] == a.hi[i] && b.hi_closed[i] && !a.hi_closed[i]) return false;
  }
  return true;
}

}  // namespace boxfam
