#pragma once

// Enumeration of the index set T and generation of the full block family:
// all blocks of volume s^k contained in [0,m]^d, in canonical order.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "boxfam/core_geometry.hpp"

namespace boxfam {

inline constexpr std::int64_t kDefaultFamilyBudget = 10'000'000;

/// All weak compositions of k into d parts, lexicographically sorted.
inline std::vector<ExponentVector> enumerate_T(int d, int k) {
  if (d < 1) throw DomainError("enumerate_T: d must be >= 1");
  if (k < 0) throw DomainError("enumerate_T: k must be >= 0");
  std::vector<ExponentVector> out;
  ExponentVector cur(static_cast<size_t>(d), 0);
  auto rec = [&](auto&& self, int axis, int rem) -> void {
    if (axis == d - 1) {
      cur[static_cast<size_t>(axis)] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[static_cast<size_t>(axis)] = v;
      self(self, axis + 1, rem - v);
    }
  };
  rec(rec, 0, k);
  return out;
}

/// The full family B: one block per (t, p) with t in T and
/// 0 <= p(i) <= s^(k - t(i)) - 1. Canonical order: lexicographic on (t, p).
struct BlockFamily {
  FamilyParams params;
  std::vector<Block> blocks;

  size_t size() const { return blocks.size(); }
};

inline BlockFamily generate_family(const FamilyParams& params,
                                   std::int64_t budget = kDefaultFamilyBudget) {
  Int total = params.family_size();
  if (total > budget)
    throw ResourceError("generate_family: family size " + total.str() +
                        " exceeds budget " + std::to_string(budget));
  BlockFamily fam;
  fam.params = params;
  fam.blocks.reserve(static_cast<size_t>(total));
  for (const ExponentVector& t : enumerate_T(params.d, params.k)) {
    std::vector<Int> cells(static_cast<size_t>(params.d));
    for (int i = 0; i < params.d; ++i)
      cells[static_cast<size_t>(i)] = ipow(params.s, static_cast<unsigned>(params.k - t[static_cast<size_t>(i)]));
    std::vector<Int> p(static_cast<size_t>(params.d), 0);
    while (true) {
      fam.blocks.push_back(Block{t, p});
      int axis = params.d - 1;
      while (axis >= 0) {
        p[static_cast<size_t>(axis)] += 1;
        if (p[static_cast<size_t>(axis)] < cells[static_cast<size_t>(axis)]) break;
        p[static_cast<size_t>(axis)] = 0;
        --axis;
      }
      if (axis < 0) break;
    }
  }
  return fam;
}

/// The |T| family members containing a unit o-cell of [0,m]^d.
/// `cell` must have t = all zeros.
inline std::vector<Block> stab_cell(const BlockFamily& family, const Block& cell) {
  const FamilyParams& params = family.params;
  if (static_cast<int>(cell.t.size()) != params.d)
    throw DomainError("stab_cell: cell dimension mismatch");
  for (int v : cell.t)
    if (v != 0) throw DomainError("stab_cell: cell must be an o-block");
  check_block(cell, params);  // rejects cells outside [0,m]^d

  std::vector<Block> out;
  for (const ExponentVector& t : enumerate_T(params.d, params.k)) {
    Block b;
    b.t = t;
    b.p.resize(static_cast<size_t>(params.d));
    for (int i = 0; i < params.d; ++i)
      b.p[static_cast<size_t>(i)] =
          cell.p[static_cast<size_t>(i)] / ipow(params.s, static_cast<unsigned>(t[static_cast<size_t>(i)]));
    out.push_back(std::move(b));
  }
  return out;
}

/// Lower all blocks to explicit boxes, preserving order.
inline std::vector<Box> family_to_boxes(const BlockFamily& family) {
  std::vector<Box> out;
  out.reserve(family.blocks.size());
  for (const Block& b : family.blocks) out.push_back(block_to_box(b, family.params));
  return out;
}

}  // namespace boxfam
