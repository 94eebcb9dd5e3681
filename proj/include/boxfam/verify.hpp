#pragma once

// The verify suite: structural invariants of family documents, with a
// counterexample on every failure. Block-specific checks are gated on the
// document kind; full-family checks are gated on completeness.

#include <algorithm>
#include <string>
#include <vector>

#include "boxfam/containers.hpp"
#include "boxfam/family.hpp"
#include "boxfam/graph.hpp"
#include "boxfam/rng.hpp"
#include "boxfam/serialize.hpp"
#include "boxfam/solvers.hpp"

namespace boxfam {

struct CheckResult {
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.skipped && !c.pass) return false;
    return true;
  }

  Json to_json() const {
    Json j = Json::array();
    for (const CheckResult& c : checks) {
      Json jc = {{"name", c.name}, {"pass", c.pass}, {"skipped", c.skipped}};
      if (!c.detail.empty()) jc["detail"] = c.detail;
      j.push_back(std::move(jc));
    }
    return j;
  }
};

namespace detail {

inline std::string block_str(const Block& b) {
  std::string s = "t=(";
  for (size_t i = 0; i < b.t.size(); ++i) s += (i ? "," : "") + std::to_string(b.t[i]);
  s += ") p=(";
  for (size_t i = 0; i < b.p.size(); ++i) s += (i ? "," : "") + b.p[i].str();
  return s + ")";
}

/// Projections of two blocks onto every axis are disjoint or nested.
inline bool blocks_laminar_pair(const Block& a, const Block& b, int s) {
  for (size_t i = 0; i < a.t.size(); ++i) {
    Int alo = a.p[i] * ipow(s, static_cast<unsigned>(a.t[i]));
    Int ahi = (a.p[i] + 1) * ipow(s, static_cast<unsigned>(a.t[i]));
    Int blo = b.p[i] * ipow(s, static_cast<unsigned>(b.t[i]));
    Int bhi = (b.p[i] + 1) * ipow(s, static_cast<unsigned>(b.t[i]));
    bool disjoint = ahi <= blo || bhi <= alo;
    bool nested = (alo <= blo && bhi <= ahi) || (blo <= alo && ahi <= bhi);
    if (!disjoint && !nested) return false;
  }
  return true;
}

}  // namespace detail

inline VerifyReport verify_suite(const FamilyDocument& doc, const SolverBudgets& budgets = {},
                                 std::uint64_t seed = 1, std::int64_t pair_budget = 500'000) {
  VerifyReport rep;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back({std::move(name), pass, false, std::move(detail)});
  };
  auto skip = [&](std::string name, std::string why) {
    rep.checks.push_back({std::move(name), true, true, std::move(why)});
  };

  if (doc.kind == FamilyDocument::Kind::Boxes) {
    bool ok = true;
    std::string detail;
    for (size_t i = 0; i < doc.boxes.size(); ++i) {
      try {
        doc.boxes[i].validate();
        if (doc.boxes[i].dim() != doc.d) throw DomainError("dimension mismatch");
      } catch (const std::exception& e) {
        ok = false;
        detail = "box " + std::to_string(i) + ": " + e.what();
        break;
      }
    }
    add("boxes-valid", ok, detail);
    for (const char* name :
         {"positions-in-range", "no-duplicates", "laminarity", "predicate-equivalence",
          "decomposition-partition", "clique-number-is-type-count", "independent-t-class",
          "stab-cell-size", "fingerprint-properties"})
      skip(name, "block-specific check; document holds generic boxes");
  } else {
    const FamilyParams& params = *doc.params;
    const std::vector<Block>& blocks = doc.blocks;

    {
      bool ok = true;
      std::string detail;
      for (size_t i = 0; i < blocks.size(); ++i) {
        try {
          check_block(blocks[i], params);
        } catch (const std::exception& e) {
          ok = false;
          detail = "block " + std::to_string(i) + " (" + detail::block_str(blocks[i]) +
                   "): " + e.what();
          break;
        }
      }
      add("positions-in-range", ok, detail);
      if (!ok) return rep;  // later checks assume well-formed blocks
    }

    {
      std::vector<Block> sorted = blocks;
      std::sort(sorted.begin(), sorted.end());
      auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      add("no-duplicates", dup == sorted.end(),
          dup == sorted.end() ? "" : "duplicate " + detail::block_str(*dup));
    }

    std::int64_t n = static_cast<std::int64_t>(blocks.size());
    bool pairs_ok = n * (n - 1) / 2 <= pair_budget;

    if (!pairs_ok) {
      skip("laminarity", "pair count over budget");
      skip("predicate-equivalence", "pair count over budget");
    } else {
      bool lam = true, equiv = true;
      std::string lam_detail, equiv_detail;
      std::vector<Box> boxes;
      for (const Block& b : blocks) boxes.push_back(block_to_box(b, params));
      for (size_t i = 0; i < blocks.size() && (lam || equiv); ++i) {
        for (size_t j = i + 1; j < blocks.size(); ++j) {
          if (lam && !detail::blocks_laminar_pair(blocks[i], blocks[j], params.s)) {
            lam = false;
            lam_detail = "pair (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                         detail::block_str(blocks[i]) + " vs " + detail::block_str(blocks[j]);
          }
          if (equiv && blocks_intersect(blocks[i], blocks[j], params.s) !=
                           boxes_intersect(boxes[i], boxes[j])) {
            equiv = false;
            equiv_detail = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
          }
        }
      }
      add("laminarity", lam, lam_detail);
      add("predicate-equivalence", equiv, equiv_detail);
    }

    // decomposition edges must equal the naive graph's edge set exactly
    if (!pairs_ok || static_cast<int>(n) > kDefaultGraphVertexCap) {
      skip("decomposition-partition", "over budget");
    } else if (n == 0) {
      skip("decomposition-partition", "empty family");
    } else {
      BlockFamily fam;
      fam.params = params;
      fam.blocks = blocks;
      std::vector<std::pair<int, int>> dec_edges = build_biclique_decomposition(fam).edges();
      std::vector<std::pair<int, int>> dec_sorted = dec_edges;
      std::sort(dec_sorted.begin(), dec_sorted.end());
      bool dup_free = std::adjacent_find(dec_sorted.begin(), dec_sorted.end()) == dec_sorted.end();
      std::vector<std::pair<int, int>> graph_edges = build_graph_blocks(fam).edges();
      std::sort(graph_edges.begin(), graph_edges.end());
      add("decomposition-partition", dup_free && dec_sorted == graph_edges,
          dup_free ? (dec_sorted == graph_edges ? "" : "edge sets differ") : "duplicate edge");
    }

    // full-family checks
    bool is_full = false;
    if (Int(n) == params.family_size()) {
      std::vector<Block> sorted = blocks;
      std::sort(sorted.begin(), sorted.end());
      BlockFamily full = generate_family(params);
      std::sort(full.blocks.begin(), full.blocks.end());
      is_full = sorted == full.blocks;
      std::string detail;
      if (!is_full) {
        for (size_t i = 0; i < sorted.size(); ++i)
          if (sorted[i] != full.blocks[i]) {
            detail = "first mismatch: document has " + detail::block_str(sorted[i]) +
                     ", full family has " + detail::block_str(full.blocks[i]);
            break;
          }
      }
      add("full-family-completeness", is_full, detail);
    } else {
      skip("full-family-completeness", "not a full family (size differs)");
    }

    if (is_full) {
      Certificate omega = clique_via_cells(params, blocks);
      add("clique-number-is-type-count", Int(omega.value) == params.type_count(),
          "measured " + std::to_string(omega.value));

      // one t-class: pairwise disjoint, size M, and the volume bound M+1 > M
      std::vector<const Block*> t_class;
      for (const Block& b : blocks)
        if (b.t == blocks.front().t) t_class.push_back(&b);
      bool cls = Int(t_class.size()) == params.M;
      for (size_t i = 0; i < t_class.size() && cls; ++i)
        for (size_t j = i + 1; j < t_class.size(); ++j)
          if (blocks_intersect(*t_class[i], *t_class[j], params.s)) cls = false;
      // any M+1 blocks have total volume (M+1) m > m^d
      cls = cls && (params.M + 1) * params.m > ipow(params.m, static_cast<unsigned>(params.d));
      add("independent-t-class", cls);

      // sampled o-cells are each stabbed by exactly |T| members
      BlockFamily fam;
      fam.params = params;
      fam.blocks = blocks;
      Rng rng(seed, 17);
      bool stab_ok = true;
      std::string stab_detail;
      for (int trial = 0; trial < 20 && stab_ok; ++trial) {
        Block cell;
        cell.t.assign(static_cast<size_t>(params.d), 0);
        for (int i = 0; i < params.d; ++i) {
          std::uint64_t range =
              (params.m > Int(UINT64_MAX)) ? UINT64_MAX : params.m.convert_to<std::uint64_t>();
          cell.p.push_back(Int(rng.next_below(range)));
        }
        std::vector<Block> hits = stab_cell(fam, cell);
        if (Int(hits.size()) != params.type_count()) {
          stab_ok = false;
          stab_detail = "cell " + detail::block_str(cell);
        }
      }
      add("stab-cell-size", stab_ok, stab_detail);
    } else {
      skip("clique-number-is-type-count", "requires the full family");
      skip("independent-t-class", "requires the full family");
      skip("stab-cell-size", "requires the full family");
    }

    // fingerprint invariants on sampled independent sets
    if (n > 0 && static_cast<int>(n) <= kDefaultGraphVertexCap && pairs_ok &&
        params.M <= Int(kDefaultGraphVertexCap)) {
      BlockFamily fam;
      fam.params = params;
      fam.blocks = blocks;
      IntersectionGraph g = build_graph_blocks(fam);
      int M = params.M.convert_to<int>();
      Rng rng(seed, 23);
      bool ok = true;
      std::string detail;
      for (int trial = 0; trial < 50 && ok; ++trial) {
        std::vector<int> perm(static_cast<size_t>(g.n));
        for (int i = 0; i < g.n; ++i) perm[static_cast<size_t>(i)] = i;
        rng.shuffle(perm);
        std::vector<int> ind;
        Bitset blocked(static_cast<size_t>(g.n));
        for (int v : perm) {
          if (blocked.test(static_cast<size_t>(v))) continue;
          if (!rng.bernoulli(3, 4)) continue;
          ind.push_back(v);
          blocked.set(static_cast<size_t>(v));
          blocked |= g.adj[static_cast<size_t>(v)];
        }
        FingerprintResult fp = fingerprint(g, ind, M);
        Bitset in_container(static_cast<size_t>(g.n)), in_i(static_cast<size_t>(g.n));
        for (int v : fp.container) in_container.set(static_cast<size_t>(v));
        for (int v : ind) in_i.set(static_cast<size_t>(v));
        for (int v : fp.fingerprint)
          if (!in_i.test(static_cast<size_t>(v))) ok = false;  // S subset of I
        for (int v : ind)
          if (!in_container.test(static_cast<size_t>(v))) ok = false;  // I subset of container
        if (fp.residual.size() > static_cast<size_t>(2) * static_cast<size_t>(M)) ok = false;
        // determinism: replaying from S alone reproduces f(S)
        FingerprintResult replay = fingerprint(g, fp.fingerprint, M);
        if (replay.residual != fp.residual || replay.fingerprint != fp.fingerprint) ok = false;
        if (!ok) detail = "trial " + std::to_string(trial);
      }
      add("fingerprint-properties", ok, detail);
    } else {
      skip("fingerprint-properties", "family empty or over budget");
    }
  }

  // duality sanity on solvable sizes, for any document kind
  std::vector<Box> boxes = doc.to_boxes();
  if (!boxes.empty() && static_cast<int>(boxes.size()) <= budgets.piercing) {
    IntersectionGraph g = build_graph_naive(boxes);
    int omega = max_clique(g, budgets.clique).value;
    int alpha = max_independent_set(g, std::max(budgets.mis, g.n)).value;
    int tau = min_piercing(boxes, budgets.piercing).value;
    Certificate chi_cert = chromatic_number(g, budgets.chromatic_exact);
    bool ok = tau >= alpha && chi_cert.value * alpha >= g.n && tau * omega >= g.n;
    if (chi_cert.exact) ok = ok && chi_cert.value >= omega;
    add("duality-sanity", ok,
        ok ? "" : "omega=" + std::to_string(omega) + " alpha=" + std::to_string(alpha) +
                  " tau=" + std::to_string(tau) + " chi=" + std::to_string(chi_cert.value));
  } else {
    skip("duality-sanity", "over solver budget");
  }

  return rep;
}

}  // namespace boxfam
