#pragma once

// Parameter selection for the randomized subsampling construction, seeded
// trial harness, and the blow-up instance builders for the piercing / Ramsey
// / coloring lower bounds.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "boxfam/containers.hpp"
#include "boxfam/family.hpp"
#include "boxfam/graph.hpp"
#include "boxfam/rng.hpp"
#include "boxfam/solvers.hpp"

namespace boxfam {

/// Exact sampling probability num/den, 0 < p <= 1.
struct Prob {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  Prob() = default;
  Prob(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
    if (den == 0 || num == 0 || num > den) throw DomainError("Prob: need 0 < num/den <= 1");
  }
  Rat rat() const { return Rat(Int(num), Int(den)); }
};

struct SampleConfig {
  Prob p;
  std::uint64_t seed = 0;
  int trials = 1;
};

struct TrialResult {
  int index = 0;
  std::int64_t sample_size = 0;
  int omega = 0;
  int alpha = 0;        // exact, or a lower bound when alpha_exact is false
  bool alpha_exact = true;
  bool size_ok = false;   // |X| >= p|B|/2
  bool alpha_ok = false;  // alpha(H) <= 6pM
  bool omega_ok = false;  // omega(H) < 2dk log s / log k
};

/// Per-trial measurements plus the thresholds of the three sampling claims.
/// Everything is recomputable from (params, config) alone.
struct TrialReport {
  FamilyParams params;
  SampleConfig config;
  Int family_size;
  Rat size_threshold;    // p|B|/2
  Rat alpha_threshold;   // 6pM
  double omega_threshold = 0;  // 2dk ln s / ln k (natural log)
  int r = 0;                   // ceil(2d ln m / ln ln m)
  std::vector<TrialResult> trials;
  int size_ok_count = 0;
  int alpha_ok_count = 0;
  int omega_ok_count = 0;
};

// ---------------------------------------------------------------------------
// parameter selection of the main construction

struct ParamChoice {
  Int n;  // target vertex count
  int d = 3;
  int k = 2;
  Int s;
  Int type_count;
  Prob p;
  Int m, M, family_size;
};

struct ParamBudgetError : ResourceError {
  ParamChoice choice;
  ParamBudgetError(const std::string& what, ParamChoice c)
      : ResourceError(what), choice(std::move(c)) {}
};

/// Smallest integer k >= 2 with (1/8) k^(4d(d-1)k) >= n, then s = k^(4d) and
/// p = 1/(4|T|). A ceiling form is used since an integer k rarely makes the
/// size condition an equality; k >= 2 because s = k^(4d)
/// must be at least 2. Pass family_budget = 0 to skip the budget check.
inline ParamChoice choose_parameters(const Int& n, int d, std::int64_t family_budget = 0) {
  if (n < 1) throw DomainError("choose_parameters: n must be >= 1");
  if (d < 3) throw DomainError("choose_parameters: d must be >= 3");
  int k = 2;
  while (ipow(Int(k), static_cast<unsigned>(4 * d * (d - 1) * k)) < 8 * n) ++k;

  ParamChoice c;
  c.n = n;
  c.d = d;
  c.k = k;
  c.s = ipow(Int(k), static_cast<unsigned>(4 * d));
  c.type_count = binomial(static_cast<unsigned>(k + d - 1), static_cast<unsigned>(d - 1));
  Int den = 4 * c.type_count;
  if (den > Int(UINT64_MAX)) throw DomainError("choose_parameters: |T| out of range");
  c.p = Prob(1, den.convert_to<std::uint64_t>());
  c.m = ipow(c.s, static_cast<unsigned>(k));
  c.M = ipow(c.m, static_cast<unsigned>(d - 1));
  c.family_size = c.type_count * c.M;
  if (family_budget > 0 && c.family_size > family_budget)
    throw ParamBudgetError("choose_parameters: family size " + c.family_size.str() +
                               " exceeds budget " + std::to_string(family_budget),
                           c);
  return c;
}

// ---------------------------------------------------------------------------
// sampling

/// Keep each block independently with probability p; returns the kept
/// indices. Deterministic given (seed, stream).
inline std::vector<int> sample_family(const BlockFamily& family, const Prob& p, Rng& rng) {
  std::vector<int> kept;
  for (size_t i = 0; i < family.blocks.size(); ++i)
    if (rng.bernoulli(p.num, p.den)) kept.push_back(static_cast<int>(i));
  return kept;
}

inline TrialReport run_trials(const FamilyParams& params, const SampleConfig& cfg,
                              const SolverBudgets& budgets = {},
                              std::int64_t family_budget = kDefaultFamilyBudget) {
  if (cfg.trials < 0) throw DomainError("run_trials: trials must be >= 0");
  BlockFamily family = generate_family(params, family_budget);

  TrialReport rep;
  rep.params = params;
  rep.config = cfg;
  rep.family_size = params.family_size();
  rep.size_threshold = cfg.p.rat() * Rat(rep.family_size) / 2;
  rep.alpha_threshold = cfg.p.rat() * Rat(params.M) * 6;
  double ln_s = std::log(static_cast<double>(params.s));
  double ln_k = std::log(static_cast<double>(params.k));
  rep.omega_threshold = (params.k > 1) ? 2.0 * params.d * params.k * ln_s / ln_k
                                       : std::numeric_limits<double>::infinity();
  double ln_m = params.k * ln_s;
  rep.r = (ln_m > 1.0) ? static_cast<int>(std::ceil(2.0 * params.d * ln_m / std::log(ln_m))) : 0;

  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng(cfg.seed, static_cast<std::uint64_t>(t));
    std::vector<int> kept = sample_family(family, cfg.p, rng);

    TrialResult res;
    res.index = t;
    res.sample_size = static_cast<std::int64_t>(kept.size());

    std::vector<Block> members;
    members.reserve(kept.size());
    for (int i : kept) members.push_back(family.blocks[static_cast<size_t>(i)]);
    res.omega = clique_via_cells(params, members).value;

    BlockFamily sub;
    sub.params = params;
    sub.blocks = members;
    if (!members.empty()) {
      IntersectionGraph h = build_graph_blocks(sub);
      if (h.n <= budgets.mis) {
        res.alpha = max_independent_set(h, budgets.mis).value;
      } else {
        // budget exceeded: record the greedy lower bound, flagged
        res.alpha_exact = false;
        Bitset avail(static_cast<size_t>(h.n));
        avail.set();
        int greedy = 0;
        while (avail.any()) {
          size_t v = avail.find_first();
          ++greedy;
          avail.reset(v);
          avail -= h.adj[v];
        }
        res.alpha = greedy;
      }
    }

    res.size_ok = Rat(res.sample_size) >= rep.size_threshold;
    res.alpha_ok = Rat(res.alpha) <= rep.alpha_threshold;
    res.omega_ok = static_cast<double>(res.omega) < rep.omega_threshold;
    rep.size_ok_count += res.size_ok;
    rep.alpha_ok_count += res.alpha_ok;
    rep.omega_ok_count += res.omega_ok;
    rep.trials.push_back(res);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// instance builders (section-2 blow-up reductions, desk scale)

struct PiercingInstance {
  BlockFamily family;
  Int n;
  int omega = 0;
  Int tau_lower;  // ceil(n / omega)
  int nu = 0;     // exact when nu_exact, else the trivial bound M
  bool nu_exact = true;
};

/// Full block family with M <= k_target, so nu <= k_target is guaranteed;
/// the reported piercing lower bound is n / omega.
inline PiercingInstance build_piercing_instance(int k_target, int d,
                                                const SolverBudgets& budgets = {},
                                                std::int64_t family_budget = kDefaultFamilyBudget) {
  if (k_target < 1) throw DomainError("build_piercing_instance: k_target must be >= 1");
  if (d < 1) throw DomainError("build_piercing_instance: d must be >= 1");
  const int s = 2;
  int k = 1;
  if (d > 1) {
    // largest k with 2^(k(d-1)) <= k_target
    while (ipow(Int(s), static_cast<unsigned>((k + 1) * (d - 1))) <= k_target) ++k;
    if (ipow(Int(s), static_cast<unsigned>(k * (d - 1))) > k_target) k = 0;
  }
  PiercingInstance inst;
  inst.family = generate_family(FamilyParams(d, s, std::max(k, 0)), family_budget);
  inst.n = inst.family.params.family_size();
  inst.omega = clique_via_cells(inst.family.params, inst.family.blocks).value;
  inst.tau_lower = (inst.n + inst.omega - 1) / inst.omega;
  if (static_cast<int>(inst.family.size()) <= budgets.mis) {
    IntersectionGraph g = build_graph_blocks(inst.family);
    inst.nu = max_independent_set(g, budgets.mis).value;
  } else {
    inst.nu_exact = false;
    inst.nu = inst.family.params.M.convert_to<int>();  // alpha(G) = M
  }
  return inst;
}

struct RamseyInstance {
  std::vector<Box> boxes;
  int base_size = 0;
  int multiplicity = 1;
  int omega = 0;
  int alpha = 0;
  bool exact = true;  // false when solver budgets forced bounds
};

/// Blow up a small full family to exactly n boxes: multiplicity then
/// truncation, removing the lexicographically last copies first.
inline RamseyInstance build_ramsey_instance(int n, int d,
                                            const SolverBudgets& budgets = {}) {
  if (n < 1) throw DomainError("build_ramsey_instance: n must be >= 1");
  const int s = 2;
  // largest k with |B(k)| <= ceil(sqrt(n))
  Int target = 1;
  while (target * target < n) ++target;
  int k = 0;
  while (FamilyParams(d, s, k + 1).family_size() <= target) ++k;
  BlockFamily base = generate_family(FamilyParams(d, s, k));
  std::vector<Box> base_boxes = family_to_boxes(base);

  RamseyInstance inst;
  inst.base_size = static_cast<int>(base_boxes.size());
  inst.multiplicity =
      static_cast<int>((n + inst.base_size - 1) / inst.base_size);
  std::vector<Box> blown = blow_up(base_boxes, inst.multiplicity);
  blown.resize(static_cast<size_t>(n));  // canonical order is copy-major, so
                                         // this drops the last copies first
  inst.boxes = std::move(blown);
  if (n <= budgets.mis) {
    IntersectionGraph g = build_graph_naive(inst.boxes);
    inst.omega = max_clique(g, budgets.clique).value;
    inst.alpha = max_independent_set(g, budgets.mis).value;
  } else {
    inst.exact = false;
  }
  return inst;
}

struct ColoringInstance {
  std::vector<Box> boxes;
  FamilyParams base_params;
  int multiplicity = 1;
  int n = 0;
  int omega = 0;       // multiplicity * |T|, <= omega_cap
  Int alpha;           // = M of the base family
  Int chi_lower;       // ceil(n / alpha)
};

/// Multiplicity floor(omega_cap / omega(base)) blow-up of a full family with
/// total size at most n; chi >= n / alpha(G) is the reported lower bound.
/// Pass k >= 0 to fix the base exponent budget, or -1 to choose the largest
/// base fitting n.
inline ColoringInstance build_coloring_instance(int n, int omega_cap, int d, int k = -1,
                                                int s = 2,
                                                std::int64_t family_budget = kDefaultFamilyBudget) {
  if (n < 1) throw DomainError("build_coloring_instance: n must be >= 1");
  if (omega_cap < 1) throw DomainError("build_coloring_instance: omega_cap must be >= 1");
  auto type_count = [&](int kk) {
    return binomial(static_cast<unsigned>(kk + d - 1), static_cast<unsigned>(d - 1));
  };
  if (k < 0) {
    int best = -1;
    for (int kk = 0; type_count(kk) <= omega_cap; ++kk) {
      Int tc = type_count(kk);
      Int mult = omega_cap / tc;
      Int size = mult * FamilyParams(d, s, kk).family_size();
      if (mult >= 1 && size <= n) best = kk;
      if (FamilyParams(d, s, kk).family_size() > n) break;
    }
    if (best < 0) throw DomainError("build_coloring_instance: no base family fits n");
    k = best;
  }
  FamilyParams base_params(d, s, k);
  Int tc = base_params.type_count();
  if (tc > omega_cap)
    throw DomainError("build_coloring_instance: omega_cap below base clique number " +
                      tc.str());
  ColoringInstance inst;
  inst.base_params = base_params;
  inst.multiplicity = (Int(omega_cap) / tc).convert_to<int>();
  BlockFamily base = generate_family(base_params, family_budget);
  inst.boxes = blow_up(family_to_boxes(base), inst.multiplicity);
  inst.n = static_cast<int>(inst.boxes.size());
  inst.omega = inst.multiplicity * tc.convert_to<int>();
  inst.alpha = base_params.M;
  inst.chi_lower = (Int(inst.n) + inst.alpha - 1) / inst.alpha;
  return inst;
}

}  // namespace boxfam
