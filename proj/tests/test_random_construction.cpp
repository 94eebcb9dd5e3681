#include <doctest.h>

#include "boxfam/random_construction.hpp"
#include "boxfam/solvers.hpp"
#include "support.hpp"

using namespace boxfam;
using namespace testsupport;

TEST_CASE("choose_parameters") {
  ParamChoice c = choose_parameters(Int(1000000), 3);
  CHECK(c.k == 2);
  CHECK(c.s == 4096);  // 2^12
  CHECK(c.type_count == 6);
  CHECK(c.p.num == 1);
  CHECK(c.p.den == 24);

  // documented floor k >= 2
  CHECK(choose_parameters(Int(1), 3).k == 2);

  // monotone in n
  int prev = 0;
  for (Int n : {Int(1), Int(1000), ipow(Int(10), 12), ipow(Int(10), 40)}) {
    int k = choose_parameters(n, 3).k;
    CHECK(k >= prev);
    prev = k;
  }

  CHECK_THROWS_AS(choose_parameters(Int(0), 3), DomainError);
  CHECK_THROWS_AS(choose_parameters(Int(10), 2), DomainError);
  CHECK_THROWS_AS(choose_parameters(Int(1000), 3, 100), ParamBudgetError);
  try {
    choose_parameters(Int(1000), 3, 100);
  } catch (const ParamBudgetError& e) {
    CHECK(e.choice.k == 2);  // the over-budget choice is inspectable
  }
}

TEST_CASE("sample_family: p=1 keeps everything; determinism") {
  BlockFamily fam = full_family(2, 2, 2);
  Rng rng(42, 0);
  std::vector<int> all = sample_family(fam, Prob(1, 1), rng);
  CHECK(all.size() == fam.size());

  // golden sample: seed 42, stream 0, p = 1/2 (frozen at first implementation)
  Rng r1(42, 0), r2(42, 0);
  std::vector<int> x1 = sample_family(fam, Prob(1, 2), r1);
  std::vector<int> x2 = sample_family(fam, Prob(1, 2), r2);
  CHECK(x1 == x2);
  CHECK(x1 == std::vector<int>{0, 1, 4, 5, 6, 8});

  CHECK_THROWS_AS(Prob(0, 1), DomainError);
  CHECK_THROWS_AS(Prob(3, 2), DomainError);
}

TEST_CASE("run_trials: structure, thresholds, reproducibility") {
  FamilyParams params(3, 4, 2);
  SampleConfig cfg;
  cfg.p = Prob(1, 24);
  cfg.seed = 7;
  cfg.trials = 20;
  TrialReport rep = run_trials(params, cfg);

  CHECK(rep.family_size == 1536);
  CHECK(rep.size_threshold == Rat(1536, 48));  // p|B|/2 = 32
  CHECK(rep.alpha_threshold == Rat(256, 4));   // 6pM = 64
  CHECK(rep.omega_threshold == doctest::Approx(2.0 * 3 * 2 * std::log(4.0) / std::log(2.0)));
  CHECK(rep.r == 17);  // ceil(2*3*ln(16)/ln(ln 16))
  REQUIRE(rep.trials.size() == 20);

  for (const TrialResult& t : rep.trials) {
    CHECK(t.alpha_exact);
    CHECK(t.alpha <= 256);  // alpha(H) <= alpha(G) = M
    CHECK(t.omega <= 6);    // omega(H) <= omega(G) = |T|
    CHECK(t.size_ok == (Rat(t.sample_size) >= rep.size_threshold));
  }

  TrialReport rep2 = run_trials(params, cfg);
  REQUIRE(rep2.trials.size() == rep.trials.size());
  for (size_t i = 0; i < rep.trials.size(); ++i) {
    CHECK(rep2.trials[i].sample_size == rep.trials[i].sample_size);
    CHECK(rep2.trials[i].omega == rep.trials[i].omega);
    CHECK(rep2.trials[i].alpha == rep.trials[i].alpha);
  }
}

TEST_CASE("run_trials: p=1 reproduces the full-family identities; 0 trials valid") {
  FamilyParams params(2, 2, 2);
  SampleConfig cfg;
  cfg.p = Prob(1, 1);
  cfg.seed = 1;
  cfg.trials = 3;
  TrialReport rep = run_trials(params, cfg);
  for (const TrialResult& t : rep.trials) {
    CHECK(t.sample_size == 12);
    CHECK(t.omega == 3);  // |T|
    CHECK(t.alpha == 4);  // M
  }

  cfg.trials = 0;
  CHECK(run_trials(params, cfg).trials.empty());
}

TEST_CASE("trial omega from cells equals omega from branch and bound") {
  FamilyParams params(3, 2, 2);
  BlockFamily fam = generate_family(params);
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    BlockFamily sub;
    sub.params = params;
    for (const Block& b : fam.blocks)
      if (rng.bernoulli(1, 4)) sub.blocks.push_back(b);
    if (sub.blocks.empty()) continue;
    CHECK(clique_via_cells(params, sub.blocks).value ==
          max_clique(build_graph_blocks(sub)).value);
  }
}

TEST_CASE("build_piercing_instance") {
  PiercingInstance inst = build_piercing_instance(4, 2);
  CHECK(inst.family.params.d == 2);
  CHECK(inst.nu_exact);
  CHECK(inst.nu <= 4);
  CHECK(inst.tau_lower == (inst.n + inst.omega - 1) / inst.omega);

  // exact cross-check on the d=2,s=2,k=2 family (nu target = M = 4)
  CHECK(inst.family.params.k == 2);
  CHECK(inst.n == 12);
  CHECK(inst.omega == 3);
  CHECK(inst.tau_lower == 4);
  CHECK(min_piercing(family_to_boxes(inst.family)).value == 4);

  CHECK_THROWS_AS(build_piercing_instance(0, 2), DomainError);
}

TEST_CASE("build_ramsey_instance") {
  RamseyInstance inst = build_ramsey_instance(12, 2);
  CHECK(inst.boxes.size() == 12);
  REQUIRE(inst.exact);
  CHECK(inst.omega * inst.alpha >= 12);  // Ramsey-type obstruction

  // multiplicity 1 when n equals the base size
  RamseyInstance one = build_ramsey_instance(4, 2);
  if (one.base_size == 4) CHECK(one.multiplicity == 1);

  // truncation keeps omega and alpha monotone
  RamseyInstance big = build_ramsey_instance(20, 2);
  RamseyInstance small = build_ramsey_instance(15, 2);
  if (big.base_size == small.base_size && big.multiplicity == small.multiplicity) {
    CHECK(small.omega <= big.omega);
    CHECK(small.alpha <= big.alpha);
  }
  CHECK_THROWS_AS(build_ramsey_instance(0, 2), DomainError);
}

TEST_CASE("build_coloring_instance") {
  ColoringInstance inst = build_coloring_instance(24, 6, 2, 2);
  CHECK(inst.base_params.k == 2);
  CHECK(inst.multiplicity == 2);
  CHECK(inst.n == 24);
  CHECK(inst.omega == 6);
  CHECK(inst.alpha == 4);
  CHECK(inst.chi_lower == 6);

  // exact solvers confirm the blow-up laws and the lower bound
  IntersectionGraph g = build_graph_naive(inst.boxes);
  CHECK(max_clique(g).value == 6);
  CHECK(max_independent_set(g).value == 4);
  Certificate chi = chromatic_number(g, 24);
  REQUIRE(chi.exact);
  CHECK(Int(chi.value) >= inst.chi_lower);

  // omega_cap = omega(base) gives multiplicity 1
  ColoringInstance flat = build_coloring_instance(24, 3, 2, 2);
  CHECK(flat.multiplicity == 1);

  CHECK_THROWS_AS(build_coloring_instance(24, 2, 2, 2), DomainError);
}
