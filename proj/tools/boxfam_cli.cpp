// boxfam command-line tool: family generation, graph building, exact
// solving, container runs, seeded sampling trials, blow-up constructions,
// divide-and-conquer piercing/coloring, export and verification.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "boxfam/containers.hpp"
#include "boxfam/dnc.hpp"
#include "boxfam/family.hpp"
#include "boxfam/graph.hpp"
#include "boxfam/random_construction.hpp"
#include "boxfam/rng.hpp"
#include "boxfam/serialize.hpp"
#include "boxfam/solvers.hpp"
#include "boxfam/verify.hpp"

namespace {

using namespace boxfam;

std::int64_t env_int(const char* name, std::int64_t fallback) {
  const char* v = std::getenv(name);
  return v ? std::atoll(v) : fallback;
}

SolverBudgets budgets_from_env() {
  SolverBudgets b;
  b.clique = static_cast<int>(env_int("BOXFAM_CLIQUE_BUDGET", b.clique));
  b.mis = static_cast<int>(env_int("BOXFAM_MIS_BUDGET", b.mis));
  b.piercing = static_cast<int>(env_int("BOXFAM_PIERCING_BUDGET", b.piercing));
  b.chromatic_exact = static_cast<int>(env_int("BOXFAM_CHROMATIC_BUDGET", b.chromatic_exact));
  return b;
}

struct Emitter {
  std::string command;
  std::vector<std::string> argv;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<std::string, std::string>> inputs;

  void note_input(const std::string& path) {
    inputs.emplace_back(path, fnv1a64_hex(read_file(path)));
  }

  /// Write an artifact plus its run manifest.
  void emit(const std::string& path, const std::string& data) const {
    write_file(path, data);
    RunManifest man;
    man.command = command;
    man.argv = argv;
    man.seed = seed;
    man.inputs = inputs;
    man.outputs.emplace_back(path, fnv1a64_hex(data));
    write_file(path + ".manifest.json", dump_json(man.to_json()));
  }

  void report(const Json& j, const std::string& out_path) const {
    std::string data = dump_json(j);
    if (out_path.empty())
      std::cout << data;
    else
      emit(out_path, data);
  }
};

IntersectionGraph graph_of(const FamilyDocument& doc) {
  if (doc.kind == FamilyDocument::Kind::Blocks) {
    BlockFamily fam;
    fam.params = *doc.params;
    fam.blocks = doc.blocks;
    return build_graph_blocks(fam);
  }
  return build_graph_naive(doc.boxes);
}

Prob parse_prob(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (s == "1") return Prob(1, 1);
    throw CLI::ValidationError("--p", "expected NUM/DEN or 1");
  }
  return Prob(std::strtoull(s.c_str(), nullptr, 10),
              std::strtoull(s.c_str() + slash + 1, nullptr, 10));
}

/// Seeded random independent sets of g: random permutation, greedy with a
/// per-vertex keep probability of 3/4.
std::vector<std::vector<int>> random_independent_sets(const IntersectionGraph& g, int count,
                                                      std::uint64_t seed) {
  std::vector<std::vector<int>> out;
  for (int t = 0; t < count; ++t) {
    Rng rng(seed, static_cast<std::uint64_t>(t) + 1000);
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
    out.push_back(std::move(ind));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block families of axis-parallel boxes: construction, solving, verification"};
  app.require_subcommand(1);

  std::vector<std::string> raw_args(argv, argv + argc);
  SolverBudgets budgets = budgets_from_env();
  std::int64_t family_budget = env_int("BOXFAM_FAMILY_BUDGET", kDefaultFamilyBudget);

  // ---- gen-family
  auto* gen = app.add_subcommand("gen-family", "generate the full block family for (d,s,k)");
  int gd = 2, gs = 2, gk = 1;
  std::string gen_out;
  gen->add_option("-d", gd, "dimension")->required();
  gen->add_option("-s", gs, "scale base")->required();
  gen->add_option("-k", gk, "exponent budget")->required();
  gen->add_option("-o,--output", gen_out, "output family document")->required();

  // ---- graph
  auto* graph_cmd = app.add_subcommand("graph", "build the intersection graph, report size");
  std::string graph_in, graph_out;
  graph_cmd->add_option("-i,--input", graph_in)->required();
  graph_cmd->add_option("-o,--output", graph_out);

  // ---- decompose
  auto* dec_cmd = app.add_subcommand("decompose", "biclique decomposition of a block family");
  std::string dec_in, dec_out;
  dec_cmd->add_option("-i,--input", dec_in)->required();
  dec_cmd->add_option("-o,--output", dec_out);

  // ---- solve
  auto* solve = app.add_subcommand("solve", "exact solvers: clique | mis | pierce | chromatic");
  std::string solve_kind, solve_in, solve_out;
  bool solve_cells = false;
  solve->add_option("kind", solve_kind, "clique | mis | pierce | chromatic")->required();
  solve->add_option("-i,--input", solve_in)->required();
  solve->add_option("-o,--output", solve_out);
  solve->add_flag("--cells", solve_cells, "use the o-cell scan (block families, clique only)");

  // ---- containers
  auto* cont = app.add_subcommand("containers", "fingerprint/container runs on random independent sets");
  std::string cont_in, cont_out;
  int cont_sets = 100;
  std::uint64_t cont_seed = 0;
  bool cont_trace = false;
  cont->add_option("-i,--input", cont_in)->required();
  cont->add_option("--sets", cont_sets, "number of random independent sets");
  cont->add_option("--seed", cont_seed)->required();
  cont->add_flag("--trace", cont_trace, "include per-step traces");
  cont->add_option("-o,--output", cont_out);

  // ---- trials
  auto* trials_cmd = app.add_subcommand("trials", "seeded random subsampling trials");
  int td = 3, ts = 4, tk = 2, t_trials = 100;
  std::string tp = "1/24", trials_out;
  std::uint64_t t_seed = 0;
  trials_cmd->add_option("-d", td)->required();
  trials_cmd->add_option("-s", ts)->required();
  trials_cmd->add_option("-k", tk)->required();
  trials_cmd->add_option("-p", tp, "sampling probability NUM/DEN")->required();
  trials_cmd->add_option("--trials", t_trials)->required();
  trials_cmd->add_option("--seed", t_seed)->required();
  trials_cmd->add_option("-o,--output", trials_out);

  // ---- construct
  auto* cons = app.add_subcommand("construct", "blow-up instances: piercing | ramsey | coloring");
  std::string cons_kind, cons_out;
  int cons_d = 3, cons_n = 0, cons_ktarget = 0, cons_omega_cap = 0, cons_k = -1;
  cons->add_option("kind", cons_kind, "piercing | ramsey | coloring")->required();
  cons->add_option("-d", cons_d)->required();
  cons->add_option("-n", cons_n, "target box count (ramsey, coloring)");
  cons->add_option("--k-target", cons_ktarget, "independence number cap (piercing)");
  cons->add_option("--omega-cap", cons_omega_cap, "clique number cap (coloring)");
  cons->add_option("-k", cons_k, "base exponent budget (coloring; -1 = auto)");
  cons->add_option("-o,--output", cons_out, "output family document")->required();

  // ---- dnc
  auto* dnc_cmd = app.add_subcommand("dnc", "divide-and-conquer: pierce | color");
  std::string dnc_kind, dnc_in, dnc_out;
  dnc_cmd->add_option("kind", dnc_kind, "pierce | color")->required();
  dnc_cmd->add_option("-i,--input", dnc_in)->required();
  dnc_cmd->add_option("-o,--output", dnc_out);

  // ---- export
  auto* exp = app.add_subcommand("export", "export: dimacs | family");
  std::string exp_kind, exp_in, exp_out, exp_form = "keep";
  exp->add_option("kind", exp_kind, "dimacs | family")->required();
  exp->add_option("-i,--input", exp_in)->required();
  exp->add_option("-o,--output", exp_out)->required();
  exp->add_option("--form", exp_form, "family form: keep | blocks | boxes");

  // ---- verify
  auto* ver = app.add_subcommand("verify", "run the invariant suite on a family document");
  std::string ver_in, ver_out;
  ver->add_option("-i,--input", ver_in)->required();
  ver->add_option("-o,--output", ver_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  Emitter em;
  em.argv = raw_args;

  try {
    if (*gen) {
      em.command = "gen-family";
      BlockFamily fam = generate_family(FamilyParams(gd, gs, gk), family_budget);
      em.emit(gen_out, dump_json(document_to_json(make_document(fam))));
      std::cout << "wrote " << fam.size() << " blocks to " << gen_out << "\n";
    } else if (*graph_cmd) {
      em.command = "graph";
      em.note_input(graph_in);
      IntersectionGraph g = graph_of(load_document(graph_in));
      Json j = {{"n", g.n}, {"edges", g.edge_count()}};
      em.report(j, graph_out);
    } else if (*dec_cmd) {
      em.command = "decompose";
      em.note_input(dec_in);
      FamilyDocument doc = load_document(dec_in);
      if (doc.kind != FamilyDocument::Kind::Blocks)
        throw DomainError("decompose: requires a block family document");
      BlockFamily fam;
      fam.params = *doc.params;
      fam.blocks = doc.blocks;
      BicliqueDecomposition dec = build_biclique_decomposition(fam);
      std::vector<std::pair<int, int>> dec_edges = dec.edges();
      std::sort(dec_edges.begin(), dec_edges.end());
      std::vector<std::pair<int, int>> graph_edges = build_graph_blocks(fam).edges();
      std::sort(graph_edges.begin(), graph_edges.end());
      Json j = {{"parts", dec.part_count()},
                {"edges", dec_edges.size()},
                {"partition_ok", dec_edges == graph_edges &&
                                     std::adjacent_find(dec_edges.begin(), dec_edges.end()) ==
                                         dec_edges.end()}};
      Json shapes = Json::array();
      for (const BicliquePart& p : dec.parts)
        shapes.push_back({{"left", p.left.size()}, {"right", p.right.size()}});
      j["part_shapes"] = std::move(shapes);
      em.report(j, dec_out);
    } else if (*solve) {
      em.command = "solve " + solve_kind;
      em.note_input(solve_in);
      FamilyDocument doc = load_document(solve_in);
      Certificate cert;
      if (solve_kind == "clique") {
        if (solve_cells) {
          if (doc.kind != FamilyDocument::Kind::Blocks)
            throw DomainError("--cells requires a block family document");
          cert = clique_via_cells(*doc.params, doc.blocks);
        } else {
          cert = max_clique(graph_of(doc), budgets.clique);
        }
      } else if (solve_kind == "mis") {
        cert = max_independent_set(graph_of(doc), budgets.mis);
      } else if (solve_kind == "pierce") {
        cert = min_piercing(doc.to_boxes(), budgets.piercing);
      } else if (solve_kind == "chromatic") {
        cert = chromatic_number(graph_of(doc), budgets.chromatic_exact);
      } else {
        throw CLI::ValidationError("kind", "expected clique | mis | pierce | chromatic");
      }
      em.report(certificate_to_json(cert), solve_out);
    } else if (*cont) {
      em.command = "containers";
      em.seed = cont_seed;
      em.note_input(cont_in);
      FamilyDocument doc = load_document(cont_in);
      if (doc.kind != FamilyDocument::Kind::Blocks)
        throw DomainError("containers: requires a block family document");
      BlockFamily fam;
      fam.params = *doc.params;
      fam.blocks = doc.blocks;
      IntersectionGraph g = build_graph_blocks(fam);
      int M = fam.params.M.convert_to<int>();
      std::vector<std::vector<int>> sets = random_independent_sets(g, cont_sets, cont_seed);
      ContainerCollection coll = build_containers(g, M, sets);
      size_t max_fp = 0, max_container = 0;
      for (const auto& [fp, c] : coll.source) {
        max_fp = std::max(max_fp, fp.size());
        max_container = std::max(max_container, c.size());
      }
      Json j = {{"sets", cont_sets},
                {"distinct_containers", coll.containers.size()},
                {"max_fingerprint", max_fp},
                {"max_container", max_container},
                {"M", M},
                {"coverage_ok", true}};  // build_containers verifies coverage
      if (cont_trace) {
        Json traces = Json::array();
        for (const std::vector<int>& ind : sets) {
          FingerprintResult fp = fingerprint(g, ind, M);
          Json steps = Json::array();
          for (const FingerprintStep& st : fp.trace)
            steps.push_back({{"vertex", st.vertex},
                             {"in_set", st.in_independent_set},
                             {"removed", st.removed}});
          traces.push_back({{"fingerprint", fp.fingerprint}, {"steps", std::move(steps)}});
        }
        j["traces"] = std::move(traces);
      }
      em.report(j, cont_out);
    } else if (*trials_cmd) {
      em.command = "trials";
      em.seed = t_seed;
      SampleConfig cfg;
      cfg.p = parse_prob(tp);
      cfg.seed = t_seed;
      cfg.trials = t_trials;
      TrialReport rep = run_trials(FamilyParams(td, ts, tk), cfg, budgets, family_budget);
      em.report(trial_report_to_json(rep), trials_out);
    } else if (*cons) {
      em.command = "construct " + cons_kind;
      Json stats;
      FamilyDocument doc;
      if (cons_kind == "piercing") {
        if (cons_ktarget < 1) throw CLI::ValidationError("--k-target", "required for piercing");
        PiercingInstance inst = build_piercing_instance(cons_ktarget, cons_d, budgets, family_budget);
        doc = make_document(inst.family);
        stats = {{"n", inst.n.str()},
                 {"omega", inst.omega},
                 {"tau_lower", inst.tau_lower.str()},
                 {"nu", inst.nu},
                 {"nu_exact", inst.nu_exact}};
      } else if (cons_kind == "ramsey") {
        if (cons_n < 1) throw CLI::ValidationError("-n", "required for ramsey");
        RamseyInstance inst = build_ramsey_instance(cons_n, cons_d, budgets);
        doc = make_document(inst.boxes);
        stats = {{"n", inst.boxes.size()},
                 {"base_size", inst.base_size},
                 {"multiplicity", inst.multiplicity},
                 {"omega", inst.omega},
                 {"alpha", inst.alpha},
                 {"exact", inst.exact},
                 {"max_omega_alpha", std::max(inst.omega, inst.alpha)}};
      } else if (cons_kind == "coloring") {
        if (cons_n < 1 || cons_omega_cap < 1)
          throw CLI::ValidationError("-n/--omega-cap", "required for coloring");
        ColoringInstance inst =
            build_coloring_instance(cons_n, cons_omega_cap, cons_d, cons_k, 2, family_budget);
        doc = make_document(inst.boxes);
        stats = {{"n", inst.n},
                 {"base", {{"d", inst.base_params.d}, {"s", inst.base_params.s}, {"k", inst.base_params.k}}},
                 {"multiplicity", inst.multiplicity},
                 {"omega", inst.omega},
                 {"alpha", inst.alpha.str()},
                 {"chi_lower", inst.chi_lower.str()}};
      } else {
        throw CLI::ValidationError("kind", "expected piercing | ramsey | coloring");
      }
      em.emit(cons_out, dump_json(document_to_json(doc)));
      std::cout << dump_json(stats);
    } else if (*dnc_cmd) {
      em.command = "dnc " + dnc_kind;
      em.note_input(dnc_in);
      std::vector<Box> boxes = load_document(dnc_in).to_boxes();
      Json j;
      if (dnc_kind == "pierce") {
        DncPierceResult res = dnc_pierce(boxes, budgets);
        j = {{"nu", res.nu},
             {"points", res.points.size()},
             {"bound", res.bound.str()},
             {"balanced", res.balanced}};
        Json pts = Json::array();
        for (const auto& p : res.points) {
          Json jp = Json::array();
          for (const Rat& c : p) jp.push_back(rat_str(c));
          pts.push_back(std::move(jp));
        }
        j["witness"] = std::move(pts);
      } else if (dnc_kind == "color") {
        DncColorResult res = dnc_color(boxes, budgets);
        j = {{"omega", res.omega},
             {"colors", res.colors},
             {"bound", res.bound.str()},
             {"balanced", res.balanced},
             {"witness", res.coloring}};
      } else {
        throw CLI::ValidationError("kind", "expected pierce | color");
      }
      em.report(j, dnc_out);
    } else if (*exp) {
      em.command = "export " + exp_kind;
      em.note_input(exp_in);
      FamilyDocument doc = load_document(exp_in);
      if (exp_kind == "dimacs") {
        em.emit(exp_out, export_dimacs(graph_of(doc)));
      } else if (exp_kind == "family") {
        if (exp_form == "boxes" && doc.kind == FamilyDocument::Kind::Blocks)
          doc = make_document(doc.to_boxes());
        else if (exp_form == "blocks" && doc.kind != FamilyDocument::Kind::Blocks)
          throw DomainError("export family: cannot lift generic boxes to blocks");
        em.emit(exp_out, dump_json(document_to_json(doc)));
      } else {
        throw CLI::ValidationError("kind", "expected dimacs | family");
      }
    } else if (*ver) {
      em.command = "verify";
      em.note_input(ver_in);
      VerifyReport rep = verify_suite(load_document(ver_in), budgets);
      Json j = {{"all_pass", rep.all_pass()}, {"checks", rep.to_json()}};
      em.report(j, ver_out);
      if (!rep.all_pass()) return 3;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
