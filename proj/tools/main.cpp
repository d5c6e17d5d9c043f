// longcycle: command-line front end for the core library.
//
// Exit status: 0 verified/completed, 1 counterexample (witness on stdout),
// 2 usage or domain error, 3 oracle budget exceeded.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "longcycle/longcycle.hpp"

using namespace longcycle;

namespace {

enum Exit { kOk = 0, kCounterexample = 1, kUsage = 2, kBudget = 3 };

void print(const json& j) { std::cout << j.dump() << '\n'; }

json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"graph", emit_graph6(g)}, {"n", g.order()}, {"edge_count", g.edge_count()}, {"edges", edges}};
}

struct Args {
  std::string kind;
  std::string g6;
  std::string file;
  std::string out;
  std::string constraint;
  std::string target = "snk";
  std::string mode = "standard";
  std::string h;
  int n = 0;
  int k = 0;
  int u = -1;
  int v = -1;
  int ell = 0;
  int t = 0;
  int t1 = 0;
  int t2 = 0;
  int jobs = 0;
  int count = 200;
  double a = 0;
  double b = 0;
  double c = 0;
  double muref = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  std::uint64_t oracle_budget = 100'000'000;
  bool g6out = false;
  bool plus = false;
  bool enumerate = false;
  bool all_records = false;
};

SearchBudget oracle(const Args& a) { return SearchBudget{a.oracle_budget}; }

int cmd_construct(const Args& a) {
  const Graph g = a.kind == "snk" ? construct_snk(a.n, a.k) : construct_snk_plus(a.n, a.k);
  if (a.g6out) {
    std::cout << emit_graph6(g) << '\n';
  } else {
    json j = graph_json(g);
    j["k"] = a.k;
    j["kind"] = a.kind;
    print(j);
  }
  return kOk;
}

int cmd_mu(const Args& a) {
  std::vector<Graph> graphs;
  if (!a.g6.empty()) {
    graphs.push_back(parse_graph6(a.g6));
  } else if (!a.file.empty()) {
    graphs = read_graph6_file(a.file);
  } else {
    graphs = read_graph6(std::cin);
  }
  for (const Graph& g : graphs) {
    const SpectralResult r = spectral_radius(g);
    print({{"graph", emit_graph6(g)}, {"mu", r.mu}, {"iterations", r.iterations}, {"residual", r.residual}});
  }
  return kOk;
}

int cmd_certify(const Args& a) {
  const Graph g = parse_graph6(a.g6);
  json j = quotient_certificate(g, a.a, a.b, a.c, a.muref);
  j["graph"] = a.g6;
  j["mu"] = spectral_radius(g).mu;
  print(j);
  return kOk;
}

int cmd_transform(const Args& a) {
  const Graph g = parse_graph6(a.g6);
  if (a.kind == "step") {
    if (a.u < 0 || a.v < 0) throw DomainError("transform step needs -u and -v");
    auto [next, step] = lemma6_step(g, a.u, a.v, oracle(a));
    json j = step;
    j["graph"] = emit_graph6(next);
    print(j);
    return step.invariants_hold() ? kOk : kCounterexample;
  }
  const TransformTrace trace = reduce_to_fixpoint(g, oracle(a));
  write_trace_jsonl(std::cout, trace);
  for (const auto& s : trace.steps)
    if (!s.invariants_hold()) return kCounterexample;
  return kOk;
}

int cmd_circumference(const Args& a) {
  const Graph g = parse_graph6(a.g6);
  const auto c = circumference(g, oracle(a));
  json j = {{"graph", a.g6}, {"circumference", c ? c->length() : 0}};
  j["cycle"] = c ? json(c->vertices) : json(nullptr);
  print(j);
  return kOk;
}

int fact_exit(const FactResult& r) { return r.verdict == FactVerdict::Counterexample ? kCounterexample : kOk; }

int cmd_verify_fact(const Args& a) {
  const std::string& which = a.kind;
  if (which == "eg" || which == "f1" || which == "f2" || which == "f4") {
    const Graph g = parse_graph6(a.g6);
    FactKind kind = FactKind::ErdosGallai;
    if (which == "f1") kind = FactKind::PathSnk;
    if (which == "f2") kind = FactKind::PathSnkPlus;
    if (which == "f4") kind = FactKind::CliqueEnds;
    const FactResult r = check_fact(g, kind, {.k = a.k, .ell = a.ell, .plus = a.plus}, oracle(a));
    json j = r;
    j["fact"] = which;
    j["graph"] = a.g6;
    print(j);
    return fact_exit(r);
  }
  if (which == "lemma5") {
    const EndsInMode mode = a.mode == "remark" ? EndsInMode::Remark : EndsInMode::Standard;
    if (a.mode != "remark" && a.mode != "standard") throw DomainError("--mode must be standard or remark");
    Rng rng(a.seed);
    int found = 0;
    for (int i = 0; i < a.count; ++i) {
      const EndsInInstance inst = generate_ends_in_instance(rng, mode);
      const auto p = path_with_ends_in(inst.graph, inst.a, inst.b, 2 * inst.k + 1, inst.k, oracle(a));
      if (!p) {
        print({{"verdict", "Counterexample"}, {"graph", emit_graph6(inst.graph)}, {"k", inst.k}, {"t", inst.t}});
        return kCounterexample;
      }
      ++found;
    }
    print({{"verdict", "Verified"}, {"instances", found}, {"seed", a.seed}, {"mode", a.mode}});
    return kOk;
  }
  if (which == "lemma8") {
    std::optional<Graph> h;
    if (!a.h.empty()) h = parse_graph6(a.h);
    const int t2 = a.t2 > 0 ? a.t2 : a.t - a.t1;
    const JoinComparison r = lemma8_compare(h, a.t, a.t1, t2);
    json j = r;
    j["t"] = a.t;
    j["t1"] = a.t1;
    j["t2"] = t2;
    print(j);
    return r.outcome == Comparison::NotStrict ? kCounterexample : kOk;
  }
  if (which == "claims") {
    const Graph g = parse_graph6(a.g6);
    const bool applies = is_fixpoint(g);
    bool broken = false;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (a.u >= 0 && u != a.u) continue;
      const ClaimReport r = claim_checks(g, u, a.k, oracle(a));
      json j = r;
      j["fixpoint"] = applies;
      print(j);
      const bool structural = r.clique_su && r.dominated_tu && r.no_tu_yu_edges;
      const bool bounds = !r.long_cycle_free || (r.su_le_2k && r.min_le_k && r.deg_bound);
      if (applies && !(structural && bounds)) broken = true;
    }
    return broken ? kCounterexample : kOk;
  }
  if (which == "perron") {
    const Graph g = parse_graph6(a.g6);
    const auto violations = perron_monotonicity_check(g);
    print({{"graph", a.g6}, {"violations", violations}});
    return violations.empty() ? kOk : kCounterexample;
  }
  throw DomainError("unknown fact '" + which + "'");
}

int cmd_scan(const Args& a) {
  const CycleConstraint constraint = CycleConstraint::parse(a.constraint);
  const TargetKind target = parse_target(a.target);
  if (a.enumerate == !a.g6.empty()) throw DomainError("scan needs exactly one of --g6 PATH or --enumerate");
  GraphStream source = a.enumerate ? enumeration_stream(a.n) : corpus_stream(read_graph6_file(a.g6));
  ScanOptions options;
  options.jobs = a.jobs;
  options.budget = oracle(a);
  options.keep_free_records = a.all_records;
  const ScanReport report = scan_extremal(source, a.n, a.k, constraint, target, options);

  if (a.out.empty()) {
    write_scan_jsonl(std::cout, report);
  } else {
    std::ofstream out(a.out);
    if (!out) throw DomainError("cannot write " + a.out);
    write_scan_jsonl(out, report);
  }
  if (!report.complete) return kBudget;
  // Below n >= 13k^2 the verdict is observational only.
  if (report.verdict == ScanVerdict::TargetBeaten && a.n >= 13 * a.k * a.k) {
    if (!a.out.empty()) print(report.maximizers.front());
    return kCounterexample;
  }
  return kOk;
}

int cmd_search(const Args& a) {
  const CycleConstraint constraint = CycleConstraint::parse(a.constraint);
  const ClimbResult r = hillclimb_search(a.n, a.k, constraint, a.seed, a.budget, oracle(a));
  print(r);
  const bool theorem_applies = a.n >= 13 * a.k * a.k && constraint == CycleConstraint::at_least(2 * a.k + 1);
  if (theorem_applies && r.best.mu > r.mu_target + 1e-9) return kCounterexample;
  return kOk;
}

int cmd_audit(const Args& a) {
  print(classify_against_theorem(parse_graph6(a.g6), a.k, oracle(a)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral radius and long cycles: constructions, certificates and exhaustive checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "longcycle 0.1.0");
  Args args;
  std::function<int(const Args&)> handler;
  auto bind = [&](CLI::App* sub, int (*fn)(const Args&)) {
    sub->callback([&handler, fn] { handler = fn; });
    sub->add_option("--oracle-budget", args.oracle_budget, "Node budget for each path/cycle search")
        ->capture_default_str();
  };

  auto* construct = app.add_subcommand("construct", "Build S_{n,k} or S+_{n,k}");
  construct->add_option("kind", args.kind)->required()->check(CLI::IsMember({"snk", "snkp"}));
  construct->add_option("-n", args.n)->required();
  construct->add_option("-k", args.k)->required();
  construct->add_flag("--g6out", args.g6out, "Print graph6 only");
  bind(construct, cmd_construct);

  auto* mu = app.add_subcommand("mu", "Spectral radius (reads graph6 from stdin without --g6/--file)");
  auto* mu_g6 = mu->add_option("--g6", args.g6);
  mu->add_option("--file", args.file)->excludes(mu_g6);
  bind(mu, cmd_mu);

  auto* certify = app.add_subcommand("certify", "Column-sum certificate for A^2 - aA - bI - c(A - muref I)");
  certify->add_option("--a", args.a)->required();
  certify->add_option("--b", args.b)->required();
  auto* opt_c = certify->add_option("--c", args.c);
  certify->add_option("--muref", args.muref)->needs(opt_c);
  certify->add_option("--g6", args.g6)->required();
  bind(certify, cmd_certify);

  auto* transform = app.add_subcommand("transform", "Move-neighbour step or reduction to a fixpoint");
  transform->add_option("kind", args.kind)->required()->check(CLI::IsMember({"step", "fixpoint"}));
  transform->add_option("--g6", args.g6)->required();
  transform->add_option("-u", args.u);
  transform->add_option("-v", args.v);
  bind(transform, cmd_transform);

  auto* circ = app.add_subcommand("circumference", "Longest cycle");
  circ->add_option("--g6", args.g6)->required();
  bind(circ, cmd_circumference);

  auto* fact = app.add_subcommand("verify-fact", "Check one fact or lemma on a graph or generated instances");
  fact->add_option("fact", args.kind)
      ->required()
      ->check(CLI::IsMember({"eg", "f1", "f2", "f4", "lemma5", "lemma8", "claims", "perron"}));
  fact->add_option("--g6", args.g6);
  fact->add_option("-k", args.k);
  fact->add_option("-l,--ell", args.ell);
  fact->add_option("-u", args.u, "claims: only this vertex");
  fact->add_flag("--plus", args.plus, "f4: embedded S+_{n,k}");
  fact->add_option("--seed", args.seed)->capture_default_str();
  fact->add_option("--count", args.count, "lemma5: instances")->capture_default_str();
  fact->add_option("--mode", args.mode, "lemma5: standard or remark")->capture_default_str();
  fact->add_option("--t", args.t, "lemma8: total pendant-star order");
  fact->add_option("--t1", args.t1);
  fact->add_option("--t2", args.t2);
  fact->add_option("--hg6", args.h, "lemma8: graph6 of H (omit for empty H)");
  bind(fact, cmd_verify_fact);

  auto* scan = app.add_subcommand("scan", "Extremal scan over a graph6 corpus or all labeled graphs");
  scan->add_option("-n", args.n)->required();
  scan->add_option("-k", args.k)->required();
  scan->add_option("--constraint", args.constraint, "atleast:L, exactly:L or window:LO:HI")->required();
  scan->add_option("--target", args.target)->check(CLI::IsMember({"snk", "snkp"}))->capture_default_str();
  auto* scan_g6 = scan->add_option("--g6", args.g6, "graph6 corpus file");
  scan->add_flag("--enumerate", args.enumerate)->excludes(scan_g6);
  scan->add_option("--jobs", args.jobs, "Worker threads (0: all cores)")->capture_default_str();
  scan->add_option("--out", args.out, "JSON-lines output file");
  scan->add_flag("--all-records", args.all_records, "Write every free graph, not just the maximizers");
  bind(scan, cmd_scan);

  auto* search = app.add_subcommand("search", "Seeded hill climb for a large spectral radius");
  search->add_option("-n", args.n)->required();
  search->add_option("-k", args.k)->required();
  search->add_option("--constraint", args.constraint)->required();
  search->add_option("--seed", args.seed)->required();
  search->add_option("--budget", args.budget, "Candidate evaluations")->required();
  bind(search, cmd_search);

  auto* audit = app.add_subcommand("audit", "Compare one graph against the long-cycle implications");
  audit->add_option("--g6", args.g6)->required();
  audit->add_option("-k", args.k)->required();
  bind(audit, cmd_audit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    return handler(args);
  } catch (const BudgetExceeded& e) {
    print({{"error", e.what()}, {"best_so_far", e.best_so_far()}, {"expansions", e.expansions()}});
    std::cerr << "longcycle: " << e.what() << '\n';
    return kBudget;
  } catch (const ConvergenceError& e) {
    std::cerr << "longcycle: " << e.what() << '\n';
    return kBudget;
  } catch (const DomainError& e) {
    std::cerr << "longcycle: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "longcycle: " << e.what() << '\n';
    return kUsage;
  }
}
