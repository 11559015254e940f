#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eeh/errors.hpp"
#include "eeh/gadgets.hpp"
#include "eeh/io.hpp"
#include "eeh/reduction.hpp"
#include "eeh/search.hpp"
#include "eeh/sweep.hpp"

namespace eeh::cli {

namespace {

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw FormatError(path + ": cannot write file");
  f << j.dump(2) << '\n';
}

std::set<Simplex> parse_edges(const std::vector<std::string>& specs) {
  std::set<Simplex> out;
  for (const auto& spec : specs) {
    std::vector<std::string> labels;
    std::stringstream ss(spec);
    for (std::string tok; std::getline(ss, tok, ',');) labels.push_back(tok);
    Simplex e(labels);
    if (e.dimension() != 1) throw FormatError("--forbid: '" + spec + "' is not an edge");
    out.insert(std::move(e));
  }
  return out;
}

std::string f_vector_text(const Complex& k) {
  std::string s = "(";
  const auto f = k.f_vector();
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + ")";
}

Json f_vector_json(const Complex& k) {
  Json j = Json::array();
  for (auto n : k.f_vector()) j.push_back(n);
  return j;
}

struct GadgetArgs {
  std::string kind = "port";
  int m = 1;
  int l = 0;
  std::string prefix;
  std::string ports;
  std::string out;
};

int cmd_gadget(const GadgetArgs& a, std::ostream& out) {
  Complex k;
  std::optional<GadgetHandle> handle;
  if (a.kind == "dunce") {
    k = dunce_hat();
  } else if (a.kind == "modified") {
    k = modified_dunce_hat();
  } else {
    handle = gadget(a.m, a.l, a.prefix);
    k = handle->complex;
  }
  const std::string name =
      a.kind == "port" ? "gadget(" + std::to_string(a.m) + "," + std::to_string(a.l) + ")" : a.kind;
  const auto j = complex_to_json(k, name);
  if (a.out.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_json_file(a.out, j);
  }
  if (!a.ports.empty()) {
    if (!handle) throw FormatError("--ports: only port gadgets have ports");
    write_json_file(a.ports, port_map_to_json(*handle));
  }
  return kYes;
}

struct ErasableArgs {
  std::string complex;
  std::vector<std::string> forbid;
  bool json = false;
};

int cmd_check_erasable(const ErasableArgs& a, std::ostream& out) {
  const auto k = complex_from_json(read_json_file(a.complex));
  const auto g = greedy_erase(k, parse_edges(a.forbid));
  const bool ok = g.complex.dimension() <= 1;
  if (a.json) {
    Json j = Json::object();
    j["erasable"] = ok;
    j["collapses"] = g.moves.size();
    j["remaining"] = complex_to_json(g.complex);
    out << j.dump(2) << '\n';
  } else {
    out << "erasable: " << (ok ? "yes" : "no") << '\n'
        << "greedy 2-collapses: " << g.moves.size() << '\n'
        << "remaining f-vector: " << f_vector_text(g.complex) << '\n';
  }
  return ok ? kYes : kNo;
}

struct HeightArgs {
  std::string complex;
  int budget = 0;
  bool ordered = false;
  bool unordered = false;
  std::vector<int> dims{2, 3};
  int max_dim = 3;
  std::string strategy = "dfs";
  std::string cert;
  std::uint64_t node_limit = 5'000'000;
  std::vector<std::string> forbid;
  bool minimal = false;
  bool json = false;
};

int cmd_height(const HeightArgs& a, std::ostream& out) {
  const auto k = complex_from_json(read_json_file(a.complex));
  SearchConfig cfg;
  cfg.budget = a.budget;
  cfg.ordered = a.ordered;
  cfg.expansion_dims = {a.dims.begin(), a.dims.end()};
  cfg.max_dim = a.max_dim;
  cfg.strategy = a.strategy == "prescribed" ? Strategy::prescribed : Strategy::interleaved_dfs;
  cfg.node_limit = a.node_limit;
  cfg.forbidden_edges = parse_edges(a.forbid);

  HeightResult r;
  int budget = a.budget;
  if (a.minimal) {
    const auto m = minimal_height(k, cfg, a.budget);
    r = m.result;
    if (m.height) budget = *m.height;
  } else {
    r = expansion_height(k, cfg);
  }
  if (!a.cert.empty() && r.decided == Verdict::yes) {
    write_json_file(a.cert, certificate_to_json({budget, r.certificate}));
  }
  if (a.json) {
    Json j = Json::object();
    j["verdict"] = to_string(r.decided);
    j["budget"] = budget;
    j["ordered"] = a.ordered;
    j["strategy"] = a.strategy;
    j["expansions_used"] = r.expansions_used;
    j["nodes_explored"] = r.nodes_explored;
    if (r.decided == Verdict::yes) j["certificate"] = certificate_to_json({budget, r.certificate});
    out << j.dump(2) << '\n';
  } else {
    out << "verdict: " << to_string(r.decided) << '\n'
        << "budget: " << budget << '\n'
        << "search: " << (a.ordered ? "ordered" : "unordered") << ", " << a.strategy << '\n'
        << "expansions used: " << r.expansions_used << '\n'
        << "nodes explored: " << r.nodes_explored << '\n';
    if (r.decided == Verdict::yes) out << "certificate moves: " << r.certificate.size() << '\n';
  }
  switch (r.decided) {
    case Verdict::yes:
      return kYes;
    case Verdict::no_within_budget:
      return kNo;
    case Verdict::exhausted:
      return kExhausted;
  }
  return kError;
}

struct VerifyArgs {
  std::string complex;
  std::string cert;
  std::optional<int> budget;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto k = complex_from_json(read_json_file(a.complex));
  const auto c = certificate_from_json(read_json_file(a.cert));
  const int budget = a.budget.value_or(c.budget);
  const auto v = verify_certificate(k, c.moves, budget);
  if (a.json) {
    Json j = Json::object();
    j["accepted"] = v.accepted;
    j["expansions"] = v.expansions;
    j["budget"] = budget;
    if (v.failed_index) j["failed_index"] = *v.failed_index;
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.final_complex) j["final_f_vector"] = f_vector_json(*v.final_complex);
    out << j.dump(2) << '\n';
  } else if (v.accepted) {
    out << "accepted: " << c.moves.size() << " moves, " << v.expansions << " expansions\n";
  } else {
    out << "rejected";
    if (v.failed_index) out << " at move " << *v.failed_index;
    out << ": " << v.reason << '\n';
  }
  return v.accepted ? kYes : kNo;
}

struct InstanceArgs {
  std::string instance;
  std::string out;
  std::string provenance;
  bool json = false;
};

Json report_json(const NormalizationReport& r) {
  Json j = Json::object();
  j["removed_forced_axioms"] = Json(r.removed_forced_axioms);
  j["removed_self_implications"] = Json::array();
  for (const auto& imp : r.removed_self_implications) j["removed_self_implications"].push_back(imp.to_string());
  j["budget_delta"] = r.budget_delta;
  j["infeasible"] = r.infeasible;
  return j;
}

int cmd_solve(const InstanceArgs& a, std::ostream& out) {
  const auto inst = instance_from_json(read_json_file(a.instance));
  const auto sol = min_axiom_set(inst);
  const bool ok = sol.size <= inst.budget;
  if (a.json) {
    Json j = Json::object();
    j["minimum"] = sol.size;
    j["witness"] = Json(std::vector<std::string>(sol.witness.begin(), sol.witness.end()));
    j["budget"] = inst.budget;
    j["within_budget"] = ok;
    out << j.dump(2) << '\n';
  } else {
    out << "minimum axiom set: " << sol.size << " {";
    bool first = true;
    for (const auto& s : sol.witness) out << (std::exchange(first, false) ? "" : ",") << s;
    out << "}\nwithin budget " << inst.budget << ": " << (ok ? "yes" : "no") << '\n';
  }
  return ok ? kYes : kNo;
}

int cmd_normalize(const InstanceArgs& a, std::ostream& out) {
  const auto inst = instance_from_json(read_json_file(a.instance));
  const auto [norm, report] = normalize(inst);
  Json j = Json::object();
  j["instance"] = instance_to_json(norm);
  j["report"] = report_json(report);
  if (a.out.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_json_file(a.out, j["instance"]);
    out << (a.json ? j["report"].dump(2) : "normalized instance written to " + a.out) << '\n';
  }
  return report.infeasible ? kNo : kYes;
}

int cmd_reduce(const InstanceArgs& a, std::ostream& out, std::ostream& err) {
  const auto inst = instance_from_json(read_json_file(a.instance));
  ReductionOutput r;
  try {
    r = assemble(inst);
  } catch (const InfeasibleInstance& e) {
    err << "infeasible: " << e.what() << '\n';
    return kNo;
  }
  const auto j = complex_to_json(r.complex, "reduction");
  if (!a.provenance.empty()) {
    auto p = provenance_to_json(r);
    p["budget"] = r.budget();
    write_json_file(a.provenance, p);
  }
  if (a.out.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_json_file(a.out, j);
    out << "complex " << f_vector_text(r.complex) << " with budget " << r.budget() << " written to "
        << a.out << '\n';
  }
  return kYes;
}

struct SweepArgs {
  std::uint64_t seed = 1;
  int random = 100;
  int max_sentences = 3;
  int max_implications = 4;
  bool prescribed = false;
  unsigned threads = 0;
  std::uint64_t node_limit = 5'000'000;
  bool json = false;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  SweepOptions o;
  o.seed = a.seed;
  o.random_count = a.random;
  o.max_sentences = a.max_sentences;
  o.max_implications = a.max_implications;
  o.prescribed = a.prescribed;
  o.threads = a.threads;
  o.node_limit = a.node_limit;
  const auto rows = run_sweep(o);
  std::size_t failed = 0;
  bool exhausted = false;
  Json jrows = Json::array();
  std::ostringstream table;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    failed += !r.pass();
    exhausted |= r.ordered.exhausted || r.unordered.exhausted || (r.prescribed && r.prescribed->exhausted);
    std::string imps;
    for (const auto& imp : r.instance.implications) imps += (imps.empty() ? "" : " ") + imp.to_string();
    if (a.json) {
      Json j = Json::object();
      j["origin"] = r.origin;
      j["instance"] = instance_to_json(r.instance);
      j["oracle"] = r.oracle;
      j["ordered"] = r.ordered.detail;
      j["unordered"] = r.unordered.detail;
      if (r.prescribed) j["prescribed"] = r.prescribed->detail;
      j["pass"] = r.pass();
      jrows.push_back(std::move(j));
    } else {
      table << (r.pass() ? "PASS " : "FAIL ") << i << ' ' << r.origin << " k=" << r.oracle
            << " ordered=" << r.ordered.detail << " unordered=" << r.unordered.detail;
      if (r.prescribed) table << " prescribed=" << r.prescribed->detail;
      table << " | " << imps << '\n';
    }
  }
  if (a.json) {
    Json j = Json::object();
    j["rows"] = std::move(jrows);
    j["passed"] = rows.size() - failed;
    j["failed"] = failed;
    out << j.dump(2) << '\n';
  } else {
    out << table.str() << "instances: " << rows.size() << ", passed: " << rows.size() - failed
        << ", failed: " << failed << '\n';
  }
  if (exhausted) return kExhausted;
  return failed == 0 ? kYes : kNo;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple-homotopy moves, expansion-height search and the Axiom Set reduction", "eeh"};
  app.require_subcommand(1);

  GadgetArgs ga;
  auto* gadget_cmd = app.add_subcommand("gadget", "Emit a fixture or port gadget as complex JSON");
  gadget_cmd->add_option("--kind", ga.kind, "dunce, modified or port")
      ->check(CLI::IsMember({"dunce", "modified", "port"}));
  gadget_cmd->add_option("--m", ga.m, "free ports")->check(CLI::PositiveNumber);
  gadget_cmd->add_option("--l", ga.l, "interior ports")->check(CLI::NonNegativeNumber);
  gadget_cmd->add_option("--prefix", ga.prefix, "label prefix");
  gadget_cmd->add_option("--ports", ga.ports, "write the port map JSON here");
  gadget_cmd->add_option("--out", ga.out, "write the complex here instead of stdout");

  ErasableArgs ea;
  auto* erasable_cmd = app.add_subcommand("check-erasable", "Greedy 2-collapse erasability");
  erasable_cmd->add_option("complex", ea.complex)->required();
  erasable_cmd->add_option("--forbid", ea.forbid, "edge u,v barred as a free face (repeatable)");
  erasable_cmd->add_flag("--json", ea.json);

  HeightArgs ha;
  auto* height_cmd = app.add_subcommand("height", "Search for a certificate within an expansion budget");
  height_cmd->add_option("complex", ha.complex)->required();
  height_cmd->add_option("--max-expansions", ha.budget, "expansion budget")->check(CLI::NonNegativeNumber);
  auto* ordered_flag = height_cmd->add_flag("--ordered", ha.ordered, "expansions before collapses");
  auto* unordered_flag = height_cmd->add_flag("--unordered", ha.unordered, "interleaved moves (default)");
  ordered_flag->excludes(unordered_flag);
  height_cmd->add_option("--dims", ha.dims, "expansion dimensions")->delimiter(',');
  height_cmd->add_option("--max-dim", ha.max_dim, "largest face dimension");
  height_cmd->add_option("--strategy", ha.strategy)->check(CLI::IsMember({"dfs", "prescribed"}));
  height_cmd->add_option("--cert", ha.cert, "write the certificate JSON here");
  height_cmd->add_option("--node-limit", ha.node_limit, "search nodes before giving up");
  height_cmd->add_option("--forbid", ha.forbid, "edge u,v barred as a free 2-collapse face");
  height_cmd->add_flag("--minimal", ha.minimal, "least budget up to --max-expansions");
  height_cmd->add_flag("--json", ha.json);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Replay a certificate");
  verify_cmd->add_option("complex", va.complex)->required();
  verify_cmd->add_option("certificate", va.cert)->required();
  verify_cmd->add_option("--budget", va.budget, "override the certificate's budget");
  verify_cmd->add_flag("--json", va.json);

  InstanceArgs sa;
  auto* solve_cmd = app.add_subcommand("axiomset-solve", "Brute-force minimum axiom set");
  solve_cmd->add_option("instance", sa.instance)->required();
  solve_cmd->add_flag("--json", sa.json);

  InstanceArgs na;
  auto* normalize_cmd = app.add_subcommand("axiomset-normalize", "Remove forced axioms and self-implications");
  normalize_cmd->add_option("instance", na.instance)->required();
  normalize_cmd->add_option("--out", na.out, "write the normalized instance here");
  normalize_cmd->add_flag("--json", na.json);

  InstanceArgs ra;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the complex of an Axiom Set instance");
  reduce_cmd->add_option("instance", ra.instance)->required();
  reduce_cmd->add_option("--out", ra.out, "write the complex here instead of stdout");
  reduce_cmd->add_option("--provenance", ra.provenance, "write gadget provenance JSON here");

  SweepArgs wa;
  auto* sweep_cmd = app.add_subcommand("sweep", "Compare axiom-set minima with expansion heights");
  sweep_cmd->add_option("--seed", wa.seed, "seed for the random instances");
  sweep_cmd->add_option("--random", wa.random, "random 4-sentence instances")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--max-sentences", wa.max_sentences)->check(CLI::Range(1, 4));
  sweep_cmd->add_option("--max-implications", wa.max_implications)->check(CLI::Range(1, 6));
  sweep_cmd->add_flag("--prescribed", wa.prescribed, "also run the prescribed strategy");
  sweep_cmd->add_option("--threads", wa.threads, "worker threads (0 = all cores)");
  sweep_cmd->add_option("--node-limit", wa.node_limit);
  sweep_cmd->add_flag("--json", wa.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  try {
    if (*gadget_cmd) return cmd_gadget(ga, out);
    if (*erasable_cmd) return cmd_check_erasable(ea, out);
    if (*height_cmd) return cmd_height(ha, out);
    if (*verify_cmd) return cmd_verify(va, out);
    if (*solve_cmd) return cmd_solve(sa, out);
    if (*normalize_cmd) return cmd_normalize(na, out);
    if (*reduce_cmd) return cmd_reduce(ra, out, err);
    if (*sweep_cmd) return cmd_sweep(wa, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace eeh::cli
