#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lexfirst/coloring.hpp"
#include "lexfirst/corpus.hpp"
#include "lexfirst/errors.hpp"
#include "lexfirst/experiments.hpp"
#include "lexfirst/gadgets.hpp"
#include "lexfirst/graph_io.hpp"
#include "lexfirst/pvariants.hpp"
#include "lexfirst/reductions.hpp"
#include "lexfirst/sat.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace lexfirst;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string in;
  std::string out;
  std::string report;
  std::uint64_t seed = 1;
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> z_max;
  std::optional<std::size_t> count;
  std::optional<std::uint64_t> cap;
  int k = 4;
  std::string strategy = "guided";
  std::string kind;
  std::string tail = "standard";
  std::string wide = "refuse";
  std::vector<std::string> d;
  std::string family = "sat";
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what(), 0);
  }
}

SigmaOptions sigma_options(const Options& o) {
  const auto tail = parse_tail_order(o.tail);
  if (!tail) throw UsageError("unknown tail order: " + o.tail);
  return SigmaOptions{*tail};
}

CnfFormula read_formula(const Options& o) {
  const CnfFormula f = parse_dimacs(read_input(o.in));
  return normalize_to_3cnf(f, o.wide == "split" ? WideClauseMode::split : WideClauseMode::refuse);
}

int run_reduce(const std::string& which, const Options& o) {
  if (which == "rho4") {
    const RhoOutput r = rho4(parse_graph(read_input(o.in)).graph);
    write_output(o.out, dump_graph(r.graph, r.meta()));
  } else if (which == "sigma") {
    const SigmaOutput s = sigma(read_formula(o), sigma_options(o));
    write_output(o.out, dump_graph(s.graph, s.meta()));
  } else {
    const PipelineOutput p = pipeline_t(read_formula(o), sigma_options(o));
    write_output(o.out, dump_graph(p.rho.graph, p.meta()));
  }
  return kOk;
}

int run_solve(const std::string& which, const Options& o) {
  json result;
  if (which == "lf-color") {
    const OrderedGraph g = parse_graph(read_input(o.in)).graph;
    LfOptions lf;
    if (o.strategy == "chronological") {
      lf.strategy = SearchStrategy::chronological;
    } else if (o.strategy == "forward-checking") {
      lf.strategy = SearchStrategy::forward_checking;
    } else if (o.strategy == "guided") {
      lf.strategy = SearchStrategy::guided;
    } else {
      throw UsageError("unknown strategy: " + o.strategy);
    }
    const LfColorResult r = lf_coloring(g, o.k, lf);
    result = json{{"k", o.k}, {"n", g.vertex_count()}, {"colored", r.colored()}, {"lf", r.str()},
                  {"nodes_expanded", r.nodes_expanded}};
  } else if (which == "lf-sat") {
    const CnfFormula f = parse_dimacs(read_input(o.in));
    const auto a = lf_sat_assignment(f);
    result = json{{"n", f.variable_count()}, {"satisfiable", a.has_value()},
                  {"lf", a ? a->str() : "UNSAT"}};
  } else {
    const json doc = parse_json(read_input(o.in));
    const auto opt = [](const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); };
    if (which == "p-sat") {
      const PSatInstance inst = psat_from_json(doc);
      result = json{{"problem", which}, {"member", psat_member(inst)}, {"lf", opt(psat_lf(inst))}};
    } else if (which == "p-clique") {
      const PCliqueInstance inst = pclique_from_json(doc);
      result = json{{"problem", which}, {"member", pclique_member(inst)}, {"lf", opt(pclique_lf(inst))}};
    } else {
      const PKnapsackInstance inst = pknapsack_from_json(doc);
      const auto lf = o.cap ? pknapsack_lf(inst, *o.cap) : pknapsack_lf(inst);
      result = json{{"problem", which}, {"member", pknapsack_member(inst)}, {"lf", opt(lf)}};
    }
  }
  write_output(o.out, result.dump(2) + "\n");
  return kOk;
}

int run_decide(const Options& o) {
  const CnfFormula f = parse_dimacs(read_input(o.in));
  write_output(o.out, decide_odd_min_sat(f) == OddMinSat::member ? "member\n" : "nonmember\n");
  return kOk;
}

int run_gadget(const Options& o) {
  const auto kind = parse_gadget_kind(o.kind);
  if (!kind) throw UsageError("unknown gadget kind: " + o.kind);
  const GadgetSpec spec = load_gadget(*kind);
  const GadgetVerdict verdict = o.cap ? verify_gadget(spec, *o.cap) : verify_gadget(spec);
  const std::string text = canonical_dump(verdict_to_json(spec, verdict));
  write_output(o.report.empty() ? o.out : o.report, text);
  if (!o.report.empty()) std::cout << to_string(*kind) << ": " << (verdict.pass ? "pass" : "FAIL") << "\n";
  return verdict.pass ? kOk : kFailed;
}

int run_gen(const std::string& which, const Options& o) {
  const std::size_t count = o.count.value_or(10);
  json docs = json::array();
  std::vector<std::pair<std::string, std::string>> files;
  if (which == "cnf") {
    for (const auto& f : gen_cnf_corpus(count, o.n_max.value_or(4), o.z_max.value_or(4), o.seed)) {
      docs.push_back(f.to_dimacs());
      files.emplace_back(instance_id("cnf", files.size()) + ".cnf", f.to_dimacs());
    }
  } else {
    for (const auto& g : gen_planar_corpus(count, o.n_max.value_or(7), o.seed)) {
      docs.push_back(graph_to_json(g));
      files.emplace_back(instance_id("planar", files.size()) + ".json", dump_graph(g));
    }
  }
  if (o.out.empty() || o.out == "-") {
    std::cout << docs.dump(2) << "\n";
    return kOk;
  }
  fs::create_directories(o.out);
  for (const auto& [name, text] : files) write_output((fs::path(o.out) / name).string(), text);
  return kOk;
}

void summarize(const std::string& name, const json& r) {
  std::cout << name << ": " << r["cases"].get<std::size_t>() << " cases, " << r["agreements"].get<std::size_t>()
            << " agreements, " << r["hard_failures"].size() << " hard failures, "
            << (r["passed"].get<bool>() ? "passed" : "FAILED") << (r["gated"].get<bool>() ? "" : " (agreement not gated)")
            << "\n";
}

int emit_report(const Options& o, const ExperimentReport& report) {
  const json j = report.to_json();
  if (o.report.empty()) {
    std::cout << canonical_dump(j);
  } else {
    write_output(o.report, canonical_dump(j));
    summarize(report.id, j);
  }
  return report.passed() ? kOk : kFailed;
}

std::vector<DChoice> d_choices(const Options& o) {
  if (o.d.empty()) return {DChoice::all, DChoice::prefix1};
  std::vector<DChoice> out;
  for (const auto& text : o.d) {
    const auto d = parse_d_choice(text);
    if (!d) throw UsageError("unknown D choice: " + text);
    out.push_back(*d);
  }
  return out;
}

int run_verify(const std::string& which, const Options& o) {
  if (which == "eq1") {
    Eq1Options opt;
    if (o.cap) opt.scan_cap = *o.cap;
    return emit_report(o, verify_eq1(eq1_corpus(o.seed, o.count.value_or(200), o.n_max.value_or(7)), o.seed, opt));
  }
  if (which == "thm23") {
    const auto corpus = pipeline_corpus(o.seed, o.count.value_or(100), o.n_max.value_or(4), o.z_max.value_or(4));
    ExperimentReport r = verify_thm23(corpus, o.seed, sigma_options(o));
    attach_sigma_properties(r, verify_sigma_properties(corpus, o.seed, sigma_options(o),
                                                       o.cap.value_or(std::uint64_t{1} << 16)));
    return emit_report(o, r);
  }
  if (which == "thm35") {
    Thm35Options opt;
    opt.d = d_choices(o);
    if (o.n_max) opt.n_max = *o.n_max;
    if (o.count) opt.count = *o.count;
    if (o.cap) opt.cap = *o.cap;
    return emit_report(o, verify_theorem35(o.seed, opt));
  }
  if (which == "selfred") {
    if (o.family != "sat") throw UsageError("only the sat family has a self-reduction: " + o.family);
    SelfredOptions opt;
    if (o.n_max) opt.check_n_max = opt.prefix_n_max = *o.n_max;
    if (o.count) opt.check_count = opt.prefix_count = *o.count;
    if (o.cap) opt.cap = *o.cap;
    return emit_report(o, verify_selfred(o.seed, opt));
  }
  if (which == "pvariants") {
    PVariantOptions opt;
    if (o.n_max) opt.n_max = *o.n_max;
    if (o.count) opt.count = *o.count;
    return emit_report(o, verify_pvariants(o.seed, opt));
  }
  if (which == "gadgets") return emit_report(o, verify_gadget_suite());
  const json summary = verify_all(o.seed);
  if (o.report.empty()) {
    std::cout << canonical_dump(summary);
  } else {
    write_output(o.report, canonical_dump(summary));
    for (const auto& [name, r] : summary["sections"].items()) summarize(name, r);
  }
  return summary["passed"].get<bool>() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexicographically first solutions: reductions, solvers and verification experiments", "lexfirst"};
  app.require_subcommand(1);
  Options o;

  const auto in_out = [&](CLI::App* cmd) {
    cmd->add_option("--in", o.in, "Input file (default stdin)");
    cmd->add_option("--out", o.out, "Output file (default stdout)");
  };
  const auto corpus_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "Corpus seed");
    cmd->add_option("--n-max", o.n_max, "Largest instance size");
    cmd->add_option("--z-max", o.z_max, "Largest clause count");
    cmd->add_option("--count", o.count, "Number of generated instances");
    cmd->add_option("--cap", o.cap, "Enumeration cap");
  };

  std::string verb, which;
  auto* reduce = app.add_subcommand("reduce", "Build sigma(F), rho4(G) or rho4(sigma(F))");
  for (const char* name : {"sigma", "rho4", "pipeline"}) {
    auto* cmd = reduce->add_subcommand(name);
    in_out(cmd);
    if (std::string(name) != "rho4") {
      cmd->add_option("--tail", o.tail, "Vertex order after the variables")->check(CLI::IsMember({"standard", "palette-last"}));
      cmd->add_option("--wide", o.wide, "Clauses wider than 3")->check(CLI::IsMember({"refuse", "split"}));
    }
  }
  reduce->require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Lexicographically first solutions");
  for (const char* name : {"lf-color", "lf-sat", "p-sat", "p-clique", "p-knapsack"}) {
    auto* cmd = solve->add_subcommand(name);
    in_out(cmd);
    if (std::string(name) == "lf-color") {
      cmd->add_option("--k", o.k, "Number of colors")->check(CLI::Range(1, 16));
      cmd->add_option("--strategy", o.strategy, "chronological, forward-checking or guided");
    }
    if (std::string(name) == "p-knapsack") cmd->add_option("--cap", o.cap, "Largest subset count searched");
  }
  solve->require_subcommand(1);

  auto* decide = app.add_subcommand("decide", "Decision problems");
  in_out(decide->add_subcommand("odd-min-sat"));
  decide->require_subcommand(1);

  auto* gadget = app.add_subcommand("gadget", "Gadget contracts");
  auto* gadget_verify = gadget->add_subcommand("verify", "Exhaustively check a built-in gadget");
  gadget_verify->add_option("--kind", o.kind, "equality, or or crossover")->required();
  gadget_verify->add_option("--report", o.report, "Write the verdict JSON here");
  gadget_verify->add_option("--out", o.out, "Write the verdict JSON here");
  gadget_verify->add_option("--cap", o.cap, "Enumeration cap");
  gadget->require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Seeded corpora");
  for (const char* name : {"cnf", "planar"}) {
    auto* cmd = gen->add_subcommand(name);
    corpus_flags(cmd);
    cmd->add_option("--out", o.out, "Directory for one file per instance (default: JSON array on stdout)");
  }
  gen->require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Verification experiments");
  for (const char* name : {"eq1", "thm23", "thm35", "selfred", "pvariants", "gadgets", "all"}) {
    auto* cmd = verify->add_subcommand(name);
    corpus_flags(cmd);
    cmd->add_option("--report", o.report, "Write the canonical report here");
    if (std::string(name) == "thm23") cmd->add_option("--tail", o.tail, "Vertex order after the variables");
    if (std::string(name) == "thm35") cmd->add_option("--d", o.d, "D choice: all or prefix1 (repeatable)");
    if (std::string(name) == "selfred") cmd->add_option("--family", o.family, "Instance family");
  }
  verify->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* top = app.get_subcommands().front();
  verb = top->get_name();
  which = top->get_subcommands().empty() ? "" : top->get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (verb == "reduce") code = run_reduce(which, o);
    if (verb == "solve") code = run_solve(which, o);
    if (verb == "decide") code = run_decide(o);
    if (verb == "gadget") code = run_gadget(o);
    if (verb == "gen") code = run_gen(which, o);
    if (verb == "verify") code = run_verify(which, o);
  } catch (const ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return kUsage;
  } catch (const UsageError& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kUsage;
  } catch (const RefusalError& ex) {
    std::cerr << "refused: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kFailed;
  }
  if (verb == "verify") {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << "elapsed " << elapsed.count() << " s\n";
  }
  return code;
}
