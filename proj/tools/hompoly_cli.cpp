#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hompoly/errors.hpp"
#include "hompoly/gadgets.hpp"
#include "hompoly/genfun.hpp"
#include "hompoly/harness.hpp"
#include "hompoly/json_io.hpp"
#include "hompoly/reduce.hpp"
#include "hompoly/topo.hpp"

using namespace hompoly;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InvalidInput("cannot write '" + out + "'");
  f << text;
}

struct Options {
  std::string h;
  std::string cls;
  std::string model = "edge";
  std::string target;
  std::string out;
  std::vector<std::string> lemmas;
  int n = -1;
  int m = -1;
  int k = -1;
  int limit = 3;
  unsigned jobs = 1;
  unsigned long long budget = 0;
  unsigned long long seed = 0;
  bool seed_set = false;
  bool all = false;
  bool no_circuit = false;
  bool polys = false;
};

Budget effective_budget(const Options& o) {
  Budget b = Budget::from_env();
  if (o.budget > 0) b.max_subsets = o.budget;
  return b;
}

int cmd_classify(const Options& o) {
  Graph h = resolve_graph(o.h);
  GraphClass c = GraphClass::parse(o.cls);
  emit(classification_to_json(classify(h, c), h, c).dump(2) + "\n", o.out);
  return 0;
}

int cmd_poly(const Options& o) {
  if (o.n < 0) throw InvalidInput("poly needs --n");
  Graph h = resolve_graph(o.h);
  GraphClass c = GraphClass::parse(o.cls);
  Polynomial p = hom_poly(h, o.n, c, parse_model(o.model), effective_budget(o));
  emit(poly_to_json(p).dump(2) + "\n", o.out);
  std::cerr << p.size() << " terms\n";
  return 0;
}

VerifyPlan plan_from(const Options& o, bool everything) {
  VerifyPlan plan = everything ? full_plan() : VerifyPlan{};
  if (!everything) plan.lemmas = o.lemmas;
  if (!o.h.empty()) plan.parameters["h"] = o.h;
  if (!o.target.empty()) plan.parameters["target"] = o.target;
  if (o.n >= 0) plan.parameters["n"] = std::to_string(o.n);
  if (o.m >= 0) plan.parameters["m"] = std::to_string(o.m);
  if (o.k >= 0) plan.parameters["k"] = std::to_string(o.k);
  if (o.seed_set) plan.parameters["seed"] = std::to_string(o.seed);
  plan.jobs = o.jobs;
  plan.out = o.out;
  plan.budget = effective_budget(o);
  plan.run_circuit = !o.no_circuit;
  return plan;
}

int cmd_verify(const Options& o) {
  VerifyPlan plan = plan_from(o, o.all);
  auto reports = run_plan(plan);
  std::cout << reports_table(reports);
  if (!o.out.empty()) emit(reports_json(reports), o.out);
  return all_equal(reports) ? 0 : kExitMismatch;
}

int cmd_report(const Options& o) {
  VerifyPlan plan = plan_from(o, o.lemmas.empty());
  auto reports = run_plan(plan);
  std::cerr << reports_table(reports);
  emit(reports_json(reports), o.out);
  return all_equal(reports) ? 0 : kExitMismatch;
}

int cmd_genus(const Options& o) {
  Json j;
  if (o.h.empty()) {
    int k = o.k < 0 ? 1 : o.k;
    if (k < 1 || k > 8) throw InvalidInput("--k must be between 1 and 8");
    Gadget chain = amalgam_chain(k);
    GenusResult block = min_genus(genus_block().graph, 1, effective_budget(o).rotation_systems);
    if (!block.witness) throw Error("no genus-one rotation found for the block");
    RotationSystem rot = chain_rotation(chain, *block.witness);
    rot.validate(chain.graph);
    int g = embedding_genus(chain.graph, rot);
    j["graph"] = graph_to_json(chain.graph);
    j["k"] = k;
    j["embedding_genus"] = g;
    j["faces"] = trace_faces(chain.graph, rot);
    j["certified"] = g == k;
    j["lower_bound"] = "additivity of genus over blocks";
    j["rotation"] = rotation_to_json(rot);
    emit(j.dump(2) + "\n", o.out);
    return g == k ? 0 : kExitMismatch;
  }
  Graph g = resolve_graph(o.h);
  GenusResult r = min_genus(g, o.limit, effective_budget(o).rotation_systems);
  j["graph"] = graph_to_json(g);
  j["planar"] = is_planar(g);
  j["genus"] = r.genus;
  j["exceeded_limit"] = r.exceeded_limit;
  j["systems_tried"] = r.systems_tried;
  j["rotation"] = r.witness ? rotation_to_json(*r.witness) : Json(nullptr);
  emit(j.dump(2) + "\n", o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homomorphism polynomials over restricted graph classes"};
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);
  Options o;

  auto budget_flag = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "maximum candidate edge subsets (overrides HOMPOLY_BUDGET)");
    sub->add_option("--out", o.out, "output file");
  };

  auto* classify_cmd = app.add_subcommand("classify", "classify the homomorphism polynomial family");
  classify_cmd->add_option("--h", o.h, "target graph: a name (k2, loop, ...) or a graph JSON file")->required();
  classify_cmd->add_option("--class", o.cls, "cycle, clique, tree, outerplanar, planar or genus:k")->required();
  classify_cmd->add_option("--out", o.out, "output file");

  auto* poly_cmd = app.add_subcommand("poly", "print the homomorphism polynomial as JSON");
  poly_cmd->add_option("--h", o.h, "target graph")->required();
  poly_cmd->add_option("--class", o.cls, "graph class")->required();
  poly_cmd->add_option("--n", o.n, "number of vertices")->required();
  poly_cmd->add_option("--model", o.model, "variable model")->check(CLI::IsMember({"edge", "edge-vertex"}));
  budget_flag(poly_cmd);

  auto add_plan_flags = [&](CLI::App* sub) {
    sub->add_option("--lemma", o.lemmas, "lemma id (repeatable)");
    sub->add_option("--h", o.h, "target graph");
    sub->add_option("--target", o.target, "matching target graph for tree-matching");
    sub->add_option("--n", o.n, "size parameter n");
    sub->add_option("--m", o.m, "middle clique size m");
    sub->add_option("--k", o.k, "genus k");
    sub->add_option("--seed", o.seed, "seed for randomized checks")->each([&](const std::string&) { o.seed_set = true; });
    sub->add_option("--jobs", o.jobs, "parallel pipelines");
    sub->add_flag("--no-circuit", o.no_circuit, "build circuits but skip their evaluation");
    budget_flag(sub);
  };

  auto* verify_cmd = app.add_subcommand("verify", "run lemma checks and print a table");
  add_plan_flags(verify_cmd);
  verify_cmd->add_flag("--all", o.all, "run every lemma");

  auto* report_cmd = app.add_subcommand("report", "run lemma checks (all by default) and emit the JSON report");
  add_plan_flags(report_cmd);

  auto* genus_cmd = app.add_subcommand("genus", "minimum genus of a graph, or a certified chain embedding");
  genus_cmd->add_option("--h", o.h, "graph to embed; without it the chain of --k genus-one blocks");
  genus_cmd->add_option("--k", o.k, "number of blocks in the chain");
  genus_cmd->add_option("--limit", o.limit, "genus search limit");
  budget_flag(genus_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(o);
    if (*poly_cmd) return cmd_poly(o);
    if (*verify_cmd) {
      if (o.lemmas.empty() && !o.all) throw InvalidInput("verify needs --lemma or --all");
      return cmd_verify(o);
    }
    if (*report_cmd) return cmd_report(o);
    if (*genus_cmd) return cmd_genus(o);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
