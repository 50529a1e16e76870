#include "hompoly/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <sstream>
#include <thread>

#include "hompoly/json_io.hpp"

namespace hompoly {

const std::vector<LemmaInfo>& lemma_table() {
  static const std::vector<LemmaInfo> table = {
      {"cycles-loop", "Hamiltonian cycles as the degree-n part of the cycle polynomial of a looped vertex",
       {{"h", "loop"}, {"n", "5"}}},
      {"cycles-even", "Hamiltonian cycles from the cycle polynomial of H, contracting from K_{n+1} when C_n does not map",
       {{"h", "k2"}, {"n", "4"}}},
      {"cycles-contract", "Hamiltonian cycles of K_{n+1} through one edge contracted onto K_n",
       {{"h", "loop"}, {"n", "3"}}},
      {"cycles-bipartite", "cycles mapping to K_2 are exactly the even cycles", {{"n", "5"}}},
      {"clique-vac0", "explicit clique enumeration up to the clique number of H", {{"h", "k3"}, {"n", "4"}}},
      {"tree-matching", "perfect matchings from trees of the edge-subdivided host", {{"h", "k2"}, {"target", "c4"}}},
      {"outerplanar-star", "Hamiltonian cycles of K_{n-2} from the star gadget", {{"h", "k3"}, {"n", "6"}}},
      {"outerplanar-buddy", "star gadget with buddy vertices for bipartite H", {{"h", "k2"}, {"n", "5"}}},
      {"outerplanar-calibration", "star gadget counts under neighbouring edge budgets", {{"h", "k3"}, {"n", "6"}}},
      {"planar-permutation", "Hamiltonian paths from the two-apex planar gadget", {{"h", "k3"}, {"m", "4"}}},
      {"planar-bipartite", "subdivided two-apex gadget with buddy vertices for bipartite H", {{"h", "k2"}, {"m", "4"}}},
      {"genus-block", "the genus-one block: non-planarity, minor witness and exhaustive genus", {}},
      {"genus-chain", "Hamiltonian cycles through a chain of k genus-one blocks", {{"h", "k4"}, {"k", "1"}, {"m", "4"}}},
      {"interpolation", "homogeneous-component circuits against direct extraction", {{"seed", "20261014"}}},
      {"classify", "classifier truth table", {}},
      {"bipartite-certificates", "buddy and subdivided gadgets map onto a single edge", {}},
  };
  return table;
}

const LemmaInfo& lemma_info(const std::string& id) {
  for (const auto& l : lemma_table()) {
    if (l.id == id) return l;
  }
  std::string known;
  for (const auto& l : lemma_table()) known += " " + l.id;
  throw InvalidInput("unknown lemma id '" + id + "' (known:" + known + ")");
}

namespace {

const std::vector<std::string> kParameterNames = {"h", "n", "m", "k", "target", "seed"};

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    int v = std::stoi(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput("parameter " + key + ": '" + value + "' is not an integer");
}

std::uint64_t parse_seed(const std::string& value) {
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(value, &used);
    if (used == value.size() && value.find('-') == std::string::npos) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput("parameter seed: '" + value + "' is not a non-negative integer");
}

}  // namespace

void VerifyPlan::validate() const {
  if (lemmas.empty()) throw InvalidInput("no lemma selected");
  for (const auto& id : lemmas) lemma_info(id);
  for (const auto& [key, value] : parameters) {
    if (std::find(kParameterNames.begin(), kParameterNames.end(), key) == kParameterNames.end()) {
      throw InvalidInput("unknown parameter '" + key + "'");
    }
    if (key == "h" || key == "target") {
      resolve_graph(value);
    } else if (key == "seed") {
      parse_seed(value);
    } else {
      parse_int(key, value);
    }
  }
  if (jobs == 0) throw InvalidInput("--jobs must be positive");
}

VerifyPlan full_plan() {
  VerifyPlan plan;
  for (const auto& l : lemma_table()) plan.lemmas.push_back(l.id);
  return plan;
}

Graph resolve_graph(const std::string& source) {
  if (source.size() > 5 && source.substr(source.size() - 5) == ".json") return graph_from_json(read_json_file(source));
  return named_graph(source);
}

ReductionReport run_lemma(const std::string& id, const std::map<std::string, std::string>& overrides,
                          const PipelineOptions& opt) {
  const LemmaInfo& info = lemma_info(id);
  std::map<std::string, std::string> p = info.defaults;
  for (const auto& [k, v] : overrides) {
    if (p.contains(k)) p[k] = v;
  }
  auto graph = [&](const char* key) { return resolve_graph(p.at(key)); };
  auto number = [&](const char* key) { return parse_int(key, p.at(key)); };

  ReductionReport r;
  if (id == "cycles-loop") {
    r = reduce_cycles(graph("h"), number("n"), opt);
  } else if (id == "cycles-even") {
    r = reduce_cycles(graph("h"), number("n"), opt);
  } else if (id == "cycles-contract") {
    r = reduce_cycles_contract(graph("h"), number("n"), opt);
  } else if (id == "cycles-bipartite") {
    r = verify_bipartite_cycles(number("n"), opt);
  } else if (id == "clique-vac0") {
    r = verify_clique_vac0(graph("h"), number("n"), opt);
  } else if (id == "tree-matching") {
    r = reduce_trees(graph("h"), graph("target"), opt);
  } else if (id == "outerplanar-star") {
    r = reduce_outerplanar(graph("h"), number("n"), opt);
  } else if (id == "outerplanar-buddy") {
    r = reduce_outerplanar(graph("h"), number("n"), opt, std::nullopt, true);
  } else if (id == "outerplanar-calibration") {
    r = calibrate_outerplanar(graph("h"), number("n"), opt);
  } else if (id == "planar-permutation") {
    r = reduce_planar(graph("h"), number("m"), opt);
  } else if (id == "planar-bipartite") {
    r = reduce_planar(graph("h"), number("m"), opt, true);
  } else if (id == "genus-block") {
    r = verify_genus_block(opt);
  } else if (id == "genus-chain") {
    r = reduce_genus(graph("h"), number("k"), number("m"), opt);
  } else if (id == "interpolation") {
    r = verify_interpolation(parse_seed(p.at("seed")));
  } else if (id == "classify") {
    r = verify_classifier();
  } else if (id == "bipartite-certificates") {
    r = verify_bipartite_certificates();
  }
  // Report under the requested id, with the parameters as the user wrote them.
  if (r.lemma_id != id) r.notes.push_back("pipeline branch: " + r.lemma_id);
  r.lemma_id = id;
  for (const auto& [k, v] : p) r.parameters[k] = v;
  return r;
}

std::vector<ReductionReport> run_plan(const VerifyPlan& plan) {
  plan.validate();
  PipelineOptions opt;
  opt.budget = plan.budget;
  opt.run_circuit = plan.run_circuit;
  std::size_t count = plan.lemmas.size();
  std::vector<ReductionReport> reports(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        reports[i] = run_lemma(plan.lemmas[i], plan.parameters, opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = std::min<unsigned>(plan.jobs, static_cast<unsigned>(count));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

std::string reports_json(const std::vector<ReductionReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  Json j;
  j["all_equal"] = all_equal(reports);
  j["reports"] = arr;
  return j.dump(2) + "\n";
}

std::string reports_table(const std::vector<ReductionReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(26) << "lemma" << std::setw(8) << "result" << std::setw(12) << "terms"
     << std::setw(10) << "checks" << std::setw(30) << "circuit" << "parameters\n";
  for (const auto& r : reports) {
    std::size_t passed = std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.pass; });
    std::string terms = r.has_polynomial ? std::to_string(r.produced.size()) + "/" + std::to_string(r.expected.size())
                                         : "-";
    std::string circuit = r.circuit.status;
    if (r.circuit.size > 0) circuit += " (" + std::to_string(r.circuit.size) + ")";
    std::string params;
    for (const auto& [k, v] : r.parameters) params += k + "=" + v + " ";
    if (!params.empty()) params.pop_back();
    os << std::setw(26) << r.lemma_id << std::setw(8) << (r.equal ? "PASS" : "FAIL") << std::setw(12) << terms
       << std::setw(10) << (std::to_string(passed) + "/" + std::to_string(r.checks.size())) << std::setw(30)
       << circuit << params << "\n";
    for (const auto& c : r.checks) {
      if (!c.pass) os << "    failed: " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    }
  }
  return os.str();
}

bool all_equal(const std::vector<ReductionReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const ReductionReport& r) { return r.equal; });
}

}  // namespace hompoly
