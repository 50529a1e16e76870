#pragma once

// Verification harness: named lemma checks, their default parameters and a
// deterministic runner shared by the CLI and the acceptance tests.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hompoly/reduce.hpp"

namespace hompoly {

struct LemmaInfo {
  std::string id;
  std::string summary;
  // Parameters the lemma reads, with defaults ("h", "n", "m", "k", "target", "seed").
  std::map<std::string, std::string> defaults;
};

const std::vector<LemmaInfo>& lemma_table();
const LemmaInfo& lemma_info(const std::string& id);

struct VerifyPlan {
  std::vector<std::string> lemmas;
  // Overrides applied to every lemma that reads the parameter.
  std::map<std::string, std::string> parameters;
  unsigned jobs = 1;
  std::string out;
  Budget budget;
  bool run_circuit = true;

  // Throws InvalidInput for an unknown lemma id or parameter name, or a
  // malformed value.
  void validate() const;
};

// Every lemma id, in table order.
VerifyPlan full_plan();

// Graph by name (see named_graph) or, when the value ends in ".json", read
// from that file.
Graph resolve_graph(const std::string& source);

ReductionReport run_lemma(const std::string& id, const std::map<std::string, std::string>& overrides,
                          const PipelineOptions& opt);

// Reports come back in plan order whatever the number of jobs.
std::vector<ReductionReport> run_plan(const VerifyPlan& plan);

std::string reports_json(const std::vector<ReductionReport>& reports);
std::string reports_table(const std::vector<ReductionReport>& reports);

bool all_equal(const std::vector<ReductionReport>& reports);

}  // namespace hompoly
