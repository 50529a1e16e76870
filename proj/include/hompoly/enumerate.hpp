#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hompoly/graph.hpp"

namespace hompoly {

/// Restrictions applied while enumerating edge subsets of a host graph.
/// Filtering here is equivalent to enforcing `required`, zeroing
/// `forbidden` and taking the homogeneous component of total edge degree
/// `edge_count` afterwards, but avoids materialising discarded subsets.
struct SubsetConstraints {
  std::vector<Edge> required;
  std::vector<Edge> forbidden;
  std::optional<std::size_t> edge_count;
};

// Receives indices into host.edges(), ascending.
using SubsetVisitor = std::function<void(const std::vector<int>& edge_indices)>;

// Visits every edge subset E' of the host whose spanning subgraph lies in
// class c and satisfies the constraints, exactly once, in ascending bitmask
// order (edge i of host.edges() is bit i). Cycles, cliques, trees and
// perfect matchings use dedicated generators; the other classes test every
// candidate subset.
void enumerate_edge_subsets(const Graph& host, const GraphClass& c, const SubsetConstraints& constraints,
                            const SubsetVisitor& visit, const Budget& budget = {});

// Edge subsets of K_n by bitmask over the lexicographic edge order.
void enumerate_subgraphs(int n, const GraphClass& c,
                         const std::function<void(std::uint64_t mask, const Graph& subgraph)>& visit,
                         const Budget& budget = {});

// Strict "ascending bitmask" order on sorted index sets.
bool subset_mask_less(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace hompoly
