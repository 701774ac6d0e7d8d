#pragma once

#include <cstdint>
#include <vector>

#include "isouni/graph.hpp"

namespace isouni {

/// Rooted tree of non-empty bags partitioning V(G). A decomposition is
/// hierarchical for G when every edge joins a vertex to one lying in an
/// ancestor bag.
struct HierarchicalDecomposition {
  RootedTree tree;                          // over bag nodes
  std::vector<std::vector<VertexId>> bags;  // node -> vertices, ascending id
  std::vector<std::uint32_t> vertex_node;   // vertex -> node holding it

  /// Validates that `bags` partition {0..order-1} into non-empty sets.
  static HierarchicalDecomposition make(RootedTree tree,
                                        std::vector<std::vector<VertexId>> bags,
                                        std::size_t order);

  std::size_t node_count() const noexcept { return bags.size(); }
};

/// Throws ContractViolation naming the first edge not covered by ancestry.
void validate_hierarchical(const HierarchicalDecomposition& d, const Graph& g);

/// DFS spanning tree with singleton bags; node t holds vertex t.
HierarchicalDecomposition dfs_hierarchical_decomposition(const Graph& g);

/// Ancestors of v in natural order: ancestor bags root-down, each sorted by
/// V(G)-index, the bag of v truncated at v itself (so v comes last).
std::vector<VertexId> natural_ancestors(const HierarchicalDecomposition& d,
                                        const VertexOrdering& ordering, VertexId v);

/// Decoded hierarchical label: p holds 1-based V(G)-indices of the ancestors
/// in natural order, x the distances from the owner to each of them.
struct HierLabelDecoded {
  std::vector<std::uint32_t> p;
  DistanceVector x;

  friend bool operator==(const HierLabelDecoded&, const HierLabelDecoded&) = default;
};

/// Minimum of x_a[i] + x_b[i] over the common prefix of p_a and p_b.
/// Throws InvalidArgument when the labels share no ancestor.
Distance hub_distance(const HierLabelDecoded& a, const HierLabelDecoded& b);

}  // namespace isouni
