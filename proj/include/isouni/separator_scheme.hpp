#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "isouni/bits.hpp"
#include "isouni/graph.hpp"
#include "isouni/hierarchy.hpp"

namespace isouni {

/// S, X, Y partition the split graph; |X|, |Y| <= 2n/3 and no edge joins X
/// and Y. Vertex ids are local to the graph handed to the oracle.
struct SeparatorParts {
  std::vector<VertexId> separator;
  std::vector<VertexId> x;
  std::vector<VertexId> y;
};

/// Balanced-separator provider for a hereditary class. `split` receives a
/// connected induced subgraph; `size_bound` is the declared f(n), which must
/// be nondecreasing.
struct SeparatorOracle {
  std::string name;
  std::function<SeparatorParts(const Graph&)> split;
  std::function<std::size_t(std::size_t)> size_bound;
};

/// Single-vertex centroid separators for trees and forests (f(n) = 1).
SeparatorOracle centroid_oracle();

/// Middle BFS layer from the smallest vertex. Always balanced, but with no
/// size guarantee beyond n; meant for experimentation on general graphs.
SeparatorOracle bfs_layer_oracle();

/// Throws ContractViolation describing the offending subgraph when `parts`
/// breaks the separator contract for `g` under `bound`.
void validate_separator(const Graph& g, const SeparatorParts& parts, std::size_t bound);

/// Recursive balanced-separator decomposition: the root bag is S, children
/// are the decompositions of G[X] and G[Y] (absent when empty). A
/// disconnected part is split through its largest component and the pieces
/// are regrouped greedily by size. Every oracle answer is re-validated.
HierarchicalDecomposition build_separator_decomposition(const Graph& g,
                                                        const SeparatorOracle& oracle);

/// Smallest k with (3/2)^k >= n.
unsigned ceil_log_three_halves(std::size_t n);

/// Explicit ancestor lists. Layout:
///   gamma(n) | a in ceil(log2(n+1)) bits | a x (index-1, distance) in
///   index_width(n) bits each
std::vector<BitString> sep_encode(const Graph& g, const HierarchicalDecomposition& d,
                                  const VertexOrdering& ordering);

HierLabelDecoded sep_decode(const BitString& label);

/// Centroid decomposition for trees, BFS layering otherwise; identity order.
struct SepEncoding {
  VertexOrdering ordering;
  HierarchicalDecomposition decomposition;
  std::vector<BitString> labels;
};
SepEncoding sep_encode_default(const Graph& g);

/// 2 (ceil(log_{3/2} n) + 1) ceil(log2 n) + 3 ceil(log2(n+1)) + 3, for f = 1.
std::size_t sep_tree_label_bound(std::size_t n);

}  // namespace isouni
