#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "isouni/bits.hpp"
#include "isouni/graph.hpp"
#include "isouni/hierarchy.hpp"

namespace isouni {

enum class Color : std::uint8_t { kRed, kBlue };

/// Heavy-path colouring of a rooted tree. Heavy child = child with the
/// largest subtree (smallest id on ties); heavy-path heads are blue, all other
/// vertices red. The ordering is a preorder taking the heavy child first and
/// the remaining children in ascending id, so every red vertex directly
/// follows its parent and each vertex has at most floor(log2 n) + 1 blue
/// ancestors.
struct HeavyColoring {
  std::vector<Color> color;
  VertexOrdering ordering;
};

HeavyColoring heavy_coloring(const RootedTree& tree);

struct IndexRun {
  std::uint32_t first;
  std::uint32_t last;

  friend bool operator==(const IndexRun&, const IndexRun&) = default;
};

/// Maximal runs of consecutive increasing values in `indices`.
std::vector<IndexRun> index_runs(const std::vector<std::uint32_t>& indices);

/// Hierarchical distance-vector labels over a DFS tree. Layout:
///   gamma(n) | s in ceil(log2(n+1)) bits | s x (first-1, last-1) in
///   index_width(n) bits each | d(v, root) in index_width(n) bits |
///   pack_trits(delta_2 + 1, ..., delta_k + 1)
/// where the s runs spell out p(v) and k is the sum of the run lengths.
struct HdvEncoding {
  VertexOrdering ordering;
  std::vector<BitString> labels;  // indexed by vertex id
};

/// Throws NotConnected for disconnected input.
HdvEncoding hdv_encode(const Graph& g);

/// Builds one label from decoded content; p must be strictly increasing
/// runs and consecutive x entries must differ by at most one.
BitString hdv_encode_decoded(std::size_t n, const HierLabelDecoded& decoded);

HierLabelDecoded hdv_decode(const BitString& label);

/// ceil(n log2 3) + 8 ceil(log2(n+1))^2.
std::size_t hdv_label_bound(std::size_t n);

}  // namespace isouni
