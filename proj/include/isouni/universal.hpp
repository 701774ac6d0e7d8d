#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "isouni/bits.hpp"
#include "isouni/graph.hpp"
#include "isouni/hierarchy.hpp"
#include "isouni/labels.hpp"

namespace isouni {

/// max |x_i - y_i| over the common prefix, with inf - inf = 0 and
/// inf - finite = inf. 0 when either vector is empty.
Distance linf_pseudodistance(const DistanceVector& x, const DistanceVector& y);

/// Equal lengths and L-infinity distance exactly 1.
bool dv_adjacent(const DistanceVector& a, const DistanceVector& b);

/// |p| = |x| >= 1 and the last distance is 0.
bool hdv_vertex_valid(const HierLabelDecoded& d);

/// One of p1, p2 is a prefix of the other and pseudodistance(x1, x2) = 1.
bool hdv_adjacent(const HierLabelDecoded& a, const HierLabelDecoded& b);

/// Adjacency rule for two decoded labels of the same kind.
bool labels_adjacent(const DecodedLabel& a, const DecodedLabel& b);

struct Embedding {
  Graph source;
  std::vector<VertexId> image;  // source vertex -> universal vertex
};

/// How vertices of a part are looked up when embedding: by decoded value
/// (realized construction) or by the raw bit string (full construction).
enum class VertexKey { kDecoded, kBits };

struct UniversalGraph {
  Scheme scheme = Scheme::kDv;
  VertexKey key = VertexKey::kDecoded;
  Graph graph;
  std::vector<BitString> labels;       // a label realizing each vertex
  std::vector<DecodedLabel> payloads;  // its decoded value
  std::vector<Embedding> embeddings;

  // Disjoint-union bookkeeping: part i owns vertices
  // [part_offsets[i], part_offsets[i+1]) and looks them up through
  // part_index[i]. A freshly built graph is a single part.
  std::vector<std::size_t> part_offsets{0, 0};
  std::vector<std::unordered_map<std::string, VertexId>> part_index{{}};

  std::size_t order() const noexcept { return graph.order(); }
  std::size_t part_count() const noexcept { return part_index.size(); }
};

/// Lookup key for a label under `key`.
std::string vertex_key(VertexKey key, const BitString& label, const DecodedLabel& decoded);

/// Induced subgraph of the full construction on the labels realized by
/// `graphs`, each of which must be connected. Equal decoded values share a
/// vertex. Records one embedding per input graph, in input order.
UniversalGraph build_realized_universal(std::span<const Graph> graphs, Scheme scheme);

/// Realized construction over every labelled connected graph on 1..max_n
/// vertices.
UniversalGraph build_class_universal(unsigned max_n, Scheme scheme);

inline constexpr unsigned kMaxFullBits = 14;

/// Every bit string of length <= k that decodes (and, for hierarchical
/// schemes, passes hdv_vertex_valid) becomes a vertex. k <= kMaxFullBits.
UniversalGraph build_full_universal(unsigned k, Scheme scheme);

struct IsometryReport {
  bool pass = true;
  std::size_t graph_id = 0;
  // First failing pair, or the farthest checked pair on success.
  VertexId u = 0;
  VertexId v = 0;
  Distance d_g = 0;
  Distance d_h = 0;
  std::uint64_t pairs_checked = 0;
  std::string failure;
};

/// Checks that `image` is injective, preserves adjacency and non-adjacency,
/// and that BFS distances in h match those in g for every pair.
IsometryReport verify_isometric(const Graph& g, const UniversalGraph& h,
                                std::span<const VertexId> image, std::size_t graph_id = 0);

/// verify_isometric over every recorded embedding.
std::vector<IsometryReport> verify_all(const UniversalGraph& h);

/// Disjoint union of the parts; each keeps its own lookup index.
UniversalGraph disjoint_union_universal(std::span<const UniversalGraph> parts);

/// Encodes each connected component of g on its own (vertices in ascending
/// id) and places component i in part i. Throws InvalidArgument when g has
/// more components than h has parts or a label is missing from its part.
Embedding embed_components(const UniversalGraph& h, const Graph& g);

/// Graph text plus one sidecar line per vertex:
/// "<vertex-id> <hex-label> <bit-length>", with "-" for the empty label.
std::string format_universal_mapping(const UniversalGraph& h);
void write_universal(const UniversalGraph& h, const std::string& graph_path,
                     const std::string& mapping_path);

}  // namespace isouni
