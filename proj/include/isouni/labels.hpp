#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "isouni/bits.hpp"
#include "isouni/graph.hpp"
#include "isouni/hierarchy.hpp"

namespace isouni {

enum class Scheme { kDv, kHdv, kSep };

std::string_view scheme_tag(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view tag);

/// All labels of one graph under one scheme, plus the V(G) ordering.
struct LabelSet {
  Scheme scheme = Scheme::kDv;
  VertexOrdering ordering;
  std::vector<BitString> labels;  // indexed by vertex id

  std::size_t order() const noexcept { return labels.size(); }
  std::size_t max_bits() const noexcept;
};

/// Dispatches to dv_encode / hdv_encode / sep_encode_default.
LabelSet encode(const Graph& g, Scheme scheme);

using DecodedLabel = std::variant<DistanceVector, HierLabelDecoded>;

DecodedLabel decode_label(Scheme scheme, const BitString& label);

/// Distance computed from two decoded labels only.
Distance decoded_distance(const DecodedLabel& a, const DecodedLabel& b);
Distance label_distance(const LabelSet& set, VertexId u, VertexId v);

/// "(0,1,inf)" for flat vectors, "p=(1,2) x=(1,0)" for hierarchical ones.
std::string format_decoded(const DecodedLabel& decoded);

/// Label file:
///   n <scheme-tag>
///   order: i1 i2 ... in
///   <vertex-id> <bit-length> <hex, MSB first, zero-padded to whole bytes>
std::string format_label_file(const LabelSet& set);
LabelSet parse_label_file(std::string_view text);
LabelSet read_label_file(const std::string& path);
void write_label_file(const LabelSet& set, const std::string& path);

}  // namespace isouni
