#pragma once

#include <cstddef>
#include <vector>

#include "isouni/bits.hpp"
#include "isouni/graph.hpp"

namespace isouni {

/// Flat distance-vector labels. Layout of one label:
///   gamma(n) | d(v, v_1) in index_width(n) bits | n-1 sign bits | runs(|delta_i|)
/// where delta_i = d(v, v_i) - d(v, v_{i-1}) along the codebook ordering and a
/// sign bit of 1 means negative (zero deltas always carry sign 0).
struct DvEncoding {
  VertexOrdering ordering;        // the codebook: tour order of the DFS tree
  std::vector<BitString> labels;  // indexed by vertex id
};

/// Throws NotConnected for disconnected input and InvalidArgument for n = 0.
DvEncoding dv_encode(const Graph& g);

/// Label for a distance vector already arranged in codebook order.
BitString dv_encode_vector(const DistanceVector& ordered);

/// Recovers the distance vector from a label alone. Rejects truncation,
/// trailing bits, negative entries and non-canonical "-0" signs.
DistanceVector dv_decode(const BitString& label);

/// Distance between the owners of two labels of the same encoding.
Distance dv_pairwise_distance(const DistanceVector& a, const DistanceVector& b);
Distance dv_pairwise_distance(const BitString& a, const BitString& b);

/// 4n + 3 ceil(log2(n+1)) + 3.
std::size_t dv_label_bound(std::size_t n);

}  // namespace isouni
