#include "isouni/dv_scheme.hpp"

#include <algorithm>

#include "isouni/error.hpp"

namespace isouni {

BitString dv_encode_vector(const DistanceVector& ordered) {
  const std::size_t n = ordered.size();
  if (n == 0) throw InvalidArgument("cannot label an empty vector");
  BitString label;
  write_gamma(label, n);
  write_fixed(label, ordered[0], index_width(n));

  std::vector<std::uint32_t> magnitudes(n - 1);
  std::uint64_t signs = 0;
  unsigned pending = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (ordered[i] == kInfinity || ordered[i - 1] == kInfinity) throw NotConnected();
    const bool negative = ordered[i] < ordered[i - 1];
    signs = (signs << 1) | negative;
    if (++pending == 64) {
      label.append_bits(signs, 64);
      pending = 0;
    }
    magnitudes[i - 1] = negative ? ordered[i - 1] - ordered[i] : ordered[i] - ordered[i - 1];
  }
  label.append_bits(signs, pending);
  encode_runs(label, magnitudes);
  return label;
}

DvEncoding dv_encode(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw InvalidArgument("cannot label the empty graph");
  RootedTree tree = dfs_spanning_tree(g, 0);
  DvEncoding out{tour_ordering(g, tree), {}};
  out.labels.reserve(n);

  BfsRunner bfs(g);
  DistanceVector ordered(n);
  for (VertexId v = 0; v < n; ++v) {
    auto dist = bfs.run(v);
    for (std::size_t i = 0; i < n; ++i) ordered[i] = dist[out.ordering.vertex_at(i)];
    out.labels.push_back(dv_encode_vector(ordered));
  }
  return out;
}

DistanceVector dv_decode(const BitString& label) {
  BitCursor cursor(label);
  const std::uint64_t n = read_gamma(cursor);
  // Each of the n-1 later entries needs a sign bit and a run marker.
  if (n - 1 > cursor.remaining() / 2) throw MalformedLabel("vector length exceeds label");
  DistanceVector out(n);
  out[0] = static_cast<Distance>(read_fixed(cursor, index_width(n)));

  std::vector<bool> negative(n - 1);
  for (std::size_t i = 0; i + 1 < n; i += 64) {
    const auto chunk = static_cast<unsigned>(std::min<std::size_t>(64, n - 1 - i));
    const std::uint64_t bits = cursor.read_bits(chunk);
    for (unsigned j = 0; j < chunk; ++j) negative[i + j] = (bits >> (chunk - 1 - j)) & 1;
  }
  auto magnitudes = decode_runs(cursor, n - 1);
  if (!cursor.at_end()) throw MalformedLabel("trailing bits after the run field");

  std::int64_t current = out[0];
  for (std::size_t i = 1; i < n; ++i) {
    const std::uint32_t b = magnitudes[i - 1];
    if (negative[i - 1] && b == 0) throw MalformedLabel("negative sign on a zero step");
    current += negative[i - 1] ? -static_cast<std::int64_t>(b) : b;
    if (current < 0) throw MalformedLabel("decoded distance is negative");
    if (current >= kInfinity) throw MalformedLabel("decoded distance overflows");
    out[i] = static_cast<Distance>(current);
  }
  return out;
}

Distance dv_pairwise_distance(const DistanceVector& a, const DistanceVector& b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("distance vectors of different length (labels from different graphs)");
  }
  auto zero = std::find(a.begin(), a.end(), Distance{0});
  if (zero == a.end()) throw MalformedLabel("distance vector has no zero entry");
  return b[static_cast<std::size_t>(zero - a.begin())];
}

Distance dv_pairwise_distance(const BitString& a, const BitString& b) {
  return dv_pairwise_distance(dv_decode(a), dv_decode(b));
}

std::size_t dv_label_bound(std::size_t n) { return 4 * n + 3 * ceil_log2(n + 1) + 3; }

}  // namespace isouni
