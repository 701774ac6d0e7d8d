#include "isouni/hdv_scheme.hpp"

#include <algorithm>
#include <stdexcept>

#include "isouni/error.hpp"

namespace isouni {

HeavyColoring heavy_coloring(const RootedTree& tree) {
  const std::size_t n = tree.order();
  const auto size = tree.subtree_sizes();
  std::vector<VertexId> heavy(n, kNoVertex);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId c : tree.children(v)) {
      if (heavy[v] == kNoVertex || size[c] > size[heavy[v]]) heavy[v] = c;
    }
  }

  HeavyColoring out;
  out.color.assign(n, Color::kBlue);
  for (VertexId v = 0; v < n; ++v) {
    if (heavy[v] != kNoVertex) out.color[heavy[v]] = Color::kRed;
  }

  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<VertexId> stack{tree.root()};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    auto kids = tree.children(v);
    // Push in reverse so the heavy child pops first, then ascending ids.
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      if (*it != heavy[v]) stack.push_back(*it);
    }
    if (heavy[v] != kNoVertex) stack.push_back(heavy[v]);
  }
  out.ordering = VertexOrdering(std::move(order));
  return out;
}

std::vector<IndexRun> index_runs(const std::vector<std::uint32_t>& indices) {
  std::vector<IndexRun> runs;
  for (std::uint32_t idx : indices) {
    if (!runs.empty() && runs.back().last + 1 == idx) {
      runs.back().last = idx;
    } else {
      runs.push_back({idx, idx});
    }
  }
  return runs;
}

BitString hdv_encode_decoded(std::size_t n, const HierLabelDecoded& decoded) {
  const auto& [p, x] = decoded;
  if (p.empty() || p.size() != x.size()) {
    throw InvalidArgument("hierarchical label needs |p| = |x| >= 1");
  }
  const unsigned width = index_width(n);
  const auto runs = index_runs(p);
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (runs[i].first < 1 || runs[i].last > n ||
        (i > 0 && runs[i].first <= runs[i - 1].last)) {
      throw InvalidArgument("ancestor indices must increase within [1, n]");
    }
  }

  BitString label;
  write_gamma(label, n);
  write_fixed(label, runs.size(), ceil_log2(n + 1));
  for (const IndexRun& run : runs) {
    write_fixed(label, run.first - 1, width);
    write_fixed(label, run.last - 1, width);
  }
  write_fixed(label, x[0], width);
  std::vector<std::uint8_t> trits(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i) {
    const auto delta = static_cast<std::int64_t>(x[i]) - static_cast<std::int64_t>(x[i - 1]);
    if (delta < -1 || delta > 1) {
      throw InvalidArgument("consecutive ancestor distances differ by more than one");
    }
    trits[i - 1] = static_cast<std::uint8_t>(delta + 1);
  }
  pack_trits(label, trits);
  return label;
}

HdvEncoding hdv_encode(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw InvalidArgument("cannot label the empty graph");
  const RootedTree tree = dfs_spanning_tree(g, 0);
  HeavyColoring coloring = heavy_coloring(tree);
  const std::size_t max_runs = floor_log2(n) + 1;

  HdvEncoding out{std::move(coloring.ordering), {}};
  out.labels.reserve(n);
  BfsRunner bfs(g);
  HierLabelDecoded decoded;
  for (VertexId v = 0; v < n; ++v) {
    const auto path = tree.path_from_root(v);
    auto dist = bfs.run(v);
    decoded.p.resize(path.size());
    decoded.x.resize(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
      decoded.p[i] = out.ordering.index_of(path[i]);
      decoded.x[i] = dist[path[i]];
    }
    if (index_runs(decoded.p).size() > max_runs) {
      throw std::logic_error("root path splits into more than floor(log2 n) + 1 runs");
    }
    out.labels.push_back(hdv_encode_decoded(n, decoded));
  }
  return out;
}

HierLabelDecoded hdv_decode(const BitString& label) {
  BitCursor cursor(label);
  const std::uint64_t n = read_gamma(cursor);
  if (n > kNoVertex) throw MalformedLabel("vertex count out of range");
  const unsigned width = index_width(n);
  const std::uint64_t runs = read_fixed(cursor, ceil_log2(n + 1));
  if (runs == 0) throw MalformedLabel("label has no ancestor runs");
  if (runs * 2 * width > cursor.remaining()) throw MalformedLabel("label truncated");

  std::vector<IndexRun> decoded_runs(runs);
  std::uint64_t k = 0;
  for (std::uint64_t r = 0; r < runs; ++r) {
    const std::uint64_t first = read_fixed(cursor, width) + 1;
    const std::uint64_t last = read_fixed(cursor, width) + 1;
    if (first > last || last > n) throw MalformedLabel("invalid ancestor run");
    // Canonical runs are maximal and increasing.
    if (r > 0 && first <= decoded_runs[r - 1].last + std::uint64_t{1}) {
      throw MalformedLabel("ancestor runs not maximal");
    }
    decoded_runs[r] = {static_cast<std::uint32_t>(first), static_cast<std::uint32_t>(last)};
    k += last - first + 1;
  }
  if (k - 1 > cursor.remaining()) throw MalformedLabel("label truncated");

  HierLabelDecoded out;
  out.p.reserve(k);
  for (const IndexRun& run : decoded_runs) {
    for (std::uint64_t idx = run.first; idx <= run.last; ++idx) {
      out.p.push_back(static_cast<std::uint32_t>(idx));
    }
  }

  out.x.resize(k);
  std::int64_t current = static_cast<std::int64_t>(read_fixed(cursor, width));
  out.x[0] = static_cast<Distance>(current);
  const auto trits = unpack_trits(cursor, k - 1);
  if (!cursor.at_end()) throw MalformedLabel("trailing bits after the trit field");
  for (std::size_t i = 1; i < k; ++i) {
    current += static_cast<std::int64_t>(trits[i - 1]) - 1;
    if (current < 0) throw MalformedLabel("decoded distance is negative");
    out.x[i] = static_cast<Distance>(current);
  }
  return out;
}

std::size_t hdv_label_bound(std::size_t n) {
  const std::size_t l = ceil_log2(n + 1);
  return trit_field_width(n) + 8 * l * l;
}

}  // namespace isouni
