#include "isouni/separator_scheme.hpp"

#include <algorithm>

#include "isouni/error.hpp"

namespace isouni {

namespace {

// Components of g after deleting `removed`, as local vertex lists.
std::vector<std::vector<VertexId>> components_without(const Graph& g,
                                                      const std::vector<VertexId>& removed) {
  std::vector<bool> seen(g.order(), false);
  for (VertexId v : removed) seen[v] = true;
  std::vector<std::vector<VertexId>> pieces;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> piece{s};
    seen[s] = true;
    for (std::size_t head = 0; head < piece.size(); ++head) {
      for (VertexId w : g.neighbors(piece[head])) {
        if (!seen[w]) {
          seen[w] = true;
          piece.push_back(w);
        }
      }
    }
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

// Largest piece first, each into the currently smaller side. With pieces
// no larger than 2n/3 the heavier side stays within 2n/3.
void group_pieces(std::vector<std::vector<VertexId>> pieces, SeparatorParts& parts) {
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (auto& piece : pieces) {
    auto& side = parts.x.size() <= parts.y.size() ? parts.x : parts.y;
    side.insert(side.end(), piece.begin(), piece.end());
  }
  std::sort(parts.x.begin(), parts.x.end());
  std::sort(parts.y.begin(), parts.y.end());
}

void repair_empty_separator(SeparatorParts& parts) {
  if (!parts.separator.empty()) return;
  auto take_min = [](std::vector<VertexId>& from) {
    auto it = std::min_element(from.begin(), from.end());
    VertexId v = *it;
    from.erase(it);
    return v;
  };
  if (parts.x.empty() && parts.y.empty()) return;
  bool from_x = !parts.x.empty() &&
                (parts.y.empty() || *std::min_element(parts.x.begin(), parts.x.end()) <
                                        *std::min_element(parts.y.begin(), parts.y.end()));
  parts.separator.push_back(take_min(from_x ? parts.x : parts.y));
}

// induced_subgraph() with a caller-owned id map, so deep recursions do not
// pay O(n) per node. `local` must hold kNoVertex everywhere on entry and exit.
Graph induce(const Graph& g, const std::vector<VertexId>& vertices,
             std::vector<VertexId>& local) {
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<VertexId>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (VertexId w : g.neighbors(vertices[i])) {
      VertexId j = local[w];
      if (j != kNoVertex && i < j) edges.push_back({static_cast<VertexId>(i), j});
    }
  }
  for (VertexId v : vertices) local[v] = kNoVertex;
  return Graph::from_edges(vertices.size(), edges);
}

SeparatorParts call_oracle(const SeparatorOracle& oracle, const Graph& g) {
  SeparatorParts parts = oracle.split(g);
  repair_empty_separator(parts);
  validate_separator(g, parts, oracle.size_bound(g.order()));
  return parts;
}

}  // namespace

SeparatorOracle centroid_oracle() {
  SeparatorOracle oracle;
  oracle.name = "centroid";
  oracle.split = [](const Graph& g) {
    if (!is_tree(g)) throw ContractViolation("centroid oracle applied to a non-tree");
    SeparatorParts parts;
    parts.separator = {tree_centroid(g)};
    group_pieces(components_without(g, parts.separator), parts);
    return parts;
  };
  oracle.size_bound = [](std::size_t) -> std::size_t { return 1; };
  return oracle;
}

SeparatorOracle bfs_layer_oracle() {
  SeparatorOracle oracle;
  oracle.name = "bfs-layer";
  oracle.split = [](const Graph& g) {
    SeparatorParts parts;
    const std::size_t n = g.order();
    if (n == 0) return parts;
    auto dist = bfs_distances(g, 0);
    Distance depth = 0;
    for (Distance d : dist) {
      if (d != kInfinity) depth = std::max(depth, d);
    }
    std::vector<std::size_t> layer_size(depth + 1, 0);
    for (Distance d : dist) {
      if (d != kInfinity) ++layer_size[d];
    }
    // First layer whose cumulative count reaches n/2: both sides stay <= n/2.
    Distance cut = 0;
    std::size_t cumulative = 0;
    for (; cut <= depth; ++cut) {
      cumulative += layer_size[cut];
      if (2 * cumulative >= n) break;
    }
    for (VertexId v = 0; v < n; ++v) {
      if (dist[v] == cut) {
        parts.separator.push_back(v);
      } else if (dist[v] < cut) {
        parts.x.push_back(v);
      } else {
        parts.y.push_back(v);
      }
    }
    return parts;
  };
  oracle.size_bound = [](std::size_t n) { return n; };
  return oracle;
}

void validate_separator(const Graph& g, const SeparatorParts& parts, std::size_t bound) {
  const std::size_t n = g.order();
  auto fail = [&](const std::string& why) {
    std::string what = "separator contract violated (" + why + ") on a subgraph with " +
                       std::to_string(n) + " vertices and " +
                       std::to_string(g.edge_count()) + " edges";
    if (n <= 32) what += ":\n" + format_graph(g);
    throw ContractViolation(what);
  };

  std::vector<std::uint8_t> side(n, 0);
  auto mark = [&](const std::vector<VertexId>& set, std::uint8_t tag) {
    for (VertexId v : set) {
      if (v >= n) fail("vertex out of range");
      if (side[v] != 0) fail("parts overlap");
      side[v] = tag;
    }
  };
  mark(parts.separator, 1);
  mark(parts.x, 2);
  mark(parts.y, 3);
  if (parts.separator.size() + parts.x.size() + parts.y.size() != n) fail("parts do not cover");
  if (n > 0 && parts.separator.empty()) fail("empty separator");
  if (parts.separator.size() > bound) {
    fail("separator of size " + std::to_string(parts.separator.size()) +
         " exceeds declared bound " + std::to_string(bound));
  }
  if (3 * parts.x.size() > 2 * n || 3 * parts.y.size() > 2 * n) fail("part larger than 2n/3");
  for (VertexId v : parts.x) {
    for (VertexId w : g.neighbors(v)) {
      if (side[w] == 3) fail("edge " + std::to_string(v) + "-" + std::to_string(w) + " joins X and Y");
    }
  }
}

HierarchicalDecomposition build_separator_decomposition(const Graph& g,
                                                        const SeparatorOracle& oracle) {
  if (g.order() == 0) throw InvalidArgument("cannot decompose the empty graph");

  struct Work {
    std::vector<VertexId> vertices;  // global ids, ascending
    VertexId parent;
  };
  std::vector<VertexId> parent;
  std::vector<std::vector<VertexId>> bags;
  std::vector<Work> stack;
  std::vector<VertexId> scratch(g.order(), kNoVertex);
  {
    std::vector<VertexId> all(g.order());
    for (VertexId v = 0; v < g.order(); ++v) all[v] = v;
    stack.push_back({std::move(all), kNoVertex});
  }

  while (!stack.empty()) {
    Work work = std::move(stack.back());
    stack.pop_back();
    const Graph sub = induce(g, work.vertices, scratch);
    const auto components = connected_components(sub);

    SeparatorParts parts;
    if (components.size() == 1) {
      parts = call_oracle(oracle, sub);
    } else {
      const auto largest = std::max_element(
          components.begin(), components.end(),
          [](const auto& a, const auto& b) { return a.size() < b.size(); });
      const Graph piece = induced_subgraph(sub, *largest);
      SeparatorParts inner = call_oracle(oracle, piece);
      for (VertexId v : inner.separator) parts.separator.push_back((*largest)[v]);
      std::sort(parts.separator.begin(), parts.separator.end());
      group_pieces(components_without(sub, parts.separator), parts);
      validate_separator(sub, parts, oracle.size_bound(sub.order()));
    }

    const auto node = static_cast<VertexId>(bags.size());
    parent.push_back(work.parent);
    auto to_global = [&](const std::vector<VertexId>& local) {
      std::vector<VertexId> out;
      out.reserve(local.size());
      for (VertexId v : local) out.push_back(work.vertices[v]);
      std::sort(out.begin(), out.end());
      return out;
    };
    bags.push_back(to_global(parts.separator));
    // Y is pushed first so X becomes the lower-numbered child.
    if (!parts.y.empty()) stack.push_back({to_global(parts.y), node});
    if (!parts.x.empty()) stack.push_back({to_global(parts.x), node});
  }

  const std::size_t n = g.order();
  RootedTree tree(0, std::move(parent));
  return HierarchicalDecomposition::make(std::move(tree), std::move(bags), n);
}

unsigned ceil_log_three_halves(std::size_t n) {
  unsigned k = 0;
  unsigned __int128 power3 = 1, power2 = 1;
  while (power3 < static_cast<unsigned __int128>(n) * power2) {
    power3 *= 3;
    power2 *= 2;
    ++k;
  }
  return k;
}

std::vector<BitString> sep_encode(const Graph& g, const HierarchicalDecomposition& d,
                                  const VertexOrdering& ordering) {
  const std::size_t n = g.order();
  if (n == 0) throw InvalidArgument("cannot label the empty graph");
  if (ordering.size() != n) throw InvalidArgument("ordering size differs from graph order");
  validate_hierarchical(d, g);
  if (!is_connected(g)) throw NotConnected();

  std::vector<std::vector<VertexId>> sorted_bags = d.bags;
  for (auto& bag : sorted_bags) {
    std::sort(bag.begin(), bag.end(), [&](VertexId a, VertexId b) {
      return ordering.index_of(a) < ordering.index_of(b);
    });
  }

  const unsigned width = index_width(n);
  const unsigned count_width = ceil_log2(n + 1);
  std::vector<BitString> labels;
  labels.reserve(n);
  BfsRunner bfs(g);
  std::vector<VertexId> ancestors;
  for (VertexId v = 0; v < n; ++v) {
    const auto own = d.vertex_node[v];
    ancestors.clear();
    for (auto node : d.tree.path_from_root(own)) {
      for (VertexId u : sorted_bags[node]) {
        ancestors.push_back(u);
        if (u == v) break;
      }
    }
    auto dist = bfs.run(v);
    BitString label;
    write_gamma(label, n);
    write_fixed(label, ancestors.size(), count_width);
    for (VertexId u : ancestors) {
      write_fixed(label, ordering.index_of(u) - 1, width);
      write_fixed(label, dist[u], width);
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

HierLabelDecoded sep_decode(const BitString& label) {
  BitCursor cursor(label);
  const std::uint64_t n = read_gamma(cursor);
  if (n > kNoVertex) throw MalformedLabel("vertex count out of range");
  const unsigned width = index_width(n);
  const std::uint64_t count = read_fixed(cursor, ceil_log2(n + 1));
  if (count == 0) throw MalformedLabel("label lists no ancestors");
  if (count * 2 * width != cursor.remaining()) {
    throw MalformedLabel("ancestor list length does not match the label");
  }
  HierLabelDecoded out;
  out.p.reserve(count);
  out.x.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t index = read_fixed(cursor, width);
    if (index >= n) throw MalformedLabel("ancestor index out of range");
    out.p.push_back(static_cast<std::uint32_t>(index + 1));
    out.x.push_back(static_cast<Distance>(read_fixed(cursor, width)));
  }
  return out;
}

SepEncoding sep_encode_default(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("cannot label the empty graph");
  if (!is_connected(g)) throw NotConnected();
  const SeparatorOracle oracle = is_tree(g) ? centroid_oracle() : bfs_layer_oracle();
  SepEncoding out{VertexOrdering::identity(g.order()),
                  build_separator_decomposition(g, oracle), {}};
  out.labels = sep_encode(g, out.decomposition, out.ordering);
  return out;
}

std::size_t sep_tree_label_bound(std::size_t n) {
  return 2 * (ceil_log_three_halves(n) + 1) * ceil_log2(n) + 3 * ceil_log2(n + 1) + 3;
}

}  // namespace isouni
