#include "isouni/graph.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "isouni/error.hpp"

namespace isouni {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, bound) by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  std::vector<std::size_t> offsets(order + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= order || e.v >= order) {
      throw InvalidArgument("edge " + std::to_string(e.u) + "-" +
                            std::to_string(e.v) + " out of range for " +
                            std::to_string(order) + " vertices");
    }
    if (e.u == e.v) {
      throw InvalidArgument("loop at vertex " + std::to_string(e.u));
    }
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (std::size_t i = 0; i < order; ++i) offsets[i + 1] += offsets[i];

  std::vector<VertexId> neighbors(offsets.back());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    neighbors[fill[e.u]++] = e.v;
    neighbors[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < order; ++v) {
    auto first = neighbors.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    auto last = neighbors.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw InvalidArgument("duplicate edge " + std::to_string(v) + "-" +
                            std::to_string(*dup));
    }
  }
  return from_csr(std::move(offsets), std::move(neighbors));
}

Graph Graph::from_csr(std::vector<std::size_t> offsets,
                      std::vector<VertexId> neighbors) {
  assert(!offsets.empty() && offsets.back() == neighbors.size());
  Graph g;
  g.offsets_ = std::move(offsets);
  g.neighbors_ = std::move(neighbors);
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= order() || v >= order()) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

VertexOrdering::VertexOrdering(std::vector<VertexId> perm)
    : perm_(std::move(perm)), position_(perm_.size(), kNoVertex) {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    VertexId v = perm_[i];
    if (v >= perm_.size() || position_[v] != kNoVertex) {
      throw InvalidArgument("ordering is not a permutation");
    }
    position_[v] = i;
  }
}

VertexOrdering VertexOrdering::identity(std::size_t n) {
  std::vector<VertexId> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<VertexId>(i);
  return VertexOrdering(std::move(perm));
}

// ---------------------------------------------------------------------------

RootedTree::RootedTree(VertexId root, std::vector<VertexId> parent)
    : root_(root), parent_(std::move(parent)) {
  const std::size_t n = parent_.size();
  if (root_ >= n) throw InvalidArgument("tree root out of range");
  if (parent_[root_] != kNoVertex) {
    throw InvalidArgument("tree root must not have a parent");
  }
  child_offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (v == root_) continue;
    if (parent_[v] >= n || parent_[v] == v) {
      throw InvalidArgument("invalid parent for node " + std::to_string(v));
    }
    ++child_offsets_[parent_[v] + 1];
  }
  for (std::size_t i = 0; i < n; ++i) child_offsets_[i + 1] += child_offsets_[i];
  children_.resize(n == 0 ? 0 : n - 1);
  std::vector<std::size_t> fill(child_offsets_.begin(), child_offsets_.end() - 1);
  for (VertexId v = 0; v < n; ++v) {
    if (v != root_) children_[fill[parent_[v]]++] = v;
  }

  preorder_.reserve(n);
  depth_.assign(n, 0);
  entry_.assign(n, 0);
  exit_.assign(n, 0);
  std::vector<std::pair<VertexId, std::size_t>> stack{{root_, 0}};
  preorder_.push_back(root_);
  std::uint32_t clock = 0;
  entry_[root_] = clock++;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto kids = children(v);
    if (next < kids.size()) {
      VertexId c = kids[next++];
      depth_[c] = depth_[v] + 1;
      entry_[c] = clock++;
      preorder_.push_back(c);
      stack.emplace_back(c, 0);
    } else {
      exit_[v] = clock;
      stack.pop_back();
    }
  }
  if (preorder_.size() != n) {
    throw InvalidArgument("parent pointers contain a cycle");
  }
}

std::uint32_t RootedTree::height() const noexcept {
  std::uint32_t h = 0;
  for (auto d : depth_) h = std::max(h, d);
  return h;
}

std::vector<std::uint32_t> RootedTree::subtree_sizes() const {
  std::vector<std::uint32_t> size(order(), 1);
  for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
    if (*it != root_) size[parent_[*it]] += size[*it];
  }
  return size;
}

bool RootedTree::is_ancestor(VertexId ancestor, VertexId node) const {
  return entry_.at(ancestor) <= entry_.at(node) && exit_.at(node) <= exit_.at(ancestor);
}

std::vector<VertexId> RootedTree::path_from_root(VertexId v) const {
  std::vector<VertexId> path(depth_.at(v) + 1);
  for (std::size_t i = path.size(); i-- > 0; v = parent_[v]) path[i] = v;
  return path;
}

Graph RootedTree::to_graph() const {
  std::vector<Edge> edges;
  edges.reserve(order());
  for (VertexId v = 0; v < order(); ++v) {
    if (v != root_) edges.push_back({std::min(v, parent_[v]), std::max(v, parent_[v])});
  }
  return Graph::from_edges(order(), edges);
}

// ---------------------------------------------------------------------------

BfsRunner::BfsRunner(const Graph& g) : graph_(&g), dist_(g.order(), kInfinity) {}

std::span<const Distance> BfsRunner::run(VertexId src) {
  const Graph& g = *graph_;
  const std::size_t n = g.order();
  if (src >= n) throw InvalidArgument("source vertex out of range");

  std::fill(dist_.begin(), dist_.end(), kInfinity);
  frontier_.clear();
  unvisited_.clear();
  dist_[src] = 0;
  frontier_.push_back(src);

  std::size_t unexplored_edges = 2 * g.edge_count() - g.degree(src);
  bool unvisited_valid = false;
  std::size_t visited = 1;
  Distance level = 0;
  while (!frontier_.empty()) {
    std::size_t frontier_edges = 0;
    for (VertexId u : frontier_) frontier_edges += g.degree(u);
    next_.clear();
    // A bottom-up step costs about n / |frontier| probes per unvisited vertex
    // (each probe hits the frontier with chance |frontier| / n), capped by the
    // edges left to explore; a top-down step scans every frontier edge.
    const std::size_t unvisited_count = n - visited;
    const std::size_t probes = unvisited_count * ((n + frontier_.size() - 1) / frontier_.size());
    const bool bottom_up = std::min(probes, unexplored_edges) < frontier_edges;
    if (bottom_up) {
      // Bottom-up: each unvisited vertex looks for a parent in the frontier.
      if (!unvisited_valid) {
        for (VertexId v = 0; v < n; ++v) {
          if (dist_[v] == kInfinity) unvisited_.push_back(v);
        }
        unvisited_valid = true;
      }
      std::size_t keep = 0;
      for (VertexId v : unvisited_) {
        if (dist_[v] != kInfinity) continue;
        bool found = false;
        for (VertexId u : g.neighbors(v)) {
          if (dist_[u] == level) {
            found = true;
            break;
          }
        }
        if (found) {
          next_.push_back(v);
        } else {
          unvisited_[keep++] = v;
        }
      }
      unvisited_.resize(keep);
      for (VertexId v : next_) dist_[v] = level + 1;
    } else {
      for (VertexId u : frontier_) {
        for (VertexId v : g.neighbors(u)) {
          if (dist_[v] == kInfinity) {
            dist_[v] = level + 1;
            next_.push_back(v);
          }
        }
      }
    }
    for (VertexId v : next_) unexplored_edges -= g.degree(v);
    visited += next_.size();
    frontier_.swap(next_);
    ++level;
  }
  return dist_;
}

DistanceVector bfs_distances(const Graph& g, VertexId src) {
  BfsRunner runner(g);
  auto d = runner.run(src);
  return DistanceVector(d.begin(), d.end());
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> components;
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    queue.assign(1, s);
    seen[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId v : g.neighbors(queue[head])) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    components.push_back(queue);
  }
  return components;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> local(g.order(), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order() || local[vertices[i]] != kNoVertex) {
      throw InvalidArgument("induced_subgraph: invalid vertex set");
    }
    local[vertices[i]] = static_cast<VertexId>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (VertexId w : g.neighbors(vertices[i])) {
      VertexId j = local[w];
      if (j != kNoVertex && i < j) edges.push_back({static_cast<VertexId>(i), j});
    }
  }
  return Graph::from_edges(vertices.size(), edges);
}

RootedTree dfs_spanning_tree(const Graph& g, VertexId root) {
  const std::size_t n = g.order();
  if (root >= n) throw InvalidArgument("DFS root out of range");
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<bool> seen(n, false);
  std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
  seen[root] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto nbrs = g.neighbors(v);
    while (next < nbrs.size() && seen[nbrs[next]]) ++next;
    if (next == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    VertexId w = nbrs[next++];
    seen[w] = true;
    parent[w] = v;
    ++visited;
    stack.emplace_back(w, 0);
  }
  if (visited != n) throw NotConnected();
  return RootedTree(root, std::move(parent));
}

VertexOrdering tour_ordering(const Graph& g, const RootedTree& tree) {
  if (tree.order() != g.order()) {
    throw InvalidArgument("tour_ordering: tree does not span the graph");
  }
  for (VertexId v = 0; v < tree.order(); ++v) {
    if (v != tree.root() && !g.has_edge(v, tree.parent(v))) {
      throw InvalidArgument("tour_ordering: tree edge missing from graph");
    }
  }
  // First appearances on the doubled-tree walk are exactly the preorder.
  return VertexOrdering(tree.preorder());
}

std::uint64_t consecutive_distance_sum(const Graph& g,
                                       const VertexOrdering& ordering) {
  BfsRunner runner(g);
  std::uint64_t sum = 0;
  for (std::size_t i = 1; i < ordering.size(); ++i) {
    Distance d = runner.run(ordering.vertex_at(i - 1))[ordering.vertex_at(i)];
    if (d == kInfinity) throw NotConnected();
    sum += d;
  }
  return sum;
}

// ---------------------------------------------------------------------------

namespace {

void check_enumeration_order(unsigned n, unsigned min_n) {
  if (n < min_n || n > kMaxEnumerationOrder) {
    throw InvalidArgument("enumeration order " + std::to_string(n) +
                          " outside [" + std::to_string(min_n) + ", " +
                          std::to_string(kMaxEnumerationOrder) + "]");
  }
}

// Visits each edge subset on n vertices; `connected_only` filters by a
// bitmask reachability sweep before any Graph is built.
void enumerate_masks(unsigned n, bool connected_only,
                     const std::function<void(const Graph&)>& visit) {
  std::vector<Edge> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::uint32_t adj[kMaxEnumerationOrder] = {};
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) {
        adj[pairs[i].u] |= 1u << pairs[i].v;
        adj[pairs[i].v] |= 1u << pairs[i].u;
      }
    }
    if (connected_only && n > 0) {
      std::uint32_t reach = 1, prev = 0;
      while (reach != prev) {
        prev = reach;
        for (unsigned v = 0; v < n; ++v) {
          if (reach >> v & 1) reach |= adj[v];
        }
      }
      if (reach != (1u << n) - 1) continue;
    }
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) edges.push_back(pairs[i]);
    }
    visit(Graph::from_edges(n, edges));
  }
}

}  // namespace

void for_each_connected_graph(unsigned n,
                              const std::function<void(const Graph&)>& visit) {
  check_enumeration_order(n, 1);
  enumerate_masks(n, true, visit);
}

std::vector<Graph> connected_graphs(unsigned n) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void for_each_graph(unsigned n, const std::function<void(const Graph&)>& visit) {
  check_enumeration_order(n, 0);
  enumerate_masks(n, false, visit);
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("edge probability outside [0, 1]");
  // Two passes over the same stream: count degrees, then fill in place.
  // Pair order guarantees ascending neighbor lists without sorting.
  std::vector<std::size_t> offsets(n + 1, 0);
  {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (uniform01(rng) < p) {
          ++offsets[i + 1];
          ++offsets[j + 1];
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<VertexId> neighbors(offsets.back());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (uniform01(rng) < p) {
          neighbors[fill[i]++] = static_cast<VertexId>(j);
          neighbors[fill[j]++] = static_cast<VertexId>(i);
        }
      }
    }
  }
  return Graph::from_csr(std::move(offsets), std::move(neighbors));
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t i = 1; i < n; ++i) {
    auto parent = static_cast<VertexId>(uniform_below(rng, i));
    edges.push_back({parent, static_cast<VertexId>(i)});
  }
  return Graph::from_edges(n, edges);
}

VertexId tree_centroid(const Graph& tree) {
  if (!is_tree(tree)) throw InvalidArgument("tree_centroid: input is not a tree");
  const std::size_t n = tree.order();
  RootedTree rooted = dfs_spanning_tree(tree, 0);
  auto size = rooted.subtree_sizes();
  for (VertexId v = 0; v < n; ++v) {
    std::size_t largest = n - size[v];
    for (VertexId c : rooted.children(v)) largest = std::max<std::size_t>(largest, size[c]);
    if (2 * largest <= n) return v;
  }
  throw std::logic_error("tree without centroid");
}

VertexId tree_centroid(const RootedTree& tree) { return tree_centroid(tree.to_graph()); }

// ---------------------------------------------------------------------------

namespace {

bool parse_uint(std::string_view token, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;
  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    auto where = "line " + std::to_string(line_no) + ": ";
    if (tokens.size() != 2) throw ParseError(where + "expected two integers");
    std::uint64_t a, b;
    if (!parse_uint(tokens[0], a) || !parse_uint(tokens[1], b)) {
      throw ParseError(where + "expected two non-negative integers");
    }
    if (!have_header) {
      if (a > std::numeric_limits<VertexId>::max() - 1) {
        throw ParseError(where + "vertex count too large");
      }
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (a >= n || b >= n) throw ParseError(where + "endpoint out of range");
    if (a == b) throw ParseError(where + "loop edge");
    edges.push_back({static_cast<VertexId>(std::min(a, b)),
                     static_cast<VertexId>(std::max(a, b))});
  }
  if (!have_header) throw ParseError("missing \"n m\" header");
  if (edges.size() != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << format_graph(g);
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace isouni
