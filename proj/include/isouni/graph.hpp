#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace isouni {

using VertexId = std::uint32_t;
using Distance = std::uint32_t;

inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Entry i is a distance to the i-th vertex of some ordering (or vertex id).
using DistanceVector = std::vector<Distance>;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph in compressed adjacency form. Neighbor lists are
/// sorted ascending; the structure is immutable once built.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Edgeless graph on `order` vertices.
  explicit Graph(std::size_t order) : offsets_(order + 1, 0) {}

  /// Throws InvalidArgument on out-of-range endpoints, loops or duplicates.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges);

  /// Takes ownership of prebuilt compressed adjacency. Only checked with
  /// assertions; callers must supply symmetric, sorted, loop-free lists.
  static Graph from_csr(std::vector<std::size_t> offsets,
                        std::vector<VertexId> neighbors);

  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(VertexId v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }

  bool has_edge(VertexId u, VertexId v) const;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> neighbors_;
};

/// A permutation of the vertices. Position i (0-based) holds v_{i+1}; the
/// 1-based position is what the labelling schemes call the V(G)-index.
class VertexOrdering {
 public:
  VertexOrdering() = default;
  explicit VertexOrdering(std::vector<VertexId> perm);

  static VertexOrdering identity(std::size_t n);

  std::size_t size() const noexcept { return perm_.size(); }
  VertexId vertex_at(std::size_t position) const { return perm_.at(position); }
  std::size_t position_of(VertexId v) const { return position_.at(v); }
  std::uint32_t index_of(VertexId v) const {
    return static_cast<std::uint32_t>(position_.at(v) + 1);
  }
  const std::vector<VertexId>& vertices() const noexcept { return perm_; }

  friend bool operator==(const VertexOrdering& a, const VertexOrdering& b) {
    return a.perm_ == b.perm_;
  }

 private:
  std::vector<VertexId> perm_;
  std::vector<std::size_t> position_;
};

/// Rooted tree on nodes {0..n-1} given by parent pointers. Children lists are
/// ascending. Construction validates that the parents describe one tree.
class RootedTree {
 public:
  RootedTree() = default;
  RootedTree(VertexId root, std::vector<VertexId> parent);

  std::size_t order() const noexcept { return parent_.size(); }
  VertexId root() const noexcept { return root_; }
  VertexId parent(VertexId v) const { return parent_.at(v); }
  const std::vector<VertexId>& parents() const noexcept { return parent_; }
  std::span<const VertexId> children(VertexId v) const {
    return {children_.data() + child_offsets_[v],
            child_offsets_[v + 1] - child_offsets_[v]};
  }

  /// Preorder with children visited in ascending id.
  const std::vector<VertexId>& preorder() const noexcept { return preorder_; }
  std::uint32_t depth(VertexId v) const { return depth_.at(v); }
  std::uint32_t height() const noexcept;
  std::vector<std::uint32_t> subtree_sizes() const;

  /// Ancestor in the inclusive sense: every node is its own ancestor.
  bool is_ancestor(VertexId ancestor, VertexId node) const;

  /// Nodes from the root down to `v`, both included.
  std::vector<VertexId> path_from_root(VertexId v) const;

  Graph to_graph() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.root_ == b.root_ && a.parent_ == b.parent_;
  }

 private:
  VertexId root_ = kNoVertex;
  std::vector<VertexId> parent_;
  std::vector<std::size_t> child_offsets_;
  std::vector<VertexId> children_;
  std::vector<VertexId> preorder_;
  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> entry_;
  std::vector<std::uint32_t> exit_;
};

/// Reusable breadth-first search. Switches to bottom-up steps when the
/// frontier dominates the unexplored edges, which keeps all-pairs sweeps over
/// dense graphs cheap. Not thread-safe; use one runner per worker.
class BfsRunner {
 public:
  explicit BfsRunner(const Graph& g);

  /// Distances from `src`, indexed by vertex id; valid until the next run.
  std::span<const Distance> run(VertexId src);

 private:
  const Graph* graph_;
  std::vector<Distance> dist_;
  std::vector<VertexId> frontier_;
  std::vector<VertexId> next_;
  std::vector<VertexId> unvisited_;
};

DistanceVector bfs_distances(const Graph& g, VertexId src);

std::vector<std::vector<VertexId>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

/// DFS spanning tree exploring neighbors in ascending id. Every non-tree edge
/// of `g` joins a vertex to one of its tree ancestors. Throws NotConnected.
RootedTree dfs_spanning_tree(const Graph& g, VertexId root = 0);

/// First-appearance order of the closed walk around the doubled tree
/// (children in ascending id), starting at the root.
VertexOrdering tour_ordering(const Graph& g, const RootedTree& tree);

/// Sum over i of d_G(v_{i-1}, v_i) along `ordering`, by BFS.
std::uint64_t consecutive_distance_sum(const Graph& g,
                                       const VertexOrdering& ordering);

inline constexpr unsigned kMaxEnumerationOrder = 7;

/// Visits every labelled connected simple graph on {0..n-1} exactly once,
/// for 1 <= n <= 7.
void for_each_connected_graph(unsigned n,
                              const std::function<void(const Graph&)>& visit);
std::vector<Graph> connected_graphs(unsigned n);

/// Every labelled simple graph on {0..n-1}, connected or not (n <= 7).
void for_each_graph(unsigned n, const std::function<void(const Graph&)>& visit);

/// G(n, p): each pair {i, j} with i < j, in lexicographic order, is kept when
/// the next uniform draw from mt19937_64(seed) is below p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Vertex i >= 1 attaches to a uniformly chosen vertex in [0, i).
Graph random_tree(std::size_t n, std::uint64_t seed);

/// Vertex whose removal leaves components of at most n/2 vertices; the
/// smallest such id. Throws InvalidArgument when `tree` is not a tree.
VertexId tree_centroid(const Graph& tree);
VertexId tree_centroid(const RootedTree& tree);

/// Text format: "n m", then m lines "u v"; lines starting with '#' ignored.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace isouni
