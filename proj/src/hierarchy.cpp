#include "isouni/hierarchy.hpp"

#include <algorithm>

#include "isouni/error.hpp"

namespace isouni {

HierarchicalDecomposition HierarchicalDecomposition::make(
    RootedTree tree, std::vector<std::vector<VertexId>> bags, std::size_t order) {
  if (tree.order() != bags.size()) {
    throw ContractViolation("decomposition tree and bag count disagree");
  }
  HierarchicalDecomposition d{std::move(tree), std::move(bags),
                              std::vector<std::uint32_t>(order, kNoVertex)};
  for (std::uint32_t t = 0; t < d.bags.size(); ++t) {
    auto& bag = d.bags[t];
    if (bag.empty()) throw ContractViolation("empty bag at node " + std::to_string(t));
    std::sort(bag.begin(), bag.end());
    for (VertexId v : bag) {
      if (v >= order || d.vertex_node[v] != kNoVertex) {
        throw ContractViolation("bags do not partition the vertex set");
      }
      d.vertex_node[v] = t;
    }
  }
  if (std::find(d.vertex_node.begin(), d.vertex_node.end(), kNoVertex) != d.vertex_node.end()) {
    throw ContractViolation("bags do not cover the vertex set");
  }
  return d;
}

void validate_hierarchical(const HierarchicalDecomposition& d, const Graph& g) {
  if (d.vertex_node.size() != g.order()) {
    throw ContractViolation("decomposition covers a different vertex count");
  }
  for (const Edge& e : g.edges()) {
    auto a = d.vertex_node[e.u];
    auto b = d.vertex_node[e.v];
    if (!d.tree.is_ancestor(a, b) && !d.tree.is_ancestor(b, a)) {
      throw ContractViolation("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " joins unrelated bags");
    }
  }
}

HierarchicalDecomposition dfs_hierarchical_decomposition(const Graph& g) {
  RootedTree tree = dfs_spanning_tree(g, 0);
  std::vector<std::vector<VertexId>> bags(g.order());
  for (VertexId v = 0; v < g.order(); ++v) bags[v] = {v};
  return HierarchicalDecomposition::make(std::move(tree), std::move(bags), g.order());
}

std::vector<VertexId> natural_ancestors(const HierarchicalDecomposition& d,
                                        const VertexOrdering& ordering, VertexId v) {
  const auto own = d.vertex_node.at(v);
  const auto own_index = ordering.index_of(v);
  std::vector<VertexId> out;
  std::vector<VertexId> bag;
  for (auto node : d.tree.path_from_root(own)) {
    bag = d.bags[node];
    std::sort(bag.begin(), bag.end(), [&](VertexId a, VertexId b) {
      return ordering.index_of(a) < ordering.index_of(b);
    });
    for (VertexId u : bag) {
      if (node == own && ordering.index_of(u) > own_index) break;
      out.push_back(u);
    }
  }
  return out;
}

Distance hub_distance(const HierLabelDecoded& a, const HierLabelDecoded& b) {
  const std::size_t limit = std::min({a.p.size(), b.p.size(), a.x.size(), b.x.size()});
  Distance best = kInfinity;
  std::size_t common = 0;
  for (; common < limit && a.p[common] == b.p[common]; ++common) {
    if (a.x[common] == kInfinity || b.x[common] == kInfinity) continue;
    best = std::min<Distance>(best, a.x[common] + b.x[common]);
  }
  if (common == 0) {
    throw InvalidArgument("labels share no ancestor (labels from different graphs)");
  }
  return best;
}

}  // namespace isouni
