#include "isouni/bench.hpp"

#include <algorithm>

#include "isouni/dv_scheme.hpp"
#include "isouni/error.hpp"
#include "isouni/hdv_scheme.hpp"
#include "isouni/separator_scheme.hpp"

namespace isouni {

std::optional<GraphFamily> parse_family(std::string_view tag) {
  if (tag == "random") return GraphFamily::kRandom;
  if (tag == "tree") return GraphFamily::kTree;
  return std::nullopt;
}

std::size_t label_bound(Scheme scheme, std::size_t n) {
  switch (scheme) {
    case Scheme::kDv:
      return dv_label_bound(n);
    case Scheme::kHdv:
      return hdv_label_bound(n);
    case Scheme::kSep:
      return sep_tree_label_bound(n);
  }
  throw InvalidArgument("unknown scheme");
}

const char* bound_formula(Scheme scheme) {
  switch (scheme) {
    case Scheme::kDv:
      return "4n + 3*ceil(log2(n+1)) + 3";
    case Scheme::kHdv:
      return "ceil(n*log2(3)) + 8*ceil(log2(n+1))^2";
    case Scheme::kSep:
      return "2*(ceil(log_{3/2}(n)) + 1)*ceil(log2(n)) + 3*ceil(log2(n+1)) + 3  (trees)";
  }
  throw InvalidArgument("unknown scheme");
}

namespace {

std::size_t labels_of_connected(const Graph& g, Scheme scheme, bool* within, double* tour_ratio) {
  const LabelSet set = encode(g, scheme);
  const std::size_t max_bits = set.max_bits();
  if (max_bits > label_bound(scheme, g.order())) *within = false;
  if (tour_ratio && scheme == Scheme::kDv && g.order() > 1) {
    std::uint64_t sum = 0;
    for (std::size_t i = 1; i < g.order(); ++i) {
      const auto row = dv_decode(set.labels[set.ordering.vertex_at(i - 1)]);
      sum += row[i];
    }
    *tour_ratio = std::max(*tour_ratio, static_cast<double>(sum) / (2.0 * g.order()));
  }
  return max_bits;
}

}  // namespace

std::size_t component_max_label(const Graph& g, Scheme scheme, bool* within, double* tour_ratio) {
  if (is_connected(g)) return labels_of_connected(g, scheme, within, tour_ratio);
  std::size_t best = 0;
  for (const auto& comp : connected_components(g)) {
    best = std::max(best, labels_of_connected(induced_subgraph(g, comp), scheme, within, tour_ratio));
  }
  return best;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  if (config.scheme == Scheme::kSep && config.family != GraphFamily::kTree) {
    throw InvalidArgument("the separator bound is stated for trees; use --family tree");
  }
  if (config.seeds == 0) throw InvalidArgument("need at least one seed");
  if (config.family == GraphFamily::kRandom && !(config.p >= 0.0 && config.p <= 1.0)) {
    throw InvalidArgument("edge probability must lie in [0, 1]");
  }
  std::vector<BenchRow> rows;
  for (std::size_t n : config.orders) {
    if (n == 0 || n > kMaxBenchOrder) {
      throw InvalidArgument("order " + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxBenchOrder) + "]");
    }
    BenchRow row;
    row.n = n;
    row.bound_bits = label_bound(config.scheme, n);
    for (std::size_t s = 0; s < config.seeds; ++s) {
      const std::uint64_t seed = config.first_seed + s;
      const Graph g = config.family == GraphFamily::kTree ? random_tree(n, seed)
                                                          : random_graph(n, config.p, seed);
      row.max_label_bits = std::max(
          row.max_label_bits, component_max_label(g, config.scheme, &row.within_bound, &row.tour_ratio));
    }
    row.ratio = static_cast<double>(row.max_label_bits) / static_cast<double>(row.bound_bits);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace isouni
