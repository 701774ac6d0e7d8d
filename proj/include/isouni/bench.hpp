#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isouni/labels.hpp"

namespace isouni {

enum class GraphFamily { kRandom, kTree };

std::optional<GraphFamily> parse_family(std::string_view tag);

/// Explicit label-size bound for `scheme` at order n. The separator bound is
/// the tree (f = 1) form.
std::size_t label_bound(Scheme scheme, std::size_t n);

/// Human-readable form of label_bound.
const char* bound_formula(Scheme scheme);

inline constexpr std::size_t kMaxBenchOrder = 100000;

struct BenchConfig {
  Scheme scheme = Scheme::kDv;
  GraphFamily family = GraphFamily::kRandom;
  std::vector<std::size_t> orders;
  double p = 0.1;  // edge probability for the random family
  std::size_t seeds = 1;
  std::uint64_t first_seed = 1;
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t max_label_bits = 0;
  std::size_t bound_bits = 0;
  double ratio = 0;
  bool within_bound = true;
  // Largest sum of consecutive codebook distances over 2 x (component order).
  double tour_ratio = 0;
};

/// Encodes every seed's graph and reports the largest label per order.
/// Disconnected random graphs are labelled component by component and each
/// label is checked against the bound for its own component. The separator
/// scheme is only accepted on the tree family.
std::vector<BenchRow> run_bench(const BenchConfig& config);

/// Labels of each connected component of g, checked against label_bound.
/// Returns the largest label; sets *within to false on any excess.
std::size_t component_max_label(const Graph& g, Scheme scheme, bool* within,
                                double* tour_ratio = nullptr);

}  // namespace isouni
