// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--slow] [--only 1,3,...]
//
// --slow extends the exhaustive roundtrip to n = 6 and the realized
// universal graphs to the class of connected graphs on at most 5 vertices.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "isouni/bench.hpp"
#include "isouni/dv_scheme.hpp"
#include "isouni/error.hpp"
#include "isouni/hdv_scheme.hpp"
#include "isouni/labels.hpp"
#include "isouni/separator_scheme.hpp"
#include "isouni/universal.hpp"
#include "oracles.hpp"

using namespace isouni;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

// Criterion 6 collects tour sums while criteria 1 and 3 run.
struct TourStats {
  std::uint64_t graphs = 0;
  std::uint64_t violations = 0;
  double worst_ratio = 0;
  std::string witness;

  void add(const Graph& g, const VertexOrdering& ordering, const std::function<Distance(VertexId, VertexId)>& d) {
    std::uint64_t sum = 0;
    for (std::size_t i = 1; i < ordering.size(); ++i) {
      sum += d(ordering.vertex_at(i - 1), ordering.vertex_at(i));
    }
    ++graphs;
    const double ratio = static_cast<double>(sum) / (2.0 * g.order());
    worst_ratio = std::max(worst_ratio, ratio);
    if (sum > 2 * g.order()) {
      ++violations;
      if (witness.empty()) witness = "n=" + std::to_string(g.order()) + " sum=" + std::to_string(sum);
    }
  }
};

TourStats g_tours;

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::vector<std::uint32_t> indices_of(const VertexOrdering& ordering, const std::vector<VertexId>& vs) {
  std::vector<std::uint32_t> out;
  for (VertexId v : vs) out.push_back(ordering.index_of(v));
  return out;
}

// Natural ancestor ordering recomputed from the bag tree by walking parents.
std::vector<VertexId> oracle_natural_ancestors(const HierarchicalDecomposition& d,
                                               const VertexOrdering& ordering, VertexId v) {
  const auto nodes = oracle::root_path(d.tree.parents(), d.tree.root(), d.vertex_node[v]);
  std::vector<VertexId> out;
  for (auto node : nodes) {
    auto bag = d.bags[node];
    std::sort(bag.begin(), bag.end(),
              [&](VertexId a, VertexId b) { return ordering.index_of(a) < ordering.index_of(b); });
    for (VertexId u : bag) {
      out.push_back(u);
      if (u == v) return out;
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// 1. Exhaustive roundtrip against the BFS oracle.

Result criterion_roundtrip(unsigned max_n) {
  static const std::size_t kCounts[] = {0, 1, 1, 4, 38, 728, 26704};
  Result r;
  std::size_t graphs = 0, labels = 0, pairs = 0;
  auto fail = [&](const std::string& why) {
    if (r.pass) r.detail = why;
    r.pass = false;
  };
  for (unsigned n = 1; n <= max_n; ++n) {
    std::size_t count = 0;
    for_each_connected_graph(n, [&](const Graph& g) {
      ++count;
      const auto D = oracle::all_pairs(g);

      const auto dv = dv_encode(g);
      std::vector<DistanceVector> dv_rows;
      for (VertexId v = 0; v < n; ++v) {
        DistanceVector expect(n);
        for (std::size_t i = 0; i < n; ++i) expect[i] = D[v][dv.ordering.vertex_at(i)];
        dv_rows.push_back(dv_decode(dv.labels[v]));
        if (dv_rows.back() != expect) fail(fmt("dv vector mismatch, n=%u vertex %u", n, v));
      }
      g_tours.add(g, dv.ordering, [&](VertexId a, VertexId b) { return D[a][b]; });

      const auto hdv = hdv_encode(g);
      const RootedTree tree = dfs_spanning_tree(g, 0);
      for (VertexId v = 0; v < n; ++v) {
        const auto path = oracle::root_path(tree.parents(), tree.root(), v);
        HierLabelDecoded expect{indices_of(hdv.ordering, path), {}};
        for (VertexId a : path) expect.x.push_back(D[v][a]);
        if (hdv_decode(hdv.labels[v]) != expect) fail(fmt("hdv label mismatch, n=%u vertex %u", n, v));
      }

      const auto sep = sep_encode_default(g);
      std::vector<HierLabelDecoded> sep_rows, hdv_rows;
      for (VertexId v = 0; v < n; ++v) {
        const auto anc = oracle_natural_ancestors(sep.decomposition, sep.ordering, v);
        HierLabelDecoded expect{indices_of(sep.ordering, anc), {}};
        for (VertexId a : anc) expect.x.push_back(D[v][a]);
        sep_rows.push_back(sep_decode(sep.labels[v]));
        hdv_rows.push_back(hdv_decode(hdv.labels[v]));
        if (sep_rows.back() != expect) fail(fmt("sep label mismatch, n=%u vertex %u", n, v));
      }

      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = 0; v < n; ++v) {
          ++pairs;
          if (dv_pairwise_distance(dv_rows[u], dv_rows[v]) != D[u][v] ||
              hub_distance(hdv_rows[u], hdv_rows[v]) != D[u][v] ||
              hub_distance(sep_rows[u], sep_rows[v]) != D[u][v]) {
            fail(fmt("pairwise distance mismatch, n=%u pair (%u,%u)", n, u, v));
          }
        }
      }
      labels += 3 * n;
    });
    graphs += count;
    if (count != kCounts[n]) fail(fmt("n=%u: enumerated %zu graphs, expected %zu", n, count, kCounts[n]));
  }
  // The enumeration itself against brute-force edge subsets.
  for (unsigned n = 1; n <= std::min(max_n, 5u); ++n) {
    std::set<std::vector<Edge>> mine, brute;
    for_each_connected_graph(n, [&](const Graph& g) { mine.insert(g.edges()); });
    for (const Graph& g : oracle::brute_connected_graphs(n)) brute.insert(g.edges());
    if (mine != brute) fail(fmt("n=%u: enumeration differs from brute force", n));
  }
  if (r.pass) {
    r.detail = fmt("n<=%u: %zu graphs, %zu labels over dv/hdv/sep, %zu label pairs, all exact", max_n,
                   graphs, labels, pairs);
  }
  return r;
}

// --------------------------------------------------------------------------
// 2. Realized universal graph isometry.

Result criterion_realized(unsigned max_n) {
  Result r;
  std::vector<std::string> parts;
  for (Scheme scheme : {Scheme::kHdv, Scheme::kDv, Scheme::kSep}) {
    const UniversalGraph h = build_class_universal(max_n, scheme);
    std::size_t passed = 0;
    std::uint64_t pairs = 0;
    for (const auto& report : verify_all(h)) {
      pairs += report.pairs_checked;
      if (report.pass) {
        ++passed;
      } else if (r.pass) {
        r.pass = false;
        r.detail = fmt("%s: graph %zu pair (%u,%u) d_G=%u d_H=%u (%s)", scheme_tag(scheme).data(),
                       report.graph_id, report.u, report.v, report.d_g, report.d_h,
                       report.failure.c_str());
      }
    }
    // Independent recheck of every embedded pair with the reference BFS.
    for (const auto& e : h.embeddings) {
      const auto D = oracle::all_pairs(e.source);
      for (VertexId u = 0; u < e.source.order(); ++u) {
        const auto dh = oracle::bfs(h.graph, e.image[u]);
        for (VertexId v = 0; v < e.source.order(); ++v) {
          if (dh[e.image[v]] != D[u][v] && r.pass) {
            r.pass = false;
            r.detail = fmt("%s: reference BFS disagrees at (%u,%u)", scheme_tag(scheme).data(), u, v);
          }
        }
      }
    }
    std::size_t expected = 0;
    for (unsigned n = 1; n <= max_n; ++n) expected += oracle::brute_connected_graphs(n).size();
    if (h.embeddings.size() != expected && r.pass) {
      r.pass = false;
      r.detail = fmt("%s: %zu embeddings, expected %zu", scheme_tag(scheme).data(), h.embeddings.size(),
                     expected);
    }
    parts.push_back(fmt("%s |V(H')|=%zu |E|=%zu %zu/%zu isometric (%llu pairs)",
                        scheme_tag(scheme).data(), h.order(), h.graph.edge_count(), passed,
                        h.embeddings.size(), static_cast<unsigned long long>(pairs)));
  }
  if (r.pass) {
    r.detail = "class <= " + std::to_string(max_n) + ": ";
    for (std::size_t i = 0; i < parts.size(); ++i) r.detail += (i ? "; " : "") + parts[i];
  }
  return r;
}

// --------------------------------------------------------------------------
// 3. Label-size bounds (and tour sums for criterion 6).

struct BoundStats {
  std::size_t worst_bits = 0;
  double worst_ratio = 0;
  std::size_t labels = 0;
};

Result criterion_bounds() {
  Result r;
  BoundStats dv_stats, hdv_stats, sep_stats;
  std::size_t graphs = 0;

  auto check = [&](const Graph& comp, Scheme scheme, BoundStats& stats) {
    const LabelSet set = encode(comp, scheme);
    const std::size_t bound = scheme == Scheme::kDv    ? oracle::dv_bound(comp.order())
                              : scheme == Scheme::kHdv ? oracle::hdv_bound(comp.order())
                                                       : oracle::sep_tree_bound(comp.order());
    const std::size_t bits = set.max_bits();
    stats.labels += set.order();
    stats.worst_bits = std::max(stats.worst_bits, bits);
    stats.worst_ratio = std::max(stats.worst_ratio, static_cast<double>(bits) / static_cast<double>(bound));
    if (bits > bound && r.pass) {
      r.pass = false;
      r.detail = fmt("%s label of %zu bits exceeds bound %zu at n=%zu", scheme_tag(scheme).data(), bits,
                     bound, comp.order());
    }
    if (scheme == Scheme::kDv) {
      // Consecutive codebook distances read off the decoded vectors.
      g_tours.add(comp, set.ordering, [&](VertexId a, VertexId b) {
        return dv_decode(set.labels[a])[set.ordering.position_of(b)];
      });
    }
  };

  auto per_component = [&](const Graph& g, std::initializer_list<Scheme> schemes) {
    ++graphs;
    const auto comps = connected_components(g);
    bool seen_isolated = false;
    for (const auto& comp : comps) {
      // Isolated vertices all carry the K1 label; check one per graph.
      if (comp.size() == 1) {
        if (seen_isolated) continue;
        seen_isolated = true;
      }
      const Graph sub = comps.size() == 1 ? g : induced_subgraph(g, comp);
      for (Scheme s : schemes) {
        check(sub, s, s == Scheme::kDv ? dv_stats : s == Scheme::kHdv ? hdv_stats : sep_stats);
      }
    }
  };

  for (std::size_t n : {10u, 100u, 1000u, 10000u}) {
    for (double p : {0.01, 0.1, 0.5}) {
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        per_component(random_graph(n, p, seed), {Scheme::kDv, Scheme::kHdv});
      }
    }
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      per_component(random_tree(n, seed), {Scheme::kDv, Scheme::kHdv, Scheme::kSep});
    }
  }
  if (r.pass) {
    r.detail = fmt("%zu graphs; max bits/bound: dv %.3f (%zu labels), hdv %.3f (%zu labels), "
                   "sep-on-trees %.3f (%zu labels)",
                   graphs, dv_stats.worst_ratio, dv_stats.labels, hdv_stats.worst_ratio,
                   hdv_stats.labels, sep_stats.worst_ratio, sep_stats.labels);
  }
  return r;
}

// --------------------------------------------------------------------------
// 4. Heavy-path colouring conditions on random trees.

Result criterion_coloring() {
  Result r;
  std::size_t trees = 0;
  unsigned worst_blue = 0, worst_runs = 0;
  for (std::size_t n : {1000u, 10000u}) {
    const unsigned limit = oracle::flog2(n) + 1;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      ++trees;
      const RootedTree tree = dfs_spanning_tree(random_tree(n, seed), 0);
      const HeavyColoring c = heavy_coloring(tree);
      auto fail = [&](const std::string& why) {
        if (r.pass) r.detail = fmt("n=%zu seed=%llu: ", n, static_cast<unsigned long long>(seed)) + why;
        r.pass = false;
      };
      if (c.ordering.vertex_at(0) != tree.root() || c.color[tree.root()] != Color::kBlue) {
        fail("root is not first and blue");
      }
      for (std::size_t i = 0; i < n; ++i) {
        const VertexId v = c.ordering.vertex_at(i);
        if (c.color[v] == Color::kRed && (i == 0 || c.ordering.vertex_at(i - 1) != tree.parent(v))) {
          fail(fmt("red vertex %u does not directly follow its parent", v));
        }
      }
      for (VertexId v = 0; v < n; ++v) {
        const auto path = oracle::root_path(tree.parents(), tree.root(), v);
        unsigned blue = 0, runs = 0;
        std::uint32_t prev = 0;
        for (std::size_t i = 0; i < path.size(); ++i) {
          if (c.color[path[i]] == Color::kBlue) ++blue;
          const auto idx = c.ordering.index_of(path[i]);
          if (i == 0 || idx != prev + 1) ++runs;
          prev = idx;
        }
        worst_blue = std::max(worst_blue, blue);
        worst_runs = std::max(worst_runs, runs);
        if (blue > limit) fail(fmt("vertex %u has %u blue ancestors > %u", v, blue, limit));
        if (runs > limit) fail(fmt("vertex %u root path splits into %u runs > %u", v, runs, limit));
      }
    }
  }
  if (r.pass) {
    r.detail = fmt("%zu trees; max blue ancestors %u, max root-path runs %u (limit floor(log2 n)+1 = %u)",
                   trees, worst_blue, worst_runs, oracle::flog2(10000) + 1);
  }
  return r;
}

// --------------------------------------------------------------------------
// 5. Distance queries from labels only on G(200, p).

Result criterion_queries() {
  Result r;
  const std::size_t n = 200;
  std::uint64_t pairs = 0, cross = 0;
  for (double p : {0.02, 0.1, 0.5}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Graph g = random_graph(n, p, seed);
      std::vector<std::vector<Distance>> D;
      for (VertexId v = 0; v < n; ++v) D.push_back(oracle::bfs(g, v));
      // Labels are per component; pairs across components are infinite on
      // both sides by construction.
      const auto comps = connected_components(g);
      std::vector<std::size_t> comp_of(n);
      for (std::size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c]) comp_of[v] = c;
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v)
          if (comp_of[u] != comp_of[v]) {
            ++cross;
            if (D[u][v] != oracle::kInf && r.pass) {
              r.pass = false;
              r.detail = "vertices in different components at finite distance";
            }
          }
      for (const auto& comp : comps) {
        const Graph sub = induced_subgraph(g, comp);
        const auto dv = dv_encode(sub);
        const auto hdv = hdv_encode(sub);
        std::vector<DistanceVector> a;
        std::vector<HierLabelDecoded> b;
        for (VertexId v = 0; v < sub.order(); ++v) {
          a.push_back(dv_decode(dv.labels[v]));
          b.push_back(hdv_decode(hdv.labels[v]));
        }
        for (VertexId u = 0; u < sub.order(); ++u) {
          for (VertexId v = 0; v < sub.order(); ++v) {
            ++pairs;
            const Distance truth = D[comp[u]][comp[v]];
            if ((dv_pairwise_distance(a[u], a[v]) != truth || hub_distance(b[u], b[v]) != truth) &&
                r.pass) {
              r.pass = false;
              r.detail = fmt("p=%.2f seed=%llu pair (%u,%u)", p, static_cast<unsigned long long>(seed),
                             comp[u], comp[v]);
            }
          }
        }
      }
    }
  }
  if (r.pass) {
    r.detail = fmt("30 graphs, %llu same-component pairs exact under dv and hub queries, %llu "
                   "cross-component pairs infinite",
                   static_cast<unsigned long long>(pairs), static_cast<unsigned long long>(cross));
  }
  return r;
}

// --------------------------------------------------------------------------
// 6. Tour bound, over the graphs seen by criteria 1 and 3.

Result criterion_tour(bool ran_roundtrip, bool ran_bounds) {
  Result r;
  if (!ran_roundtrip || !ran_bounds) {
    r.pass = false;
    r.detail = "needs criteria 1 and 3 in the same run";
    return r;
  }
  r.pass = g_tours.violations == 0;
  r.detail = r.pass ? fmt("%llu codebook orderings, max sum / 2n = %.3f",
                          static_cast<unsigned long long>(g_tours.graphs), g_tours.worst_ratio)
                    : "violation: " + g_tours.witness;
  return r;
}

// --------------------------------------------------------------------------
// 7. Disjoint-union wrapper over every labelled graph on 4 vertices.

Result criterion_union() {
  Result r;
  std::vector<std::string> parts;
  for (Scheme scheme : {Scheme::kHdv, Scheme::kDv}) {
    const UniversalGraph base = build_class_universal(4, scheme);
    const std::vector<UniversalGraph> copies(4, base);
    const UniversalGraph h = disjoint_union_universal(copies);
    std::size_t graphs = 0, passed = 0;
    std::uint64_t infinite = 0;
    for_each_graph(4, [&](const Graph& g) {
      ++graphs;
      const Embedding e = embed_components(h, g);
      const auto report = verify_isometric(g, h, e.image, graphs - 1);
      bool ok = report.pass;
      for (VertexId u = 0; u < 4; ++u) {
        const auto dg = oracle::bfs(g, u);
        const auto dh = oracle::bfs(h.graph, e.image[u]);
        for (VertexId v = 0; v < 4; ++v) {
          if (dg[v] != dh[e.image[v]]) ok = false;
          if (dg[v] == oracle::kInf) ++infinite;
        }
      }
      if (ok) {
        ++passed;
      } else if (r.pass) {
        r.pass = false;
        r.detail = fmt("%s: graph %zu fails (%s)", scheme_tag(scheme).data(), graphs - 1,
                       report.failure.c_str());
      }
    });
    if (graphs != 64 && r.pass) {
      r.pass = false;
      r.detail = fmt("enumerated %zu graphs on 4 vertices, expected 64", graphs);
    }
    parts.push_back(fmt("%s %zu/%zu (|V|=%zu, %llu infinite ordered pairs matched)",
                        scheme_tag(scheme).data(), passed, graphs, h.order(),
                        static_cast<unsigned long long>(infinite)));
  }
  if (r.pass) r.detail = "4 copies of the realized <=4 graph: " + parts[0] + "; " + parts[1];
  return r;
}

// --------------------------------------------------------------------------
// 8. Full construction over all bit strings of length <= 14.

Result criterion_full() {
  Result r;
  const unsigned k = kMaxFullBits;
  std::vector<std::string> parts;
  for (Scheme scheme : {Scheme::kDv, Scheme::kHdv}) {
    const UniversalGraph h = build_full_universal(k, scheme);
    if (h.order() > (std::size_t{1} << (k + 1)) - 1 && r.pass) {
      r.pass = false;
      r.detail = fmt("%s: %zu vertices exceeds 2^(k+1)-1", scheme_tag(scheme).data(), h.order());
    }
    for (unsigned n : {1u, 2u}) {
      const Graph g = n == 1 ? Graph(1) : Graph::from_edges(2, std::vector<Edge>{{0, 1}});
      try {
        const Embedding e = embed_components(h, g);
        const auto report = verify_isometric(g, h, e.image);
        if (!report.pass && r.pass) {
          r.pass = false;
          r.detail = fmt("%s: K%u not isometric (%s)", scheme_tag(scheme).data(), n, report.failure.c_str());
        }
      } catch (const Error& e) {
        if (r.pass) {
          r.pass = false;
          r.detail = fmt("%s: K%u not embedded: %s", scheme_tag(scheme).data(), n, e.what());
        }
      }
    }
    parts.push_back(fmt("%s %zu vertices, %zu edges", scheme_tag(scheme).data(), h.order(),
                        h.graph.edge_count()));
  }
  if (r.pass) {
    r.detail = fmt("k=%u (limit %zu vertices): ", k, (std::size_t{1} << (k + 1)) - 1) + parts[0] +
               "; " + parts[1] + "; K1 and K2 isometric in both";
  }
  return r;
}

// --------------------------------------------------------------------------
// 9. Negative controls.

// Replaces the trit field of an hdv label (the trailing bits) by `trits`.
BitString with_trits(const BitString& label, std::size_t field_width, const std::vector<std::uint8_t>& trits) {
  BitString out;
  for (std::size_t i = 0; i + field_width < label.size(); ++i) out.push_back(label[i]);
  pack_trits(out, trits);
  return out;
}

bool rejected(const BitString& label) {
  try {
    return !hdv_vertex_valid(hdv_decode(label));
  } catch (const MalformedLabel&) {
    return true;
  }
}

Result criterion_negative() {
  Result r;
  std::uint64_t trit_cases = 0, trit_caught = 0, bit_cases = 0, bit_caught = 0;
  std::string trit_witness;

  std::vector<Graph> graphs;
  for (unsigned n = 2; n <= 5; ++n) for_each_connected_graph(n, [&](const Graph& g) { graphs.push_back(g); });
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = random_graph(30, 0.2, seed);
    if (is_connected(g)) graphs.push_back(g);
  }
  for (const Graph& g : graphs) {
    const auto enc = hdv_encode(g);
    for (VertexId v = 0; v < g.order(); ++v) {
      const BitString& label = enc.labels[v];
      const auto decoded = hdv_decode(label);
      const std::size_t m = decoded.p.size() - 1;
      if (m == 0) continue;
      const std::size_t width = trit_field_width(m);
      BitCursor cursor(label);
      for (std::size_t i = 0; i < label.size() - width; ++i) cursor.read_bit();
      const auto trits = unpack_trits(cursor, m);
      // Every other value of every single trit.
      for (std::size_t t = 0; t < m; ++t) {
        for (std::uint8_t value = 0; value < 3; ++value) {
          if (value == trits[t]) continue;
          auto bad = trits;
          bad[t] = value;
          ++trit_cases;
          if (rejected(with_trits(label, width, bad))) {
            ++trit_caught;
            if (trit_witness.empty() && g.order() == 4) {
              trit_witness = fmt("e.g. n=4 vertex %u trit %zu: %u->%u", v, t, trits[t], value);
            }
          } else if (r.pass) {
            r.pass = false;
            r.detail = fmt("undetected trit corruption: vertex %u trit %zu", v, t);
          }
        }
      }
      // Single bit flips inside the trit field.
      for (std::size_t i = label.size() - width; i < label.size(); ++i) {
        BitString bad = label;
        bad.flip(i);
        ++bit_cases;
        // A flip can move two trits at once and keep the sum, so this
        // count is informational.
        if (rejected(bad)) ++bit_caught;
      }
    }
  }

  // Swapping two images: caught exactly when the transposition is not an
  // isometry of the source graph.
  std::uint64_t swaps = 0, swap_caught = 0, swap_isometric = 0;
  std::string swap_witness;
  const UniversalGraph h = build_class_universal(4, Scheme::kHdv);
  for (const Embedding& e : h.embeddings) {
    const auto D = oracle::all_pairs(e.source);
    const auto n = static_cast<VertexId>(e.source.order());
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        auto image = e.image;
        std::swap(image[a], image[b]);
        auto swap_of = [&](VertexId x) { return x == a ? b : x == b ? a : x; };
        bool isometry = true;
        for (VertexId x = 0; x < n; ++x)
          for (VertexId y = 0; y < n; ++y)
            if (D[swap_of(x)][swap_of(y)] != D[x][y]) isometry = false;
        const auto report = verify_isometric(e.source, h, image);
        ++swaps;
        if (isometry) ++swap_isometric;
        if (!report.pass) {
          ++swap_caught;
          if (swap_witness.empty() && n == 3) {
            swap_witness = fmt("e.g. n=3 swap %u<->%u: pair (%u,%u) d_G=%u d_H=%u", a, b, report.u,
                               report.v, report.d_g, report.d_h);
          }
        }
        if (report.pass != isometry && r.pass) {
          r.pass = false;
          r.detail = fmt("swap %u<->%u misjudged on a %u-vertex graph", a, b, n);
        }
      }
    }
  }
  if (r.pass && (trit_caught == 0 || swap_caught == 0)) {
    r.pass = false;
    r.detail = "no corruption was exercised";
  }
  if (r.pass) {
    r.detail = fmt("trit corruptions %llu/%llu rejected (%s); trit-field bit flips %llu/%llu rejected (not required); "
                   "image swaps %llu/%llu flagged, the other %llu are isometries (%s)",
                   static_cast<unsigned long long>(trit_caught), static_cast<unsigned long long>(trit_cases),
                   trit_witness.c_str(), static_cast<unsigned long long>(bit_caught),
                   static_cast<unsigned long long>(bit_cases), static_cast<unsigned long long>(swap_caught),
                   static_cast<unsigned long long>(swaps), static_cast<unsigned long long>(swap_isometric),
                   swap_witness.c_str());
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  bool slow = false;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--slow") == 0) {
      slow = true;
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      std::stringstream list(argv[++i]);
      for (std::string item; std::getline(list, item, ',');) only.insert(std::stoi(item));
    } else {
      std::fprintf(stderr, "usage: %s [--slow] [--only 1,2,...]\n", argv[0]);
      return 2;
    }
  }
  auto wanted = [&](int c) { return only.empty() || only.count(c); };

  struct Criterion {
    int id;
    std::string name;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, slow ? "exhaustive roundtrip n<=6" : "exhaustive roundtrip n<=5",
       [&] { return criterion_roundtrip(slow ? 6 : 5); }},
      {2, slow ? "realized universal isometry <=5" : "realized universal isometry <=4",
       [&] { return criterion_realized(slow ? 5 : 4); }},
      {3, "label-size bounds", criterion_bounds},
      {4, "heavy-path colouring conditions", criterion_coloring},
      {5, "distance queries from labels", criterion_queries},
      {6, "tour bound", [&] { return criterion_tour(wanted(1), wanted(3)); }},
      {7, "disjoint-union wrapper", criterion_union},
      {8, "full construction k<=14", criterion_full},
      {9, "negative controls", criterion_negative},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (!wanted(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  criterion %d  %s: %s [%.1fs]\n", r.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                r.detail.c_str(), secs);
    std::fflush(stdout);
    if (!r.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
