#include "isouni/universal.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "isouni/error.hpp"

namespace isouni {

Distance linf_pseudodistance(const DistanceVector& x, const DistanceVector& y) {
  const std::size_t m = std::min(x.size(), y.size());
  Distance best = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] == y[i]) continue;
    if (x[i] == kInfinity || y[i] == kInfinity) return kInfinity;
    best = std::max(best, x[i] > y[i] ? x[i] - y[i] : y[i] - x[i]);
  }
  return best;
}

bool dv_adjacent(const DistanceVector& a, const DistanceVector& b) {
  return a.size() == b.size() && linf_pseudodistance(a, b) == 1;
}

bool hdv_vertex_valid(const HierLabelDecoded& d) {
  return !d.p.empty() && d.p.size() == d.x.size() && d.x.back() == 0;
}

bool hdv_adjacent(const HierLabelDecoded& a, const HierLabelDecoded& b) {
  const std::size_t m = std::min(a.p.size(), b.p.size());
  if (!std::equal(a.p.begin(), a.p.begin() + m, b.p.begin())) return false;
  return linf_pseudodistance(a.x, b.x) == 1;
}

bool labels_adjacent(const DecodedLabel& a, const DecodedLabel& b) {
  if (a.index() != b.index()) return false;
  if (const auto* va = std::get_if<DistanceVector>(&a)) {
    return dv_adjacent(*va, std::get<DistanceVector>(b));
  }
  return hdv_adjacent(std::get<HierLabelDecoded>(a), std::get<HierLabelDecoded>(b));
}

std::string vertex_key(VertexKey key, const BitString& label, const DecodedLabel& decoded) {
  return key == VertexKey::kBits ? label.to_binary() : format_decoded(decoded);
}

namespace {

bool is_hierarchical(Scheme scheme) { return scheme != Scheme::kDv; }

std::string join(std::span<const std::uint32_t> values) {
  std::string out;
  for (std::uint32_t v : values) {
    out += std::to_string(v);
    out += ',';
  }
  return out;
}

// Pairwise scan with an early filter: flat vectors only meet vectors of the
// same length, hierarchical labels only meet labels whose p is a prefix of
// theirs (or the other way round).
std::vector<Edge> adjacency_edges(const std::vector<DecodedLabel>& payloads, Scheme scheme) {
  std::vector<Edge> edges;
  const auto n = static_cast<VertexId>(payloads.size());
  if (!is_hierarchical(scheme)) {
    std::map<std::size_t, std::vector<VertexId>> by_length;
    for (VertexId v = 0; v < n; ++v) {
      by_length[std::get<DistanceVector>(payloads[v]).size()].push_back(v);
    }
    for (const auto& [length, group] : by_length) {
      for (std::size_t i = 0; i < group.size(); ++i) {
        const auto& a = std::get<DistanceVector>(payloads[group[i]]);
        for (std::size_t j = i + 1; j < group.size(); ++j) {
          if (linf_pseudodistance(a, std::get<DistanceVector>(payloads[group[j]])) == 1) {
            edges.push_back({group[i], group[j]});
          }
        }
      }
    }
    return edges;
  }

  std::unordered_map<std::string, std::vector<VertexId>> by_p;
  for (VertexId v = 0; v < n; ++v) {
    by_p[join(std::get<HierLabelDecoded>(payloads[v]).p)].push_back(v);
  }
  for (VertexId a = 0; a < n; ++a) {
    const auto& da = std::get<HierLabelDecoded>(payloads[a]);
    std::string prefix;
    for (std::size_t len = 1; len <= da.p.size(); ++len) {
      prefix += std::to_string(da.p[len - 1]);
      prefix += ',';
      auto it = by_p.find(prefix);
      if (it == by_p.end()) continue;
      const bool same_p = len == da.p.size();
      for (VertexId b : it->second) {
        if (same_p && b <= a) continue;
        if (linf_pseudodistance(da.x, std::get<HierLabelDecoded>(payloads[b]).x) == 1) {
          edges.push_back({std::min(a, b), std::max(a, b)});
        }
      }
    }
  }
  return edges;
}

void finish_single_part(UniversalGraph& h) {
  h.graph = Graph::from_edges(h.payloads.size(), adjacency_edges(h.payloads, h.scheme));
  h.part_offsets = {0, h.order()};
}

}  // namespace

UniversalGraph build_realized_universal(std::span<const Graph> graphs, Scheme scheme) {
  UniversalGraph h;
  h.scheme = scheme;
  h.key = VertexKey::kDecoded;
  auto& index = h.part_index[0];

  std::vector<std::vector<VertexId>> images;
  images.reserve(graphs.size());
  for (const Graph& g : graphs) {
    const LabelSet set = encode(g, scheme);
    std::vector<VertexId> image(g.order());
    for (VertexId v = 0; v < g.order(); ++v) {
      DecodedLabel decoded = decode_label(scheme, set.labels[v]);
      if (is_hierarchical(scheme) && !hdv_vertex_valid(std::get<HierLabelDecoded>(decoded))) {
        throw ContractViolation("encoder produced a label failing the validity filter: " +
                                format_decoded(decoded));
      }
      std::string key = vertex_key(h.key, set.labels[v], decoded);
      auto [it, inserted] = index.try_emplace(std::move(key), static_cast<VertexId>(h.payloads.size()));
      if (inserted) {
        h.labels.push_back(set.labels[v]);
        h.payloads.push_back(std::move(decoded));
      }
      image[v] = it->second;
    }
    images.push_back(std::move(image));
  }

  finish_single_part(h);
  h.embeddings.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    h.embeddings.push_back({graphs[i], std::move(images[i])});
  }
  return h;
}

UniversalGraph build_class_universal(unsigned max_n, Scheme scheme) {
  if (max_n > kMaxEnumerationOrder) {
    throw InvalidArgument("class enumeration is limited to " +
                          std::to_string(kMaxEnumerationOrder) + " vertices");
  }
  std::vector<Graph> graphs;
  for (unsigned n = 1; n <= max_n; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) { graphs.push_back(g); });
  }
  return build_realized_universal(graphs, scheme);
}

UniversalGraph build_full_universal(unsigned k, Scheme scheme) {
  if (k > kMaxFullBits) {
    throw InvalidArgument("full construction is limited to k <= " + std::to_string(kMaxFullBits));
  }
  UniversalGraph h;
  h.scheme = scheme;
  h.key = VertexKey::kBits;
  auto& index = h.part_index[0];
  for (unsigned len = 0; len <= k; ++len) {
    for (std::uint64_t value = 0; value < (std::uint64_t{1} << len); ++value) {
      BitString bits;
      bits.append_bits(value, len);
      DecodedLabel decoded;
      try {
        decoded = decode_label(scheme, bits);
      } catch (const MalformedLabel&) {
        continue;
      }
      if (is_hierarchical(scheme) && !hdv_vertex_valid(std::get<HierLabelDecoded>(decoded))) {
        continue;
      }
      index.emplace(vertex_key(h.key, bits, decoded), static_cast<VertexId>(h.payloads.size()));
      h.labels.push_back(std::move(bits));
      h.payloads.push_back(std::move(decoded));
    }
  }
  finish_single_part(h);
  return h;
}

IsometryReport verify_isometric(const Graph& g, const UniversalGraph& h,
                                std::span<const VertexId> image, std::size_t graph_id) {
  const std::size_t n = g.order();
  if (image.size() != n) throw InvalidArgument("embedding size differs from the graph order");
  std::vector<bool> used(h.order(), false);
  for (VertexId v : image) {
    if (v >= h.order()) throw InvalidArgument("embedding image " + std::to_string(v) + " out of range");
    if (used[v]) throw InvalidArgument("embedding is not injective at image " + std::to_string(v));
    used[v] = true;
  }

  IsometryReport report;
  report.graph_id = graph_id;
  auto fail = [&](VertexId u, VertexId v, Distance dg, Distance dh, std::string why) {
    report.pass = false;
    report.u = u;
    report.v = v;
    report.d_g = dg;
    report.d_h = dh;
    report.failure = std::move(why);
  };

  for (VertexId u = 0; u < n && report.pass; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v) != h.graph.has_edge(image[u], image[v])) {
        fail(u, v, bfs_distances(g, u)[v], bfs_distances(h.graph, image[u])[image[v]],
             "adjacency not preserved");
        break;
      }
    }
  }
  if (!report.pass) return report;

  BfsRunner in_g(g);
  BfsRunner in_h(h.graph);
  bool have_farthest = false;
  for (VertexId u = 0; u < n; ++u) {
    auto dg = in_g.run(u);
    auto dh = in_h.run(image[u]);
    for (VertexId v = u + 1; v < n; ++v) {
      ++report.pairs_checked;
      if (dg[v] != dh[image[v]]) {
        fail(u, v, dg[v], dh[image[v]], "distance mismatch");
        return report;
      }
      if (!have_farthest || dg[v] > report.d_g) {
        have_farthest = true;
        report.u = u;
        report.v = v;
        report.d_g = report.d_h = dg[v];
      }
    }
  }
  return report;
}

std::vector<IsometryReport> verify_all(const UniversalGraph& h) {
  std::vector<IsometryReport> reports;
  reports.reserve(h.embeddings.size());
  for (std::size_t i = 0; i < h.embeddings.size(); ++i) {
    reports.push_back(verify_isometric(h.embeddings[i].source, h, h.embeddings[i].image, i));
  }
  return reports;
}

UniversalGraph disjoint_union_universal(std::span<const UniversalGraph> parts) {
  UniversalGraph out;
  out.part_offsets = {0};
  out.part_index.clear();
  if (!parts.empty()) {
    out.scheme = parts[0].scheme;
    out.key = parts[0].key;
  }
  std::vector<Edge> edges;
  for (const UniversalGraph& part : parts) {
    if (part.scheme != out.scheme || part.key != out.key) {
      throw InvalidArgument("cannot unite universal graphs of different schemes");
    }
    const auto offset = static_cast<VertexId>(out.payloads.size());
    for (const Edge& e : part.graph.edges()) edges.push_back({e.u + offset, e.v + offset});
    out.labels.insert(out.labels.end(), part.labels.begin(), part.labels.end());
    out.payloads.insert(out.payloads.end(), part.payloads.begin(), part.payloads.end());
    for (std::size_t i = 0; i + 1 < part.part_offsets.size(); ++i) {
      out.part_offsets.push_back(offset + part.part_offsets[i + 1]);
      auto& index = out.part_index.emplace_back();
      for (const auto& [key, v] : part.part_index[i]) index.emplace(key, v + offset);
    }
    for (const Embedding& e : part.embeddings) {
      Embedding moved{e.source, e.image};
      for (VertexId& v : moved.image) v += offset;
      out.embeddings.push_back(std::move(moved));
    }
  }
  out.graph = Graph::from_edges(out.payloads.size(), edges);
  return out;
}

Embedding embed_components(const UniversalGraph& h, const Graph& g) {
  const auto components = connected_components(g);
  if (components.size() > h.part_count()) {
    throw InvalidArgument("graph has " + std::to_string(components.size()) +
                          " components but the union has only " +
                          std::to_string(h.part_count()) + " copies");
  }
  Embedding out{g, std::vector<VertexId>(g.order(), kNoVertex)};
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& comp = components[i];
    const LabelSet set = encode(induced_subgraph(g, comp), h.scheme);
    for (std::size_t j = 0; j < comp.size(); ++j) {
      const auto key = vertex_key(h.key, set.labels[j], decode_label(h.scheme, set.labels[j]));
      auto it = h.part_index[i].find(key);
      if (it == h.part_index[i].end()) {
        throw InvalidArgument("label of vertex " + std::to_string(comp[j]) +
                              " is not present in copy " + std::to_string(i));
      }
      out.image[comp[j]] = it->second;
    }
  }
  return out;
}

std::string format_universal_mapping(const UniversalGraph& h) {
  std::string out;
  for (VertexId v = 0; v < h.order(); ++v) {
    const BitString& label = h.labels[v];
    out += std::to_string(v) + " " + (label.empty() ? "-" : label.to_hex()) + " " +
           std::to_string(label.size()) + "\n";
  }
  return out;
}

void write_universal(const UniversalGraph& h, const std::string& graph_path,
                     const std::string& mapping_path) {
  write_graph_file(h.graph, graph_path);
  std::ofstream out(mapping_path, std::ios::binary);
  if (!out) throw IoError("cannot write " + mapping_path);
  out << format_universal_mapping(h);
  if (!out) throw IoError("write failed for " + mapping_path);
}

}  // namespace isouni
