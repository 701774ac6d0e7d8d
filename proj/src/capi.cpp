#include "isouni/isouni.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "isouni/bench.hpp"
#include "isouni/error.hpp"
#include "isouni/graph.hpp"
#include "isouni/labels.hpp"
#include "isouni/universal.hpp"

struct isouni_graph {
  isouni::Graph graph;
};

struct isouni_labels {
  isouni::LabelSet set;
};

struct isouni_universal {
  isouni::UniversalGraph h;
};

namespace {

constexpr unsigned kMaxClassOrder = 6;

thread_local std::string g_last_error;

isouni_status status_of(isouni::ErrorKind kind) {
  using isouni::ErrorKind;
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return ISOUNI_ERR_INVALID_ARGUMENT;
    case ErrorKind::kParse:
      return ISOUNI_ERR_PARSE;
    case ErrorKind::kNotConnected:
      return ISOUNI_ERR_NOT_CONNECTED;
    case ErrorKind::kMalformedLabel:
      return ISOUNI_ERR_MALFORMED_LABEL;
    case ErrorKind::kContractViolation:
      return ISOUNI_ERR_CONTRACT;
    case ErrorKind::kIo:
      return ISOUNI_ERR_IO;
    case ErrorKind::kVerification:
      return ISOUNI_ERR_VERIFICATION;
  }
  return ISOUNI_ERR_INTERNAL;
}

template <typename F>
isouni_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return ISOUNI_OK;
  } catch (const isouni::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ISOUNI_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ISOUNI_ERR_INTERNAL;
  }
}

isouni_status null_argument(const char* what) {
  g_last_error = std::string(what) + " is null";
  return ISOUNI_ERR_INVALID_ARGUMENT;
}

isouni::Scheme to_scheme(isouni_scheme scheme) {
  switch (scheme) {
    case ISOUNI_SCHEME_DV:
      return isouni::Scheme::kDv;
    case ISOUNI_SCHEME_HDV:
      return isouni::Scheme::kHdv;
    case ISOUNI_SCHEME_SEP:
      return isouni::Scheme::kSep;
  }
  throw isouni::InvalidArgument("unknown scheme value " + std::to_string(scheme));
}

isouni_scheme from_scheme(isouni::Scheme scheme) {
  switch (scheme) {
    case isouni::Scheme::kDv:
      return ISOUNI_SCHEME_DV;
    case isouni::Scheme::kHdv:
      return ISOUNI_SCHEME_HDV;
    case isouni::Scheme::kSep:
      break;
  }
  return ISOUNI_SCHEME_SEP;
}

}  // namespace

extern "C" {

const char* isouni_last_error(void) { return g_last_error.c_str(); }

const char* isouni_status_name(isouni_status status) {
  switch (status) {
    case ISOUNI_OK:
      return "ok";
    case ISOUNI_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case ISOUNI_ERR_PARSE:
      return "parse error";
    case ISOUNI_ERR_NOT_CONNECTED:
      return "not connected";
    case ISOUNI_ERR_MALFORMED_LABEL:
      return "malformed label";
    case ISOUNI_ERR_CONTRACT:
      return "contract violation";
    case ISOUNI_ERR_IO:
      return "i/o error";
    case ISOUNI_ERR_VERIFICATION:
      return "verification failed";
    case ISOUNI_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

int isouni_scheme_parse(const char* tag, isouni_scheme* out) {
  if (!tag || !out) return -1;
  auto scheme = isouni::parse_scheme(tag);
  if (!scheme) return -1;
  *out = from_scheme(*scheme);
  return 0;
}

const char* isouni_scheme_tag(isouni_scheme scheme) {
  switch (scheme) {
    case ISOUNI_SCHEME_DV:
      return "dv";
    case ISOUNI_SCHEME_HDV:
      return "hdv";
    case ISOUNI_SCHEME_SEP:
      return "sep";
  }
  return "?";
}

int isouni_family_parse(const char* tag, isouni_family* out) {
  if (!tag || !out) return -1;
  auto family = isouni::parse_family(tag);
  if (!family) return -1;
  *out = *family == isouni::GraphFamily::kTree ? ISOUNI_FAMILY_TREE : ISOUNI_FAMILY_RANDOM;
  return 0;
}

// Graphs ---------------------------------------------------------------------

isouni_status isouni_graph_read(const char* path, isouni_graph** out) {
  if (!path || !out) return null_argument("path or out");
  return guarded([&] { *out = new isouni_graph{isouni::read_graph_file(path)}; });
}

isouni_status isouni_graph_parse(const char* text, isouni_graph** out) {
  if (!text || !out) return null_argument("text or out");
  return guarded([&] { *out = new isouni_graph{isouni::parse_graph(text)}; });
}

isouni_status isouni_graph_random(size_t n, double p, uint64_t seed, isouni_graph** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    if (!(p >= 0.0 && p <= 1.0)) throw isouni::InvalidArgument("edge probability must lie in [0, 1]");
    *out = new isouni_graph{isouni::random_graph(n, p, seed)};
  });
}

isouni_status isouni_graph_random_tree(size_t n, uint64_t seed, isouni_graph** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new isouni_graph{isouni::random_tree(n, seed)}; });
}

isouni_status isouni_graph_write(const isouni_graph* g, const char* path) {
  if (!g || !path) return null_argument("graph or path");
  return guarded([&] { isouni::write_graph_file(g->graph, path); });
}

size_t isouni_graph_order(const isouni_graph* g) { return g ? g->graph.order() : 0; }
size_t isouni_graph_edge_count(const isouni_graph* g) { return g ? g->graph.edge_count() : 0; }
int isouni_graph_is_connected(const isouni_graph* g) {
  return g && isouni::is_connected(g->graph) ? 1 : 0;
}
void isouni_graph_free(isouni_graph* g) { delete g; }

// Labels ---------------------------------------------------------------------

isouni_status isouni_encode(const isouni_graph* g, isouni_scheme scheme, isouni_labels** out) {
  if (!g || !out) return null_argument("graph or out");
  return guarded([&] { *out = new isouni_labels{isouni::encode(g->graph, to_scheme(scheme))}; });
}

isouni_status isouni_labels_read(const char* path, isouni_labels** out) {
  if (!path || !out) return null_argument("path or out");
  return guarded([&] { *out = new isouni_labels{isouni::read_label_file(path)}; });
}

isouni_status isouni_labels_write(const isouni_labels* labels, const char* path) {
  if (!labels || !path) return null_argument("labels or path");
  return guarded([&] { isouni::write_label_file(labels->set, path); });
}

size_t isouni_labels_count(const isouni_labels* labels) { return labels ? labels->set.order() : 0; }
size_t isouni_labels_max_bits(const isouni_labels* labels) {
  return labels ? labels->set.max_bits() : 0;
}
isouni_scheme isouni_labels_scheme(const isouni_labels* labels) {
  return labels ? from_scheme(labels->set.scheme) : ISOUNI_SCHEME_DV;
}

isouni_status isouni_labels_distance(const isouni_labels* labels, uint32_t u, uint32_t v,
                                     uint32_t* out) {
  if (!labels || !out) return null_argument("labels or out");
  return guarded([&] { *out = isouni::label_distance(labels->set, u, v); });
}

isouni_status isouni_labels_decode(const isouni_labels* labels, uint32_t v, char* buf,
                                   size_t cap, size_t* needed) {
  if (!labels) return null_argument("labels");
  return guarded([&] {
    if (v >= labels->set.order()) throw isouni::InvalidArgument("unknown vertex id " + std::to_string(v));
    const std::string text =
        isouni::format_decoded(isouni::decode_label(labels->set.scheme, labels->set.labels[v]));
    if (needed) *needed = text.size();
    if (buf && cap > 0) {
      const size_t n = std::min(cap - 1, text.size());
      std::memcpy(buf, text.data(), n);
      buf[n] = '\0';
    }
  });
}

isouni_status isouni_labels_verify(const isouni_labels* labels, const isouni_graph* g,
                                   uint64_t* pairs_checked) {
  if (!labels || !g) return null_argument("labels or graph");
  return guarded([&] {
    const auto& set = labels->set;
    const auto& graph = g->graph;
    if (set.order() != graph.order()) {
      throw isouni::Error(isouni::ErrorKind::kVerification,
                          "label file has " + std::to_string(set.order()) +
                              " vertices, graph has " + std::to_string(graph.order()));
    }
    std::vector<isouni::DecodedLabel> decoded;
    decoded.reserve(set.order());
    for (const auto& label : set.labels) decoded.push_back(isouni::decode_label(set.scheme, label));
    isouni::BfsRunner bfs(graph);
    uint64_t checked = 0;
    for (isouni::VertexId u = 0; u < graph.order(); ++u) {
      auto dist = bfs.run(u);
      for (isouni::VertexId v = 0; v < graph.order(); ++v) {
        const auto from_labels = isouni::decoded_distance(decoded[u], decoded[v]);
        ++checked;
        if (from_labels != dist[v]) {
          throw isouni::Error(isouni::ErrorKind::kVerification,
                              "d(" + std::to_string(u) + "," + std::to_string(v) + "): labels give " +
                                  std::to_string(from_labels) + ", BFS gives " +
                                  std::to_string(dist[v]));
        }
      }
    }
    if (pairs_checked) *pairs_checked = checked;
  });
}

void isouni_labels_free(isouni_labels* labels) { delete labels; }

// Universal graphs -----------------------------------------------------------

isouni_status isouni_universal_build_class(unsigned max_n, isouni_scheme scheme,
                                           isouni_universal** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    if (max_n < 1 || max_n > kMaxClassOrder) {
      throw isouni::InvalidArgument("class order must lie in [1, " + std::to_string(kMaxClassOrder) +
                                    "], got " + std::to_string(max_n));
    }
    *out = new isouni_universal{isouni::build_class_universal(max_n, to_scheme(scheme))};
  });
}

size_t isouni_universal_order(const isouni_universal* h) { return h ? h->h.order() : 0; }
size_t isouni_universal_edge_count(const isouni_universal* h) {
  return h ? h->h.graph.edge_count() : 0;
}
size_t isouni_universal_embedding_count(const isouni_universal* h) {
  return h ? h->h.embeddings.size() : 0;
}

isouni_status isouni_universal_verify(const isouni_universal* h, size_t index, isouni_report* out) {
  if (!h || !out) return null_argument("universal or out");
  return guarded([&] {
    if (index >= h->h.embeddings.size()) throw isouni::InvalidArgument("embedding index out of range");
    const auto& e = h->h.embeddings[index];
    const auto report = isouni::verify_isometric(e.source, h->h, e.image, index);
    *out = {report.pass ? 1 : 0, report.graph_id, report.u, report.v,
            report.d_g, report.d_h, report.pairs_checked};
    if (!report.pass) g_last_error = report.failure;
  });
}

isouni_status isouni_universal_embedding(const isouni_universal* h, size_t index, size_t* order,
                                         uint32_t* image, size_t image_cap) {
  if (!h || !order) return null_argument("universal or order");
  return guarded([&] {
    if (index >= h->h.embeddings.size()) throw isouni::InvalidArgument("embedding index out of range");
    const auto& e = h->h.embeddings[index];
    *order = e.image.size();
    if (image) {
      if (image_cap < e.image.size()) throw isouni::InvalidArgument("image buffer too small");
      std::copy(e.image.begin(), e.image.end(), image);
    }
  });
}

isouni_status isouni_universal_write(const isouni_universal* h, const char* graph_path,
                                     const char* mapping_path) {
  if (!h || !graph_path || !mapping_path) return null_argument("universal or path");
  return guarded([&] { isouni::write_universal(h->h, graph_path, mapping_path); });
}

void isouni_universal_free(isouni_universal* h) { delete h; }

// Bench ----------------------------------------------------------------------

isouni_status isouni_bench(isouni_scheme scheme, isouni_family family, const size_t* orders,
                           size_t count, double p, size_t seeds, uint64_t first_seed,
                           isouni_bench_row* rows) {
  if ((!orders || !rows) && count > 0) return null_argument("orders or rows");
  return guarded([&] {
    isouni::BenchConfig config;
    config.scheme = to_scheme(scheme);
    config.family = family == ISOUNI_FAMILY_TREE ? isouni::GraphFamily::kTree
                                                 : isouni::GraphFamily::kRandom;
    config.orders.assign(orders, orders + count);
    config.p = p;
    config.seeds = seeds;
    config.first_seed = first_seed;
    const auto result = isouni::run_bench(config);
    for (size_t i = 0; i < result.size(); ++i) {
      rows[i] = {result[i].n, result[i].max_label_bits, result[i].bound_bits, result[i].ratio,
                 result[i].within_bound ? 1 : 0};
    }
  });
}

size_t isouni_label_bound(isouni_scheme scheme, size_t n) {
  try {
    return isouni::label_bound(to_scheme(scheme), n);
  } catch (...) {
    return 0;
  }
}

const char* isouni_bound_formula(isouni_scheme scheme) {
  try {
    return isouni::bound_formula(to_scheme(scheme));
  } catch (...) {
    return "";
  }
}

}  // extern "C"
