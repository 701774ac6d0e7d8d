// Command-line front end over the isouni C API.
//
// Exit codes: 0 success, 1 internal error, 2 input or usage error,
// 3 verification failure, 4 disconnected input.

#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isouni/isouni.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;
constexpr int kExitNotConnected = 4;

struct GraphFree {
  void operator()(isouni_graph* g) const { isouni_graph_free(g); }
};
struct LabelsFree {
  void operator()(isouni_labels* l) const { isouni_labels_free(l); }
};
struct UniversalFree {
  void operator()(isouni_universal* h) const { isouni_universal_free(h); }
};
using GraphPtr = std::unique_ptr<isouni_graph, GraphFree>;
using LabelsPtr = std::unique_ptr<isouni_labels, LabelsFree>;
using UniversalPtr = std::unique_ptr<isouni_universal, UniversalFree>;

// Thrown after the message has been printed; carries the exit code.
struct Exit {
  int code;
};

int exit_code_for(isouni_status status) {
  switch (status) {
    case ISOUNI_OK:
      return kExitOk;
    case ISOUNI_ERR_INVALID_ARGUMENT:
    case ISOUNI_ERR_PARSE:
    case ISOUNI_ERR_MALFORMED_LABEL:
    case ISOUNI_ERR_IO:
      return kExitInput;
    case ISOUNI_ERR_NOT_CONNECTED:
      return kExitNotConnected;
    case ISOUNI_ERR_VERIFICATION:
      return kExitVerification;
    case ISOUNI_ERR_CONTRACT:
    case ISOUNI_ERR_INTERNAL:
      break;
  }
  return kExitInternal;
}

void check(isouni_status status) {
  if (status == ISOUNI_OK) return;
  std::fprintf(stderr, "error: %s\n", isouni_last_error());
  throw Exit{exit_code_for(status)};
}

[[noreturn]] void usage_error(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  throw Exit{kExitInput};
}

isouni_scheme scheme_of(const std::string& tag) {
  isouni_scheme scheme;
  if (isouni_scheme_parse(tag.c_str(), &scheme) != 0) usage_error("unknown scheme '" + tag + "'");
  return scheme;
}

GraphPtr load_graph(const std::string& path) {
  isouni_graph* g = nullptr;
  check(isouni_graph_read(path.c_str(), &g));
  return GraphPtr(g);
}

LabelsPtr load_labels(const std::string& path) {
  isouni_labels* l = nullptr;
  check(isouni_labels_read(path.c_str(), &l));
  return LabelsPtr(l);
}

std::string decoded_text(const isouni_labels* labels, uint32_t v) {
  size_t needed = 0;
  check(isouni_labels_decode(labels, v, nullptr, 0, &needed));
  std::string text(needed + 1, '\0');
  check(isouni_labels_decode(labels, v, text.data(), text.size(), &needed));
  text.resize(needed);
  return text;
}

std::string distance_text(uint32_t d) {
  return d == ISOUNI_INFINITY ? "inf" : std::to_string(d);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) usage_error("cannot write " + path);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance labelling schemes and isometric-universal graphs"};
  app.require_subcommand(1);

  // gen
  std::string gen_family = "random";
  std::size_t gen_n = 0;
  double gen_p = 0.1;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random graph or tree");
  gen->add_option("--family", gen_family, "random or tree")->check(CLI::IsMember({"random", "tree"}));
  gen->add_option("-n,--n", gen_n, "Number of vertices")->required();
  gen->add_option("-p,--p", gen_p, "Edge probability (random family)");
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("-o,--output", gen_out, "Output graph file")->required();

  // encode
  std::string enc_graph, enc_scheme, enc_out;
  auto* enc = app.add_subcommand("encode", "Label every vertex of a connected graph");
  enc->add_option("graph", enc_graph, "Graph file")->required();
  enc->add_option("-s,--scheme", enc_scheme, "dv, hdv or sep")->required();
  enc->add_option("-o,--output", enc_out, "Output label file")->required();

  // decode
  std::string dec_labels;
  std::vector<std::uint32_t> dec_vertices;
  auto* dec = app.add_subcommand("decode", "Print decoded labels");
  dec->add_option("labels", dec_labels, "Label file")->required();
  dec->add_option("-v,--vertex", dec_vertices, "Vertices to decode (default: all)");

  // dist
  std::string dist_labels;
  std::uint32_t dist_u = 0, dist_v = 0;
  auto* dist = app.add_subcommand("dist", "Distance between two vertices from their labels");
  dist->add_option("labels", dist_labels, "Label file")->required();
  dist->add_option("u", dist_u, "First vertex")->required();
  dist->add_option("v", dist_v, "Second vertex")->required();

  // universal
  unsigned uni_max_n = 0;
  std::string uni_scheme, uni_out;
  auto* uni = app.add_subcommand("universal",
                                 "Build and verify the universal graph of all connected graphs "
                                 "on at most N vertices");
  uni->add_option("--class-max-n", uni_max_n, "Largest class member order (at most 6)")->required();
  uni->add_option("-s,--scheme", uni_scheme, "dv, hdv or sep")->required();
  uni->add_option("-o,--output", uni_out,
                  "Output prefix; writes PREFIX.graph, PREFIX.map, PREFIX.embeddings, PREFIX.reports");

  // verify
  std::string ver_graph, ver_labels;
  auto* ver = app.add_subcommand("verify", "Check every label distance against BFS");
  ver->add_option("graph", ver_graph, "Graph file")->required();
  ver->add_option("labels", ver_labels, "Label file")->required();

  // bench
  std::string bench_scheme, bench_family = "random";
  std::vector<std::size_t> bench_orders;
  std::size_t bench_seeds = 1;
  double bench_p = 0.1;
  std::uint64_t bench_first_seed = 1;
  auto* bench = app.add_subcommand("bench", "Largest label per order against the explicit bound");
  bench->add_option("-s,--scheme", bench_scheme, "dv, hdv or sep")->required();
  bench->add_option("--family", bench_family, "random or tree")->check(CLI::IsMember({"random", "tree"}));
  bench->add_option("--n", bench_orders, "Comma-separated orders")->delimiter(',')->required();
  bench->add_option("--seeds", bench_seeds, "Seeds per order");
  bench->add_option("-p,--p", bench_p, "Edge probability (random family)");
  bench->add_option("--first-seed", bench_first_seed, "First seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) {
      isouni_graph* g = nullptr;
      if (gen_family == "tree") {
        check(isouni_graph_random_tree(gen_n, gen_seed, &g));
      } else {
        check(isouni_graph_random(gen_n, gen_p, gen_seed, &g));
      }
      GraphPtr owned(g);
      check(isouni_graph_write(g, gen_out.c_str()));
    } else if (*enc) {
      const isouni_scheme scheme = scheme_of(enc_scheme);
      GraphPtr g = load_graph(enc_graph);
      isouni_labels* labels = nullptr;
      check(isouni_encode(g.get(), scheme, &labels));
      LabelsPtr owned(labels);
      check(isouni_labels_write(labels, enc_out.c_str()));
      std::fprintf(stderr, "%zu labels, max %zu bits (bound %zu)\n", isouni_labels_count(labels),
                   isouni_labels_max_bits(labels),
                   isouni_label_bound(scheme, isouni_labels_count(labels)));
    } else if (*dec) {
      LabelsPtr labels = load_labels(dec_labels);
      if (dec_vertices.empty()) {
        for (uint32_t v = 0; v < isouni_labels_count(labels.get()); ++v) dec_vertices.push_back(v);
      }
      for (uint32_t v : dec_vertices) {
        std::printf("%u %s\n", v, decoded_text(labels.get(), v).c_str());
      }
    } else if (*dist) {
      LabelsPtr labels = load_labels(dist_labels);
      uint32_t d = 0;
      check(isouni_labels_distance(labels.get(), dist_u, dist_v, &d));
      std::printf("%s\n", distance_text(d).c_str());
    } else if (*uni) {
      const isouni_scheme scheme = scheme_of(uni_scheme);
      isouni_universal* h = nullptr;
      check(isouni_universal_build_class(uni_max_n, scheme, &h));
      UniversalPtr owned(h);
      const size_t count = isouni_universal_embedding_count(h);
      std::size_t failures = 0;
      std::uint64_t pairs = 0;
      std::vector<isouni_report> reports(count);
      for (size_t i = 0; i < count; ++i) {
        check(isouni_universal_verify(h, i, &reports[i]));
        pairs += reports[i].pairs_checked;
        if (!reports[i].pass) {
          ++failures;
          std::fprintf(stderr, "graph %zu: d_G(%u,%u) = %s but d_H = %s\n", i, reports[i].u,
                       reports[i].v, distance_text(reports[i].d_g).c_str(),
                       distance_text(reports[i].d_h).c_str());
        }
      }
      if (!uni_out.empty()) {
        check(isouni_universal_write(h, (uni_out + ".graph").c_str(), (uni_out + ".map").c_str()));
        auto emb = open_output(uni_out + ".embeddings");
        std::vector<uint32_t> image;
        for (size_t i = 0; i < count; ++i) {
          size_t order = 0;
          check(isouni_universal_embedding(h, i, &order, nullptr, 0));
          image.resize(order);
          check(isouni_universal_embedding(h, i, &order, image.data(), image.size()));
          emb << i << ' ' << order;
          for (uint32_t v : image) emb << ' ' << v;
          emb << '\n';
        }
        auto rep = open_output(uni_out + ".reports");
        rep << "graph pass pairs u v d_g d_h\n";
        for (const auto& r : reports) {
          rep << r.graph_id << ' ' << (r.pass ? "pass" : "fail") << ' ' << r.pairs_checked << ' '
              << r.u << ' ' << r.v << ' ' << distance_text(r.d_g) << ' ' << distance_text(r.d_h)
              << '\n';
        }
      }
      std::printf("scheme %s, class <= %u: %zu vertices, %zu edges, %zu graphs, %llu pairs, %zu failures\n",
                  isouni_scheme_tag(scheme), uni_max_n, isouni_universal_order(h),
                  isouni_universal_edge_count(h), count, static_cast<unsigned long long>(pairs),
                  failures);
      if (failures) return kExitVerification;
    } else if (*ver) {
      GraphPtr g = load_graph(ver_graph);
      LabelsPtr labels = load_labels(ver_labels);
      uint64_t pairs = 0;
      check(isouni_labels_verify(labels.get(), g.get(), &pairs));
      std::printf("ok: %llu pairs agree with BFS\n", static_cast<unsigned long long>(pairs));
    } else if (*bench) {
      const isouni_scheme scheme = scheme_of(bench_scheme);
      isouni_family family;
      isouni_family_parse(bench_family.c_str(), &family);
      std::vector<isouni_bench_row> rows(bench_orders.size());
      check(isouni_bench(scheme, family, bench_orders.data(), bench_orders.size(), bench_p,
                         bench_seeds, bench_first_seed, rows.data()));
      std::fprintf(stderr, "bound: %s\n", isouni_bound_formula(scheme));
      std::printf("n,max_label_bits,bound_bits,ratio\n");
      bool all_within = true;
      for (const auto& row : rows) {
        std::printf("%zu,%zu,%zu,%.4f\n", row.n, row.max_label_bits, row.bound_bits, row.ratio);
        all_within = all_within && row.within_bound;
      }
      if (!all_within) {
        std::fprintf(stderr, "error: a label exceeds its bound\n");
        return kExitVerification;
      }
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitOk;
}
