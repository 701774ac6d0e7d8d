#include "isouni/labels.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "isouni/dv_scheme.hpp"
#include "isouni/error.hpp"
#include "isouni/hdv_scheme.hpp"
#include "isouni/separator_scheme.hpp"

namespace isouni {

std::string_view scheme_tag(Scheme scheme) {
  switch (scheme) {
    case Scheme::kDv:
      return "dv";
    case Scheme::kHdv:
      return "hdv";
    case Scheme::kSep:
      return "sep";
  }
  return "?";
}

std::optional<Scheme> parse_scheme(std::string_view tag) {
  if (tag == "dv") return Scheme::kDv;
  if (tag == "hdv") return Scheme::kHdv;
  if (tag == "sep") return Scheme::kSep;
  return std::nullopt;
}

std::size_t LabelSet::max_bits() const noexcept {
  std::size_t best = 0;
  for (const auto& label : labels) best = std::max(best, label.size());
  return best;
}

LabelSet encode(const Graph& g, Scheme scheme) {
  switch (scheme) {
    case Scheme::kDv: {
      auto enc = dv_encode(g);
      return {scheme, std::move(enc.ordering), std::move(enc.labels)};
    }
    case Scheme::kHdv: {
      auto enc = hdv_encode(g);
      return {scheme, std::move(enc.ordering), std::move(enc.labels)};
    }
    case Scheme::kSep: {
      auto enc = sep_encode_default(g);
      return {scheme, std::move(enc.ordering), std::move(enc.labels)};
    }
  }
  throw InvalidArgument("unknown scheme");
}

DecodedLabel decode_label(Scheme scheme, const BitString& label) {
  switch (scheme) {
    case Scheme::kDv:
      return dv_decode(label);
    case Scheme::kHdv:
      return hdv_decode(label);
    case Scheme::kSep:
      return sep_decode(label);
  }
  throw InvalidArgument("unknown scheme");
}

Distance decoded_distance(const DecodedLabel& a, const DecodedLabel& b) {
  if (a.index() != b.index()) throw InvalidArgument("labels decoded by different schemes");
  if (const auto* va = std::get_if<DistanceVector>(&a)) {
    return dv_pairwise_distance(*va, std::get<DistanceVector>(b));
  }
  return hub_distance(std::get<HierLabelDecoded>(a), std::get<HierLabelDecoded>(b));
}

Distance label_distance(const LabelSet& set, VertexId u, VertexId v) {
  if (u >= set.order() || v >= set.order()) {
    throw InvalidArgument("unknown vertex id " + std::to_string(std::max(u, v)));
  }
  return decoded_distance(decode_label(set.scheme, set.labels[u]),
                          decode_label(set.scheme, set.labels[v]));
}

namespace {

std::string format_sequence(std::span<const std::uint32_t> values, bool distances) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += distances && values[i] == kInfinity ? "inf" : std::to_string(values[i]);
  }
  return out + ")";
}

}  // namespace

std::string format_decoded(const DecodedLabel& decoded) {
  if (const auto* v = std::get_if<DistanceVector>(&decoded)) return format_sequence(*v, true);
  const auto& h = std::get<HierLabelDecoded>(decoded);
  return "p=" + format_sequence(h.p, false) + " x=" + format_sequence(h.x, true);
}

// ---------------------------------------------------------------------------

std::string format_label_file(const LabelSet& set) {
  std::string out = std::to_string(set.order()) + " " + std::string(scheme_tag(set.scheme)) + "\n";
  out += "order:";
  for (VertexId v : set.ordering.vertices()) out += " " + std::to_string(v);
  out += "\n";
  for (VertexId v = 0; v < set.order(); ++v) {
    const BitString& label = set.labels[v];
    out += std::to_string(v) + " " + std::to_string(label.size()) + " " +
           (label.empty() ? "-" : label.to_hex()) + "\n";
  }
  return out;
}

namespace {

std::uint64_t parse_number(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

LabelSet parse_label_file(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
  std::size_t line_no = 0;
  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    auto tokens = tokens_of(line);
    if (!tokens.empty() && tokens.front().front() != '#') lines.emplace_back(line_no, tokens);
  }
  if (lines.size() < 2) throw ParseError("label file needs a header and an order line");

  const auto& header = lines[0].second;
  if (header.size() != 2) throw ParseError("line 1: expected \"n <scheme>\"");
  const std::uint64_t n = parse_number(header[0], lines[0].first);
  auto scheme = parse_scheme(header[1]);
  if (!scheme) throw ParseError("unknown scheme tag '" + std::string(header[1]) + "'");

  const auto& order_line = lines[1].second;
  if (order_line.front() != "order:" || order_line.size() != n + 1) {
    throw ParseError("line " + std::to_string(lines[1].first) + ": expected \"order:\" and " +
                     std::to_string(n) + " vertex ids");
  }
  std::vector<VertexId> perm;
  for (std::size_t i = 1; i < order_line.size(); ++i) {
    perm.push_back(static_cast<VertexId>(parse_number(order_line[i], lines[1].first)));
  }

  LabelSet set;
  set.scheme = *scheme;
  try {
    set.ordering = VertexOrdering(std::move(perm));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  if (lines.size() - 2 != n) {
    throw ParseError("expected " + std::to_string(n) + " label lines, found " +
                     std::to_string(lines.size() - 2));
  }
  set.labels.resize(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& [where, tokens] = lines[i];
    if (tokens.size() != 3) throw ParseError("line " + std::to_string(where) + ": expected 3 fields");
    const std::uint64_t v = parse_number(tokens[0], where);
    const std::uint64_t bits = parse_number(tokens[1], where);
    if (v >= n || seen[v]) throw ParseError("line " + std::to_string(where) + ": bad vertex id");
    seen[v] = true;
    try {
      set.labels[v] = BitString::from_hex(tokens[2] == "-" ? "" : tokens[2], bits);
    } catch (const MalformedLabel& e) {
      throw ParseError("line " + std::to_string(where) + ": " + e.what());
    }
  }
  return set;
}

LabelSet read_label_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_label_file(buffer.str());
}

void write_label_file(const LabelSet& set, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << format_label_file(set);
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace isouni
