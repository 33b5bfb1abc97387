#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "maxqc/graph.hpp"

namespace maxqc {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<std::string_view> tokenize(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint64_t> parse_uint(std::string_view tok) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

bool is_comment(std::string_view s) {
  auto pos = s.find_first_not_of(" \t\r");
  return pos != std::string_view::npos && (s[pos] == '#' || s[pos] == '%');
}

bool is_blank(std::string_view s) { return s.find_first_not_of(" \t\r") == std::string_view::npos; }

std::vector<Line> read_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    lines.push_back({number, std::move(text)});
  }
  if (in.bad()) throw GraphIoError("read failure");
  return lines;
}

// Header of a METIS file: "n m [fmt [ncon]]".
struct MetisHeader {
  std::size_t line_index;
  std::uint64_t n;
  std::uint64_t m;
  bool has_vsize = false;
  bool has_vweight = false;
  bool has_eweight = false;
  std::uint64_t ncon = 1;
};

std::optional<MetisHeader> parse_metis_header(const std::vector<Line>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_comment(lines[i].text) || is_blank(lines[i].text)) continue;
    auto toks = tokenize(lines[i].text);
    if (toks.size() < 2 || toks.size() > 4) return std::nullopt;
    auto n = parse_uint(toks[0]);
    auto m = parse_uint(toks[1]);
    if (!n || !m) return std::nullopt;
    MetisHeader h{i, *n, *m};
    if (toks.size() >= 3) {
      std::string_view fmt = toks[2];
      if (fmt.size() > 3 || fmt.find_first_not_of("01") != std::string_view::npos) return std::nullopt;
      std::string padded = std::string(3 - fmt.size(), '0') + std::string(fmt);
      h.has_vsize = padded[0] == '1';
      h.has_vweight = padded[1] == '1';
      h.has_eweight = padded[2] == '1';
    }
    if (toks.size() == 4) {
      auto ncon = parse_uint(toks[3]);
      if (!ncon) return std::nullopt;
      h.ncon = *ncon;
    }
    return h;
  }
  return std::nullopt;
}

// Returns the graph, or an error message with its line number.
struct MetisAttempt {
  std::optional<Graph> graph;
  std::string error;
  std::size_t error_line = 0;
};

MetisAttempt try_parse_metis(const std::vector<Line>& lines, const MetisHeader& h) {
  MetisAttempt out;
  auto fail = [&](std::string msg, std::size_t line) {
    out.error = std::move(msg);
    out.error_line = line;
    return out;
  };
  if (h.n > std::numeric_limits<VertexId>::max() - 1) return fail("vertex count too large", lines[h.line_index].number);

  std::vector<Edge> edges;
  edges.reserve(h.m);
  std::uint64_t entries = 0;
  std::uint64_t vertex = 0;
  std::size_t i = h.line_index + 1;
  for (; i < lines.size() && vertex < h.n; ++i) {
    if (is_comment(lines[i].text)) continue;
    auto toks = tokenize(lines[i].text);
    std::size_t pos = 0;
    if (h.has_vsize) ++pos;
    if (h.has_vweight) pos += h.ncon;
    if (pos > toks.size()) return fail("missing vertex weights", lines[i].number);
    const std::size_t stride = h.has_eweight ? 2 : 1;
    if ((toks.size() - pos) % stride != 0) return fail("dangling edge weight", lines[i].number);
    for (; pos < toks.size(); pos += stride) {
      auto nb = parse_uint(toks[pos]);
      if (!nb) return fail("bad neighbor token '" + std::string(toks[pos]) + "'", lines[i].number);
      if (*nb < 1 || *nb > h.n) return fail("neighbor id out of range 1.." + std::to_string(h.n), lines[i].number);
      ++entries;
      edges.push_back({static_cast<VertexId>(vertex), static_cast<VertexId>(*nb - 1)});
    }
    ++vertex;
  }
  if (vertex < h.n) {
    return fail("header declares " + std::to_string(h.n) + " vertices but body has " + std::to_string(vertex),
                lines[h.line_index].number);
  }
  for (; i < lines.size(); ++i) {
    if (!is_comment(lines[i].text) && !is_blank(lines[i].text)) {
      return fail("body has more lines than the " + std::to_string(h.n) + " declared vertices", lines[i].number);
    }
  }
  if (entries != 2 * h.m) {
    return fail("header declares " + std::to_string(h.m) + " edges but body lists " + std::to_string(entries) +
                    " adjacency entries",
                lines[h.line_index].number);
  }
  // METIS ids are 1-based; keep them as labels.
  std::vector<Label> labels(h.n);
  for (std::uint64_t v = 0; v < h.n; ++v) labels[v] = v + 1;
  out.graph = Graph::from_edges(static_cast<VertexId>(h.n), edges, std::move(labels));
  return out;
}

Graph parse_edgelist(const std::vector<Line>& lines) {
  std::vector<std::pair<Label, Label>> raw;
  std::vector<Label> ids;
  for (const Line& line : lines) {
    if (is_comment(line.text) || is_blank(line.text)) continue;
    auto toks = tokenize(line.text);
    if (toks.size() != 1 && toks.size() != 2) {
      throw GraphIoError("expected 'u v' (or a lone vertex id)", line.number);
    }
    auto u = parse_uint(toks[0]);
    if (!u) throw GraphIoError("bad vertex id '" + std::string(toks[0]) + "'", line.number);
    ids.push_back(*u);
    if (toks.size() == 1) continue;
    auto v = parse_uint(toks[1]);
    if (!v) throw GraphIoError("bad vertex id '" + std::string(toks[1]) + "'", line.number);
    ids.push_back(*v);
    raw.emplace_back(*u, *v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > std::numeric_limits<VertexId>::max() - 1) throw GraphIoError("too many vertices");

  auto compact = [&](Label x) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [u, v] : raw) edges.push_back({compact(u), compact(v)});
  const auto n = static_cast<VertexId>(ids.size());
  return Graph::from_edges(n, edges, std::move(ids));
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "auto") return GraphFormat::kAuto;
  if (name == "edgelist" || name == "el") return GraphFormat::kEdgeList;
  if (name == "metis" || name == "graph") return GraphFormat::kMetis;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "' (auto, edgelist, metis)");
}

Graph read_graph(std::istream& in, GraphFormat format) {
  const auto lines = read_lines(in);
  if (format == GraphFormat::kEdgeList) return parse_edgelist(lines);

  auto header = parse_metis_header(lines);
  if (format == GraphFormat::kMetis) {
    if (!header) throw GraphIoError("missing or malformed METIS header");
    auto attempt = try_parse_metis(lines, *header);
    if (!attempt.graph) throw GraphIoError(attempt.error, attempt.error_line);
    return std::move(*attempt.graph);
  }
  if (header) {
    auto attempt = try_parse_metis(lines, *header);
    if (attempt.graph) return std::move(*attempt.graph);
  }
  return parse_edgelist(lines);
}

Graph load_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw GraphIoError("cannot open '" + path.string() + "'");
  try {
    return read_graph(in, format);
  } catch (const GraphIoError& e) {
    throw GraphIoError(path.string() + ": " + e.what());
  }
}

void write_edgelist(std::ostream& out, const Graph& g, std::span<const std::string> header_comments) {
  for (const auto& c : header_comments) out << "# " << c << '\n';
  for (VertexId u = 0; u < g.n(); ++u) {
    if (g.degree(u) == 0) {
      out << g.label(u) << '\n';
      continue;
    }
    for (VertexId v : g.neighbors(u)) {
      if (u < v) out << g.label(u) << ' ' << g.label(v) << '\n';
    }
  }
}

void save_edgelist(const std::filesystem::path& path, const Graph& g, std::span<const std::string> header_comments) {
  std::ofstream out(path);
  if (!out) throw GraphIoError("cannot write '" + path.string() + "'");
  write_edgelist(out, g, header_comments);
  if (!out) throw GraphIoError("write failure on '" + path.string() + "'");
}

}  // namespace maxqc
