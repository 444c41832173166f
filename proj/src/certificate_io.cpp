#include "rcpower/certificate_io.hpp"

#include <charconv>

#include "rcpower/errors.hpp"

namespace rcpower {

ColoringDocument make_document(const Graph& graph, const EdgeColoring& coloring,
                               const RainbowCertificate* certificate) {
  validate_coloring(graph, coloring);
  ColoringDocument doc;
  doc.k = coloring.k;
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    doc.edges.push_back({graph.edge(e).u, graph.edge(e).v, coloring[e]});
  }
  if (certificate) doc.pairs = certificate->paths;
  return doc;
}

std::string write_document(const ColoringDocument& doc) {
  std::string out = "k=" + std::to_string(doc.k) + " edges=" + std::to_string(doc.edges.size()) + "\n";
  for (const auto& e : doc.edges) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(e.color) + "\n";
  }
  for (const auto& p : doc.pairs) {
    out += "pair " + std::to_string(p.u) + " " + std::to_string(p.v) + " :";
    for (auto v : p.path) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    const auto nl = text_.find('\n', pos_);
    if (nl == std::string_view::npos) throw FormatError("missing final newline");
    line = text_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    ++number_;
    return true;
  }
  std::size_t number() const { return number_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
};

// Space-separated canonical decimal fields (no sign, no leading zeros).
std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto sp = line.find(' ', start);
    out.push_back(line.substr(start, sp - start));
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }
  return out;
}

std::uint64_t number(std::string_view s, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end || (s.size() > 1 && s[0] == '0') ||
      value > 0xFFFFFFFFULL) {
    throw FormatError("line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

ColoringDocument parse_document(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.next(line)) throw FormatError("empty coloring document");
  const auto head = fields(line);
  if (head.size() != 2 || !head[0].starts_with("k=") || !head[1].starts_with("edges=")) {
    throw FormatError("line 1: expected 'k=<int> edges=<int>'");
  }
  ColoringDocument doc;
  doc.k = static_cast<int>(number(head[0].substr(2), 1));
  const auto m = number(head[1].substr(6), 1);
  if (doc.k < 1) throw FormatError("line 1: k must be >= 1");
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!reader.next(line)) throw FormatError("expected " + std::to_string(m) + " edge lines");
    const auto f = fields(line);
    if (f.size() != 3) throw FormatError("line " + std::to_string(reader.number()) + ": expected 'u v color'");
    ColoredEdge e{static_cast<Vertex>(number(f[0], reader.number())),
                  static_cast<Vertex>(number(f[1], reader.number())),
                  static_cast<int>(number(f[2], reader.number()))};
    if (e.color < 1 || e.color > doc.k) {
      throw FormatError("line " + std::to_string(reader.number()) + ": color out of range");
    }
    if (e.u >= e.v) throw FormatError("line " + std::to_string(reader.number()) + ": need u < v");
    doc.edges.push_back(e);
  }
  while (reader.next(line)) {
    const auto f = fields(line);
    if (f.size() < 6 || f[0] != "pair" || f[3] != ":") {
      throw FormatError("line " + std::to_string(reader.number()) + ": expected 'pair u v : path'");
    }
    RainbowPath p{static_cast<Vertex>(number(f[1], reader.number())),
                  static_cast<Vertex>(number(f[2], reader.number())), {}};
    for (std::size_t i = 4; i < f.size(); ++i) {
      p.path.push_back(static_cast<Vertex>(number(f[i], reader.number())));
    }
    doc.pairs.push_back(std::move(p));
  }
  return doc;
}

EdgeColoring coloring_from_document(const Graph& graph, const ColoringDocument& doc) {
  if (doc.edges.size() != graph.edge_count()) {
    throw FormatError("document has " + std::to_string(doc.edges.size()) + " edges, graph has " +
                      std::to_string(graph.edge_count()));
  }
  EdgeColoring coloring{doc.k, {}};
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    const auto& d = doc.edges[e];
    if (d.u != graph.edge(e).u || d.v != graph.edge(e).v) {
      throw FormatError("edge " + std::to_string(e) + " does not match the graph");
    }
    coloring.colors.push_back(d.color);
  }
  return coloring;
}

RainbowCertificate certificate_from_document(const ColoringDocument& doc) { return {doc.pairs}; }

}  // namespace rcpower
