#include "aoposet/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "aoposet/errors.hpp"

namespace aoposet::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-blank, non-comment lines split on whitespace. The relation symbols are
// padded first so "2>0" and "1--3" tokenize like "2 > 0".
std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string spaced;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == '>' || raw[i] == '<') {
        spaced += ' ';
        spaced += raw[i];
        spaced += ' ';
      } else if (raw.compare(i, 2, "--") == 0) {
        spaced += " -- ";
        ++i;
      } else {
        spaced += raw[i];
      }
    }
    std::istringstream words(spaced);
    Line line{number, {}};
    for (std::string w; words >> w;) line.tokens.push_back(w);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("expected a non-negative integer, got '" + tok + "'", line);
  return v;
}

std::size_t parse_header(const std::vector<Line>& lines, const std::string& keyword) {
  if (lines.empty()) throw ParseError("empty input, expected '" + keyword + " <n>'", 1);
  const Line& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != keyword)
    throw ParseError("expected header '" + keyword + " <n>'", h.number);
  return parse_index(h.tokens[1], h.number);
}

Poset poset_from_lines(const std::vector<Line>& lines) {
  const std::size_t n = parse_header(lines, "poset");
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 3 || (l.tokens[1] != ">" && l.tokens[1] != "<"))
      throw ParseError("expected 'u > v'", l.number);
    Element u = parse_index(l.tokens[0], l.number);
    Element v = parse_index(l.tokens[2], l.number);
    if (u >= n || v >= n)
      throw ParseError("element index out of range for n=" + std::to_string(n), l.number);
    if (l.tokens[1] == "<") std::swap(u, v);
    if (u == v) throw CycleError("element " + std::to_string(u) + " above itself (line " +
                                 std::to_string(l.number) + ")");
    pairs.emplace_back(u, v);
  }
  return Poset::from_cover_relations(n, pairs);
}

SimpleGraph graph_from_lines(const std::vector<Line>& lines) {
  const std::size_t n = parse_header(lines, "graph");
  SimpleGraph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 3 || l.tokens[1] != "--") throw ParseError("expected 'u -- v'", l.number);
    const Vertex u = parse_index(l.tokens[0], l.number);
    const Vertex v = parse_index(l.tokens[2], l.number);
    if (u >= n || v >= n)
      throw ParseError("vertex index out of range for n=" + std::to_string(n), l.number);
    if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), l.number);
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace

Poset read_poset(std::istream& in) { return poset_from_lines(significant_lines(in)); }

SimpleGraph read_graph(std::istream& in) { return graph_from_lines(significant_lines(in)); }

std::variant<Poset, SimpleGraph> read_any(std::istream& in) {
  const auto lines = significant_lines(in);
  if (!lines.empty() && lines.front().tokens[0] == "graph") return graph_from_lines(lines);
  if (!lines.empty() && lines.front().tokens[0] == "poset") return poset_from_lines(lines);
  throw ParseError("expected header 'poset <n>' or 'graph <n>'",
                   lines.empty() ? 1 : lines.front().number);
}

std::variant<Poset, SimpleGraph> read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return read_any(in);
}

void write_poset(std::ostream& out, const Poset& p) {
  auto covers = cover_pairs(p);
  std::sort(covers.begin(), covers.end(), [](CoverPair a, CoverPair b) {
    return std::pair(a.upper, a.lower) < std::pair(b.upper, b.lower);
  });
  out << "poset " << p.size() << '\n';
  for (auto c : covers) out << c.upper << " > " << c.lower << '\n';
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << "graph " << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << " -- " << v << '\n';
}

void write_dot(std::ostream& out, const Poset& p, const std::string& name) {
  const auto level = levels(p);
  std::map<std::size_t, std::vector<Element>> ranks;
  for (Element e = 0; e < p.size(); ++e) ranks[level[e]].push_back(e);
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=BT;\n  node [shape=circle];\n";
  for (const auto& [lv, elems] : ranks) {
    out << "  { rank=same;";
    for (auto e : elems) out << ' ' << e << ';';
    out << " }\n";
  }
  auto covers = cover_pairs(p);
  std::sort(covers.begin(), covers.end(), [](CoverPair a, CoverPair b) {
    return std::pair(a.lower, a.upper) < std::pair(b.lower, b.upper);
  });
  for (auto c : covers) out << "  " << c.lower << " -> " << c.upper << ";\n";
  out << "}\n";
}

}  // namespace aoposet::io
