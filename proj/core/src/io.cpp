#include "ttpack/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "ttpack/error.hpp"

namespace ttpack {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
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

int to_int(std::string_view tok, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

// Splits text into (line number, tokens) records, comments and blanks dropped.
std::vector<std::pair<int, std::vector<std::string_view>>> records(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string_view>>> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens(line);
    if (!toks.empty()) out.emplace_back(number, std::move(toks));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct RawGraph {
  int n = 0;
  std::vector<std::pair<int, Arc>> arcs;  // (line, arc)
  std::map<int, std::pair<int, std::vector<int>>> classes;  // index -> (line, members)
};

RawGraph parse_raw(std::string_view text) {
  RawGraph raw;
  bool have_n = false;
  for (const auto& [line, toks] : records(text)) {
    if (toks[0] == "n") {
      if (have_n) throw ParseError(line, "repeated 'n' line");
      if (toks.size() != 2) throw ParseError(line, "malformed 'n' line");
      raw.n = to_int(toks[1], line);
      if (raw.n < 0) throw ParseError(line, "negative vertex count");
      have_n = true;
      continue;
    }
    if (!have_n) throw ParseError(line, "'n' line must come first");
    if (toks[0] == "class") {
      if (toks.size() < 2 || toks[1].empty() || toks[1].back() != ':') throw ParseError(line, "malformed class line");
      const int index = to_int(toks[1].substr(0, toks[1].size() - 1), line);
      if (raw.classes.count(index)) throw ParseError(line, "class " + std::to_string(index) + " listed twice");
      std::vector<int> members;
      for (std::size_t i = 2; i < toks.size(); ++i) {
        const int v = to_int(toks[i], line);
        if (v < 0 || v >= raw.n) throw ParseError(line, "class vertex out of range");
        members.push_back(v);
      }
      raw.classes[index] = {line, std::move(members)};
      continue;
    }
    if (toks.size() != 2) throw ParseError(line, "malformed line");
    const int u = to_int(toks[0], line);
    const int v = to_int(toks[1], line);
    if (u < 0 || v < 0 || u >= raw.n || v >= raw.n) throw ParseError(line, "arc endpoint out of range");
    if (u == v) throw ParseError(line, "self-loop");
    raw.arcs.emplace_back(line, Arc{u, v});
  }
  if (!have_n) throw ParseError(0, "missing 'n' line");
  return raw;
}

OrientedGraph build(const RawGraph& raw) {
  OrientedGraph g(raw.n);
  for (const auto& [line, arc] : raw.arcs) {
    const auto [u, v] = arc;
    if (g.has_arc(u, v)) throw ParseError(line, "duplicate arc " + std::to_string(u) + " " + std::to_string(v));
    if (g.has_arc(v, u)) {
      throw ParseError(line, "conflicting orientation " + std::to_string(u) + " " + std::to_string(v));
    }
    g.add_arc(u, v);
  }
  return g;
}

}  // namespace

PartitionedHost GraphFile::partitioned() const {
  if (classes.empty()) throw InvalidInput("graph file has no class lines");
  return PartitionedHost(graph, classes);
}

GraphFile parse_graph(std::string_view text) {
  const RawGraph raw = parse_raw(text);
  GraphFile file{build(raw), {}};
  int expected = 0;
  std::vector<int> seen(static_cast<std::size_t>(raw.n), -1);
  for (const auto& [index, entry] : raw.classes) {
    const auto& [line, members] = entry;
    if (index != expected) throw ParseError(line, "class indices must be 0..c-1 without gaps");
    for (int v : members) {
      if (seen[static_cast<std::size_t>(v)] != -1) {
        throw ParseError(line, "overlapping classes at vertex " + std::to_string(v));
      }
      seen[static_cast<std::size_t>(v)] = index;
    }
    file.classes.push_back(members);
    ++expected;
  }
  return file;
}

GraphFile load_graph(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

OrientedGraph parse_orientation(std::string_view text, const UndirectedGraph& host) {
  const RawGraph raw = parse_raw(text);
  if (raw.n != host.n()) throw ParseError(0, "vertex count does not match host");
  for (const auto& [line, arc] : raw.arcs) {
    if (!host.adjacent(arc.first, arc.second)) {
      throw ParseError(line, "arc on non-edge " + std::to_string(arc.first) + " " + std::to_string(arc.second));
    }
  }
  OrientedGraph g = build(raw);
  if (g.arc_count() != host.edge_count()) throw ParseError(0, "some host edges are not oriented");
  return g;
}

std::string format_graph(const OrientedGraph& g) { return format_graph(g, {}); }

std::string format_graph(const OrientedGraph& g, const std::vector<std::vector<int>>& classes) {
  std::ostringstream out;
  out << "n " << g.n() << '\n';
  for (const auto& [u, v] : g.arcs()) out << u << ' ' << v << '\n';
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out << "class " << c << ':';
    for (int v : classes[c]) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

void save_graph(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << text;
}

std::string format_packing(const Packing& packing, int host_n) {
  std::ostringstream out;
  out << "pattern " << packing.pattern.size() << ' ' << packing.pattern.name() << '\n';
  for (const auto& [a, b] : packing.pattern.arcs()) out << "parc " << a << ' ' << b << '\n';
  out << "n " << host_n << '\n';
  for (const auto& emb : packing.embeddings) {
    out << "copy";
    for (int v : emb) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

Packing parse_packing(std::string_view text) {
  int size = -1;
  std::string name;
  std::vector<Arc> arcs;
  std::optional<int> n;
  std::vector<std::vector<int>> copies;
  for (const auto& [line, toks] : records(text)) {
    if (toks[0] == "pattern") {
      if (toks.size() != 3) throw ParseError(line, "malformed pattern line");
      size = to_int(toks[1], line);
      name = std::string(toks[2]);
    } else if (toks[0] == "parc") {
      if (toks.size() != 3) throw ParseError(line, "malformed parc line");
      arcs.emplace_back(to_int(toks[1], line), to_int(toks[2], line));
    } else if (toks[0] == "n") {
      if (toks.size() != 2) throw ParseError(line, "malformed 'n' line");
      n = to_int(toks[1], line);
    } else if (toks[0] == "copy") {
      if (!n) throw ParseError(line, "'copy' before 'n'");
      std::vector<int> emb;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const int v = to_int(toks[i], line);
        if (v < 0 || v >= *n) throw ParseError(line, "copy vertex out of range");
        emb.push_back(v);
      }
      if (static_cast<int>(emb.size()) != size) throw ParseError(line, "copy size does not match pattern");
      copies.push_back(std::move(emb));
    } else {
      throw ParseError(line, "unknown record '" + std::string(toks[0]) + "'");
    }
  }
  if (size < 1 || !n) throw ParseError(0, "packing needs 'pattern' and 'n' lines");
  PatternDag pattern(size, std::move(arcs), name);
  Packing p{std::move(pattern), std::move(copies), bits::full_set(*n)};
  for (const auto& emb : p.embeddings) {
    for (int v : emb) {
      if (!bits::contains(p.uncovered, v)) throw ParseError(0, "copies overlap at vertex " + std::to_string(v));
      bits::erase(p.uncovered, v);
    }
  }
  return p;
}

}  // namespace ttpack
