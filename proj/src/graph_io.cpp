#include "chibound/graph_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace chibound {

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "dimacs") return GraphFormat::Dimacs;
  throw InputError("unknown graph format '" + std::string(name) + "'");
}

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int g6_byte(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw InputError("graph6: truncated input");
  const int c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) throw InputError("graph6: byte " + std::to_string(pos) + " outside printable range");
  return c - 63;
}

void put_n(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace

Graph parse_graph6(std::string_view line, std::size_t max_vertices) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw InputError("graph6: empty line");
  if (line.front() == ':' || line.front() == '&') throw InputError("graph6: sparse6/digraph6 input not supported");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (line[0] != '~') {
    n = static_cast<std::size_t>(g6_byte(line, 0));
    pos = 1;
  } else if (line.size() > 1 && line[1] != '~') {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(g6_byte(line, i));
    pos = 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(g6_byte(line, i));
    pos = 8;
  }
  if (n > max_vertices) throw InputError("graph6: order " + std::to_string(n) + " exceeds cap");

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes)
    throw InputError("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                     std::to_string(line.size() - pos));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = g6_byte(line, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  if (bits % 6 != 0) {
    const int last = g6_byte(line, pos + bytes - 1);
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw InputError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(n, edges, max_vertices);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  put_n(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_dimacs(std::istream& in, std::size_t max_vertices) {
  std::string line;
  std::size_t n = 0, m = 0, lineno = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind) || kind == "c") continue;
    const auto where = " (line " + std::to_string(lineno) + ")";
    if (kind == "p") {
      std::string fmt;
      if (have_header) throw InputError("dimacs: duplicate problem line" + where);
      if (!(ls >> fmt >> n >> m) || (fmt != "edge" && fmt != "col"))
        throw InputError("dimacs: malformed problem line" + where);
      if (n > max_vertices) throw InputError("dimacs: order " + std::to_string(n) + " exceeds cap");
      have_header = true;
    } else if (kind == "e") {
      if (!have_header) throw InputError("dimacs: edge before problem line" + where);
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) throw InputError("dimacs: malformed edge line" + where);
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
        throw InputError("dimacs: endpoint out of range 1.." + std::to_string(n) + where);
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw InputError("dimacs: unknown line type '" + kind + "'" + where);
    }
  }
  if (!have_header) throw InputError("dimacs: missing problem line");
  if (edges.size() != m)
    throw InputError("dimacs: header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph::from_edges(n, edges, max_vertices);
}

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format, std::size_t max_vertices) {
  std::vector<Graph> out;
  if (format == GraphFormat::Dimacs) {
    out.push_back(parse_dimacs(in, max_vertices));
    return out;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kHeader) continue;
    out.push_back(parse_graph6(line, max_vertices));
  }
  return out;
}

Graph read_graph_file(const std::string& path, GraphFormat format, std::size_t max_vertices) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  auto graphs = read_graphs(in, format, max_vertices);
  if (graphs.size() != 1)
    throw InputError(path + ": expected exactly one graph, found " + std::to_string(graphs.size()));
  return std::move(graphs.front());
}

std::string write_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? to_graph6(g) + "\n" : to_dimacs(g);
}

}  // namespace chibound
