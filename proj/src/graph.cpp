#include "chibound/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace chibound {

// ---- VertexSet -------------------------------------------------------------

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw InputError("vertex " + std::to_string(v) + " outside set universe");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<Vertex> VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
  return std::nullopt;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void VertexSet::check_compatible(const VertexSet& other) const {
  if (universe_ != other.universe_) throw InputError("vertex sets over different universes");
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

std::size_t VertexSet::intersection_count(const VertexSet& other) const {
  check_compatible(other);
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

// ---- Graph -----------------------------------------------------------------

Graph::Graph(std::size_t n) : adjacency_(n) { build_rows(); }

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::size_t max_vertices) {
  if (n > max_vertices)
    throw InputError("graph order " + std::to_string(n) + " exceeds the configured cap " + std::to_string(max_vertices));
  Graph g(0);
  g.adjacency_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " has an endpoint outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end())
      throw InputError("parallel edge " + std::to_string(v) + "-" + std::to_string(*dup));
  }
  g.edge_count_ = edges.size();
  g.build_rows();
  return g;
}

void Graph::build_rows() {
  rows_.clear();
  const std::size_t n = order();
  if (n == 0 || n > kDenseLimit) return;
  rows_.reserve(n);
  for (Vertex v = 0; v < n; ++v) rows_.push_back(VertexSet::of(n, adjacency_[v]));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!rows_.empty()) return rows_[u].contains(v);
  const auto& a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

VertexSet Graph::neighborhood(Vertex v) const {
  if (!rows_.empty()) return rows_[v];
  return VertexSet::of(order(), adjacency_[v]);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::complement() const {
  const std::size_t n = order();
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!adjacent(u, v)) es.emplace_back(u, v);
  return from_edges(n, es, std::max(n, kDefaultMaxVertices));
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order())
    throw InputError("vertex id " + std::to_string(v) + " out of range for graph of order " + std::to_string(order()));
}

void Graph::check_vertices(std::span<const Vertex> vs) const {
  for (Vertex v : vs) check_vertex(v);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != order()) throw InputError("label count differs from vertex count");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

// ---- Induced subgraphs -----------------------------------------------------

std::vector<Vertex> InducedSubgraph::parent(std::span<const Vertex> vs) const {
  std::vector<Vertex> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(to_parent[v]);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  g.check_vertices(sorted);
  std::vector<std::int64_t> local(g.order(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (Vertex w : g.neighbors(sorted[i]))
      if (local[w] > static_cast<std::int64_t>(i)) es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(local[w]));
  return {Graph::from_edges(sorted.size(), es, std::max(sorted.size(), kDefaultMaxVertices)), std::move(sorted)};
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  const auto vs = keep.to_vector();
  return induced_subgraph(g, std::span<const Vertex>(vs));
}

// ---- Paths and families ----------------------------------------------------

std::optional<std::size_t> PathFamily::common_length() const {
  if (paths.empty()) return std::nullopt;
  const std::size_t k = paths.front().size();
  for (const auto& p : paths)
    if (p.size() != k) return std::nullopt;
  return k;
}

std::vector<Vertex> PathFamily::layer(std::size_t i) const {
  std::vector<Vertex> out;
  for (const auto& p : paths)
    if (i < p.size()) out.push_back(p[i]);
  return out;
}

std::vector<Vertex> PathFamily::vertices() const {
  std::vector<Vertex> out;
  for (const auto& p : paths) out.insert(out.end(), p.vertices.begin(), p.vertices.end());
  return out;
}

bool PathFamily::vertex_disjoint() const {
  auto all = vertices();
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

// ---- Predicates ------------------------------------------------------------

bool is_independent(const Graph& g, std::span<const Vertex> s) {
  g.check_vertices(s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw InputError("vertex set universe differs from graph order");
  bool independent = true;
  s.for_each([&](Vertex v) {
    if (independent && g.neighborhood(v).intersects(s)) independent = false;
  });
  return independent;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  g.check_vertices(s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

bool are_anticomplete(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  g.check_vertices(a);
  g.check_vertices(b);
  for (Vertex x : a)
    for (Vertex y : b)
      if (x == y || g.adjacent(x, y)) return false;
  return true;
}

bool are_anticomplete(const Graph& g, const OrientedPath& p, const OrientedPath& q) {
  return are_anticomplete(g, std::span<const Vertex>(p.vertices), std::span<const Vertex>(q.vertices));
}

bool is_partially_anticomplete(const Graph& g, const PathFamily& family) {
  if (family.empty()) return true;
  if (!family.common_length()) return false;
  for (const auto& p : family.paths) g.check_vertices(p.vertices);
  if (!family.vertex_disjoint()) return false;
  const std::size_t k = *family.common_length();
  for (std::size_t i = 0; i < k; ++i) {
    const auto layer = family.layer(i);
    for (std::size_t a = 0; a < layer.size(); ++a)
      for (std::size_t b = a + 1; b < layer.size(); ++b)
        if (g.adjacent(layer[a], layer[b])) return false;
  }
  return true;
}

namespace {

bool distinct(std::span<const Vertex> vs) {
  std::vector<Vertex> s(vs.begin(), vs.end());
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

bool verify_induced_path(const Graph& g, std::span<const Vertex> path) {
  g.check_vertices(path);
  if (!distinct(path)) return false;
  for (std::size_t i = 0; i < path.size(); ++i)
    for (std::size_t j = i + 1; j < path.size(); ++j)
      if (g.adjacent(path[i], path[j]) != (j == i + 1)) return false;
  return true;
}

bool verify_induced_cycle(const Graph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) throw InputError("a cycle needs at least 3 vertices");
  g.check_vertices(cycle);
  if (!distinct(cycle)) return false;
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

// ---- Traversal -------------------------------------------------------------

std::vector<std::vector<Vertex>> components(const Graph& g, const VertexSet& within) {
  std::vector<std::vector<Vertex>> out;
  VertexSet seen(g.order());
  within.for_each([&](Vertex s) {
    if (seen.contains(s)) return;
    std::vector<Vertex> comp{s};
    seen.insert(s);
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : g.neighbors(comp[head]))
        if (within.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  });
  return out;
}

bool is_connected(const Graph& g, const VertexSet& within) { return components(g, within).size() <= 1; }

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, const VertexSet& within, Vertex from, Vertex to) {
  if (!within.contains(from) || !within.contains(to)) return std::nullopt;
  std::vector<std::int64_t> parent(g.order(), -2);
  std::deque<Vertex> queue{from};
  parent[from] = -1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (Vertex w : g.neighbors(u))
      if (within.contains(w) && parent[w] == -2) {
        parent[w] = u;
        queue.push_back(w);
      }
  }
  if (parent[to] == -2) return std::nullopt;
  std::vector<Vertex> path;
  for (std::int64_t v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(static_cast<Vertex>(v));
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace chibound
