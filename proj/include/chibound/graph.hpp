#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chibound {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Malformed input or violated precondition supplied by the caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A state the algorithms guarantee cannot happen; raising it means a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::size_t kDefaultMaxVertices = 1'000'000;

/// Fixed-universe bitset over vertex ids 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  static VertexSet of(std::size_t universe, std::span<const Vertex> members);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  void insert(Vertex v);
  void erase(Vertex v);
  std::size_t count() const;
  bool empty() const;
  std::optional<Vertex> first() const;
  std::vector<Vertex> to_vector() const;

  bool intersects(const VertexSet& other) const;
  std::size_t intersection_count(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet& other) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_compatible(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  /// Rows of the adjacency bitset are materialized up to this order.
  static constexpr std::size_t kDenseLimit = 8192;

  Graph() = default;
  explicit Graph(std::size_t n);

  /// Rejects self-loops, parallel edges and out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::size_t max_vertices = kDefaultMaxVertices);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  bool has_dense_rows() const { return !rows_.empty() || order() == 0; }
  /// Requires has_dense_rows().
  const VertexSet& row(Vertex v) const { return rows_[v]; }
  /// Open neighborhood as a bitset; works for any order.
  VertexSet neighborhood(Vertex v) const;

  VertexSet all() const { return VertexSet::full(order()); }
  std::vector<Edge> edges() const;
  Graph complement() const;

  void check_vertex(Vertex v) const;
  void check_vertices(std::span<const Vertex> vs) const;

  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  bool operator==(const Graph& other) const { return adjacency_ == other.adjacency_; }

 private:
  void build_rows();

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexSet> rows_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// An induced subgraph together with the id map back to its parent.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  Vertex parent(Vertex v) const { return to_parent[v]; }
  std::vector<Vertex> parent(std::span<const Vertex> vs) const;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Path with a designated first vertex.
struct OrientedPath {
  std::vector<Vertex> vertices;

  std::size_t size() const { return vertices.size(); }
  Vertex operator[](std::size_t i) const { return vertices[i]; }
  Vertex first() const { return vertices.front(); }
  Vertex last() const { return vertices.back(); }
  OrientedPath reversed() const { return {{vertices.rbegin(), vertices.rend()}}; }
  bool operator==(const OrientedPath&) const = default;
};

struct PathFamily {
  std::vector<OrientedPath> paths;

  std::size_t size() const { return paths.size(); }
  bool empty() const { return paths.empty(); }
  std::optional<std::size_t> common_length() const;
  /// Vertices at position i of every path long enough to have one.
  std::vector<Vertex> layer(std::size_t i) const;
  std::vector<Vertex> vertices() const;
  bool vertex_disjoint() const;
};

struct InducedCycle {
  std::vector<Vertex> vertices;
  std::size_t size() const { return vertices.size(); }
};

bool is_independent(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, std::span<const Vertex> s);
bool is_clique(const Graph& g, std::span<const Vertex> s);

/// Vertex-disjoint with no edge between them.
bool are_anticomplete(const Graph& g, const OrientedPath& p, const OrientedPath& q);
bool are_anticomplete(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b);
bool is_partially_anticomplete(const Graph& g, const PathFamily& family);

bool verify_induced_path(const Graph& g, std::span<const Vertex> path);
inline bool verify_induced_path(const Graph& g, const OrientedPath& p) {
  return verify_induced_path(g, p.vertices);
}
/// Throws InputError for fewer than three vertices.
bool verify_induced_cycle(const Graph& g, std::span<const Vertex> cycle);

/// Connected components of g restricted to `within`, each sorted.
std::vector<std::vector<Vertex>> components(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g, const VertexSet& within);

/// Shortest path from `from` to `to` using only vertices of `within`
/// (both endpoints must belong to it). Ties resolve towards smaller ids.
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, const VertexSet& within, Vertex from,
                                                 Vertex to);

}  // namespace chibound
