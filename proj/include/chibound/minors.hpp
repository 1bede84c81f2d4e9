#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chibound/graph.hpp"
#include "chibound/search.hpp"

namespace chibound {

struct CliqueMinor {
  std::vector<std::vector<Vertex>> branch_sets;  // each sorted

  std::size_t size() const { return branch_sets.size(); }
  /// Index of the branch set holding each vertex, -1 if none.
  std::vector<int> owner(std::size_t n) const;
};

nlohmann::json to_json(const CliqueMinor& m);
CliqueMinor minor_from_json(const nlohmann::json& j);

/// Disjoint, non-empty, connected, pairwise adjacent. Out-of-range ids throw.
bool validate_minor(const Graph& g, const CliqueMinor& m);
/// Every branch-set vertex is a cutvertex of its set or has a private
/// adjacent branch set.
bool is_minimal(const Graph& g, const CliqueMinor& m);

/// Found: a clique minor with exactly p branch sets. Absent only when an
/// exact method proves there is none.
SearchResult<CliqueMinor> find_clique_minor(const Graph& g, std::size_t p, SearchBudget budget = {});

/// Requires validate_minor. Removal order: descending vertex id.
CliqueMinor minimize_minor(const Graph& g, const CliqueMinor& m);

/// Requires a minimal minor with at least three branch sets. Returns an
/// induced cycle on at least t vertices when some branch set has a shortest
/// path on t or more vertices.
std::optional<InducedCycle> check_branch_diameter(const Graph& g, const CliqueMinor& m, std::size_t t);

/// Largest number of vertices on a shortest path inside G[set].
std::size_t branch_diameter_vertices(const Graph& g, std::span<const Vertex> set);

struct HighAdjacencyResult {
  SearchStatus status = SearchStatus::Inconclusive;  // Found: selected or cycle
  std::vector<std::pair<std::size_t, Vertex>> selected;  // (branch set index, vertex)
  std::optional<InducedCycle> cycle;
  std::size_t attempts = 0;
  std::string detail;
};

inline constexpr std::size_t kHighAdjacencyRetries = 64;

/// At least p branch sets holding a vertex adjacent to at least p^2 branch
/// sets; otherwise the randomized cycle construction over t sets.
HighAdjacencyResult find_high_adjacency_sets(const Graph& g, const CliqueMinor& m, std::size_t p, std::size_t t,
                                             std::uint64_t seed, std::size_t retries = kHighAdjacencyRetries);

struct FullMinorResult {
  enum class Kind { Minor, Cycle, Inconclusive };
  Kind kind = Kind::Inconclusive;
  CliqueMinor minor;
  std::vector<Vertex> full_vertices;  // full_vertices[i] lies in minor.branch_sets[i]
  std::optional<InducedCycle> cycle;
  std::string detail;
};

FullMinorResult full_vertex_minor(const Graph& g, const CliqueMinor& m, std::size_t p, std::size_t t,
                                  std::uint64_t seed);

}  // namespace chibound
