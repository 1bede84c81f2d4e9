#pragma once

#include <optional>
#include <vector>

#include "chibound/certificate.hpp"
#include "chibound/graph.hpp"
#include "chibound/search.hpp"

namespace chibound {

/// K_{a,b} as a (not necessarily induced) subgraph. The returned witness has
/// |left| = a and |right| = b.
SearchResult<BicliqueWitness> find_biclique_subgraph(const Graph& g, std::size_t a, std::size_t b,
                                                     SearchBudget budget = {});
/// Largest s with K_{s,s} as a subgraph (0 for an edgeless graph).
SearchResult<std::size_t> max_balanced_biclique(const Graph& g, SearchBudget budget = {});

SearchResult<OrientedPath> longest_induced_path(const Graph& g, SearchBudget budget = {});
/// Induced path on exactly t vertices.
SearchResult<OrientedPath> has_induced_path(const Graph& g, std::size_t t, SearchBudget budget = {});

/// Induced cycle on at least t vertices, t >= 3.
SearchResult<InducedCycle> find_long_induced_cycle(const Graph& g, std::size_t t, SearchBudget budget = {});
/// Absent for chordless-cycle-free (forest) inputs.
SearchResult<InducedCycle> longest_induced_cycle(const Graph& g, SearchBudget budget = {});

/// Induced 1-subdivision of K_{1,d}, d >= 2.
SearchResult<SubdividedStarWitness> find_induced_subdivided_star(const Graph& g, std::size_t d,
                                                                 SearchBudget budget = {});

/// Exact maximum independent set (sorted ids). Inconclusive keeps the best set seen.
SearchResult<std::vector<Vertex>> max_independent_set(const Graph& g, SearchBudget budget = {});
SearchResult<std::vector<Vertex>> max_independent_subset(const Graph& g, const VertexSet& y,
                                                         SearchBudget budget = {});

struct DegeneracyResult {
  std::size_t degeneracy = 0;
  std::vector<Vertex> order;  // removal sequence
};
DegeneracyResult degeneracy(const Graph& g);

/// Maximum clique, via independent sets of the complement.
SearchResult<std::vector<Vertex>> max_clique(const Graph& g, SearchBudget budget = {});

struct ChromaticResult {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<std::size_t> coloring;  // witnesses upper
  bool exact() const { return lower == upper; }
};
ChromaticResult chromatic_number_exact(const Graph& g, SearchBudget budget = {});

}  // namespace chibound
