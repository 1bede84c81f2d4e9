#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "chibound/certificate.hpp"
#include "chibound/graph.hpp"

namespace chibound {

/// Overflow-checked integer power; throws InputError on overflow.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

struct FilterResult {
  VertexSet kept;      // at least p non-neighbors in U
  VertexSet excluded;  // the rest
  std::optional<BicliqueWitness> biclique;
};

/// Requires |U| >= l*p and U disjoint from outside.
FilterResult filter_many_nonneighbors(const Graph& g, const VertexSet& u, const VertexSet& outside, std::size_t p,
                                      std::size_t l);

struct CommonFilterResult {
  std::optional<Vertex> survivor;
  std::optional<BicliqueWitness> biclique;
};

/// Requires pairwise disjoint sets of size >= l*p and |outside| > r(l-1).
CommonFilterResult common_filter(const Graph& g, std::span<const VertexSet> sets, const VertexSet& outside,
                                 std::size_t p, std::size_t l);

struct RainbowResult {
  std::optional<std::vector<Vertex>> transversal;
  std::optional<BicliqueWitness> biclique;
};

/// Requires pairwise disjoint sets, each of size >= l^(d-1).
RainbowResult rainbow_independent_set(const Graph& g, std::span<const VertexSet> sets, std::size_t l);

/// (k-1)(l^(d-1) + (d-1)l^d + l^(2d-2)) + l - k
std::uint64_t sstar_degree_bound(std::size_t k, std::size_t d, std::size_t l);

struct SStarOutcome {
  enum class Kind { LowDegree, SubdividedStar, Biclique };
  Kind kind = Kind::LowDegree;
  Vertex vertex = 0;
  std::size_t degree = 0;
  std::uint64_t bound = 0;
  std::size_t level = 0;
  std::optional<SubdividedStarWitness> star;
  std::optional<BicliqueWitness> biclique;
  nlohmann::json trace = nlohmann::json::array();

  Certificate certificate(bool with_trace = false) const;
};

/// Always returns one of the three outcomes. Throws InternalError if the
/// construction ever breaks a step it is guaranteed to complete.
SStarOutcome sstar_low_degree(const Graph& g, std::size_t d, std::size_t l);
/// Same, restricted to the induced subgraph on `within`.
SStarOutcome sstar_low_degree(const Graph& g, const VertexSet& within, std::size_t d, std::size_t l);

struct SStarOrderResult {
  std::uint64_t bound = 0;
  std::size_t max_removal_degree = 0;
  std::vector<Vertex> order;               // full when no witness appeared
  std::optional<SStarOutcome> witness;     // first structural outcome
  Certificate certificate() const;
};

SStarOrderResult sstar_elimination_order(const Graph& g, std::size_t d, std::size_t l);

}  // namespace chibound
