#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chibound/certificate.hpp"
#include "chibound/graph.hpp"
#include "chibound/search.hpp"

namespace chibound {

struct StageReport {
  std::string name;
  std::uint64_t target_size = 0;
  std::uint64_t achieved_size = 0;
  std::string outcome;  // ok, best-effort, inconclusive, witness
};

nlohmann::json to_json(const StageReport& s);

struct LinkedParams {
  std::size_t ell = 2;
  std::size_t t = 10;
  std::size_t a_double_prime_size = 0;  // N surrogate; 0 keeps the whole independent set
  std::size_t paths_per_pair = 1;       // R surrogate
  std::size_t a_prime_size = 0;         // 0 means t/2
  std::uint64_t seed = 0;
  SearchBudget budget{};
};

struct LinkedFamilies {
  SearchStatus status = SearchStatus::Inconclusive;  // Found on success
  std::vector<Vertex> a_prime;
  /// Key (u, v) with u before v in a_prime; paths run from u's side to v's side.
  std::map<std::pair<Vertex, Vertex>, PathFamily> families;
  std::optional<BicliqueWitness> biclique;
  std::vector<StageReport> stages;

  const PathFamily& family(Vertex u, Vertex v) const { return families.at({u, v}); }
};

/// A: vertices adjacent to every branch set of B, disjoint from them.
LinkedFamilies build_linked_families(const Graph& g, const std::vector<Vertex>& a,
                                     const std::vector<std::vector<Vertex>>& b, const LinkedParams& params);

/// Paths must be vertex-disjoint, induced and of one common length.
PathFamily extract_partially_anticomplete(const Graph& g, const PathFamily& f, SearchBudget budget = {});

struct SeparateResult {
  PathFamily p_prime;
  PathFamily q_prime;
  std::optional<BicliqueWitness> biclique;
  bool guaranteed = false;  // |Q| >= L |P|^((2t-1)^2 t/2) held
};

/// P and Q partially anticomplete, paths under 2t vertices, all disjoint.
SeparateResult separate_families(const Graph& g, const PathFamily& p, const PathFamily& q, std::size_t ell,
                                 std::size_t t, std::uint64_t big_l);

struct PairwiseSelection {
  SearchStatus status = SearchStatus::Inconclusive;
  std::vector<OrientedPath> paths;  // paths[i] from families[i]
  std::optional<BicliqueWitness> biclique;
  std::string detail;
};

/// working_size 0 means 2 t^2 ell.
PairwiseSelection select_pairwise_anticomplete(const Graph& g, const std::vector<PathFamily>& families,
                                               std::size_t ell, std::size_t t, std::size_t working_size = 0);

class CycleAssemblyError : public InputError {
 public:
  CycleAssemblyError(const std::string& what, Edge chord) : InputError(what), chord_(chord) {}
  Edge chord() const { return chord_; }

 private:
  Edge chord_;
};

/// a_0 P_0 a_1 P_1 ... a_{m-1} P_{m-1}; throws CycleAssemblyError naming a chord.
InducedCycle assemble_cycle(const Graph& g, const std::vector<Vertex>& a, const std::vector<OrientedPath>& paths);

}  // namespace chibound
