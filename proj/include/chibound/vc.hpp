#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "chibound/certificate.hpp"
#include "chibound/graph.hpp"

namespace chibound {

struct SetSystem {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::uint32_t>> members;  // each sorted, elements < universe_size

  /// Throws InputError on an out-of-range or repeated element.
  void validate() const;
  std::size_t distinct_members() const;
};

nlohmann::json to_json(const SetSystem& s);
SetSystem set_system_from_json(const nlohmann::json& j);

/// Element i of the universe is x_vertices[i]; member k is the trace of y_vertices[k].
struct NeighborhoodSystem {
  SetSystem system;
  std::vector<Vertex> x_vertices;
  std::vector<Vertex> y_vertices;
};

/// X and Y must be disjoint.
NeighborhoodSystem neighborhood_system(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y);

inline constexpr std::size_t kVcUniverseCap = 20;

/// Exact. Throws InputError when the universe exceeds `cap` (at most 32).
std::size_t vc_dimension(const SetSystem& s, std::size_t cap = kVcUniverseCap);
/// Some shattered set of exactly k elements, if any.
std::optional<std::vector<std::uint32_t>> find_shattered(const SetSystem& s, std::size_t k,
                                                         std::size_t cap = kVcUniverseCap);

/// Sum of C(n, i) for i = 0..k; requires k <= n.
mpz_class sauer_shelah_bound(std::uint64_t n, std::uint64_t k);

struct TraceBucket {
  std::vector<Vertex> trace;    // neighbors in X, sorted
  std::vector<Vertex> members;  // vertices of Y, sorted
};

struct TraceBuckets {
  std::vector<TraceBucket> buckets;  // sorted by trace
  std::size_t largest = 0;           // largest bucket, ties to the smallest trace
  const TraceBucket& best() const { return buckets[largest]; }
};

/// Partition of Y by neighborhood in X. X and Y must be disjoint.
TraceBuckets trace_buckets(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y);

/// z: independent, at least t/2 vertices, t even >= 4. Uses z[0..t/2-1] and
/// picks y_i in Y meeting those exactly in {z_i, z_{i+1}}.
InducedCycle cycle_from_shattered(const Graph& g, std::span<const Vertex> z, std::span<const Vertex> y,
                                  std::size_t t);

/// Hypotheses shared by the two corollaries. `coloring` (parallel to x) is
/// verified when given; otherwise an exact coloring of G[X] is computed.
struct TraceHypotheses {
  std::size_t ell = 2;
  std::size_t q = 1;
  std::size_t t = 4;
  std::optional<std::vector<std::size_t>> coloring;
  /// Skip the |X| >= qt/2 size hypothesis (structural ones are still checked).
  bool best_effort = false;
};

struct TracesCheck {
  bool holds = true;
  mpz_class bound;  // ell * |X|^(qt/2)
  std::optional<Certificate> witness;
};

/// |Y| < ell * |X|^(qt/2). On failure the witness is a K_{ell,ell}, or an
/// induced cycle on t vertices when no trace class reaches ell.
TracesCheck cor_traces_check(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y,
                             const TraceHypotheses& h);

struct TracesSplit {
  std::vector<Vertex> x_prime;
  std::vector<Vertex> y_prime;
  std::optional<BicliqueWitness> biclique;
  bool guaranteed = false;  // |Y| >= ell * |X|^(qt/2) held
};

/// Largest trace class Y' and X' = X minus its trace; anticomplete, checked.
TracesSplit cor_traces3_split(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y,
                              const TraceHypotheses& h);

}  // namespace chibound
