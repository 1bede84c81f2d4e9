#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chibound/graph.hpp"

namespace chibound {

enum class CertificateTag {
  InducedCycle,
  InducedPath,
  BicliqueWitness,
  SubdividedStarWitness,
  LowDegreeVertex,
  EliminationOrder,
  IndependentSetWitness,
};

std::string_view to_string(CertificateTag tag);
CertificateTag parse_certificate_tag(std::string_view name);

struct BicliqueWitness {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

struct SubdividedStarWitness {
  Vertex center = 0;
  std::vector<Vertex> middles;
  std::vector<Vertex> leaves;

  std::size_t d() const { return middles.size(); }
  /// [r, u1, v1, ..., ud, vd]
  std::vector<Vertex> flatten() const;
  static SubdividedStarWitness unflatten(std::span<const Vertex> vs);
};

/// Tagged witness. Payload layout per tag:
///   InducedCycle / InducedPath       vertices in order, claimed_bound = minimum length
///   BicliqueWitness                  left, right, claimed_bound = minimum side
///   SubdividedStarWitness            vertices = [r, u1, v1, ...], claimed_bound = d
///   LowDegreeVertex                  vertices = [v], claimed_bound = degree ceiling
///   EliminationOrder                 vertices = permutation, claimed_bound = back-degree ceiling
///   IndependentSetWitness            vertices, claimed_bound = minimum size
struct Certificate {
  CertificateTag tag = CertificateTag::InducedCycle;
  std::vector<Vertex> vertices;
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  std::optional<std::uint64_t> claimed_bound;
  std::optional<nlohmann::json> recursion_trace;

  static Certificate cycle(std::vector<Vertex> vs, std::optional<std::uint64_t> min_len = std::nullopt);
  static Certificate path(std::vector<Vertex> vs, std::optional<std::uint64_t> min_len = std::nullopt);
  static Certificate biclique(const BicliqueWitness& w, std::optional<std::uint64_t> min_side = std::nullopt);
  static Certificate star(const SubdividedStarWitness& w);
  static Certificate low_degree(Vertex v, std::uint64_t bound);
  static Certificate elimination(std::vector<Vertex> order, std::uint64_t bound);
  static Certificate independent(std::vector<Vertex> vs, std::optional<std::uint64_t> min_size = std::nullopt);
};

struct CheckResult {
  bool ok = true;
  std::string detail;
};

/// Structural check. Malformed payloads (wrong shape, ids out of range,
/// missing required bound) throw InputError; mismatches set ok=false and
/// describe the first offending location.
CheckResult check_certificate(const Graph& g, const Certificate& c);
inline bool verify_certificate(const Graph& g, const Certificate& c) { return check_certificate(g, c).ok; }

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

}  // namespace chibound
