#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "chibound/anticomplete.hpp"
#include "chibound/certificate.hpp"
#include "chibound/graph.hpp"

namespace chibound {

/// Surrogate sizes. Unset fields derive from t: N = t/2, R = 1 (2 when
/// |A'| = 2), |A-sets| = N, |B| = C(N,2) R, Z = |A-sets| + |B|, minor size = Z^2 + Z.
struct PipelineOverrides {
  std::optional<std::size_t> minor_size;
  std::optional<std::size_t> paths_per_pair;
  std::optional<std::size_t> a_prime_size;
  std::optional<std::size_t> a_double_prime_size;
  std::uint64_t seed = 0;
  SearchBudget budget{};
};

struct PipelineResult {
  std::optional<Certificate> certificate;  // induced cycle or biclique
  std::vector<StageReport> stages;
  bool inconclusive() const { return !certificate.has_value(); }
};

nlohmann::json to_json(const PipelineResult& r);

/// t even >= 4, ell >= 2. Every returned certificate has been verified.
PipelineResult main_pipeline(const Graph& g, std::size_t t, std::size_t ell, const PipelineOverrides& ov = {});

/// Stage seed derived from the root seed and a fixed label.
std::uint64_t stage_seed(std::uint64_t root, std::string_view label);

}  // namespace chibound
