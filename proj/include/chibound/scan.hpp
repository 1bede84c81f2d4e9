#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chibound/graph.hpp"
#include "chibound/search.hpp"

namespace chibound {

inline constexpr const char* kScanSchemaTag = "# chibound-scan v1";

/// Null fields were inconclusive (budget) or outside the exact caps.
struct ExperimentRecord {
  std::size_t id = 0;
  std::size_t n = 0, m = 0;
  std::string graph6;
  std::optional<std::size_t> longest_induced_path;   // vertices
  std::optional<std::size_t> longest_induced_cycle;  // 0 when acyclic
  std::optional<std::size_t> max_biclique;           // largest l with K_{l,l}
  std::size_t degeneracy = 0;
  std::optional<std::size_t> chi, omega, tw, td;
  std::vector<std::string> exhausted;  // fields nulled by the budget
};

struct ScanOptions {
  std::size_t t = 4;
  std::vector<std::size_t> ells{2, 3, 4};
  bool path_mode = false;  // filter P_t-free instead of C>=t-free
  SearchBudget budget{};
  int threads = 0;  // 0: OpenMP default
};

struct ScanBucket {
  std::size_t ell = 0;
  std::size_t count = 0;
  std::optional<std::size_t> max_degeneracy, max_tw, max_td;
};

struct ScanSummary {
  std::size_t total = 0;
  std::size_t excluded = 0;  // needed detector inconclusive
  std::vector<ScanBucket> buckets;
  std::optional<double> slope;  // log-log fit, at least 3 points
  std::size_t slope_points = 0;
  std::size_t contradictions = 0;
};

struct ScanResult {
  std::vector<ExperimentRecord> records;
  ScanSummary summary;
};

ExperimentRecord compute_record(const Graph& g, std::size_t id, SearchBudget budget = {});
/// Checks degeneracy <= tw + 1 and chi <= degeneracy + 1 where known.
std::vector<std::string> record_contradictions(const ExperimentRecord& r);

/// OpenMP over graphs; records are ordered by id.
ScanResult scan_bounds(const std::vector<Graph>& corpus, const ScanOptions& opt);
/// One graph at a time, same output.
ScanResult scan_bounds_serial(const std::vector<Graph>& corpus, const ScanOptions& opt);

std::string to_csv(const std::vector<ExperimentRecord>& records);
nlohmann::json to_json(const ScanSummary& s, const ScanOptions& opt);

}  // namespace chibound
