#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "chibound/graph.hpp"

namespace chibound {

/// Unbounded radius; evaluated as r = n.
inline constexpr std::size_t kInfiniteRadius = std::numeric_limits<std::size_t>::max();

class LinearOrder {
 public:
  LinearOrder() = default;
  /// `sequence` lists the vertices from smallest to largest.
  explicit LinearOrder(std::vector<Vertex> sequence);
  static LinearOrder identity(std::size_t n);

  std::size_t size() const { return seq_.size(); }
  const std::vector<Vertex>& sequence() const { return seq_; }
  std::size_t position(Vertex v) const { return pos_[v]; }
  bool before(Vertex u, Vertex v) const { return pos_[u] < pos_[v]; }

 private:
  std::vector<Vertex> seq_;
  std::vector<std::size_t> pos_;
};

/// Per-vertex reach counts (self included) and their maximum.
std::vector<std::size_t> strong_reach_counts(const Graph& g, const LinearOrder& order, std::size_t r);
std::vector<std::size_t> weak_reach_counts(const Graph& g, const LinearOrder& order, std::size_t r);

/// OpenMP over sources.
std::size_t scol(const Graph& g, const LinearOrder& order, std::size_t r);
std::size_t wcol(const Graph& g, const LinearOrder& order, std::size_t r);
/// Single-threaded reference.
std::size_t scol_serial(const Graph& g, const LinearOrder& order, std::size_t r);
std::size_t wcol_serial(const Graph& g, const LinearOrder& order, std::size_t r);

struct OrderValue {
  std::size_t value = 0;
  LinearOrder order;
  bool exact = false;
};

inline constexpr std::size_t kOrderSearchCap = 9;

/// Exact branch and bound over orders for n <= cap (input error above it).
/// Twins are interchangeable, so only the smallest unplaced twin is tried.
OrderValue scol_opt(const Graph& g, std::size_t r, std::size_t cap = kOrderSearchCap);
OrderValue wcol_opt(const Graph& g, std::size_t r, std::size_t cap = kOrderSearchCap);
/// Degeneracy (smallest-last) order, any n.
OrderValue scol_heuristic(const Graph& g, std::size_t r);
OrderValue wcol_heuristic(const Graph& g, std::size_t r);
LinearOrder degeneracy_order(const Graph& g);

inline constexpr std::size_t kWidthCap = 14;

struct TreedepthResult {
  std::size_t value = 0;
  std::vector<std::int64_t> parent;  // elimination forest, -1 for roots
};

/// Memoized recursion over vertex subsets; n <= cap.
TreedepthResult treedepth_exact(const Graph& g, std::size_t cap = kWidthCap);
/// Elimination-order dynamic programming over subsets; n <= cap.
std::size_t treewidth_exact(const Graph& g, std::size_t cap = kWidthCap);

/// Ancestor/descendant closure covers every edge; returns the height.
std::optional<std::size_t> check_elimination_forest(const Graph& g, std::span<const std::int64_t> parent);

struct IdentityCheck {
  std::string name;
  bool holds = true;
  std::string detail;
};

struct IdentityReport {
  std::size_t tw = 0, td = 0, scol_inf = 0, wcol_inf = 0;
  bool pt_free = false;
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
};

nlohmann::json to_json(const IdentityReport& r);

/// tw = scol_inf - 1, td = wcol_inf, wcol_r <= scol_r^r on the optimal and
/// supplied orders for r in {1, 2, 3, n}; for P_t-free inputs also
/// td <= (tw+1)^(t-1) and scol_inf = scol_{t-1}.
IdentityReport verify_identities(const Graph& g, std::size_t t, std::span<const LinearOrder> extra_orders = {});

}  // namespace chibound
