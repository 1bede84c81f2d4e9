#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "chibound/search.hpp"

namespace chibound {

/// Square matrix of index sets. Entries are produced on demand so that large
/// orders never need M^2 storage.
class InterferenceMatrix {
 public:
  using Entry = std::vector<std::uint32_t>;
  using Generator = std::function<Entry(std::uint32_t, std::uint32_t)>;

  InterferenceMatrix(std::size_t order, std::size_t bound, Generator gen);
  /// Dense form, row-major M x M.
  static InterferenceMatrix dense(std::size_t order, std::vector<Entry> entries);
  /// Seeded pseudo-random r-bounded matrix; entry sizes uniform in [0, r].
  static InterferenceMatrix random(std::size_t order, std::size_t r, std::uint64_t seed);

  std::size_t order() const { return order_; }
  /// Declared bound r. Every entry is checked against it when read.
  std::size_t bound() const { return bound_; }
  /// Sorted; throws InputError if the entry breaks the matrix invariants.
  Entry at(std::uint32_t i, std::uint32_t j) const;

 private:
  std::size_t order_;
  std::size_t bound_;
  Generator gen_;
};

/// Triples (i, j, k) of S with i != j and k in a_ij.
std::size_t count_bad_triples(const InterferenceMatrix& a, const std::vector<std::uint32_t>& s);

inline constexpr std::size_t kInterferenceRetries = 64;

struct SelectionResult {
  SearchStatus status = SearchStatus::Inconclusive;
  std::vector<std::uint32_t> indices;  // sorted
  std::size_t attempts = 0;
  bool used_greedy = false;
  bool guaranteed = false;  // sqrt(M) >= r > s^3
};

/// Random s-subsets until one has no bad triple, then greedy insertion.
SelectionResult select_noninterfering(const InterferenceMatrix& a, std::size_t s, std::uint64_t seed,
                                      std::size_t retries = kInterferenceRetries);

}  // namespace chibound
