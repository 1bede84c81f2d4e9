#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace chibound {

enum class SearchStatus { Found, Absent, Inconclusive };

std::string_view to_string(SearchStatus s);

/// Node budget for exponential searches; 0 means unlimited.
struct SearchBudget {
  std::uint64_t max_nodes = 0;
};

class BudgetMeter {
 public:
  explicit BudgetMeter(SearchBudget b) : limit_(b.max_nodes) {}
  /// Counts one node; false once the budget is spent.
  bool tick() {
    ++used_;
    if (limit_ != 0 && used_ > limit_) exhausted_ = true;
    return !exhausted_;
  }
  bool exhausted() const { return exhausted_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  bool exhausted_ = false;
};

/// Found carries a value. Inconclusive may carry the best partial value.
template <class T>
struct SearchResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<T> value;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::Found; }
  bool absent() const { return status == SearchStatus::Absent; }
  bool inconclusive() const { return status == SearchStatus::Inconclusive; }
};

}  // namespace chibound
