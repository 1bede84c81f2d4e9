#include "chibound/interference.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <unordered_set>

#include "chibound/graph.hpp"

namespace chibound {

InterferenceMatrix::InterferenceMatrix(std::size_t order, std::size_t bound, Generator gen)
    : order_(order), bound_(bound), gen_(std::move(gen)) {
  if (order > UINT32_MAX) throw InputError("interference matrix order too large");
}

InterferenceMatrix InterferenceMatrix::dense(std::size_t order, std::vector<Entry> entries) {
  if (entries.size() != order * order) throw InputError("dense interference matrix needs M*M entries");
  std::size_t r = 0;
  for (const auto& e : entries) r = std::max(r, e.size());
  auto shared = std::make_shared<std::vector<Entry>>(std::move(entries));
  return InterferenceMatrix(order, r, [shared, order](std::uint32_t i, std::uint32_t j) {
    return (*shared)[static_cast<std::size_t>(i) * order + j];
  });
}

InterferenceMatrix InterferenceMatrix::random(std::size_t order, std::size_t r, std::uint64_t seed) {
  if (order < 3 && r > 0) throw InputError("random interference matrix needs order >= 3");
  r = std::min(r, order >= 2 ? order - 2 : 0);
  return InterferenceMatrix(order, r, [order, r, seed](std::uint32_t i, std::uint32_t j) {
    Entry e;
    if (i == j) return e;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), i, j};
    std::mt19937_64 rng(seq);
    const std::size_t size = std::uniform_int_distribution<std::size_t>(0, r)(rng);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(order - 1));
    std::unordered_set<std::uint32_t> got;
    while (got.size() < size) {
      const auto k = pick(rng);
      if (k != i && k != j) got.insert(k);
    }
    e.assign(got.begin(), got.end());
    return e;
  });
}

InterferenceMatrix::Entry InterferenceMatrix::at(std::uint32_t i, std::uint32_t j) const {
  if (i >= order_ || j >= order_) throw InputError("interference index out of range");
  Entry e = gen_(i, j);
  std::sort(e.begin(), e.end());
  if (i == j && !e.empty()) throw InputError("diagonal interference entries must be empty");
  if (e.size() > bound_) throw InputError("interference entry larger than the declared bound");
  if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw InputError("repeated index in interference entry");
  for (auto k : e)
    if (k >= order_ || k == i || k == j) throw InputError("interference entry contains an invalid index");
  return e;
}

std::size_t count_bad_triples(const InterferenceMatrix& a, const std::vector<std::uint32_t>& s) {
  std::vector<std::uint32_t> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  std::size_t bad = 0;
  for (auto i : sorted)
    for (auto j : sorted) {
      if (i == j) continue;
      for (auto k : a.at(i, j)) bad += std::binary_search(sorted.begin(), sorted.end(), k) ? 1 : 0;
    }
  return bad;
}

SelectionResult select_noninterfering(const InterferenceMatrix& a, std::size_t s, std::uint64_t seed,
                                      std::size_t retries) {
  const std::size_t m = a.order();
  SelectionResult out;
  const auto r = static_cast<double>(a.bound());
  out.guaranteed = std::sqrt(static_cast<double>(m)) >= r && a.bound() > s * s * s;
  if (s > m) return out;
  if (s == 0) {
    out.status = SearchStatus::Found;
    return out;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < retries; ++attempt) {
    out.attempts = attempt + 1;
    // Floyd's sampling of s distinct indices
    std::unordered_set<std::uint32_t> chosen;
    for (std::size_t j = m - s; j < m; ++j) {
      const auto t = std::uniform_int_distribution<std::uint32_t>(0, static_cast<std::uint32_t>(j))(rng);
      chosen.insert(chosen.count(t) ? static_cast<std::uint32_t>(j) : t);
    }
    std::vector<std::uint32_t> cand(chosen.begin(), chosen.end());
    std::sort(cand.begin(), cand.end());
    if (count_bad_triples(a, cand) == 0) {
      out.indices = std::move(cand);
      out.status = SearchStatus::Found;
      return out;
    }
  }
  out.used_greedy = true;
  std::vector<std::uint32_t> cur;
  for (std::uint32_t k = 0; k < m && cur.size() < s; ++k) {
    cur.push_back(k);
    if (count_bad_triples(a, cur) != 0) cur.pop_back();
  }
  if (cur.size() == s) {
    out.indices = std::move(cur);
    out.status = SearchStatus::Found;
  }
  return out;
}

}  // namespace chibound
