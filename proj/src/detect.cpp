#include "chibound/detect.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace chibound {

namespace {

template <class T>
SearchResult<T> finish(const BudgetMeter& meter, std::optional<T> value, bool complete_when_found = true) {
  SearchResult<T> r;
  r.nodes = meter.used();
  if (value && complete_when_found) {
    r.status = SearchStatus::Found;
  } else {
    r.status = meter.exhausted() ? SearchStatus::Inconclusive : SearchStatus::Absent;
  }
  r.value = std::move(value);
  return r;
}

}  // namespace

// ---- bicliques -------------------------------------------------------------

SearchResult<BicliqueWitness> find_biclique_subgraph(const Graph& g, std::size_t a, std::size_t b,
                                                     SearchBudget budget) {
  if (a == 0 || b == 0) throw InputError("biclique sides must be at least 1");
  BudgetMeter meter(budget);
  const std::size_t small = std::min(a, b);
  const std::size_t big = std::max(a, b);
  const std::size_t n = g.order();
  std::vector<Vertex> left;
  std::optional<BicliqueWitness> found;

  std::function<void(const VertexSet&, Vertex)> rec = [&](const VertexSet& common, Vertex start) {
    if (found || !meter.tick()) return;
    if (left.size() == small) {
      auto right = common.to_vector();
      right.resize(big);
      BicliqueWitness w{left, right};
      if (a > b) std::swap(w.left, w.right);
      found = std::move(w);
      return;
    }
    for (Vertex v = start; v < n && !found && !meter.exhausted(); ++v) {
      if (g.degree(v) < big) continue;
      VertexSet next = left.empty() ? g.neighborhood(v) : common & g.neighborhood(v);
      if (next.count() < big) continue;
      left.push_back(v);
      rec(next, v + 1);
      left.pop_back();
    }
  };
  rec(VertexSet(n), 0);
  return finish(meter, std::move(found));
}

SearchResult<std::size_t> max_balanced_biclique(const Graph& g, SearchBudget budget) {
  SearchResult<std::size_t> out;
  std::size_t best = 0;
  for (std::size_t s = 1; s <= g.order() / 2; ++s) {
    auto r = find_biclique_subgraph(g, s, s, budget);
    out.nodes += r.nodes;
    if (r.inconclusive()) {
      out.status = SearchStatus::Inconclusive;
      out.value = best;
      return out;
    }
    if (r.absent()) break;
    best = s;
  }
  out.status = SearchStatus::Found;
  out.value = best;
  return out;
}

// ---- induced paths ---------------------------------------------------------

namespace {

/// DFS over induced paths. Stops as soon as a path of `target` vertices is
/// seen (target 0 means maximize).
struct PathSearch {
  const Graph& g;
  BudgetMeter& meter;
  std::size_t target;
  std::vector<Vertex> path;
  std::vector<Vertex> best;

  bool done() const { return (target != 0 && best.size() >= target) || meter.exhausted(); }

  // forbidden = path plus neighborhoods of every vertex except the last
  void extend(const VertexSet& forbidden) {
    if (done() || !meter.tick()) return;
    if (path.size() > best.size()) best = path;
    if (done()) return;
    const Vertex last = path.back();
    const std::size_t room = path.size() + (g.order() - forbidden.count());
    if (target != 0 ? room < target : room <= best.size()) return;
    VertexSet next_forbidden = forbidden | g.neighborhood(last);
    for (Vertex w : g.neighbors(last)) {
      if (forbidden.contains(w) || std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      VertexSet f = next_forbidden;
      f.insert(w);
      extend(f);
      path.pop_back();
      if (done()) return;
    }
  }

  void run() {
    for (Vertex s = 0; s < g.order() && !done(); ++s) {
      path = {s};
      extend(VertexSet::of(g.order(), std::span<const Vertex>(&s, 1)));
    }
  }
};

}  // namespace

SearchResult<OrientedPath> longest_induced_path(const Graph& g, SearchBudget budget) {
  BudgetMeter meter(budget);
  PathSearch s{g, meter, 0, {}, {}};
  s.run();
  SearchResult<OrientedPath> r;
  r.nodes = meter.used();
  r.status = meter.exhausted() ? SearchStatus::Inconclusive : SearchStatus::Found;
  if (g.order() > 0) r.value = OrientedPath{s.best};
  else r.value = OrientedPath{};
  return r;
}

SearchResult<OrientedPath> has_induced_path(const Graph& g, std::size_t t, SearchBudget budget) {
  if (t == 0) throw InputError("path length must be at least 1");
  BudgetMeter meter(budget);
  PathSearch s{g, meter, t, {}, {}};
  s.run();
  std::optional<OrientedPath> v;
  if (s.best.size() >= t) v = OrientedPath{std::vector<Vertex>(s.best.begin(), s.best.begin() + static_cast<long>(t))};
  return finish(meter, std::move(v));
}

// ---- induced cycles --------------------------------------------------------

namespace {

struct CycleSearch {
  const Graph& g;
  BudgetMeter& meter;
  std::size_t target;  // 0 = maximize
  std::vector<Vertex> path;
  std::vector<Vertex> best;
  VertexSet allowed;
  VertexSet start_nbrs;

  bool done() const { return (target != 0 && best.size() >= target) || meter.exhausted(); }

  void close(Vertex w) {
    if (path.size() < 2 || path[1] > w) return;
    if (path.size() + 1 > best.size()) {
      best = path;
      best.push_back(w);
    }
  }

  // forbidden = path plus neighborhoods of internal vertices p1..p_{k-1}
  void extend(const VertexSet& forbidden) {
    if (done() || !meter.tick()) return;
    const Vertex last = path.back();
    const std::size_t room = path.size() + (allowed - forbidden).count();
    if (target != 0 ? room < target : room <= best.size()) return;
    VertexSet next_forbidden = forbidden | g.neighborhood(last);
    for (Vertex w : g.neighbors(last)) {
      if (!allowed.contains(w) || forbidden.contains(w)) continue;
      if (start_nbrs.contains(w)) {
        close(w);
        if (done()) return;
        continue;
      }
      path.push_back(w);
      VertexSet f = next_forbidden;
      f.insert(w);
      extend(f);
      path.pop_back();
      if (done()) return;
    }
  }

  void run() {
    const std::size_t n = g.order();
    for (Vertex s = 0; s < n && !done(); ++s) {
      allowed = VertexSet(n);
      for (Vertex v = s + 1; v < n; ++v) allowed.insert(v);
      start_nbrs = g.neighborhood(s) & allowed;
      for (Vertex p1 : g.neighbors(s)) {
        if (p1 < s) continue;
        path = {s, p1};
        VertexSet f(n);
        f.insert(s);
        f.insert(p1);
        extend(f);
        if (done()) break;
      }
    }
  }
};

}  // namespace

SearchResult<InducedCycle> find_long_induced_cycle(const Graph& g, std::size_t t, SearchBudget budget) {
  if (t < 3) throw InputError("cycle length threshold must be at least 3");
  BudgetMeter meter(budget);
  CycleSearch s{g, meter, t, {}, {}, {}, {}};
  s.run();
  std::optional<InducedCycle> v;
  if (s.best.size() >= t) v = InducedCycle{s.best};
  return finish(meter, std::move(v));
}

SearchResult<InducedCycle> longest_induced_cycle(const Graph& g, SearchBudget budget) {
  BudgetMeter meter(budget);
  CycleSearch s{g, meter, 0, {}, {}, {}, {}};
  s.run();
  std::optional<InducedCycle> v;
  if (!s.best.empty()) v = InducedCycle{s.best};
  SearchResult<InducedCycle> r;
  r.nodes = meter.used();
  r.status = meter.exhausted() ? SearchStatus::Inconclusive : (v ? SearchStatus::Found : SearchStatus::Absent);
  r.value = std::move(v);
  return r;
}

// ---- subdivided stars ------------------------------------------------------

SearchResult<SubdividedStarWitness> find_induced_subdivided_star(const Graph& g, std::size_t d,
                                                                 SearchBudget budget) {
  if (d < 2) throw InputError("subdivided star needs d >= 2");
  BudgetMeter meter(budget);
  const std::size_t n = g.order();
  std::optional<SubdividedStarWitness> found;
  SubdividedStarWitness cur;

  // chosen = all picked vertices; touched = union of their closed neighborhoods
  std::function<void(Vertex, const VertexSet&, const VertexSet&, const VertexSet&)> rec =
      [&](Vertex min_u, const VertexSet& root_nbrs, const VertexSet& chosen_nbhd, const VertexSet& chosen) {
        if (found || !meter.tick()) return;
        if (cur.middles.size() == d) {
          found = cur;
          return;
        }
        VertexSet cands = root_nbrs - chosen_nbhd - chosen;
        if (cands.count() < d - cur.middles.size()) return;
        for (Vertex u : cands.to_vector()) {
          if (u < min_u) continue;
          if (found || meter.exhausted()) return;
          VertexSet leaf_cands = g.neighborhood(u) - chosen_nbhd - root_nbrs - chosen;
          leaf_cands.erase(cur.center);
          if (leaf_cands.empty()) continue;
          for (Vertex v : leaf_cands.to_vector()) {
            if (g.adjacent(v, cur.center)) continue;
            cur.middles.push_back(u);
            cur.leaves.push_back(v);
            VertexSet nb = chosen_nbhd | g.neighborhood(u) | g.neighborhood(v);
            VertexSet ch = chosen;
            ch.insert(u);
            ch.insert(v);
            rec(u + 1, root_nbrs, nb, ch);
            cur.middles.pop_back();
            cur.leaves.pop_back();
            if (found || meter.exhausted()) return;
          }
        }
      };

  for (Vertex r = 0; r < n && !found && !meter.exhausted(); ++r) {
    if (g.degree(r) < d) continue;
    cur = SubdividedStarWitness{r, {}, {}};
    VertexSet ch(n);
    ch.insert(r);
    // r itself is excluded from chosen_nbhd so middles stay eligible
    rec(0, g.neighborhood(r), VertexSet(n), ch);
  }
  return finish(meter, std::move(found));
}

// ---- independent sets ------------------------------------------------------

namespace {

struct MisSearch {
  std::vector<VertexSet> rows;
  BudgetMeter& meter;
  std::vector<Vertex> cur;
  std::vector<Vertex> best;

  std::size_t clique_cover(VertexSet rest) const {
    std::size_t k = 0;
    while (auto u = rest.first()) {
      VertexSet cand = rest & rows[*u];
      rest.erase(*u);
      while (auto w = cand.first()) {
        rest.erase(*w);
        cand &= rows[*w];
      }
      ++k;
    }
    return k;
  }

  void rec(VertexSet p) {
    if (!meter.tick()) return;
    const std::size_t mark = cur.size();
    // degree <= 1 vertices are always safe to take
    for (bool changed = true; changed;) {
      changed = false;
      p.for_each([&](Vertex v) {
        if (changed || !p.contains(v)) return;
        if (rows[v].intersection_count(p) <= 1) {
          cur.push_back(v);
          p -= rows[v];
          p.erase(v);
          changed = true;
        }
      });
    }
    if (p.empty()) {
      if (cur.size() > best.size()) best = cur;
    } else if (cur.size() + clique_cover(p) > best.size()) {
      Vertex pick = 0;
      std::size_t deg = 0;
      bool first = true;
      p.for_each([&](Vertex v) {
        const std::size_t d = rows[v].intersection_count(p);
        if (first || d > deg) {
          pick = v;
          deg = d;
          first = false;
        }
      });
      cur.push_back(pick);
      rec((p - rows[pick]) - VertexSet::of(p.universe(), std::span<const Vertex>(&pick, 1)));
      cur.pop_back();
      if (!meter.exhausted()) {
        p.erase(pick);
        rec(p);
      }
    }
    cur.resize(mark);
  }
};

}  // namespace

SearchResult<std::vector<Vertex>> max_independent_subset(const Graph& g, const VertexSet& y, SearchBudget budget) {
  if (y.universe() != g.order()) throw InputError("vertex set universe differs from graph order");
  const auto sub = induced_subgraph(g, y);
  if (sub.graph.order() > Graph::kDenseLimit)
    throw InputError("independent-set search limited to " + std::to_string(Graph::kDenseLimit) + " vertices");
  BudgetMeter meter(budget);
  MisSearch s{{}, meter, {}, {}};
  s.rows.reserve(sub.graph.order());
  for (Vertex v = 0; v < sub.graph.order(); ++v) s.rows.push_back(sub.graph.neighborhood(v));
  s.rec(sub.graph.all());
  auto set = sub.parent(s.best);
  std::sort(set.begin(), set.end());
  SearchResult<std::vector<Vertex>> r;
  r.nodes = meter.used();
  r.status = meter.exhausted() ? SearchStatus::Inconclusive : SearchStatus::Found;
  r.value = std::move(set);
  return r;
}

SearchResult<std::vector<Vertex>> max_independent_set(const Graph& g, SearchBudget budget) {
  return max_independent_subset(g, g.all(), budget);
}

SearchResult<std::vector<Vertex>> max_clique(const Graph& g, SearchBudget budget) {
  return max_independent_set(g.complement(), budget);
}

// ---- degeneracy ------------------------------------------------------------

DegeneracyResult degeneracy(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<bool> removed(n, false);
  DegeneracyResult out;
  out.order.reserve(n);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    out.degeneracy = std::max(out.degeneracy, d);
    out.order.push_back(v);
    removed[v] = true;
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  return out;
}

// ---- chromatic number ------------------------------------------------------

ChromaticResult chromatic_number_exact(const Graph& g, SearchBudget budget) {
  const std::size_t n = g.order();
  ChromaticResult out;
  if (n == 0) return out;

  // smallest-last greedy gives at most degeneracy + 1 colors
  const auto deg = degeneracy(g);
  std::vector<std::size_t> color(n, 0);
  std::vector<bool> done(n, false);
  std::size_t used = 0;
  for (auto it = deg.order.rbegin(); it != deg.order.rend(); ++it) {
    std::vector<bool> taken(n + 1, false);
    for (Vertex w : g.neighbors(*it))
      if (done[w]) taken[color[w]] = true;
    std::size_t c = 0;
    while (taken[c]) ++c;
    color[*it] = c;
    done[*it] = true;
    used = std::max(used, c + 1);
  }
  out.upper = used;
  out.coloring = color;

  BudgetMeter meter(budget);
  const auto clique = max_clique(g, budget);
  out.lower = std::max<std::size_t>(1, clique.value ? clique.value->size() : 1);
  if (out.lower >= out.upper || clique.inconclusive()) {
    out.lower = std::min(out.lower, out.upper);
    return out;
  }

  // DSATUR branch and bound seeded with the maximum clique
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> col(n, kNone);
  std::vector<std::vector<std::size_t>> nbr_count(n, std::vector<std::size_t>(n + 1, 0));
  std::vector<std::size_t> satur(n, 0);
  auto assign = [&](Vertex v, std::size_t c) {
    col[v] = c;
    for (Vertex w : g.neighbors(v))
      if (nbr_count[w][c]++ == 0) ++satur[w];
  };
  auto unassign = [&](Vertex v) {
    const std::size_t c = col[v];
    col[v] = kNone;
    for (Vertex w : g.neighbors(v))
      if (--nbr_count[w][c] == 0) --satur[w];
  };
  std::size_t k0 = 0;
  for (Vertex v : *clique.value) assign(v, k0++);

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t colored, std::size_t k) {
    if (out.upper == out.lower || !meter.tick()) return;
    if (colored == n) {
      out.upper = k;
      out.coloring = col;
      return;
    }
    Vertex pick = 0;
    std::size_t best_s = 0, best_d = 0;
    bool first = true;
    for (Vertex v = 0; v < n; ++v) {
      if (col[v] != kNone) continue;
      std::size_t d = 0;
      for (Vertex w : g.neighbors(v)) d += col[w] == kNone ? 1 : 0;
      if (first || satur[v] > best_s || (satur[v] == best_s && d > best_d)) {
        pick = v;
        best_s = satur[v];
        best_d = d;
        first = false;
      }
    }
    for (std::size_t c = 0; c <= k && c + 1 < out.upper; ++c) {
      if (nbr_count[pick][c] != 0) continue;
      assign(pick, c);
      rec(colored + 1, std::max(k, c + 1));
      unassign(pick);
      if (out.upper == out.lower || meter.exhausted()) return;
    }
  };
  rec(clique.value->size(), k0);
  if (!meter.exhausted()) out.lower = out.upper;
  return out;
}

}  // namespace chibound
