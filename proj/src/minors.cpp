#include "chibound/minors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace chibound {

std::vector<int> CliqueMinor::owner(std::size_t n) const {
  std::vector<int> own(n, -1);
  for (std::size_t i = 0; i < branch_sets.size(); ++i)
    for (Vertex v : branch_sets[i]) own[v] = static_cast<int>(i);
  return own;
}

nlohmann::json to_json(const CliqueMinor& m) { return m.branch_sets; }

CliqueMinor minor_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("clique minor JSON must be a list of vertex lists");
  CliqueMinor m;
  for (const auto& s : j) {
    if (!s.is_array()) throw InputError("clique minor JSON must be a list of vertex lists");
    std::vector<Vertex> set;
    for (const auto& v : s) {
      if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError("branch set ids must be non-negative");
      set.push_back(v.get<Vertex>());
    }
    std::sort(set.begin(), set.end());
    m.branch_sets.push_back(std::move(set));
  }
  return m;
}

namespace {

// BFS confined to one vertex subset, with O(|set|) work per run.
class LocalBfs {
 public:
  explicit LocalBfs(std::size_t n) : pos_(n, -1) {}

  void run(const Graph& g, std::span<const Vertex> set, Vertex src, std::optional<Vertex> skip = std::nullopt) {
    for (Vertex v : set_) pos_[v] = -1;
    set_.assign(set.begin(), set.end());
    for (std::size_t i = 0; i < set_.size(); ++i) pos_[set_[i]] = static_cast<int>(i);
    dist_.assign(set_.size(), -1);
    parent_.assign(set_.size(), 0);
    if (skip && pos_[*skip] >= 0) dist_[static_cast<std::size_t>(pos_[*skip])] = -2;
    std::deque<Vertex> q{src};
    dist_[static_cast<std::size_t>(pos_[src])] = 0;
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop_front();
      const int du = dist_[static_cast<std::size_t>(pos_[u])];
      for (Vertex w : g.neighbors(u)) {
        const int pw = pos_[w];
        if (pw < 0 || dist_[static_cast<std::size_t>(pw)] != -1) continue;
        dist_[static_cast<std::size_t>(pw)] = du + 1;
        parent_[static_cast<std::size_t>(pw)] = u;
        q.push_back(w);
      }
    }
  }
  int dist(Vertex v) const {
    const int p = pos_[v];
    return p < 0 ? -1 : std::max(dist_[static_cast<std::size_t>(p)], -1);
  }
  std::vector<Vertex> path_to(Vertex src, Vertex dst) const {
    std::vector<Vertex> path{dst};
    while (path.back() != src) path.push_back(parent_[static_cast<std::size_t>(pos_[path.back()])]);
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  std::vector<int> pos_;
  std::vector<Vertex> set_;
  std::vector<int> dist_;
  std::vector<Vertex> parent_;
};

bool connected_set(const Graph& g, LocalBfs& bfs, std::span<const Vertex> set,
                   std::optional<Vertex> skip = std::nullopt) {
  const std::size_t total = set.size() - (skip ? 1 : 0);
  if (total == 0) return true;
  const Vertex start = set[0] == skip ? set[1] : set[0];
  bfs.run(g, set, start, skip);
  std::size_t reached = 0;
  for (Vertex v : set)
    if (bfs.dist(v) >= 0) ++reached;
  return reached == total;
}

std::vector<char> mark(std::size_t n, std::span<const Vertex> vs) {
  std::vector<char> m(n, 0);
  for (Vertex v : vs) m[v] = 1;
  return m;
}

/// For every vertex of set i: the branch sets (other than i) it touches.
std::vector<std::vector<int>> touched_sets(const Graph& g, const std::vector<int>& own, std::span<const Vertex> set,
                                           int self) {
  std::vector<std::vector<int>> out;
  for (Vertex v : set) {
    std::vector<int> ts;
    for (Vertex w : g.neighbors(v))
      if (own[w] >= 0 && own[w] != self) ts.push_back(own[w]);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    out.push_back(std::move(ts));
  }
  return out;
}

/// Index (within set) of vertices that own a private adjacent branch set.
std::vector<char> private_flags(const std::vector<std::vector<int>>& touched) {
  std::map<int, int> count;
  for (const auto& ts : touched)
    for (int j : ts) ++count[j];
  std::vector<char> out(touched.size(), 0);
  for (std::size_t i = 0; i < touched.size(); ++i)
    for (int j : touched[i])
      if (count[j] == 1) out[i] = 1;
  return out;
}

void check_ids(const Graph& g, const CliqueMinor& m) {
  for (const auto& s : m.branch_sets) g.check_vertices(s);
}

}  // namespace

bool validate_minor(const Graph& g, const CliqueMinor& m) {
  check_ids(g, m);
  std::vector<int> own(g.order(), -1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.branch_sets[i].empty()) return false;
    for (Vertex v : m.branch_sets[i]) {
      if (own[v] != -1) return false;
      own[v] = static_cast<int>(i);
    }
  }
  LocalBfs bfs(g.order());
  for (const auto& s : m.branch_sets)
    if (!connected_set(g, bfs, s)) return false;
  const std::size_t k = m.size();
  std::vector<char> adj(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (Vertex v : m.branch_sets[i])
      for (Vertex w : g.neighbors(v))
        if (own[w] >= 0) adj[i * k + static_cast<std::size_t>(own[w])] = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!adj[i * k + j]) return false;
  return true;
}

bool is_minimal(const Graph& g, const CliqueMinor& m) {
  const auto own = m.owner(g.order());
  LocalBfs bfs(g.order());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& s = m.branch_sets[i];
    const auto flags = private_flags(touched_sets(g, own, s, static_cast<int>(i)));
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (s.size() == 1 || flags[a]) continue;
      if (connected_set(g, bfs, s, s[a])) return false;
    }
  }
  return true;
}

CliqueMinor minimize_minor(const Graph& g, const CliqueMinor& m) {
  if (!validate_minor(g, m)) throw InputError("minimize_minor needs a valid clique minor");
  CliqueMinor out = m;
  auto own = out.owner(g.order());
  std::vector<Vertex> all;
  for (const auto& s : out.branch_sets) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.rbegin(), all.rend());
  LocalBfs bfs(g.order());
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v : all) {
      const int i = own[v];
      if (i < 0) continue;
      auto& s = out.branch_sets[static_cast<std::size_t>(i)];
      if (s.size() == 1) continue;
      const auto touched = touched_sets(g, own, s, i);
      const auto flags = private_flags(touched);
      const auto pos = static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), v) - s.begin());
      if (flags[pos] || !connected_set(g, bfs, s, v)) continue;
      s.erase(s.begin() + static_cast<long>(pos));
      own[v] = -1;
      changed = true;
    }
  }
  return out;
}

std::size_t branch_diameter_vertices(const Graph& g, std::span<const Vertex> set) {
  LocalBfs bfs(g.order());
  int best = 0;
  for (Vertex u : set) {
    bfs.run(g, set, u);
    for (Vertex v : set) best = std::max(best, bfs.dist(v));
  }
  return static_cast<std::size_t>(best) + 1;
}

std::optional<InducedCycle> check_branch_diameter(const Graph& g, const CliqueMinor& m, std::size_t t) {
  if (m.size() < 3) throw InputError("branch diameter check needs at least 3 branch sets");
  if (!validate_minor(g, m) || !is_minimal(g, m)) throw InputError("branch diameter check needs a minimal clique minor");
  const auto own = m.owner(g.order());
  LocalBfs bfs(g.order());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& s = m.branch_sets[i];
    if (s.size() < t) continue;
    Vertex bu = s[0], bv = s[0];
    int best = 0;
    for (Vertex u : s) {
      bfs.run(g, s, u);
      for (Vertex v : s)
        if (bfs.dist(v) > best) {
          best = bfs.dist(v);
          bu = u;
          bv = v;
        }
    }
    if (static_cast<std::size_t>(best) + 1 < t) continue;

    bfs.run(g, s, bu);
    const auto path = bfs.path_to(bu, bv);
    const auto touched = touched_sets(g, own, s, static_cast<int>(i));
    std::map<int, int> count;
    for (const auto& ts : touched)
      for (int j : ts) ++count[j];
    auto private_of = [&](Vertex x, int avoid) {
      const auto pos = static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), x) - s.begin());
      for (int j : touched[pos])
        if (count[j] == 1 && j != avoid) return j;
      return -1;
    };
    const int ku = private_of(bu, -1);
    const int kv = private_of(bv, ku);
    if (ku < 0 || kv < 0) throw InternalError("endpoint of a diametral path has no private branch set");

    // bu and bv are not adjacent, so bv can only be entered from K_u or K_v
    std::vector<Vertex> q_set = m.branch_sets[static_cast<std::size_t>(ku)];
    q_set.insert(q_set.end(), m.branch_sets[static_cast<std::size_t>(kv)].begin(),
                 m.branch_sets[static_cast<std::size_t>(kv)].end());
    q_set.push_back(bu);
    q_set.push_back(bv);
    bfs.run(g, q_set, bu);
    if (bfs.dist(bv) < 0) throw InternalError("no connecting path through the private branch sets");
    const auto q = bfs.path_to(bu, bv);
    std::vector<Vertex> cycle = path;
    for (std::size_t k = q.size() - 2; k >= 1; --k) cycle.push_back(q[k]);
    if (!verify_induced_cycle(g, cycle)) throw InternalError("diameter construction produced a non-induced cycle");
    return InducedCycle{cycle};
  }
  return std::nullopt;
}

// ---- high-adjacency sets ---------------------------------------------------

namespace {

std::vector<std::size_t> adjacency_counts(const Graph& g, const std::vector<int>& own, Vertex v) {
  std::vector<std::size_t> ts;
  for (Vertex w : g.neighbors(v))
    if (own[w] >= 0 && own[w] != own[v]) ts.push_back(static_cast<std::size_t>(own[w]));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

/// Shortest cycle inside V(C) meeting the layers X_0..X_{t-1} in cyclic order.
std::optional<std::vector<Vertex>> layered_cycle(const Graph& g, const std::vector<std::vector<Vertex>>& layers) {
  const std::size_t t = layers.size();
  std::map<Vertex, std::size_t> layer_of;
  for (std::size_t i = 0; i < t; ++i)
    for (Vertex v : layers[i]) layer_of[v] = i;
  std::optional<std::vector<Vertex>> best;
  for (Vertex x : layers[0]) {
    // state (vertex, progress in 0..t)
    std::map<std::pair<Vertex, std::size_t>, std::pair<Vertex, std::size_t>> parent;
    std::deque<std::pair<Vertex, std::size_t>> q{{x, 0}};
    parent[{x, 0}] = {x, 0};
    bool done = false;
    while (!q.empty() && !done) {
      auto [v, k] = q.front();
      q.pop_front();
      for (Vertex w : g.neighbors(v)) {
        auto it = layer_of.find(w);
        if (it == layer_of.end()) continue;
        const std::size_t lw = it->second;
        std::size_t nk;
        if (k == 0) {
          if (lw != 1 % t) continue;
          nk = 1;
        } else if (k < t && lw == k) {
          nk = k;
        } else if (k < t && lw == (k + 1) % t) {
          nk = k + 1;
        } else if (k == t && lw == 0) {
          nk = t;
        } else {
          continue;
        }
        if (nk == t && w == x) {
          parent[{w, nk}] = {v, k};
          done = true;
          break;
        }
        if (w == x) continue;
        if (parent.count({w, nk})) continue;
        parent[{w, nk}] = {v, k};
        q.emplace_back(w, nk);
      }
    }
    if (!done) continue;
    std::vector<Vertex> cyc;
    for (std::pair<Vertex, std::size_t> s = parent[{x, t}]; !(s.first == x && s.second == 0); s = parent[s])
      cyc.push_back(s.first);
    cyc.push_back(x);
    std::reverse(cyc.begin(), cyc.end());
    if (!best || cyc.size() < best->size()) best = std::move(cyc);
  }
  return best;
}

}  // namespace

HighAdjacencyResult find_high_adjacency_sets(const Graph& g, const CliqueMinor& m, std::size_t p, std::size_t t,
                                             std::uint64_t seed, std::size_t retries) {
  if (p == 0) throw InputError("p must be positive");
  if (!validate_minor(g, m)) throw InputError("high-adjacency search needs a valid clique minor");
  const auto own = m.owner(g.order());
  const std::size_t need = p * p;
  HighAdjacencyResult out;

  std::vector<std::size_t> low_sets;
  for (std::size_t i = 0; i < m.size(); ++i) {
    Vertex best_v = m.branch_sets[i][0];
    std::size_t best_c = 0;
    for (Vertex v : m.branch_sets[i]) {
      const std::size_t c = adjacency_counts(g, own, v).size();
      if (c > best_c) {
        best_c = c;
        best_v = v;
      }
    }
    if (best_c >= need) out.selected.emplace_back(i, best_v);
    else low_sets.push_back(i);
  }
  if (out.selected.size() >= p) {
    out.selected.resize(p);
    out.status = SearchStatus::Found;
    return out;
  }
  out.selected.clear();
  if (t < 3 || low_sets.size() < t) {
    out.detail = "only " + std::to_string(low_sets.size()) + " low-adjacency branch sets for a cycle through " +
                 std::to_string(t);
    return out;
  }

  std::map<std::pair<std::size_t, std::size_t>, Vertex> connector;
  auto conn = [&](std::size_t a, std::size_t b) {
    auto key = std::pair{a, b};
    if (auto it = connector.find(key); it != connector.end()) return it->second;
    const auto& sa = m.branch_sets[a];
    const auto& sb = m.branch_sets[b];
    const auto in_b = mark(g.order(), sb);
    for (Vertex x : sa)
      for (Vertex y : g.neighbors(x))
        if (in_b[y]) {
          connector[{a, b}] = x;
          connector[{b, a}] = y;
          return x;
        }
    throw InternalError("branch sets are not adjacent");
  };

  std::mt19937_64 rng(seed);
  LocalBfs bfs(g.order());
  for (std::size_t attempt = 0; attempt < retries; ++attempt) {
    out.attempts = attempt + 1;
    std::vector<std::size_t> pool = low_sets;
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(t);
    std::vector<std::vector<Vertex>> layers;
    for (std::size_t i = 0; i < t; ++i) {
      const std::size_t prev = pool[(i + t - 1) % t], cur = pool[i], next = pool[(i + 1) % t];
      // the pair (a, b) is always resolved from the smaller index first
      auto side = [&](std::size_t a, std::size_t b) {
        if (a < b) {
          conn(a, b);
          return connector.at({a, b});
        }
        conn(b, a);
        return connector.at({a, b});
      };
      const Vertex from = side(cur, prev), to = side(cur, next);
      bfs.run(g, m.branch_sets[cur], from);
      layers.push_back(bfs.path_to(from, to));
    }
    auto cyc = layered_cycle(g, layers);
    if (cyc && cyc->size() >= t && verify_induced_cycle(g, *cyc)) {
      out.cycle = InducedCycle{*cyc};
      out.status = SearchStatus::Found;
      return out;
    }
  }
  out.detail = "no induced cycle after " + std::to_string(retries) + " attempts";
  return out;
}

FullMinorResult full_vertex_minor(const Graph& g, const CliqueMinor& m, std::size_t p, std::size_t t,
                                  std::uint64_t seed) {
  if (p == 0) throw InputError("p must be positive");
  if (!validate_minor(g, m)) throw InputError("full_vertex_minor needs a valid clique minor");
  FullMinorResult out;
  const CliqueMinor mm = minimize_minor(g, m);
  if (mm.size() >= 3 && t >= 3) {
    if (auto cyc = check_branch_diameter(g, mm, t)) {
      out.kind = FullMinorResult::Kind::Cycle;
      out.cycle = std::move(cyc);
      return out;
    }
  }
  auto high = find_high_adjacency_sets(g, mm, p, t, seed);
  if (high.cycle) {
    out.kind = FullMinorResult::Kind::Cycle;
    out.cycle = std::move(high.cycle);
    return out;
  }
  if (high.status != SearchStatus::Found) {
    out.detail = "high-adjacency stage: " + high.detail;
    return out;
  }

  const auto own = mm.owner(g.order());
  std::vector<char> taken(mm.size(), 0);
  for (auto [idx, v] : high.selected) taken[idx] = 1;
  std::vector<std::vector<std::size_t>> nbr_sets;
  for (auto [idx, v] : high.selected) nbr_sets.push_back(adjacency_counts(g, own, v));

  for (std::size_t i = 0; i < p; ++i) {
    std::vector<Vertex> merged = mm.branch_sets[high.selected[i].first];
    for (std::size_t j = 0; j < p; ++j) {
      if (i == j) continue;
      auto it = std::find_if(nbr_sets[j].begin(), nbr_sets[j].end(), [&](std::size_t s) { return !taken[s]; });
      if (it == nbr_sets[j].end()) {
        out.detail = "no unused branch set adjacent to the full-vertex candidate of set " + std::to_string(j);
        return out;
      }
      taken[*it] = 1;
      merged.insert(merged.end(), mm.branch_sets[*it].begin(), mm.branch_sets[*it].end());
    }
    std::sort(merged.begin(), merged.end());
    out.minor.branch_sets.push_back(std::move(merged));
    out.full_vertices.push_back(high.selected[i].second);
  }

  if (!validate_minor(g, out.minor)) throw InternalError("merged branch sets do not form a clique minor");
  const auto own2 = out.minor.owner(g.order());
  for (std::size_t i = 0; i < p; ++i) {
    if (adjacency_counts(g, own2, out.full_vertices[i]).size() + 1 != p)
      throw InternalError("designated vertex is not full");
    if (t >= 3 && mm.size() >= 3 && branch_diameter_vertices(g, out.minor.branch_sets[i]) >= 2 * t)
      throw InternalError("merged branch set has a shortest path on 2t or more vertices");
  }
  out.kind = FullMinorResult::Kind::Minor;
  return out;
}

// ---- clique-minor search ---------------------------------------------------

namespace {

std::optional<std::vector<Vertex>> any_cycle(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> parent(n, -2), depth(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (parent[s] != -2) continue;
    parent[s] = -1;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (parent[w] == -2) {
          parent[w] = static_cast<int>(u);
          depth[w] = depth[u] + 1;
          stack.push_back(w);
        } else if (static_cast<int>(w) != parent[u] && parent[w] != static_cast<int>(u)) {
          // non-tree edge u-w: walk both ends up to the common ancestor
          std::vector<Vertex> a{u}, b{w};
          while (a.back() != b.back()) {
            if (depth[a.back()] >= depth[b.back()]) a.push_back(static_cast<Vertex>(parent[a.back()]));
            else b.push_back(static_cast<Vertex>(parent[b.back()]));
          }
          b.pop_back();
          a.insert(a.end(), b.rbegin(), b.rend());
          return a;
        }
      }
    }
  }
  return std::nullopt;
}

bool series_parallel(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> alive(n, 1);
  std::deque<Vertex> work;
  for (Vertex v = 0; v < n; ++v) work.push_back(v);
  std::size_t left = n;
  while (!work.empty()) {
    const Vertex v = work.front();
    work.pop_front();
    if (!alive[v] || adj[v].size() > 2) continue;
    std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    for (Vertex w : nb) {
      adj[w].erase(v);
      work.push_back(w);
    }
    if (nb.size() == 2) {
      adj[nb[0]].insert(nb[1]);
      adj[nb[1]].insert(nb[0]);
    }
    adj[v].clear();
    alive[v] = 0;
    --left;
  }
  return left == 0;
}

std::optional<CliqueMinor> greedy_contraction(const Graph& g, std::size_t p) {
  const std::size_t n = g.order();
  std::vector<std::set<Vertex>> adj(n);
  std::vector<std::vector<Vertex>> sets(n);
  for (Vertex v = 0; v < n; ++v) {
    sets[v] = {v};
    for (Vertex w : g.neighbors(v)) adj[v].insert(w);
  }
  std::set<std::pair<std::size_t, Vertex>> by_degree;
  for (Vertex v = 0; v < n; ++v) by_degree.emplace(adj[v].size(), v);
  std::size_t alive = n;

  auto remove_node = [&](Vertex u) {
    by_degree.erase({adj[u].size(), u});
    for (Vertex x : adj[u]) {
      by_degree.erase({adj[x].size(), x});
      adj[x].erase(u);
      by_degree.emplace(adj[x].size(), x);
    }
    adj[u].clear();
    --alive;
  };

  while (alive >= p) {
    auto [deg, u] = *by_degree.begin();
    if (deg + 1 >= alive) break;  // quotient is complete
    if (deg == 0) {
      by_degree.erase(by_degree.begin());
      --alive;
      sets[u].clear();
      continue;
    }
    Vertex target = *adj[u].begin();
    std::size_t best_common = n + 1;
    for (Vertex w : adj[u]) {
      std::size_t common = 0;
      for (Vertex x : adj[u]) common += (x != w && adj[w].count(x)) ? 1 : 0;
      if (common < best_common) {
        best_common = common;
        target = w;
      }
    }
    std::vector<Vertex> nb(adj[u].begin(), adj[u].end());
    std::vector<Vertex> moved = std::move(sets[u]);
    sets[u].clear();
    remove_node(u);
    by_degree.erase({adj[target].size(), target});
    for (Vertex x : nb) {
      if (x == target || adj[target].count(x)) continue;
      by_degree.erase({adj[x].size(), x});
      adj[x].insert(target);
      adj[target].insert(x);
      by_degree.emplace(adj[x].size(), x);
    }
    by_degree.emplace(adj[target].size(), target);
    sets[target].insert(sets[target].end(), moved.begin(), moved.end());
  }
  if (alive < p) return std::nullopt;
  CliqueMinor m;
  for (auto [deg, v] : by_degree) {
    (void)deg;
    m.branch_sets.push_back(sets[v]);
  }
  std::sort(m.branch_sets.begin(), m.branch_sets.end(),
            [](const auto& a, const auto& b) { return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end()); });
  m.branch_sets.resize(p);
  for (auto& s : m.branch_sets) std::sort(s.begin(), s.end());
  return m;
}

SearchResult<CliqueMinor> exhaustive_minor(const Graph& g, std::size_t p, SearchBudget budget) {
  const std::size_t n = g.order();
  BudgetMeter meter(budget);
  std::vector<std::size_t> label(n, 0);
  std::optional<CliqueMinor> found;
  std::function<void(Vertex, std::size_t)> rec = [&](Vertex v, std::size_t used) {
    if (found || !meter.tick()) return;
    if (p - used > n - v) return;
    if (v == n) {
      CliqueMinor m;
      m.branch_sets.assign(p, {});
      for (Vertex x = 0; x < n; ++x)
        if (label[x] > 0) m.branch_sets[label[x] - 1].push_back(x);
      if (validate_minor(g, m)) found = std::move(m);
      return;
    }
    for (std::size_t l = 0; l <= std::min(used + 1, p) && !found; ++l) {
      label[v] = l;
      rec(v + 1, std::max(used, l));
    }
    label[v] = 0;
  };
  rec(0, 0);
  SearchResult<CliqueMinor> r;
  r.nodes = meter.used();
  r.status = found ? SearchStatus::Found : (meter.exhausted() ? SearchStatus::Inconclusive : SearchStatus::Absent);
  r.value = std::move(found);
  return r;
}

constexpr std::size_t kExhaustiveLimit = 10;

}  // namespace

SearchResult<CliqueMinor> find_clique_minor(const Graph& g, std::size_t p, SearchBudget budget) {
  if (p == 0) throw InputError("clique minor size must be at least 1");
  const std::size_t n = g.order();
  SearchResult<CliqueMinor> r;
  auto found = [&](CliqueMinor m) {
    r.status = SearchStatus::Found;
    r.value = std::move(m);
    return r;
  };
  if (p > n || g.size() < p * (p - 1) / 2) {
    r.status = SearchStatus::Absent;
    return r;
  }
  if (p == 1) return found(CliqueMinor{{{0}}});
  if (p == 2) {
    auto e = g.edges().front();
    return found(CliqueMinor{{{e.first}, {e.second}}});
  }
  if (p == 3) {
    auto c = any_cycle(g);
    if (!c) {
      r.status = SearchStatus::Absent;
      return r;
    }
    std::vector<Vertex> rest(c->begin() + 2, c->end());
    std::sort(rest.begin(), rest.end());
    return found(CliqueMinor{{{(*c)[0]}, {(*c)[1]}, rest}});
  }
  if (p == 4 && series_parallel(g)) {
    r.status = SearchStatus::Absent;
    return r;
  }
  if (auto m = greedy_contraction(g, p); m && validate_minor(g, *m)) return found(std::move(*m));
  if (n <= kExhaustiveLimit) return exhaustive_minor(g, p, budget);
  r.status = SearchStatus::Inconclusive;
  return r;
}

}  // namespace chibound
