#include "chibound/anticomplete.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <gmpxx.h>

#include "chibound/detect.hpp"
#include "chibound/interference.hpp"
#include "chibound/vc.hpp"

namespace chibound {

nlohmann::json to_json(const StageReport& s) {
  return {{"name", s.name}, {"target_size", s.target_size}, {"achieved_size", s.achieved_size}, {"outcome", s.outcome}};
}

namespace {

// Shortest path inside G[set] from any vertex of `from` to any vertex of
// `to` (both masks over the set), ties towards smaller ids.
class SetPaths {
 public:
  explicit SetPaths(std::size_t n) : pos_(n, -1) {}

  std::optional<std::vector<Vertex>> shortest(const Graph& g, std::span<const Vertex> set,
                                              const std::vector<char>& is_source,
                                              const std::vector<char>& is_target) {
    for (std::size_t i = 0; i < set.size(); ++i) pos_[set[i]] = static_cast<int>(i);
    std::vector<int> dist(set.size(), -1);
    std::vector<Vertex> parent(set.size(), 0);
    std::deque<Vertex> q;
    for (std::size_t i = 0; i < set.size(); ++i)
      if (is_source[i]) {
        dist[i] = 0;
        q.push_back(set[i]);
      }
    std::optional<Vertex> hit;
    while (!q.empty() && !hit) {
      const Vertex u = q.front();
      q.pop_front();
      const auto pu = static_cast<std::size_t>(pos_[u]);
      if (is_target[pu]) {
        hit = u;
        break;
      }
      for (Vertex w : g.neighbors(u)) {
        const int pw = pos_[w];
        if (pw < 0 || dist[static_cast<std::size_t>(pw)] >= 0) continue;
        dist[static_cast<std::size_t>(pw)] = dist[pu] + 1;
        parent[static_cast<std::size_t>(pw)] = u;
        q.push_back(w);
      }
    }
    std::optional<std::vector<Vertex>> out;
    if (hit) {
      std::vector<Vertex> path{*hit};
      while (dist[static_cast<std::size_t>(pos_[path.back()])] > 0)
        path.push_back(parent[static_cast<std::size_t>(pos_[path.back()])]);
      std::reverse(path.begin(), path.end());
      out = std::move(path);
    }
    for (Vertex v : set) pos_[v] = -1;
    return out;
  }

 private:
  std::vector<int> pos_;
};

void check_family_basics(const Graph& g, const PathFamily& f, std::size_t t, const char* name) {
  for (const auto& p : f.paths) {
    if (p.vertices.empty()) throw InputError(std::string(name) + ": empty path");
    g.check_vertices(p.vertices);
    if (t > 0 && p.size() >= 2 * t) throw InputError(std::string(name) + ": path with 2t or more vertices");
  }
  if (!is_partially_anticomplete(g, f)) throw InputError(std::string(name) + ": family is not partially anticomplete");
}

bool all_disjoint(const std::vector<const PathFamily*>& fams) {
  std::vector<Vertex> all;
  for (const auto* f : fams) {
    auto vs = f->vertices();
    all.insert(all.end(), vs.begin(), vs.end());
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

std::vector<Vertex> max_independent_of(const Graph& g, const std::vector<Vertex>& vs, SearchBudget budget) {
  auto r = max_independent_subset(g, VertexSet::of(g.order(), vs), budget);
  return r.value.value_or(std::vector<Vertex>{});
}

}  // namespace

LinkedFamilies build_linked_families(const Graph& g, const std::vector<Vertex>& a,
                                     const std::vector<std::vector<Vertex>>& b, const LinkedParams& params) {
  g.check_vertices(a);
  if (params.t < 4 || params.t % 2 != 0) throw InputError("t must be even and at least 4");
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].empty()) throw InputError("empty branch set");
    g.check_vertices(b[i]);
    for (Vertex v : b[i]) {
      if (owner[v] >= 0) throw InputError("branch sets overlap");
      owner[v] = static_cast<int>(i);
    }
  }
  for (Vertex u : a) {
    if (owner[u] >= 0) throw InputError("A meets a branch set");
    std::vector<char> seen(b.size(), 0);
    for (Vertex w : g.neighbors(u))
      if (owner[w] >= 0) seen[static_cast<std::size_t>(owner[w])] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw InputError("vertex " + std::to_string(u) + " of A misses a branch set");
  }

  LinkedFamilies out;
  auto stage = [&](std::string name, std::uint64_t target, std::uint64_t got, bool ok) {
    out.stages.push_back({std::move(name), target, got, ok ? "ok" : "inconclusive"});
    return ok;
  };

  // independent subset A''
  std::vector<Vertex> a2 = max_independent_of(g, a, params.budget);
  const std::size_t n_target = params.a_double_prime_size ? params.a_double_prime_size : a2.size();
  if (a2.size() > n_target) a2.resize(n_target);
  if (!stage("independent-set", std::max<std::size_t>(n_target, 2), a2.size(), a2.size() >= 2 && a2.size() >= n_target))
    return out;
  const std::size_t n = a2.size();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  // round-robin groups
  std::vector<std::vector<std::size_t>> groups(pairs.size());
  for (std::size_t c = 0; c < b.size(); ++c) groups[c % pairs.size()].push_back(c);
  std::size_t smallest_group = b.size();
  for (const auto& gr : groups) smallest_group = std::min(smallest_group, gr.size());
  if (!stage("partition", params.paths_per_pair, smallest_group, smallest_group > 0)) return out;

  // shortest u-v connections through each branch set
  SetPaths sp(g.order());
  std::vector<std::vector<OrientedPath>> raw(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const Vertex u = a2[pairs[p].first], v = a2[pairs[p].second];
    for (std::size_t c : groups[p]) {
      const auto& set = b[c];
      std::vector<char> src(set.size()), dst(set.size());
      for (std::size_t i = 0; i < set.size(); ++i) {
        src[i] = g.adjacent(set[i], u);
        dst[i] = g.adjacent(set[i], v);
      }
      auto path = sp.shortest(g, set, src, dst);
      if (!path) throw InternalError("branch set adjacent to u and v has no connecting path");
      if (path->size() < 2 * params.t) raw[p].push_back(OrientedPath{std::move(*path)});
    }
  }

  // Y: path vertices with at least ell neighbors in A''
  const auto a2set = VertexSet::of(g.order(), a2);
  std::vector<Vertex> y;
  for (const auto& fam : raw)
    for (const auto& path : fam)
      for (Vertex x : path.vertices) {
        std::size_t d = 0;
        for (Vertex w : g.neighbors(x)) d += a2set.contains(w) ? 1 : 0;
        if (d >= params.ell) y.push_back(x);
      }
  if (!y.empty()) {
    const auto tb = trace_buckets(g, a2, y);
    const auto& best = tb.best();
    if (best.members.size() >= params.ell) {
      out.biclique = BicliqueWitness{{best.members.begin(), best.members.begin() + static_cast<long>(params.ell)},
                                     {best.trace.begin(), best.trace.begin() + static_cast<long>(params.ell)}};
      out.stages.push_back({"y-filter", params.ell, params.ell, "witness"});
      out.status = SearchStatus::Found;
      return out;
    }
  }
  const auto yset = VertexSet::of(g.order(), y);
  std::vector<std::vector<OrientedPath>> kept(pairs.size());
  std::size_t fewest = SIZE_MAX;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (const auto& path : raw[p]) {
      if (kept[p].size() == params.paths_per_pair) break;
      bool clean = true;
      for (Vertex x : path.vertices) clean = clean && !yset.contains(x);
      if (clean) kept[p].push_back(path);
    }
    fewest = std::min(fewest, kept[p].size());
  }
  if (!stage("y-filter", params.paths_per_pair, fewest, fewest >= params.paths_per_pair && fewest > 0)) return out;

  // interference matrix over A''
  std::vector<std::size_t> pair_index(n * n, 0);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    pair_index[pairs[p].first * n + pairs[p].second] = p;
    pair_index[pairs[p].second * n + pairs[p].first] = p;
  }
  std::vector<int> a2pos(g.order(), -1);
  for (std::size_t i = 0; i < n; ++i) a2pos[a2[i]] = static_cast<int>(i);
  std::vector<std::set<std::uint32_t>> touched(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (const auto& path : kept[p])
      for (Vertex x : path.vertices)
        for (Vertex w : g.neighbors(x))
          if (a2pos[w] >= 0) touched[p].insert(static_cast<std::uint32_t>(a2pos[w]));
  std::vector<InterferenceMatrix::Entry> entries(n * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (auto k : touched[pair_index[i * n + j]])
        if (k != i && k != j) entries[i * n + j].push_back(k);
    }
  const auto matrix = InterferenceMatrix::dense(n, std::move(entries));
  const std::size_t s = params.a_prime_size ? params.a_prime_size : params.t / 2;
  const auto sel = select_noninterfering(matrix, s, params.seed);
  if (!stage("interference", s, sel.indices.size(), sel.status == SearchStatus::Found)) return out;

  for (auto i : sel.indices) out.a_prime.push_back(a2[i]);
  for (std::size_t x = 0; x < sel.indices.size(); ++x)
    for (std::size_t z = x + 1; z < sel.indices.size(); ++z) {
      const auto p = pair_index[sel.indices[x] * n + sel.indices[z]];
      out.families[{out.a_prime[x], out.a_prime[z]}] = PathFamily{kept[p]};
    }

  // post-checks
  if (!is_independent(g, std::span<const Vertex>(out.a_prime))) throw InternalError("A' is not independent");
  const auto aset = VertexSet::of(g.order(), out.a_prime);
  std::vector<const PathFamily*> all;
  for (const auto& [key, fam] : out.families) {
    all.push_back(&fam);
    for (const auto& path : fam.paths) {
      if (!verify_induced_path(g, path)) throw InternalError("linked path is not induced");
      for (std::size_t i = 0; i < path.size(); ++i)
        for (Vertex w : g.neighbors(path[i])) {
          if (!aset.contains(w)) continue;
          const bool allowed = (i == 0 && w == key.first) || (i + 1 == path.size() && w == key.second);
          if (!allowed) throw InternalError("linked path has an extra edge to A'");
        }
      if (!g.adjacent(path.first(), key.first) || !g.adjacent(path.last(), key.second))
        throw InternalError("linked path endpoints are not attached");
    }
  }
  if (!all_disjoint(all)) throw InternalError("linked paths overlap");
  out.status = SearchStatus::Found;
  return out;
}

PathFamily extract_partially_anticomplete(const Graph& g, const PathFamily& f, SearchBudget budget) {
  if (f.empty()) return f;
  if (!f.common_length()) throw InputError("paths must share one length");
  if (!f.vertex_disjoint()) throw InputError("paths must be vertex-disjoint");
  for (const auto& p : f.paths)
    if (!verify_induced_path(g, p)) throw InputError("paths must be induced");
  const std::size_t k = *f.common_length();
  std::vector<std::size_t> alive(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) alive[i] = i;
  // prefixes first, one layer at a time
  for (std::size_t i = 0; i < k && !alive.empty(); ++i) {
    std::vector<Vertex> layer;
    for (auto idx : alive) layer.push_back(f.paths[idx][i]);
    const auto keep = VertexSet::of(g.order(), max_independent_of(g, layer, budget));
    std::vector<std::size_t> next;
    for (auto idx : alive)
      if (keep.contains(f.paths[idx][i])) next.push_back(idx);
    alive = std::move(next);
  }
  PathFamily out;
  for (auto idx : alive) out.paths.push_back(f.paths[idx]);
  if (!is_partially_anticomplete(g, out)) throw InternalError("extracted family is not partially anticomplete");
  return out;
}

SeparateResult separate_families(const Graph& g, const PathFamily& p, const PathFamily& q, std::size_t ell,
                                 std::size_t t, std::uint64_t big_l) {
  if (t < 4 || t % 2 != 0) throw InputError("t must be even and at least 4");
  check_family_basics(g, p, t, "P");
  check_family_basics(g, q, t, "Q");
  if (!all_disjoint({&p, &q})) throw InputError("paths of P and Q must be pairwise vertex-disjoint");

  SeparateResult out;
  {
    mpz_class ps = static_cast<unsigned long>(p.size()), rhs;
    mpz_pow_ui(rhs.get_mpz_t(), ps.get_mpz_t(), (2 * t - 1) * (2 * t - 1) * t / 2);
    rhs *= static_cast<unsigned long>(big_l);
    out.guaranteed = big_l >= ell && mpz_class(static_cast<unsigned long>(q.size())) >= rhs;
  }
  std::vector<Vertex> x;
  std::vector<std::size_t> color;
  for (const auto& path : p.paths)
    for (std::size_t i = 0; i < path.size(); ++i) {
      x.push_back(path[i]);
      color.push_back(i);
    }
  PathFamily cur = q;
  const std::size_t kq = q.empty() ? 0 : *q.common_length();
  for (std::size_t i = 0; i < kq && !cur.empty(); ++i) {
    const auto y = cur.layer(i);
    TraceHypotheses h{ell, 2 * t - 1, t, color, true};
    const auto split = cor_traces3_split(g, x, y, h);
    if (split.biclique) {
      out.biclique = split.biclique;
      return out;
    }
    const auto keep_y = VertexSet::of(g.order(), split.y_prime);
    PathFamily next;
    for (const auto& path : cur.paths)
      if (keep_y.contains(path[i])) next.paths.push_back(path);
    cur = std::move(next);
    const auto keep_x = VertexSet::of(g.order(), split.x_prime);
    std::vector<Vertex> nx;
    std::vector<std::size_t> ncol;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (keep_x.contains(x[j])) {
        nx.push_back(x[j]);
        ncol.push_back(color[j]);
      }
    x = std::move(nx);
    color = std::move(ncol);
  }
  const auto xs = VertexSet::of(g.order(), x);
  for (const auto& path : p.paths) {
    bool inside = true;
    for (Vertex v : path.vertices) inside = inside && xs.contains(v);
    if (inside) out.p_prime.paths.push_back(path);
  }
  out.q_prime = std::move(cur);
  const auto pv = out.p_prime.vertices(), qv = out.q_prime.vertices();
  if (!are_anticomplete(g, std::span<const Vertex>(pv), std::span<const Vertex>(qv)))
    throw InternalError("separated families still touch");
  return out;
}

PairwiseSelection select_pairwise_anticomplete(const Graph& g, const std::vector<PathFamily>& families,
                                               std::size_t ell, std::size_t t, std::size_t working_size) {
  if (t < 4 || t % 2 != 0) throw InputError("t must be even and at least 4");
  std::vector<const PathFamily*> ptrs;
  for (const auto& f : families) {
    check_family_basics(g, f, t, "family");
    ptrs.push_back(&f);
  }
  if (!all_disjoint(ptrs)) throw InputError("paths of all families must be pairwise vertex-disjoint");
  const std::size_t work = working_size ? working_size : 2 * t * t * ell;

  PairwiseSelection out;
  std::vector<PathFamily> cur = families;
  for (std::size_t i = 0; i < cur.size(); ++i) {
    if (cur[i].empty()) {
      out.detail = "round " + std::to_string(i + 1) + ": family " + std::to_string(i + 1) + " is empty";
      return out;
    }
    PathFamily q1;
    q1.paths.assign(cur[i].paths.begin(), cur[i].paths.begin() + static_cast<long>(std::min(work, cur[i].size())));
    for (std::size_t j = i + 1; j < cur.size(); ++j) {
      auto sep = separate_families(g, q1, cur[j], ell, t, ell);
      if (sep.biclique) {
        out.biclique = sep.biclique;
        out.status = SearchStatus::Found;
        return out;
      }
      q1 = std::move(sep.p_prime);
      cur[j] = std::move(sep.q_prime);
      if (q1.empty() || cur[j].empty()) {
        out.detail = "round " + std::to_string(i + 1) + ": separation from family " + std::to_string(j + 1) +
                     " left no " + (q1.empty() ? "working path" : "path in that family");
        return out;
      }
    }
    out.paths.push_back(q1.paths.front());
  }
  for (std::size_t i = 0; i < out.paths.size(); ++i)
    for (std::size_t j = i + 1; j < out.paths.size(); ++j)
      if (!are_anticomplete(g, out.paths[i], out.paths[j])) throw InternalError("selected paths are not anticomplete");
  out.status = SearchStatus::Found;
  return out;
}

InducedCycle assemble_cycle(const Graph& g, const std::vector<Vertex>& a, const std::vector<OrientedPath>& paths) {
  if (a.size() != paths.size()) throw InputError("need one path per vertex of a");
  if (a.size() < 2) throw InputError("need at least two vertices");
  std::vector<Vertex> cyc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (paths[i].vertices.empty()) throw InputError("empty path");
    cyc.push_back(a[i]);
    cyc.insert(cyc.end(), paths[i].vertices.begin(), paths[i].vertices.end());
  }
  g.check_vertices(cyc);
  const std::size_t len = cyc.size();
  std::vector<std::int64_t> pos(g.order(), -1);
  for (std::size_t i = 0; i < len; ++i) {
    if (pos[cyc[i]] >= 0) throw InputError("vertex " + std::to_string(cyc[i]) + " repeats in the assembled cycle");
    pos[cyc[i]] = static_cast<std::int64_t>(i);
  }
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex u = cyc[i], v = cyc[(i + 1) % len];
    if (!g.adjacent(u, v))
      throw InputError("missing cycle edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  for (std::size_t i = 0; i < len; ++i)
    for (Vertex w : g.neighbors(cyc[i])) {
      if (pos[w] < 0) continue;
      const auto j = static_cast<std::size_t>(pos[w]);
      const std::size_t gap = (j + len - i) % len;
      if (gap != 1 && gap != len - 1)
        throw CycleAssemblyError("chord " + std::to_string(cyc[i]) + "-" + std::to_string(w) + " in assembled cycle",
                                 {cyc[i], w});
    }
  return InducedCycle{cyc};
}

}  // namespace chibound
