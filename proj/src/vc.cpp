#include "chibound/vc.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "chibound/detect.hpp"

namespace chibound {

void SetSystem::validate() const {
  for (const auto& m : members)
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] >= universe_size) throw InputError("set system element " + std::to_string(m[i]) + " outside universe");
      if (i > 0 && m[i] <= m[i - 1]) throw InputError("set system members must be sorted without repeats");
    }
}

std::size_t SetSystem::distinct_members() const {
  std::set<std::vector<std::uint32_t>> d(members.begin(), members.end());
  return d.size();
}

nlohmann::json to_json(const SetSystem& s) {
  return {{"universe_size", s.universe_size}, {"members", s.members}};
}

SetSystem set_system_from_json(const nlohmann::json& j) {
  try {
    SetSystem s{j.at("universe_size").get<std::size_t>(),
                j.at("members").get<std::vector<std::vector<std::uint32_t>>>()};
    for (auto& m : s.members) std::sort(m.begin(), m.end());
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("set system JSON: ") + e.what());
  }
}

namespace {

void check_disjoint(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y) {
  g.check_vertices(x);
  g.check_vertices(y);
  const auto xs = VertexSet::of(g.order(), x);
  for (Vertex v : y)
    if (xs.contains(v)) throw InputError("X and Y overlap at vertex " + std::to_string(v));
}

std::vector<Vertex> sorted_copy(std::span<const Vertex> s) {
  std::vector<Vertex> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::uint32_t> member_masks(const SetSystem& s, std::size_t cap) {
  if (cap > 32) throw InputError("VC universe cap is at most 32");
  if (s.universe_size > cap)
    throw InputError("universe of " + std::to_string(s.universe_size) + " exceeds the cap " + std::to_string(cap));
  s.validate();
  std::set<std::uint32_t> d;
  for (const auto& m : s.members) {
    std::uint32_t mask = 0;
    for (auto e : m) mask |= std::uint32_t{1} << e;
    d.insert(mask);
  }
  return {d.begin(), d.end()};
}

std::uint32_t compress(std::uint32_t f, std::uint32_t z) {
  std::uint32_t out = 0, bit = 1;
  for (; z != 0; z &= z - 1, bit <<= 1)
    if (f & (z & (~z + 1))) out |= bit;
  return out;
}

bool shatters(const std::vector<std::uint32_t>& masks, std::uint32_t z) {
  const std::size_t need = std::size_t{1} << std::popcount(z);
  if (masks.size() < need) return false;
  std::vector<char> seen(need, 0);
  std::size_t got = 0;
  for (auto f : masks) {
    auto& s = seen[compress(f, z)];
    if (!s) {
      s = 1;
      if (++got == need) return true;
    }
  }
  return false;
}

std::optional<std::uint32_t> shattered_of_size(const std::vector<std::uint32_t>& masks, std::size_t u, std::size_t k) {
  if (k == 0) return masks.empty() ? std::nullopt : std::optional<std::uint32_t>{0};
  if (k > u || (std::size_t{1} << k) > masks.size()) return std::nullopt;
  // Gosper's hack over k-subsets of [u]
  const std::uint64_t limit = std::uint64_t{1} << u;
  for (std::uint64_t z = (std::uint64_t{1} << k) - 1; z < limit;) {
    if (shatters(masks, static_cast<std::uint32_t>(z))) return static_cast<std::uint32_t>(z);
    const std::uint64_t c = z & (~z + 1), r = z + c;
    z = (((r ^ z) >> 2) / c) | r;
  }
  return std::nullopt;
}

std::vector<std::uint32_t> elements(std::uint32_t z) {
  std::vector<std::uint32_t> out;
  for (; z != 0; z &= z - 1) out.push_back(static_cast<std::uint32_t>(std::countr_zero(z)));
  return out;
}

}  // namespace

NeighborhoodSystem neighborhood_system(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y) {
  check_disjoint(g, x, y);
  NeighborhoodSystem out;
  out.x_vertices = sorted_copy(x);
  out.y_vertices.assign(y.begin(), y.end());
  std::vector<std::int64_t> index(g.order(), -1);
  for (std::size_t i = 0; i < out.x_vertices.size(); ++i) index[out.x_vertices[i]] = static_cast<std::int64_t>(i);
  out.system.universe_size = out.x_vertices.size();
  for (Vertex u : out.y_vertices) {
    std::vector<std::uint32_t> m;
    for (Vertex w : g.neighbors(u))
      if (index[w] >= 0) m.push_back(static_cast<std::uint32_t>(index[w]));
    std::sort(m.begin(), m.end());
    out.system.members.push_back(std::move(m));
  }
  return out;
}

std::size_t vc_dimension(const SetSystem& s, std::size_t cap) {
  const auto masks = member_masks(s, cap);
  if (masks.empty()) return 0;  // nothing is shattered; report 0 like the {} family
  std::size_t k = std::min<std::size_t>(s.universe_size, static_cast<std::size_t>(std::bit_width(masks.size()) - 1));
  for (;; --k)
    if (shattered_of_size(masks, s.universe_size, k)) return k;
}

std::optional<std::vector<std::uint32_t>> find_shattered(const SetSystem& s, std::size_t k, std::size_t cap) {
  const auto masks = member_masks(s, cap);
  if (auto z = shattered_of_size(masks, s.universe_size, k)) return elements(*z);
  return std::nullopt;
}

mpz_class sauer_shelah_bound(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw InputError("Sauer-Shelah bound needs k <= n");
  mpz_class sum = 0, term;
  for (std::uint64_t i = 0; i <= k; ++i) {
    mpz_bin_uiui(term.get_mpz_t(), n, i);
    sum += term;
  }
  return sum;
}

TraceBuckets trace_buckets(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y) {
  check_disjoint(g, x, y);
  const auto xs = VertexSet::of(g.order(), x);
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_trace;
  for (Vertex u : sorted_copy(y)) {
    std::vector<Vertex> tr;
    for (Vertex w : g.neighbors(u))
      if (xs.contains(w)) tr.push_back(w);
    std::sort(tr.begin(), tr.end());
    by_trace[tr].push_back(u);
  }
  TraceBuckets out;
  for (auto& [tr, ms] : by_trace) {
    if (!out.buckets.empty() && ms.size() > out.best().members.size()) out.largest = out.buckets.size();
    out.buckets.push_back({tr, std::move(ms)});
  }
  return out;
}

InducedCycle cycle_from_shattered(const Graph& g, std::span<const Vertex> z, std::span<const Vertex> y,
                                  std::size_t t) {
  if (t < 4 || t % 2 != 0) throw InputError("cycle_from_shattered needs an even t >= 4");
  const std::size_t h = t / 2;
  if (z.size() < h) throw InputError("need at least t/2 vertices in Z");
  check_disjoint(g, z, y);
  std::vector<Vertex> zs(z.begin(), z.begin() + static_cast<long>(h));
  if (!is_independent(g, std::span<const Vertex>(zs))) throw InputError("Z is not independent");
  std::vector<std::int64_t> zpos(g.order(), -1);
  for (std::size_t i = 0; i < h; ++i) zpos[zs[i]] = static_cast<std::int64_t>(i);

  // candidates[i]: y meeting zs exactly in {z_i, z_{i+1}}
  std::vector<std::vector<Vertex>> cand(h);
  for (Vertex u : sorted_copy(y)) {
    std::vector<std::size_t> hit;
    for (Vertex w : g.neighbors(u))
      if (zpos[w] >= 0) hit.push_back(static_cast<std::size_t>(zpos[w]));
    if (hit.size() != 2) continue;
    std::sort(hit.begin(), hit.end());
    for (std::size_t i = 0; i < h; ++i) {
      const std::size_t a = i, b = (i + 1) % h;
      if (hit[0] == std::min(a, b) && hit[1] == std::max(a, b)) cand[i].push_back(u);
    }
  }
  for (std::size_t i = 0; i < h; ++i)
    if (cand[i].empty())
      throw InputError("no vertex of Y realises the pair (z" + std::to_string(i) + ", z" + std::to_string((i + 1) % h) +
                       ")");

  std::vector<Vertex> pick(h);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == h) return true;
    for (Vertex u : cand[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = pick[j] != u && !g.adjacent(pick[j], u);
      if (!ok) continue;
      pick[i] = u;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) throw InputError("every choice of witnesses has an edge between two of them");
  std::vector<Vertex> cyc;
  for (std::size_t i = 0; i < h; ++i) {
    cyc.push_back(zs[i]);
    cyc.push_back(pick[i]);
  }
  if (!verify_induced_cycle(g, cyc)) throw InternalError("alternating cycle is not induced");
  return InducedCycle{cyc};
}

namespace {

struct Checked {
  std::vector<Vertex> x;
  std::vector<std::size_t> coloring;  // parallel to x
  mpz_class bound;
  std::size_t exponent = 0;
};

Checked check_hypotheses(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y,
                         const TraceHypotheses& h, bool need_min_degree) {
  check_disjoint(g, x, y);
  if (h.ell < 1 || h.q < 1 || h.t < 4 || h.t % 2 != 0) throw InputError("hypothesis: need ell >= 1, q >= 1, even t >= 4");
  Checked c;
  c.x = sorted_copy(x);
  c.exponent = h.q * h.t / 2;
  if (!h.best_effort && c.x.size() < c.exponent) throw InputError("hypothesis |X| >= qt/2 fails");
  if (!is_independent(g, y)) throw InputError("hypothesis: Y is not independent");
  if (h.coloring) {
    if (h.coloring->size() != x.size()) throw InputError("hypothesis: coloring must have one entry per X vertex");
    std::map<Vertex, std::size_t> col;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if ((*h.coloring)[i] >= h.q) throw InputError("hypothesis: coloring uses more than q colors");
      col[x[i]] = (*h.coloring)[i];
    }
    for (Vertex v : c.x) {
      c.coloring.push_back(col[v]);
      for (Vertex w : g.neighbors(v))
        if (auto it = col.find(w); it != col.end() && it->second == col[v])
          throw InputError("hypothesis: supplied coloring of X is not proper");
    }
  } else {
    const auto sub = induced_subgraph(g, std::span<const Vertex>(c.x));
    const auto chi = chromatic_number_exact(sub.graph);
    if (chi.lower > h.q) throw InputError("hypothesis: G[X] is not q-colorable");
    if (chi.upper > h.q) throw InputError("hypothesis: could not certify q-colorability of G[X]");
    c.coloring = chi.coloring;
  }
  if (need_min_degree) {
    const auto xs = VertexSet::of(g.order(), std::span<const Vertex>(c.x));
    for (Vertex u : y) {
      std::size_t d = 0;
      for (Vertex w : g.neighbors(u)) d += xs.contains(w) ? 1 : 0;
      if (d < h.ell) throw InputError("hypothesis: vertex " + std::to_string(u) + " has fewer than ell neighbors in X");
    }
  }
  mpz_class xs = static_cast<unsigned long>(c.x.size());
  mpz_pow_ui(c.bound.get_mpz_t(), xs.get_mpz_t(), c.exponent);
  c.bound *= static_cast<unsigned long>(h.ell);
  return c;
}

BicliqueWitness biclique_of(const TraceBucket& b, std::size_t ell) {
  return {{b.members.begin(), b.members.begin() + static_cast<long>(ell)},
          {b.trace.begin(), b.trace.begin() + static_cast<long>(ell)}};
}

}  // namespace

TracesCheck cor_traces_check(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y,
                             const TraceHypotheses& h) {
  const auto c = check_hypotheses(g, x, y, h, true);
  TracesCheck out;
  out.bound = c.bound;
  out.holds = mpz_class(static_cast<unsigned long>(y.size())) < c.bound;
  if (out.holds) return out;
  const auto tb = trace_buckets(g, c.x, y);
  if (tb.best().members.size() >= h.ell) {
    out.witness = Certificate::biclique(biclique_of(tb.best(), h.ell), h.ell);
    return out;
  }
  // more distinct traces than the Sauer-Shelah count allows: a shattered set
  // of size qt/2 exists; one color class gives the cycle
  const auto ns = neighborhood_system(g, c.x, y);
  if (ns.system.universe_size > kVcUniverseCap) return out;
  const auto z = find_shattered(ns.system, c.exponent);
  if (!z) throw InternalError("trace count exceeds the Sauer-Shelah bound without a shattered set");
  std::map<std::size_t, std::vector<Vertex>> classes;
  for (auto e : *z) classes[c.coloring[e]].push_back(ns.x_vertices[e]);
  const auto& big = std::max_element(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
                      return a.second.size() < b.second.size();
                    })->second;
  out.witness = Certificate::cycle(cycle_from_shattered(g, big, y, h.t).vertices, h.t);
  return out;
}

TracesSplit cor_traces3_split(const Graph& g, std::span<const Vertex> x, std::span<const Vertex> y,
                              const TraceHypotheses& h) {
  const auto c = check_hypotheses(g, x, y, h, false);
  TracesSplit out;
  out.guaranteed = mpz_class(static_cast<unsigned long>(y.size())) >= c.bound;
  if (y.empty()) {
    out.x_prime = c.x;
    return out;
  }
  const auto tb = trace_buckets(g, c.x, y);
  const auto& best = tb.best();
  if (best.trace.size() >= h.ell && best.members.size() >= h.ell) {
    out.biclique = biclique_of(best, h.ell);
    return out;
  }
  out.y_prime = best.members;
  std::set_difference(c.x.begin(), c.x.end(), best.trace.begin(), best.trace.end(), std::back_inserter(out.x_prime));
  if (!are_anticomplete(g, std::span<const Vertex>(out.x_prime), std::span<const Vertex>(out.y_prime)))
    throw InternalError("trace split left an edge between X' and Y'");
  return out;
}

}  // namespace chibound
