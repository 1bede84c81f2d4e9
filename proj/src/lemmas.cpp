#include "chibound/lemmas.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace chibound {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base)
      throw InputError("integer overflow computing " + std::to_string(base) + "^" + std::to_string(exp));
    out *= base;
  }
  return out;
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw InputError("integer overflow in degree bound");
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) throw InputError("integer overflow in degree bound");
  return a * b;
}

void require_same_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw InputError("vertex set universe differs from graph order");
}

}  // namespace

FilterResult filter_many_nonneighbors(const Graph& g, const VertexSet& u, const VertexSet& outside, std::size_t p,
                                      std::size_t l) {
  require_same_universe(g, u);
  require_same_universe(g, outside);
  if (l == 0) throw InputError("l must be positive");
  if (u.count() < checked_mul(l, p))
    throw InputError("filter needs |U| >= l*p (|U| = " + std::to_string(u.count()) + ", l*p = " +
                     std::to_string(l * p) + ")");
  if (u.intersects(outside)) throw InputError("filter needs U disjoint from the outside set");

  FilterResult out{VertexSet(g.order()), VertexSet(g.order()), std::nullopt};
  const std::size_t size_u = u.count();
  outside.for_each([&](Vertex x) {
    const std::size_t non = size_u - g.neighborhood(x).intersection_count(u);
    if (non >= p) out.kept.insert(x);
    else out.excluded.insert(x);
  });
  if (out.excluded.count() >= l) {
    auto left = out.excluded.to_vector();
    left.resize(l);
    VertexSet common = u;
    for (Vertex x : left) common &= g.neighborhood(x);
    auto right = common.to_vector();
    if (right.size() < l) throw InternalError("common neighborhood smaller than the counting bound");
    right.resize(l);
    out.biclique = BicliqueWitness{std::move(left), std::move(right)};
  }
  return out;
}

CommonFilterResult common_filter(const Graph& g, std::span<const VertexSet> sets, const VertexSet& outside,
                                 std::size_t p, std::size_t l) {
  require_same_universe(g, outside);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    require_same_universe(g, sets[i]);
    if (sets[i].intersects(outside)) throw InputError("set " + std::to_string(i + 1) + " meets the outside set");
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i].intersects(sets[j]))
        throw InputError("sets " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " overlap");
  }
  if (outside.count() <= sets.size() * (l - 1))
    throw InputError("common filter needs more than r(l-1) outside vertices");

  CommonFilterResult out;
  VertexSet alive = outside;
  for (const auto& s : sets) {
    auto f = filter_many_nonneighbors(g, s, alive, p, l);
    if (f.biclique) {
      out.biclique = std::move(f.biclique);
      return out;
    }
    alive = f.kept;
  }
  out.survivor = alive.first();
  if (!out.survivor) throw InternalError("common filter discarded every outside vertex without a biclique");
  return out;
}

RainbowResult rainbow_independent_set(const Graph& g, std::span<const VertexSet> sets, std::size_t l) {
  const std::size_t d = sets.size();
  if (d == 0) throw InputError("rainbow independent set needs at least one set");
  if (l < 1) throw InputError("l must be positive");
  const std::uint64_t need = checked_pow(l, d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    require_same_universe(g, sets[i]);
    if (sets[i].count() < need)
      throw InputError("set " + std::to_string(i + 1) + " has " + std::to_string(sets[i].count()) +
                       " vertices, needs l^(d-1) = " + std::to_string(need));
    for (std::size_t j = i + 1; j < d; ++j)
      if (sets[i].intersects(sets[j]))
        throw InputError("sets " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " overlap");
  }

  RainbowResult out;
  std::vector<VertexSet> cur(sets.begin(), sets.end());
  std::vector<Vertex> picked;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    const std::size_t p = checked_pow(l, d - i - 2);
    auto r = common_filter(g, std::span<const VertexSet>(cur.data() + i + 1, d - i - 1), cur[i], p, l);
    if (r.biclique) {
      out.biclique = std::move(r.biclique);
      return out;
    }
    const Vertex v = *r.survivor;
    picked.push_back(v);
    for (std::size_t j = i + 1; j < d; ++j) cur[j] -= g.neighborhood(v);
  }
  auto last = cur[d - 1].first();
  if (!last) throw InternalError("last rainbow class emptied");
  picked.push_back(*last);
  out.transversal = std::move(picked);
  return out;
}

std::uint64_t sstar_degree_bound(std::size_t k, std::size_t d, std::size_t l) {
  if (k < 1 || d < 1 || l < 1) throw InputError("degree bound needs k, d, l >= 1");
  const std::uint64_t block =
      checked_add(checked_add(checked_pow(l, d - 1), checked_mul(d - 1, checked_pow(l, d))), checked_pow(l, 2 * d - 2));
  return checked_add(checked_mul(k - 1, block), l) - k;
}

// ---- the induction ---------------------------------------------------------

namespace {

using Kind = SStarOutcome::Kind;

struct SStarSearch {
  const Graph& g;
  std::size_t d;
  std::size_t l;
  nlohmann::json trace = nlohmann::json::array();

  std::size_t degree_in(Vertex v, const VertexSet& w) const { return g.neighborhood(v).intersection_count(w); }

  SStarOutcome biclique(BicliqueWitness w, std::size_t k) {
    SStarOutcome o;
    o.kind = Kind::Biclique;
    o.biclique = std::move(w);
    o.level = k;
    return o;
  }

  SStarOutcome low(Vertex v, std::size_t deg, std::size_t k) {
    SStarOutcome o;
    o.kind = Kind::LowDegree;
    o.vertex = v;
    o.degree = deg;
    o.level = k;
    o.bound = sstar_degree_bound(k, d, l);
    if (deg > o.bound)
      throw InternalError("vertex " + std::to_string(v) + " has degree " + std::to_string(deg) + " above level-" +
                          std::to_string(k) + " bound " + std::to_string(o.bound));
    return o;
  }

  FilterResult filter(const VertexSet& u, const VertexSet& outside, std::size_t p) {
    if (u.count() < l * p) throw InternalError("size invariant broken before a filtering step");
    return filter_many_nonneighbors(g, u, outside, p, l);
  }

  SStarOutcome find_star(Vertex r, const VertexSet& u_set, const std::vector<VertexSet>& b, std::size_t k) {
    const std::size_t n = g.order();
    std::vector<Vertex> us;
    VertexSet uj = u_set;
    auto b_of = [&](Vertex u) -> const VertexSet& { return b[u]; };
    auto union_except = [&](std::size_t skip) {
      VertexSet s(n);
      for (std::size_t i = 0; i < us.size(); ++i)
        if (i != skip) s |= b_of(us[i]);
      return s;
    };

    for (std::size_t j = 1; j < d; ++j) {
      const VertexSet prev = union_except(us.size());
      auto cand = uj.to_vector();
      std::vector<std::pair<std::size_t, Vertex>> keyed;
      for (Vertex u : cand) keyed.emplace_back((b_of(u) - prev).count(), u);
      std::sort(keyed.begin(), keyed.end());
      if (keyed.size() < l) throw InternalError("fewer than l candidates in U_j");
      VertexSet least(n);
      for (std::size_t i = 0; i < l; ++i) least.insert(keyed[i].second);
      const VertexSet rest = uj - least;

      const std::uint64_t p = checked_pow(l, d - j - 1) + (d - 1) * checked_pow(l, d - j) - j;
      auto f = filter(rest, least, p);
      if (f.biclique) return biclique(*f.biclique, k);
      const auto chosen = f.kept.first();
      if (!chosen) throw InternalError("no kept vertex although fewer than l were excluded");
      us.push_back(*chosen);

      const VertexSet u_prime = rest - g.neighborhood(*chosen);
      VertexSet next = u_prime;
      const std::uint64_t q = checked_pow(l, 2 * d - j - 2);
      for (std::size_t i = 0; i < us.size(); ++i) {
        const VertexSet private_b = b_of(us[i]) - union_except(i);
        auto fi = filter(private_b, u_prime, q);
        if (fi.biclique) return biclique(*fi.biclique, k);
        next -= fi.excluded;
      }
      uj = next;
    }
    const auto last = uj.first();
    if (!last) throw InternalError("U_d is empty");
    us.push_back(*last);

    std::vector<VertexSet> v_sets;
    for (std::size_t i = 0; i < d; ++i) v_sets.push_back(b_of(us[i]) - union_except(i));
    for (const auto& vs : v_sets)
      if (vs.count() < checked_pow(l, d - 1)) throw InternalError("private neighborhood below l^(d-1)");
    auto rb = rainbow_independent_set(g, v_sets, l);
    if (rb.biclique) return biclique(*rb.biclique, k);

    SStarOutcome o;
    o.kind = Kind::SubdividedStar;
    o.level = k;
    o.star = SubdividedStarWitness{r, us, *rb.transversal};
    return o;
  }

  SStarOutcome solve(const VertexSet& w, std::size_t k) {
    const std::size_t n = g.order();
    if (w.empty()) throw InternalError("recursion reached an empty vertex set");

    if (k == 1) {
      Vertex best = 0;
      std::size_t best_deg = n + 1;
      w.for_each([&](Vertex v) {
        const std::size_t dv = degree_in(v, w);
        if (dv < best_deg) {
          best = v;
          best_deg = dv;
        }
      });
      trace.push_back({{"k", 1}, {"vertex", best}, {"degree", best_deg}, {"branch", "base"}});
      if (best_deg + 1 <= l) return low(best, best_deg, 1);
      auto right = (g.neighborhood(best) & w).to_vector();
      right.resize(l);
      return biclique(BicliqueWitness{{best}, right}, 1);
    }

    Vertex r = 0;
    std::size_t r_deg = 0;
    bool first = true;
    w.for_each([&](Vertex v) {
      const std::size_t dv = degree_in(v, w);
      if (first || dv > r_deg) {
        r = v;
        r_deg = dv;
        first = false;
      }
    });
    const VertexSet a = g.neighborhood(r) & w;
    VertexSet bset = w - a;
    bset.erase(r);
    std::vector<VertexSet> b(n);
    VertexSet u_set(n);
    const std::uint64_t big = checked_pow(l, 2 * d - 2);
    a.for_each([&](Vertex u) {
      b[u] = g.neighborhood(u) & bset;
      if (b[u].count() >= big) u_set.insert(u);
    });
    const std::uint64_t threshold = checked_pow(l, d - 1) + (d - 1) * checked_pow(l, d);
    const bool star_branch = u_set.count() >= threshold;
    trace.push_back({{"k", k},
                     {"root", r},
                     {"A", a.count()},
                     {"B", bset.count()},
                     {"U", u_set.to_vector()},
                     {"branch", star_branch ? "star" : "recurse"}});
    if (star_branch) return find_star(r, u_set, b, k);

    const VertexSet rest = a - u_set;
    if (rest.empty()) return low(r, r_deg, k);
    auto sub = solve(rest, k - 1);
    if (sub.kind == Kind::Biclique) {
      auto& bw = *sub.biclique;
      if (bw.left.size() < l) {
        bw.left.push_back(r);
        std::sort(bw.left.begin(), bw.left.end());
      }
      sub.level = k;
      return sub;
    }
    if (sub.kind == Kind::SubdividedStar) return sub;
    return low(sub.vertex, degree_in(sub.vertex, w), k);
  }
};

}  // namespace

Certificate SStarOutcome::certificate(bool with_trace) const {
  Certificate c;
  switch (kind) {
    case Kind::LowDegree: c = Certificate::low_degree(vertex, bound); break;
    case Kind::SubdividedStar: c = Certificate::star(*star); break;
    case Kind::Biclique: c = Certificate::biclique(*biclique, biclique->right.size()); break;
  }
  if (with_trace) c.recursion_trace = trace;
  return c;
}

SStarOutcome sstar_low_degree(const Graph& g, const VertexSet& within, std::size_t d, std::size_t l) {
  if (d < 2) throw InputError("d must be at least 2");
  if (l < 2) throw InputError("l must be at least 2");
  require_same_universe(g, within);
  if (within.empty()) throw InputError("graph has no vertices");
  sstar_degree_bound(l, d, l);  // overflow check up front
  SStarSearch s{g, d, l};
  auto out = s.solve(within, l);
  out.trace = std::move(s.trace);
  return out;
}

SStarOutcome sstar_low_degree(const Graph& g, std::size_t d, std::size_t l) {
  return sstar_low_degree(g, g.all(), d, l);
}

Certificate SStarOrderResult::certificate() const {
  if (witness) return witness->certificate();
  return Certificate::elimination(order, bound);
}

SStarOrderResult sstar_elimination_order(const Graph& g, std::size_t d, std::size_t l) {
  SStarOrderResult out;
  out.bound = sstar_degree_bound(l, d, l);
  VertexSet alive = g.all();
  while (!alive.empty()) {
    auto o = sstar_low_degree(g, alive, d, l);
    if (o.kind != SStarOutcome::Kind::LowDegree) {
      out.witness = std::move(o);
      return out;
    }
    out.order.push_back(o.vertex);
    out.max_removal_degree = std::max(out.max_removal_degree, o.degree);
    alive.erase(o.vertex);
  }
  return out;
}

}  // namespace chibound
