#include "chibound/colnum.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <omp.h>

#include "chibound/detect.hpp"

namespace chibound {

LinearOrder::LinearOrder(std::vector<Vertex> sequence) : seq_(std::move(sequence)), pos_(seq_.size(), SIZE_MAX) {
  for (std::size_t i = 0; i < seq_.size(); ++i) {
    if (seq_[i] >= seq_.size() || pos_[seq_[i]] != SIZE_MAX) throw InputError("order is not a permutation");
    pos_[seq_[i]] = i;
  }
}

LinearOrder LinearOrder::identity(std::size_t n) {
  std::vector<Vertex> s(n);
  std::iota(s.begin(), s.end(), 0);
  return LinearOrder(std::move(s));
}

namespace {

std::size_t radius(const Graph& g, std::size_t r) {
  if (r == 0) throw InputError("radius must be at least 1");
  return std::min(r, std::max<std::size_t>(g.order(), 1));
}

void check_order(const Graph& g, const LinearOrder& order) {
  if (order.size() != g.order()) throw InputError("order size does not match the graph");
}

// Scratch for bounded BFS, reused across sources.
struct Bfs {
  std::vector<std::size_t> stamp;
  std::vector<std::size_t> dist;
  std::vector<Vertex> queue;
  std::size_t round = 0;
  explicit Bfs(std::size_t n) : stamp(n, 0), dist(n, 0) { queue.reserve(n); }
};

// Vertices before v reachable from v by <= r edges through vertices after v.
std::size_t strong_count(const Graph& g, const LinearOrder& o, Vertex v, std::size_t r, Bfs& b) {
  ++b.round;
  b.queue.assign(1, v);
  b.stamp[v] = b.round;
  b.dist[v] = 0;
  std::size_t count = 1;
  for (std::size_t head = 0; head < b.queue.size(); ++head) {
    const Vertex x = b.queue[head];
    if (b.dist[x] == r) continue;
    for (Vertex w : g.neighbors(x)) {
      if (b.stamp[w] == b.round) continue;
      b.stamp[w] = b.round;
      if (o.before(w, v)) {
        ++count;
      } else {
        b.dist[w] = b.dist[x] + 1;
        b.queue.push_back(w);
      }
    }
  }
  return count;
}

// Vertices after u that weakly reach u: BFS from u inside the suffix.
template <class F>
void weak_sources(const Graph& g, const LinearOrder& o, Vertex u, std::size_t r, Bfs& b, F&& hit) {
  ++b.round;
  b.queue.assign(1, u);
  b.stamp[u] = b.round;
  b.dist[u] = 0;
  for (std::size_t head = 0; head < b.queue.size(); ++head) {
    const Vertex x = b.queue[head];
    if (b.dist[x] == r) continue;
    for (Vertex w : g.neighbors(x)) {
      if (b.stamp[w] == b.round || o.before(w, u)) continue;
      b.stamp[w] = b.round;
      b.dist[w] = b.dist[x] + 1;
      b.queue.push_back(w);
      hit(w);
    }
  }
}

std::size_t max_of(const std::vector<std::size_t>& v) { return v.empty() ? 0 : *std::max_element(v.begin(), v.end()); }

}  // namespace

std::vector<std::size_t> strong_reach_counts(const Graph& g, const LinearOrder& order, std::size_t r) {
  check_order(g, order);
  const std::size_t rr = radius(g, r);
  std::vector<std::size_t> out(g.order());
  Bfs b(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = strong_count(g, order, v, rr, b);
  return out;
}

std::vector<std::size_t> weak_reach_counts(const Graph& g, const LinearOrder& order, std::size_t r) {
  check_order(g, order);
  const std::size_t rr = radius(g, r);
  std::vector<std::size_t> out(g.order(), 1);
  Bfs b(g.order());
  for (Vertex u = 0; u < g.order(); ++u) weak_sources(g, order, u, rr, b, [&](Vertex v) { ++out[v]; });
  return out;
}

std::size_t scol_serial(const Graph& g, const LinearOrder& order, std::size_t r) {
  return max_of(strong_reach_counts(g, order, r));
}

std::size_t wcol_serial(const Graph& g, const LinearOrder& order, std::size_t r) {
  return max_of(weak_reach_counts(g, order, r));
}

std::size_t scol(const Graph& g, const LinearOrder& order, std::size_t r) {
  check_order(g, order);
  const std::size_t rr = radius(g, r);
  const auto n = static_cast<std::int64_t>(g.order());
  std::size_t best = 0;
#pragma omp parallel reduction(max : best)
  {
    Bfs b(g.order());
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t v = 0; v < n; ++v) best = std::max(best, strong_count(g, order, static_cast<Vertex>(v), rr, b));
  }
  return best;
}

std::size_t wcol(const Graph& g, const LinearOrder& order, std::size_t r) {
  check_order(g, order);
  const std::size_t rr = radius(g, r);
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<std::size_t> total(g.order(), 1);
#pragma omp parallel
  {
    Bfs b(g.order());
    std::vector<std::size_t> local(g.order(), 0);
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t u = 0; u < n; ++u)
      weak_sources(g, order, static_cast<Vertex>(u), rr, b, [&](Vertex v) { ++local[v]; });
#pragma omp critical
    for (std::size_t i = 0; i < local.size(); ++i) total[i] += local[i];
  }
  return max_of(total);
}

LinearOrder degeneracy_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<char> gone(n, 0);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> removed;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    std::size_t best = SIZE_MAX;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && deg[v] < best) {
        best = deg[v];
        pick = v;
      }
    gone[pick] = 1;
    removed.push_back(pick);
    for (Vertex w : g.neighbors(pick))
      if (!gone[w]) --deg[w];
  }
  std::reverse(removed.begin(), removed.end());
  return LinearOrder(std::move(removed));
}

OrderValue scol_heuristic(const Graph& g, std::size_t r) {
  auto o = degeneracy_order(g);
  return {scol(g, o, r), o, false};
}

OrderValue wcol_heuristic(const Graph& g, std::size_t r) {
  auto o = degeneracy_order(g);
  return {wcol(g, o, r), o, false};
}

namespace {

using Mask = std::uint32_t;

class OrderSearch {
 public:
  OrderSearch(const Graph& g, std::size_t r, bool weak) : n_(g.order()), r_(r), weak_(weak), adj_(n_, 0) {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) adj_[v] |= Mask{1} << w;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex w = u + 1; w < n_; ++w) {
        const Mask bu = Mask{1} << u, bw = Mask{1} << w;
        if ((adj_[u] & ~bw) == (adj_[w] & ~bu)) twin_below_[w] |= bu;
      }
  }

  void run(std::size_t bound, std::vector<Vertex> seed_order) {
    best_ = bound;
    best_order_ = std::move(seed_order);
    counts_.assign(n_, 1);
    prefix_.clear();
    go(0, 1);
  }
  std::size_t best() const { return best_; }
  const std::vector<Vertex>& best_order() const { return best_order_; }

 private:
  // vertices of `inside` plus endpoints reachable from v in <= r steps
  Mask reach(Vertex v, Mask inside, Mask targets) const {
    Mask cur = Mask{1} << v, seen = cur, found = 0;
    for (std::size_t step = 0; step < r_ && cur; ++step) {
      Mask nb = 0;
      for (Mask c = cur; c; c &= c - 1) nb |= adj_[static_cast<unsigned>(std::countr_zero(c))];
      found |= nb & targets;
      cur = nb & inside & ~seen;
      seen |= cur;
    }
    return found | (seen & inside);
  }

  void go(Mask placed, std::size_t worst) {
    if (worst >= best_) return;
    if (prefix_.size() == n_) {
      best_ = worst;
      best_order_ = prefix_;
      return;
    }
    const Mask all = n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
    for (Vertex v = 0; v < n_; ++v) {
      const Mask bv = Mask{1} << v;
      if (placed & bv) continue;
      if (twin_below_[v] & ~placed) continue;
      const Mask rest = all & ~placed & ~bv;
      std::size_t next_worst = worst;
      std::vector<std::size_t> saved;
      if (weak_) {
        saved = counts_;
        for (Mask m = reach(v, rest, 0); m; m &= m - 1) {
          const auto w = static_cast<unsigned>(std::countr_zero(m));
          next_worst = std::max(next_worst, ++counts_[w]);
        }
      } else {
        next_worst = std::max(next_worst, 1 + static_cast<std::size_t>(std::popcount(reach(v, rest, placed) & placed)));
      }
      prefix_.push_back(v);
      go(placed | bv, next_worst);
      prefix_.pop_back();
      if (weak_) counts_ = std::move(saved);
    }
  }

  std::size_t n_, r_;
  bool weak_;
  std::vector<Mask> adj_;
  Mask twin_below_[32] = {};
  std::size_t best_ = 0;
  std::vector<Vertex> best_order_, prefix_;
  std::vector<std::size_t> counts_;
};

OrderValue opt(const Graph& g, std::size_t r, std::size_t cap, bool weak) {
  if (g.order() > cap) throw InputError("exact order search capped at " + std::to_string(cap) + " vertices");
  if (g.order() > 20) throw InputError("exact order search supports at most 20 vertices");
  const std::size_t rr = radius(g, r);
  auto h = weak ? wcol_heuristic(g, rr) : scol_heuristic(g, rr);
  OrderSearch s(g, rr, weak);
  s.run(h.value, h.order.sequence());
  if (s.best() >= h.value) return {h.value, h.order, true};
  return {s.best(), LinearOrder(s.best_order()), true};
}

}  // namespace

OrderValue scol_opt(const Graph& g, std::size_t r, std::size_t cap) { return opt(g, r, cap, false); }
OrderValue wcol_opt(const Graph& g, std::size_t r, std::size_t cap) { return opt(g, r, cap, true); }

namespace {

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= Mask{1} << w;
  return adj;
}

std::vector<Mask> mask_components(const std::vector<Mask>& adj, Mask s) {
  std::vector<Mask> out;
  while (s) {
    Mask comp = s & (~s + 1), frontier = comp;
    while (frontier) {
      Mask nb = 0;
      for (Mask f = frontier; f; f &= f - 1) nb |= adj[static_cast<unsigned>(std::countr_zero(f))];
      frontier = nb & s & ~comp;
      comp |= frontier;
    }
    out.push_back(comp);
    s &= ~comp;
  }
  return out;
}

class Treedepth {
 public:
  explicit Treedepth(const Graph& g) : adj_(adjacency_masks(g)), memo_(std::size_t{1} << g.order(), 0) {}

  std::size_t td(Mask s) {
    if (!s) return 0;
    if (memo_[s]) return memo_[s];
    const auto comps = mask_components(adj_, s);
    std::size_t best = 0;
    if (comps.size() > 1) {
      for (Mask c : comps) best = std::max(best, td(c));
    } else if (std::popcount(s) == 1) {
      best = 1;
    } else {
      best = SIZE_MAX;
      for (Mask m = s; m; m &= m - 1) best = std::min(best, 1 + td(s & ~(m & (~m + 1))));
    }
    memo_[s] = static_cast<std::uint8_t>(best);
    return best;
  }

  void build(Mask s, std::int64_t root, std::vector<std::int64_t>& parent) {
    for (Mask c : mask_components(adj_, s)) {
      const std::size_t want = td(c);
      for (Mask m = c; m; m &= m - 1) {
        const Mask bit = m & (~m + 1);
        if (td(c & ~bit) + 1 == want) {
          const auto v = static_cast<std::size_t>(std::countr_zero(bit));
          parent[v] = root;
          build(c & ~bit, static_cast<std::int64_t>(v), parent);
          break;
        }
      }
    }
  }

 private:
  std::vector<Mask> adj_;
  std::vector<std::uint8_t> memo_;
};

}  // namespace

TreedepthResult treedepth_exact(const Graph& g, std::size_t cap) {
  if (g.order() > cap || g.order() > 24) throw InputError("treedepth search capped at " + std::to_string(cap) + " vertices");
  Treedepth t(g);
  const Mask all = static_cast<Mask>((std::uint64_t{1} << g.order()) - 1);
  TreedepthResult out{t.td(all), std::vector<std::int64_t>(g.order(), -1)};
  t.build(all, -1, out.parent);
  if (check_elimination_forest(g, out.parent) != out.value) throw InternalError("treedepth forest does not match its value");
  return out;
}

std::size_t treewidth_exact(const Graph& g, std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap || n > 24) throw InputError("treewidth search capped at " + std::to_string(cap) + " vertices");
  if (n == 0) return 0;
  const auto adj = adjacency_masks(g);
  const Mask all = static_cast<Mask>((std::uint64_t{1} << n) - 1);
  // q(S, v): vertices outside S + v reachable from v through S
  auto q = [&](Mask s, Vertex v) {
    Mask seen = Mask{1} << v, frontier = seen, out = 0;
    while (frontier) {
      Mask nb = 0;
      for (Mask f = frontier; f; f &= f - 1) nb |= adj[static_cast<unsigned>(std::countr_zero(f))];
      nb &= ~seen;
      out |= nb & ~s;
      frontier = nb & s;
      seen |= nb;
    }
    return static_cast<int>(std::popcount(out & ~(Mask{1} << v)));
  };
  std::vector<int> tw(std::size_t{1} << n, 0);
  tw[0] = -1;
  for (Mask s = 1; s <= all && s != 0; ++s) {
    int best = INT32_MAX;
    for (Mask m = s; m; m &= m - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(m));
      const Mask rest = s & ~(Mask{1} << v);
      best = std::min(best, std::max(tw[rest], q(rest, v)));
    }
    tw[s] = best;
    if (s == all) break;
  }
  return static_cast<std::size_t>(tw[all]);
}

std::optional<std::size_t> check_elimination_forest(const Graph& g, std::span<const std::int64_t> parent) {
  const std::size_t n = g.order();
  if (parent.size() != n) return std::nullopt;
  std::vector<std::size_t> depth(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t d = 1;
    for (std::int64_t p = parent[v]; p >= 0; p = parent[static_cast<std::size_t>(p)]) {
      if (static_cast<std::size_t>(p) >= n || ++d > n) return std::nullopt;
    }
    depth[v] = d;
  }
  auto ancestor = [&](Vertex a, Vertex b) {
    for (std::int64_t p = parent[b]; p >= 0; p = parent[static_cast<std::size_t>(p)])
      if (static_cast<Vertex>(p) == a) return true;
    return false;
  };
  for (auto [u, v] : g.edges())
    if (!ancestor(u, v) && !ancestor(v, u)) return std::nullopt;
  return n == 0 ? 0 : *std::max_element(depth.begin(), depth.end());
}

bool IdentityReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds; });
}

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"name", c.name}, {"holds", c.holds}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  return {{"tw", r.tw}, {"td", r.td}, {"scol_inf", r.scol_inf}, {"wcol_inf", r.wcol_inf}, {"pt_free", r.pt_free},
          {"checks", checks}};
}

namespace {

std::uint64_t sat_pow(std::uint64_t b, std::size_t e) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (b != 0 && out > UINT64_MAX / b) return UINT64_MAX;
    out *= b;
  }
  return out;
}

std::string order_text(const LinearOrder& o) {
  std::string s;
  for (Vertex v : o.sequence()) s += (s.empty() ? "" : " ") + std::to_string(v);
  return "[" + s + "]";
}

}  // namespace

IdentityReport verify_identities(const Graph& g, std::size_t t, std::span<const LinearOrder> extra_orders) {
  const std::size_t n = g.order();
  if (n == 0) throw InputError("graph has no vertices");
  IdentityReport rep;
  rep.tw = treewidth_exact(g);
  rep.td = treedepth_exact(g).value;
  const auto so = scol_opt(g, kInfiniteRadius);
  const auto wo = wcol_opt(g, kInfiniteRadius);
  rep.scol_inf = so.value;
  rep.wcol_inf = wo.value;
  rep.checks.push_back({"tw = scol_inf - 1", rep.tw + 1 == rep.scol_inf,
                        rep.tw + 1 == rep.scol_inf ? "" : "scol order " + order_text(so.order)});
  rep.checks.push_back({"td = wcol_inf", rep.td == rep.wcol_inf,
                        rep.td == rep.wcol_inf ? "" : "wcol order " + order_text(wo.order)});

  std::vector<LinearOrder> orders{so.order, wo.order, LinearOrder::identity(n), degeneracy_order(g)};
  for (const auto& o : extra_orders) {
    check_order(g, o);
    orders.push_back(o);
  }
  IdentityCheck pow_check{"wcol_r <= scol_r^r", true, ""}, mono{"scol_r <= wcol_r", true, ""};
  for (const auto& o : orders)
    for (std::size_t r : {std::size_t{1}, std::size_t{2}, std::size_t{3}, n}) {
      const auto s = scol(g, o, r), w = wcol(g, o, r);
      if (w > sat_pow(s, r) && pow_check.holds) {
        pow_check.holds = false;
        pow_check.detail = "r=" + std::to_string(r) + " order " + order_text(o);
      }
      if (s > w && mono.holds) {
        mono.holds = false;
        mono.detail = "r=" + std::to_string(r) + " order " + order_text(o);
      }
    }
  rep.checks.push_back(pow_check);
  rep.checks.push_back(mono);

  if (t >= 2) {
    rep.pt_free = has_induced_path(g, t).absent();
    if (rep.pt_free) {
      const bool td_ok = rep.td <= sat_pow(rep.tw + 1, t - 1);
      rep.checks.push_back({"td <= (tw+1)^(t-1)", td_ok, ""});
      const auto short_r = scol_opt(g, t - 1);
      rep.checks.push_back({"scol_inf = scol_(t-1)", short_r.value == rep.scol_inf,
                            short_r.value == rep.scol_inf ? "" : "order " + order_text(short_r.order)});
    }
  }
  return rep;
}

}  // namespace chibound
