#include "chibound/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace chibound {

namespace {

using Rng = std::mt19937_64;

Graph gnp(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

Graph tree(std::size_t n, Rng& rng) {
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  return Graph::from_edges(n, es);
}

// clique on the first k vertices, independent rest, random cross edges
Graph split(std::size_t n, double p, Rng& rng) {
  const std::size_t k = n / 2;
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (v < k || (u < k && coin(rng))) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

// random disjoint-union / join tree over the vertices
Graph cograph(std::size_t n, Rng& rng) {
  std::vector<std::vector<Vertex>> parts;
  for (Vertex v = 0; v < n; ++v) parts.push_back({v});
  std::set<Edge> es;
  std::bernoulli_distribution join(0.5);
  while (parts.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    while (j == i) j = pick(rng);
    if (join(rng))
      for (Vertex a : parts[i])
        for (Vertex b : parts[j]) es.insert({std::min(a, b), std::max(a, b)});
    parts[i].insert(parts[i].end(), parts[j].begin(), parts[j].end());
    parts.erase(parts.begin() + static_cast<long>(j));
  }
  std::vector<Edge> ev(es.begin(), es.end());
  return Graph::from_edges(n, ev);
}

// every new vertex is simplicial when added
Graph chordal(std::size_t n, double p, Rng& rng) {
  std::vector<std::set<Vertex>> adj(n);
  std::bernoulli_distribution coin(p);
  for (Vertex v = 1; v < n; ++v) {
    const Vertex anchor = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    std::vector<Vertex> cand(adj[anchor].begin(), adj[anchor].end());
    std::shuffle(cand.begin(), cand.end(), rng);
    std::vector<Vertex> clique{anchor};
    for (Vertex c : cand) {
      if (!coin(rng)) continue;
      bool ok = true;
      for (Vertex x : clique) ok = ok && adj[x].count(c);
      if (ok) clique.push_back(c);
    }
    for (Vertex x : clique) {
      adj[x].insert(v);
      adj[v].insert(x);
    }
  }
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w : adj[u])
      if (u < w) es.emplace_back(u, w);
  return Graph::from_edges(n, es);
}

Graph interval(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> start(0.0, 1.0), len(0.0, 2.0 / static_cast<double>(std::max<std::size_t>(n, 1)));
  std::vector<std::pair<double, double>> iv(n);
  for (auto& x : iv) {
    x.first = start(rng);
    x.second = x.first + len(rng);
  }
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (iv[u].first <= iv[v].second && iv[v].first <= iv[u].second) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

// gnp background; k random vertices made to induce a cycle
Graph planted_cycle(std::size_t n, double p, std::size_t k, Rng& rng) {
  if (k < 3 || k > n) throw InputError("planted cycle length must lie in [3, n]");
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < k; ++i) pos[ids[i]] = static_cast<int>(i);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const bool draw = coin(rng);
      if (pos[u] >= 0 && pos[v] >= 0) {
        const auto d = static_cast<std::size_t>(std::abs(pos[u] - pos[v]));
        if (d == 1 || d == k - 1) es.emplace_back(u, v);
      } else if (draw) {
        es.emplace_back(u, v);
      }
    }
  return Graph::from_edges(n, es);
}

Graph planted_biclique(std::size_t n, double p, std::size_t k, Rng& rng) {
  if (2 * k > n) throw InputError("planted biclique needs 2k <= n");
  std::vector<Vertex> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<int> side(n, -1);
  for (std::size_t i = 0; i < 2 * k; ++i) side[ids[i]] = i < k ? 0 : 1;
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const bool draw = coin(rng);
      if ((side[u] == 0 && side[v] == 1) || (side[u] == 1 && side[v] == 0) || draw) es.emplace_back(u, v);
    }
  return Graph::from_edges(n, es);
}

std::size_t pair_bit(std::size_t i, std::size_t j) {
  // i < j, column-major so that adding vertex n only appends bits
  return j * (j - 1) / 2 + i;
}

Graph from_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> es;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if ((code >> pair_bit(i, j)) & 1U) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 11) throw InputError("canonical_code supports at most 11 vertices");
  // colour refinement
  std::vector<std::size_t> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> next(n);
    for (Vertex v = 0; v < n; ++v)
      next[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    const bool stable = std::set<std::size_t>(next.begin(), next.end()).size() ==
                        std::set<std::size_t>(color.begin(), color.end()).size();
    color = std::move(next);
    if (stable) break;
  }
  // vertices sorted by colour; permute inside each colour block
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return color[a] < color[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = 0;
  bool have = false;
  std::vector<std::size_t> pos(n);
  auto evaluate = [&] {
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::uint64_t code = 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex w : g.neighbors(u))
        if (pos[u] < pos[w]) code |= std::uint64_t{1} << pair_bit(pos[u], pos[w]);
    if (!have || code > best) {
      best = code;
      have = true;
    }
  };
  // odometer over per-block permutations
  for (auto& [b, e] : blocks) std::sort(order.begin() + static_cast<long>(b), order.begin() + static_cast<long>(e));
  while (true) {
    evaluate();
    std::size_t k = 0;
    for (; k < blocks.size(); ++k) {
      auto [b, e] = blocks[k];
      if (std::next_permutation(order.begin() + static_cast<long>(b), order.begin() + static_cast<long>(e))) break;
    }
    if (k == blocks.size()) break;
  }
  return best;
}

std::vector<Graph> all_small(std::size_t n) {
  if (n > 9) throw InputError("all-small supports n <= 9");
  std::set<std::uint64_t> level{0};
  for (std::size_t m = 1; m < n; ++m) {
    std::set<std::uint64_t> next;
    for (auto code : level) {
      const Graph h = from_code(m, code);
      auto es = h.edges();
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        auto ext = es;
        for (Vertex v = 0; v < m; ++v)
          if ((s >> v) & 1U) ext.emplace_back(v, static_cast<Vertex>(m));
        next.insert(canonical_code(Graph::from_edges(m + 1, ext)));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  if (n == 0) return out;
  for (auto code : level) out.push_back(from_code(n, code));
  return out;
}

std::vector<Graph> all_small_upto(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto part = all_small(n);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

Graph subdivided_clique(std::size_t w) {
  std::vector<Edge> es;
  Vertex next = static_cast<Vertex>(w);
  for (Vertex i = 0; i < w; ++i)
    for (Vertex j = i + 1; j < w; ++j) {
      es.emplace_back(i, next);
      es.emplace_back(j, next);
      ++next;
    }
  return Graph::from_edges(next, es);
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"gnp",      "split",         "cograph",          "chordal",  "interval",
                                              "tree",     "planted-cycle", "planted-biclique", "all-small"};
  return names;
}

std::vector<Graph> generate(std::string_view family, const GenParams& params, std::uint64_t seed) {
  if (family == "all-small") return all_small(params.n);
  if (std::find(family_names().begin(), family_names().end(), family) == family_names().end())
    throw InputError("unknown family '" + std::string(family) + "'");
  if (params.p < 0.0 || params.p > 1.0) throw InputError("p must lie in [0, 1]");
  std::vector<Graph> out;
  for (std::size_t i = 0; i < params.count; ++i) {
    std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(i)};
    Rng rng(sq);
    const std::size_t n = params.n;
    if (family == "gnp") out.push_back(gnp(n, params.p, rng));
    else if (family == "split") out.push_back(split(n, params.p, rng));
    else if (family == "cograph") out.push_back(cograph(n, rng));
    else if (family == "chordal") out.push_back(chordal(n, params.p, rng));
    else if (family == "interval") out.push_back(interval(n, rng));
    else if (family == "tree") out.push_back(tree(n, rng));
    else if (family == "planted-cycle") out.push_back(planted_cycle(n, params.p, params.k, rng));
    else out.push_back(planted_biclique(n, params.p, params.k, rng));
  }
  return out;
}

}  // namespace chibound
