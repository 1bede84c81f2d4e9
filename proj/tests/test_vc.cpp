#include <doctest.h>

#include <random>
#include <set>

#include "chibound/vc.hpp"
#include "oracles.hpp"

using namespace chibound;

namespace {

std::size_t brute_vc(const SetSystem& s) {
  std::size_t best = 0;
  bool any = false;
  for (std::uint32_t z = 0; z < (1U << s.universe_size); ++z) {
    std::set<std::uint32_t> traces;
    for (const auto& m : s.members) {
      std::uint32_t f = 0;
      for (auto e : m) f |= 1U << e;
      traces.insert(f & z);
    }
    if (traces.size() == (std::size_t{1} << std::popcount(z))) {
      any = true;
      best = std::max<std::size_t>(best, std::popcount(z));
    }
  }
  return any ? best : 0;
}

SetSystem random_system(std::mt19937_64& rng, std::size_t u) {
  SetSystem s{u, {}};
  const std::size_t count = rng() % 40;
  const double density = static_cast<double>(rng() % 100) / 100.0;
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::uint32_t> m;
    for (std::uint32_t e = 0; e < u; ++e)
      if (coin(rng)) m.push_back(e);
    s.members.push_back(m);
  }
  return s;
}

// z_0..z_{h-1} = 0..h-1, one y per cyclic pair: C_{2h} exactly
Graph shatter_gadget(std::size_t h, std::vector<Vertex>& z, std::vector<Vertex>& y) {
  std::vector<Edge> es;
  z.clear();
  y.clear();
  for (Vertex i = 0; i < h; ++i) z.push_back(i);
  for (std::size_t i = 0; i < h; ++i) {
    const Vertex v = static_cast<Vertex>(h + i);
    y.push_back(v);
    es.emplace_back(static_cast<Vertex>(i), v);
    es.emplace_back(static_cast<Vertex>((i + 1) % h), v);
  }
  return Graph::from_edges(2 * h, es);
}

}  // namespace

TEST_CASE("neighborhood systems") {
  const Graph c6 = oracle::cycle(6);
  std::vector<Vertex> x{0, 2, 4}, y{1, 3, 5};
  const auto ns = neighborhood_system(c6, x, y);
  for (const auto& m : ns.system.members) CHECK(m.size() == 2);
  const Graph star = oracle::star(4);
  std::vector<Vertex> leaves{1, 2, 3, 4}, center{0};
  CHECK(neighborhood_system(star, leaves, center).system.members[0].size() == 4);
  std::vector<Vertex> far{5};
  CHECK(neighborhood_system(c6, std::vector<Vertex>{0, 1}, std::vector<Vertex>{3}).system.members[0].empty());
  CHECK_THROWS_AS(neighborhood_system(c6, x, std::vector<Vertex>{0}), InputError);
  (void)far;
}

TEST_CASE("vc dimension examples") {
  SetSystem all{3, {}};
  for (std::uint32_t m = 0; m < 8; ++m) {
    std::vector<std::uint32_t> s;
    for (std::uint32_t e = 0; e < 3; ++e)
      if (m >> e & 1) s.push_back(e);
    all.members.push_back(s);
  }
  CHECK(vc_dimension(all) == 3);
  CHECK(vc_dimension(SetSystem{4, {{}}}) == 0);
  CHECK(vc_dimension(SetSystem{4, {{}, {0}, {1}, {2}, {3}}}) == 1);
  CHECK_THROWS_AS(vc_dimension(SetSystem{21, {}}), InputError);
  CHECK_THROWS_AS(vc_dimension(SetSystem{3, {{5}}}), InputError);
  CHECK(to_json(all)["universe_size"] == 3);
  CHECK(set_system_from_json(to_json(all)).members == all.members);
}

TEST_CASE("vc dimension matches brute force; Sauer-Shelah holds") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 1500; ++it) {
    const auto s = random_system(rng, rng() % 9);
    const auto d = vc_dimension(s);
    REQUIRE(d == brute_vc(s));
    CHECK(mpz_class(static_cast<unsigned long>(s.distinct_members())) <= sauer_shelah_bound(s.universe_size, d));
  }
}

TEST_CASE("Sauer-Shelah bound") {
  CHECK(sauer_shelah_bound(4, 2) == 11);
  CHECK(sauer_shelah_bound(5, 0) == 1);
  for (unsigned n = 0; n < 70; n += 7) {
    mpz_class two = 2, p;
    mpz_pow_ui(p.get_mpz_t(), two.get_mpz_t(), n);
    CHECK(sauer_shelah_bound(n, n) == p);
  }
  CHECK_THROWS_AS(sauer_shelah_bound(3, 4), InputError);
}

TEST_CASE("trace buckets") {
  const Graph c6 = oracle::cycle(6);
  std::vector<Vertex> x{0, 2, 4}, y{1, 3, 5};
  auto tb = trace_buckets(c6, x, y);
  CHECK(tb.buckets.size() == 3);
  for (const auto& b : tb.buckets) CHECK(b.members.size() == 1);
  CHECK(tb.best().trace == std::vector<Vertex>{0, 2});  // smallest trace among ties

  const Graph e = oracle::edgeless(5);
  auto one = trace_buckets(e, std::vector<Vertex>{0, 1}, std::vector<Vertex>{2, 3, 4});
  CHECK(one.buckets.size() == 1);
  CHECK(one.best().members.size() == 3);

  std::mt19937_64 rng(8);
  for (int it = 0; it < 200; ++it) {
    const Graph g = oracle::random_graph(10, 0.4, rng);
    std::vector<Vertex> xs, ys;
    for (Vertex v = 0; v < 10; ++v) (rng() % 2 ? xs : ys).push_back(v);
    auto r = trace_buckets(g, xs, ys);
    std::set<Vertex> seen;
    for (const auto& b : r.buckets) {
      CHECK(b.members.size() <= r.best().members.size());
      for (Vertex u : b.members) {
        CHECK(seen.insert(u).second);
        std::vector<Vertex> tr;
        for (Vertex w : xs)
          if (g.adjacent(u, w)) tr.push_back(w);
        CHECK(tr == b.trace);
      }
    }
    CHECK(seen.size() == ys.size());
  }
}

TEST_CASE("cycle from a shattered set") {
  for (std::size_t t : {4, 6, 10}) {
    std::vector<Vertex> z, y;
    const Graph g = shatter_gadget(t / 2, z, y);
    const auto c = cycle_from_shattered(g, z, y, t);
    CHECK(c.size() == t);
    CHECK(verify_induced_cycle(g, c.vertices));
  }
  SUBCASE("full shattering gadget, t = 10") {
    // Z = 0..4, one Y vertex per subset of Z
    std::vector<Edge> es;
    std::vector<Vertex> z{0, 1, 2, 3, 4}, y;
    for (std::uint32_t m = 0; m < 32; ++m) {
      const Vertex v = 5 + m;
      y.push_back(v);
      for (Vertex e = 0; e < 5; ++e)
        if (m >> e & 1) es.emplace_back(e, v);
    }
    const Graph g = Graph::from_edges(37, es);
    const auto ns = neighborhood_system(g, z, y);
    CHECK(vc_dimension(ns.system) == 5);
    const auto c = cycle_from_shattered(g, z, y, 10);
    CHECK(c.size() == 10);
    CHECK(verify_induced_cycle(g, c.vertices));
  }
  SUBCASE("missing pattern") {
    std::vector<Vertex> z, y;
    const Graph g = shatter_gadget(5, z, y);
    y.pop_back();
    CHECK_THROWS_AS(cycle_from_shattered(g, z, y, 10), InputError);
  }
}

TEST_CASE("cor_traces_check") {
  SUBCASE("empty Y") {
    const Graph g = oracle::edgeless(4);
    auto r = cor_traces_check(g, std::vector<Vertex>{0, 1, 2, 3}, std::vector<Vertex>{}, {2, 1, 4, {}});
    CHECK(r.holds);
  }
  SUBCASE("planted biclique") {
    // X = 0..3 independent, Y = 4..23 all adjacent to {0,1}
    std::vector<Edge> es;
    std::vector<Vertex> x{0, 1, 2, 3}, y;
    for (Vertex v = 4; v < 24; ++v) {
      y.push_back(v);
      es.emplace_back(0, v);
      es.emplace_back(1, v);
    }
    const Graph g = Graph::from_edges(24, es);
    auto r = cor_traces_check(g, x, y, {2, 1, 4, {}});  // bound 2 * 4^2 = 32
    CHECK(r.holds);
    auto r2 = cor_traces_check(g, std::vector<Vertex>{0, 1}, y, {2, 1, 4, {}});  // bound 2 * 2^2 = 8
    REQUIRE_FALSE(r2.holds);
    REQUIRE(r2.witness);
    CHECK(r2.witness->tag == CertificateTag::BicliqueWitness);
    CHECK(verify_certificate(g, *r2.witness));
  }
  SUBCASE("distinct traces force a cycle") {
    // X = 0..15 independent; 520 Y vertices with pairwise distinct traces of size >= 2
    std::vector<Edge> es;
    std::vector<Vertex> x, y;
    for (Vertex v = 0; v < 16; ++v) x.push_back(v);
    Vertex next = 16;
    for (std::uint32_t m = 0; next < 16 + 520; ++m) {
      if (std::popcount(m) < 2) continue;
      y.push_back(next);
      for (Vertex e = 0; e < 16; ++e)
        if (m >> e & 1) es.emplace_back(e, next);
      ++next;
    }
    const Graph g = Graph::from_edges(next, es);
    auto r = cor_traces_check(g, x, y, {2, 1, 4, {}});  // bound 2 * 16^2 = 512
    REQUIRE_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(r.witness->tag == CertificateTag::InducedCycle);
    CHECK(verify_certificate(g, *r.witness));
  }
  SUBCASE("random instances satisfying the hypotheses") {
    std::mt19937_64 rng(2);
    int checked = 0;
    for (int it = 0; it < 300; ++it) {
      const Graph g = oracle::random_graph(12, 0.5, rng);
      std::vector<Vertex> x, y;
      for (Vertex v = 0; v < 12; ++v) (v < 6 ? x : y).push_back(v);
      // keep an independent Y whose members have >= 2 neighbors in X
      std::vector<Vertex> yy;
      for (Vertex u : y) {
        std::size_t d = 0;
        for (Vertex w : x) d += g.adjacent(u, w);
        bool ok = d >= 2;
        for (Vertex w : yy) ok = ok && !g.adjacent(u, w);
        if (ok) yy.push_back(u);
      }
      try {
        auto r = cor_traces_check(g, x, yy, {2, 3, 4, {}});
        CHECK(r.holds);
        ++checked;
      } catch (const InputError&) {
        // G[X] needs more than 3 colors
      }
    }
    CHECK(checked > 100);
  }
  CHECK_THROWS_AS(cor_traces_check(oracle::complete(4), std::vector<Vertex>{0, 1}, std::vector<Vertex>{2, 3},
                                   {1, 1, 4, {}}),
                  InputError);
}

TEST_CASE("traces3 split") {
  SUBCASE("Y anticomplete to X") {
    const Graph g = oracle::edgeless(6);
    auto r = cor_traces3_split(g, std::vector<Vertex>{0, 1}, std::vector<Vertex>{2, 3, 4, 5}, {2, 1, 4, {}});
    CHECK(r.x_prime == std::vector<Vertex>{0, 1});
    CHECK(r.y_prime == std::vector<Vertex>{2, 3, 4, 5});
  }
  SUBCASE("one common neighbor") {
    const Graph g = oracle::star(8);  // center 0
    auto r = cor_traces3_split(g, std::vector<Vertex>{0, 1, 2, 3}, std::vector<Vertex>{4, 5, 6, 7, 8}, {2, 2, 4, {}});
    CHECK(r.x_prime == std::vector<Vertex>{1, 2, 3});
    CHECK(r.y_prime == std::vector<Vertex>{4, 5, 6, 7, 8});
  }
  SUBCASE("random instances") {
    std::mt19937_64 rng(6);
    for (int it = 0; it < 200; ++it) {
      // bipartite between X = 0..3 and Y = 4..13
      std::vector<Edge> es;
      for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 4; v < 14; ++v)
          if (rng() % 5 == 0) es.emplace_back(u, v);
      const Graph g = Graph::from_edges(14, es);
      std::vector<Vertex> x{0, 1, 2, 3}, y{4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
      auto r = cor_traces3_split(g, x, y, {3, 1, 4, std::vector<std::size_t>(4, 0)});
      if (r.biclique) {
        CHECK(verify_certificate(g, Certificate::biclique(*r.biclique)));
        continue;
      }
      CHECK(are_anticomplete(g, std::span<const Vertex>(r.x_prime), std::span<const Vertex>(r.y_prime)));
      CHECK(r.x_prime.size() + 3 > x.size());
      CHECK_FALSE(r.y_prime.empty());
    }
  }
}
