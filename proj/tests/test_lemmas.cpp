#include <doctest.h>

#include <random>

#include "chibound/detect.hpp"
#include "chibound/lemmas.hpp"
#include "oracles.hpp"

using namespace chibound;

namespace {

VertexSet set_of(std::size_t n, std::vector<Vertex> vs) { return VertexSet::of(n, vs); }

// r = 0 joined to m independent vertices, each with `leaves` private pendant vertices
Graph blown_up_star(std::size_t m, std::size_t leaves) {
  std::vector<Edge> es;
  Vertex next = static_cast<Vertex>(1 + m);
  for (Vertex u = 1; u <= m; ++u) {
    es.emplace_back(0, u);
    for (std::size_t i = 0; i < leaves; ++i) es.emplace_back(u, next++);
  }
  return Graph::from_edges(next, es);
}

Graph random_split(std::size_t n, std::mt19937_64& rng) {
  const std::size_t k = rng() % (n + 1);
  std::vector<Edge> es;
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) es.emplace_back(u, v);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = static_cast<Vertex>(k); v < n; ++v)
      if (rng() % 3 == 0) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

}  // namespace

TEST_CASE("closed-form bound") {
  CHECK(sstar_degree_bound(2, 2, 2) == 10);
  CHECK(sstar_degree_bound(1, 2, 2) == 1);
  CHECK(sstar_degree_bound(3, 2, 3) == 2 * (3 + 9 + 9) + 0);
  CHECK_THROWS_AS(checked_pow(10, 30), InputError);
}

TEST_CASE("filter examples") {
  auto e = oracle::edgeless(6);
  auto u = set_of(6, {0, 1, 2}), out = set_of(6, {3, 4, 5});
  auto f = filter_many_nonneighbors(e, u, out, 1, 2);
  CHECK(f.kept == out);
  CHECK(f.excluded.empty());

  std::vector<Edge> es{{4, 0}, {4, 1}, {4, 2}, {5, 1}, {5, 2}, {5, 3}};
  auto g = Graph::from_edges(6, es);
  auto r = filter_many_nonneighbors(g, set_of(6, {0, 1, 2, 3}), set_of(6, {4, 5}), 2, 2);
  CHECK(r.excluded.count() == 2);
  REQUIRE(r.biclique);
  CHECK(r.biclique->left == std::vector<Vertex>{4, 5});
  CHECK(r.biclique->right == std::vector<Vertex>{1, 2});
  CHECK(verify_certificate(g, Certificate::biclique(*r.biclique, 2)));
  CHECK(oracle::has_biclique(g, 2, 2));

  std::vector<Edge> one{{4, 0}, {4, 1}, {4, 2}, {4, 3}};
  auto h = Graph::from_edges(5, one);
  auto s = filter_many_nonneighbors(h, set_of(5, {0, 1, 2, 3}), set_of(5, {4}), 2, 2);
  CHECK(s.excluded.to_vector() == std::vector<Vertex>{4});
  CHECK_FALSE(s.biclique);

  CHECK_THROWS_AS(filter_many_nonneighbors(h, set_of(5, {0, 1, 2}), set_of(5, {4}), 2, 2), InputError);
  CHECK_THROWS_AS(filter_many_nonneighbors(h, set_of(5, {0, 1, 2, 3}), set_of(5, {3}), 1, 2), InputError);
}

TEST_CASE("filter agrees with counting on random graphs") {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 300; ++rep) {
    auto g = oracle::random_graph(10, 0.6, rng);
    auto u = set_of(10, {0, 1, 2, 3, 4, 5}), out = set_of(10, {6, 7, 8, 9});
    auto f = filter_many_nonneighbors(g, u, out, 2, 3);
    for (Vertex x = 6; x < 10; ++x) {
      std::size_t non = 0;
      for (Vertex y = 0; y < 6; ++y) non += g.adjacent(x, y) ? 0 : 1;
      CHECK(f.kept.contains(x) == (non >= 2));
    }
    CHECK(f.biclique.has_value() == (f.excluded.count() >= 3));
    if (f.biclique) CHECK(verify_certificate(g, Certificate::biclique(*f.biclique, 3)));
  }
}

TEST_CASE("common filter") {
  auto e = oracle::edgeless(10);
  std::vector<VertexSet> sets{set_of(10, {0, 1}), set_of(10, {2, 3})};
  auto r = common_filter(e, sets, set_of(10, {4, 5, 6, 7, 8, 9}), 1, 2);
  CHECK(r.survivor == Vertex{4});

  // round 2 excludes vertices 4 and 5
  std::vector<Edge> es{{4, 2}, {4, 3}, {5, 2}, {5, 3}, {6, 0}};
  auto g = Graph::from_edges(10, es);
  auto b = common_filter(g, sets, set_of(10, {4, 5, 6, 7, 8, 9}), 1, 2);
  CHECK_FALSE(b.survivor);
  REQUIRE(b.biclique);
  CHECK(b.biclique->left == std::vector<Vertex>{4, 5});
  CHECK(verify_certificate(g, Certificate::biclique(*b.biclique, 2)));
  CHECK(find_biclique_subgraph(g, 2, 2).found());

  // r = 1 is a single filtering step
  std::vector<VertexSet> single{set_of(10, {0, 1, 2, 3})};
  auto c = common_filter(g, single, set_of(10, {4, 5, 6}), 2, 2);
  auto f = filter_many_nonneighbors(g, single[0], set_of(10, {4, 5, 6}), 2, 2);
  CHECK(c.survivor == f.kept.first());

  CHECK_THROWS_AS(common_filter(e, sets, set_of(10, {4, 5}), 1, 2), InputError);
  std::vector<VertexSet> overlap{set_of(10, {0, 1}), set_of(10, {1, 2})};
  CHECK_THROWS_AS(common_filter(e, overlap, set_of(10, {4, 5, 6, 7}), 1, 2), InputError);
}

TEST_CASE("rainbow independent set") {
  auto e = oracle::edgeless(4);
  std::vector<VertexSet> one{set_of(4, {2, 3})};
  CHECK(*rainbow_independent_set(e, one, 2).transversal == std::vector<Vertex>{2});
  std::vector<VertexSet> two{set_of(4, {0, 1}), set_of(4, {2, 3})};
  CHECK(*rainbow_independent_set(e, two, 2).transversal == std::vector<Vertex>{0, 2});
  // a=0 b=1 c=2 d=3, edges ac ad bc
  std::vector<Edge> es{{0, 2}, {0, 3}, {1, 2}};
  auto g = Graph::from_edges(4, es);
  CHECK(*rainbow_independent_set(g, two, 2).transversal == std::vector<Vertex>{1, 3});
  std::vector<VertexSet> small{set_of(4, {0}), set_of(4, {2, 3})};
  CHECK_THROWS_AS(rainbow_independent_set(g, small, 2), InputError);
}

TEST_CASE("rainbow output is independent or a verified biclique") {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 300; ++rep) {
    auto g = oracle::random_graph(12, 0.5, rng);
    std::vector<VertexSet> sets{set_of(12, {0, 1, 2, 3}), set_of(12, {4, 5, 6, 7}), set_of(12, {8, 9, 10, 11})};
    auto r = rainbow_independent_set(g, sets, 2);
    if (r.transversal) {
      CHECK(is_independent(g, std::span<const Vertex>(*r.transversal)));
      for (std::size_t i = 0; i < 3; ++i) CHECK(sets[i].contains((*r.transversal)[i]));
    } else {
      REQUIRE(r.biclique);
      CHECK(verify_certificate(g, Certificate::biclique(*r.biclique, 2)));
    }
  }
}

TEST_CASE("sstar examples") {
  auto c5 = sstar_low_degree(oracle::cycle(5), 2, 2);
  CHECK(c5.kind == SStarOutcome::Kind::LowDegree);
  CHECK(c5.degree == 2);
  CHECK(c5.bound == 10);
  for (const auto& g : {oracle::path(5), oracle::complete_bipartite(2, 2)}) {
    auto o = sstar_low_degree(g, 2, 2);
    CHECK(verify_certificate(g, o.certificate()));
  }
  CHECK_THROWS_AS(sstar_low_degree(oracle::cycle(5), 1, 2), InputError);
  CHECK_THROWS_AS(sstar_low_degree(oracle::edgeless(0), 2, 2), InputError);
}

TEST_CASE("star branch produces an induced subdivided star") {
  auto g = blown_up_star(6, 4);
  auto o = sstar_low_degree(g, 2, 2);
  REQUIRE(o.kind == SStarOutcome::Kind::SubdividedStar);
  CHECK(o.star->center == 0);
  CHECK(verify_certificate(g, o.certificate()));
  auto g3 = blown_up_star(90, 81);  // root degree must exceed 82
  auto o3 = sstar_low_degree(g3, 3, 3);
  REQUIRE(o3.kind == SStarOutcome::Kind::SubdividedStar);
  CHECK(verify_certificate(g3, o3.certificate()));
}

TEST_CASE("base-case star is lifted to a full biclique") {
  // wheel: hub 4 over the 4-cycle 0..3
  std::vector<Edge> es{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}};
  auto g = Graph::from_edges(5, es);
  auto o = sstar_low_degree(g, 2, 2);
  REQUIRE(o.kind == SStarOutcome::Kind::Biclique);
  CHECK(o.biclique->left.size() == 2);
  CHECK(o.biclique->right.size() == 2);
  CHECK(verify_certificate(g, o.certificate()));
}

TEST_CASE("totality and agreement on random graphs") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + rng() % 20;
    auto g = oracle::random_graph(n, std::uniform_real_distribution<double>(0.02, 0.6)(rng), rng);
    auto o = sstar_low_degree(g, 2, 2);
    CHECK(verify_certificate(g, o.certificate()));
    if (o.kind == SStarOutcome::Kind::LowDegree) CHECK(o.degree <= 10);
    if (o.kind == SStarOutcome::Kind::Biclique) {
      CHECK(o.biclique->left.size() >= 2);
      CHECK(o.biclique->right.size() >= 2);
    }
    if (n <= 12 && !find_biclique_subgraph(g, 2, 2).found() && !find_induced_subdivided_star(g, 2).found())
      CHECK(o.kind == SStarOutcome::Kind::LowDegree);
  }
}

TEST_CASE("elimination orders") {
  auto e = sstar_elimination_order(oracle::edgeless(5), 2, 2);
  CHECK(e.order.size() == 5);
  CHECK(e.max_removal_degree == 0);
  CHECK(verify_certificate(oracle::edgeless(5), e.certificate()));

  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 50; ++rep) {
    // random tree by attaching each vertex to an earlier one
    const std::size_t n = 2 + rng() % 15;
    std::vector<Edge> es;
    for (Vertex v = 1; v < n; ++v) es.emplace_back(static_cast<Vertex>(rng() % v), v);
    auto tree = Graph::from_edges(n, es);
    auto o = sstar_elimination_order(tree, 2, 2);
    if (o.witness) {
      CHECK(verify_certificate(tree, o.certificate()));
      continue;
    }
    CHECK(o.order.size() == n);
    CHECK(verify_certificate(tree, o.certificate()));
  }

  int screened = 0;
  for (int rep = 0; rep < 300 && screened < 60; ++rep) {
    auto g = random_split(1 + rng() % 12, rng);
    if (find_biclique_subgraph(g, 2, 2).found()) continue;
    ++screened;
    CHECK_FALSE(find_induced_subdivided_star(g, 2).found());
    auto o = sstar_elimination_order(g, 2, 2);
    REQUIRE_FALSE(o.witness);
    CHECK(o.order.size() == g.order());
    CHECK(o.max_removal_degree <= 10);
    CHECK(verify_certificate(g, o.certificate()));
  }
  CHECK(screened >= 20);
}

TEST_CASE("trace is attached on request") {
  auto o = sstar_low_degree(oracle::cycle(5), 2, 2);
  auto c = o.certificate(true);
  REQUIRE(c.recursion_trace);
  CHECK(c.recursion_trace->size() == 2);
  CHECK((*c.recursion_trace)[0]["k"] == 2);
}
