#include <doctest.h>

#include <random>

#include "chibound/detect.hpp"
#include "oracles.hpp"

using namespace chibound;

namespace {

std::vector<Graph> random_corpus(std::size_t count, std::uint64_t seed, std::size_t max_n = 9) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % max_n;
    const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    out.push_back(oracle::random_graph(n, p, rng));
  }
  return out;
}

}  // namespace

TEST_CASE("biclique examples") {
  auto r = find_biclique_subgraph(oracle::cycle(4), 2, 2);
  REQUIRE(r.found());
  CHECK(r.value->left == std::vector<Vertex>{0, 2});
  CHECK(r.value->right == std::vector<Vertex>{1, 3});
  CHECK(find_biclique_subgraph(oracle::cycle(6), 2, 2).absent());
  CHECK(find_biclique_subgraph(oracle::petersen(), 2, 2).absent());
  CHECK_FALSE(oracle::has_biclique(oracle::petersen(), 2, 2));
  auto k = find_biclique_subgraph(oracle::complete_bipartite(2, 4), 3, 2);
  REQUIRE(k.found());
  CHECK(k.value->left.size() == 3);
  CHECK(k.value->right.size() == 2);
  CHECK(verify_certificate(oracle::complete_bipartite(2, 4), Certificate::biclique(*k.value)));
  CHECK_THROWS_AS(find_biclique_subgraph(oracle::cycle(4), 0, 2), InputError);
}

TEST_CASE("biclique budget is reported as inconclusive") {
  auto r = find_biclique_subgraph(oracle::petersen(), 2, 2, SearchBudget{3});
  CHECK(r.inconclusive());
}

TEST_CASE("induced path examples") {
  CHECK(longest_induced_path(oracle::path(6)).value->size() == 6);
  CHECK(longest_induced_path(oracle::complete(4)).value->size() == 2);
  CHECK(longest_induced_path(oracle::cycle(7)).value->size() == 6);
  auto p = has_induced_path(oracle::cycle(7), 6);
  REQUIRE(p.found());
  CHECK(verify_induced_path(oracle::cycle(7), *p.value));
  CHECK(has_induced_path(oracle::cycle(7), 7).absent());
}

TEST_CASE("induced cycle examples") {
  auto c7 = find_long_induced_cycle(oracle::cycle(7), 7);
  REQUIRE(c7.found());
  CHECK(c7.value->size() == 7);
  CHECK(find_long_induced_cycle(oracle::complete(4), 4).absent());
  // chord 0-5 on C7 leaves induced cycles of length 6 and 3 ... use 0-4 for 5 and 4
  std::vector<Edge> es;
  for (Vertex i = 0; i < 7; ++i) es.emplace_back(i, (i + 1) % 7);
  es.emplace_back(0, 4);
  auto g = Graph::from_edges(7, es);
  CHECK(oracle::longest_induced_cycle(g) == 5);
  CHECK(find_long_induced_cycle(g, 6).absent());
  CHECK(longest_induced_cycle(g).value->size() == 5);
  CHECK_THROWS_AS(find_long_induced_cycle(g, 2), InputError);
}

TEST_CASE("subdivided star examples") {
  auto p5 = find_induced_subdivided_star(oracle::path(5), 2);
  REQUIRE(p5.found());
  CHECK(p5.value->center == 2);
  CHECK(find_induced_subdivided_star(oracle::cycle(5), 2).absent());
  auto s3 = find_induced_subdivided_star(oracle::subdivided_star(3), 3);
  REQUIRE(s3.found());
  CHECK(verify_certificate(oracle::subdivided_star(3), Certificate::star(*s3.value)));
}

TEST_CASE("independent set, clique, chromatic examples") {
  CHECK(max_independent_set(oracle::cycle(5)).value->size() == 2);
  CHECK(max_independent_set(oracle::complete_bipartite(3, 3)).value->size() == 3);
  CHECK(max_independent_set(oracle::petersen()).value->size() == 4);
  CHECK(oracle::independence_number(oracle::petersen()) == 4);
  CHECK(max_clique(oracle::cycle(5)).value->size() == 2);
  CHECK(chromatic_number_exact(oracle::cycle(5)).upper == 3);
  CHECK(chromatic_number_exact(oracle::complete(5)).upper == 5);
  auto gr = oracle::grotzsch();
  CHECK(gr.size() == 20);
  CHECK(max_clique(gr).value->size() == 2);
  auto chi = chromatic_number_exact(gr);
  CHECK(chi.exact());
  CHECK(chi.upper == 4);
  CHECK(oracle::chromatic_number(gr) == 4);
}

TEST_CASE("degeneracy examples") {
  CHECK(degeneracy(oracle::cycle(5)).degeneracy == 2);
  CHECK(degeneracy(oracle::complete_bipartite(3, 3)).degeneracy == 3);
  std::vector<Edge> forest{{0, 1}, {1, 2}, {1, 3}, {4, 5}};
  CHECK(degeneracy(Graph::from_edges(7, forest)).degeneracy == 1);
  auto c5 = oracle::cycle(5);
  CHECK(verify_certificate(c5, Certificate::elimination(degeneracy(c5).order, 2)));
}

TEST_CASE("detectors agree with brute force on random small graphs") {
  for (const auto& g : random_corpus(600, 2024)) {
    CHECK(max_balanced_biclique(g).value == oracle::max_balanced_biclique(g));
    CHECK(find_biclique_subgraph(g, 1, 3).found() == oracle::has_biclique(g, 1, 3));
    CHECK(longest_induced_path(g).value->size() == oracle::longest_induced_path(g));
    const auto lc = longest_induced_cycle(g);
    CHECK((lc.value ? lc.value->size() : 0) == oracle::longest_induced_cycle(g));
    CHECK(find_induced_subdivided_star(g, 2).found() == oracle::has_subdivided_star(g, 2));
    CHECK(find_induced_subdivided_star(g, 3).found() == oracle::has_subdivided_star(g, 3));
    CHECK(max_independent_set(g).value->size() == oracle::independence_number(g));
    CHECK(max_clique(g).value->size() == oracle::clique_number(g));
    CHECK(degeneracy(g).degeneracy == oracle::degeneracy(g));
    const auto chi = chromatic_number_exact(g);
    CHECK(chi.exact());
    CHECK(chi.upper == oracle::chromatic_number(g));
  }
}

TEST_CASE("every returned witness verifies") {
  for (const auto& g : random_corpus(300, 99, 14)) {
    if (auto r = find_biclique_subgraph(g, 2, 2); r.found())
      CHECK(verify_certificate(g, Certificate::biclique(*r.value, 2)));
    if (auto r = longest_induced_path(g); r.value && r.value->size() > 0)
      CHECK(verify_certificate(g, Certificate::path(r.value->vertices)));
    if (auto r = longest_induced_cycle(g); r.found()) CHECK(verify_certificate(g, Certificate::cycle(r.value->vertices)));
    if (auto r = find_induced_subdivided_star(g, 2); r.found())
      CHECK(verify_certificate(g, Certificate::star(*r.value)));
    CHECK(verify_certificate(g, Certificate::independent(*max_independent_set(g).value)));
    auto d = degeneracy(g);
    CHECK(verify_certificate(g, Certificate::elimination(d.order, d.degeneracy)));
    auto chi = chromatic_number_exact(g);
    for (auto [u, v] : g.edges()) CHECK(chi.coloring[u] != chi.coloring[v]);
  }
}

TEST_CASE("adding edges never lowers degeneracy, clique number or biclique side") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    auto g = oracle::random_graph(9, 0.3, rng);
    auto es = g.edges();
    const Vertex u = rng() % 9, v = rng() % 9;
    if (u == v || g.adjacent(u, v)) continue;
    es.emplace_back(u, v);
    auto h = Graph::from_edges(9, es);
    CHECK(degeneracy(h).degeneracy >= degeneracy(g).degeneracy);
    CHECK(max_clique(h).value->size() >= max_clique(g).value->size());
    CHECK(*max_balanced_biclique(h).value >= *max_balanced_biclique(g).value);
  }
}

TEST_CASE("degeneracy matches induced minimum degree exhaustively for n <= 7") {
  std::mt19937_64 rng(6);
  for (int rep = 0; rep < 300; ++rep) {
    auto g = oracle::random_graph(1 + rng() % 7, 0.5, rng);
    CHECK(degeneracy(g).degeneracy == oracle::degeneracy(g));
  }
}

TEST_CASE("certificate verification") {
  auto c4 = oracle::cycle(4);
  CHECK(verify_certificate(c4, Certificate::cycle({0, 1, 2, 3})));
  CHECK_FALSE(verify_certificate(c4, Certificate::biclique({{0, 1}, {2, 3}})));
  auto c5 = oracle::cycle(5);
  CHECK(verify_certificate(c5, Certificate::elimination({0, 1, 2, 3, 4}, 2)));
  CHECK_FALSE(verify_certificate(c5, Certificate::elimination({0, 1, 2, 3, 4}, 1)));
  Certificate missing;
  missing.tag = CertificateTag::LowDegreeVertex;
  missing.vertices = {0};
  CHECK_THROWS_AS(check_certificate(c5, missing), InputError);
  CHECK_THROWS_AS(check_certificate(c5, Certificate::cycle({0, 7, 1})), InputError);
  auto bad = check_certificate(c5, Certificate::cycle({0, 1, 3}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.detail.find("missing edge") != std::string::npos);
}

TEST_CASE("certificate JSON round trip") {
  auto c = Certificate::biclique({{0, 2}, {1, 3}}, 2);
  auto j = to_json(c);
  CHECK(j["tag"] == "BicliqueWitness");
  auto back = certificate_from_json(j);
  CHECK(back.left == c.left);
  CHECK(back.right == c.right);
  CHECK(back.claimed_bound == c.claimed_bound);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json{{"tag", "Nope"}}), InputError);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json{{"tag", "InducedCycle"}, {"vertices", "x"}}), InputError);
}
