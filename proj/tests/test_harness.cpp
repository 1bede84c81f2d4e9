#include <doctest.h>

#include <random>
#include <sstream>

#include "chibound/detect.hpp"
#include "chibound/generators.hpp"
#include "chibound/scan.hpp"
#include "oracles.hpp"

using namespace chibound;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& p) {
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(p[u], p[v]);
  return Graph::from_edges(g.order(), es);
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("generator families") {
  SUBCASE("tree") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Graph g = generate("tree", GenParams{.n = 5}, seed).front();
      CHECK(g.order() == 5);
      CHECK(g.size() == 4);
      CHECK(is_connected(g, g.all()));
    }
  }
  SUBCASE("family guarantees hold on every instance") {
    for (std::size_t n = 4; n <= 12; ++n) {
      GenParams p{.n = n, .p = 0.5, .k = 4, .count = 15};
      for (const auto& g : generate("chordal", p, n)) CHECK(find_long_induced_cycle(g, 4).absent());
      for (const auto& g : generate("interval", p, n)) CHECK(find_long_induced_cycle(g, 4).absent());
      for (const auto& g : generate("split", p, n)) CHECK(has_induced_path(g, 5).absent());
      for (const auto& g : generate("cograph", p, n)) CHECK(has_induced_path(g, 4).absent());
      for (const auto& g : generate("planted-cycle", p, n)) CHECK(find_long_induced_cycle(g, 4).found());
      for (const auto& g : generate("planted-biclique", GenParams{.n = n, .p = 0.2, .k = 2, .count = 15}, n))
        CHECK(find_biclique_subgraph(g, 2, 2).found());
    }
  }
  SUBCASE("deterministic per seed") {
    for (const auto& fam : family_names()) {
      if (fam == "all-small") continue;
      GenParams p{.n = 10, .p = 0.4, .k = 4, .count = 3};
      const auto a = generate(fam, p, 99), b = generate(fam, p, 99);
      REQUIRE(a.size() == 3);
      for (std::size_t i = 0; i < 3; ++i) CHECK(a[i] == b[i]);
    }
    const auto x = generate("gnp", GenParams{.n = 20}, 1).front(), y = generate("gnp", GenParams{.n = 20}, 2).front();
    CHECK_FALSE(x == y);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(generate("petersen", GenParams{}, 0), InputError);
    CHECK_THROWS_AS(generate("gnp", GenParams{.p = 1.5}, 0), InputError);
    CHECK_THROWS_AS(generate("planted-cycle", GenParams{.n = 3, .k = 5}, 0), InputError);
  }
  SUBCASE("subdivided clique") {
    const Graph g = subdivided_clique(5);
    CHECK(g.order() == 15);
    CHECK(g.size() == 20);
    CHECK(is_independent(g, std::vector<Vertex>{0, 1, 2, 3, 4}));
  }
}

TEST_CASE("all-small") {
  SUBCASE("counts") {
    const std::vector<std::size_t> known{1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 1; n <= 7; ++n) CHECK(all_small(n).size() == known[n - 1]);
    CHECK(generate("all-small", GenParams{.n = 4}, 0).size() == 11);
  }
  SUBCASE("pairwise non-isomorphic and complete for n <= 5") {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto gs = all_small(n);
      for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j) CHECK_FALSE(oracle::isomorphic(gs[i], gs[j]));
    }
    std::mt19937_64 rng(5);
    const auto gs = all_small(5);
    for (int it = 0; it < 200; ++it) {
      const Graph g = oracle::random_graph(5, 0.5, rng);
      std::size_t hits = 0;
      for (const auto& h : gs) hits += oracle::isomorphic(g, h) ? 1 : 0;
      CHECK(hits == 1);
    }
  }
  SUBCASE("canonical code is a complete invariant") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 300; ++it) {
      const std::size_t n = 2 + it % 7;
      const Graph g = oracle::random_graph(n, 0.5, rng);
      std::vector<Vertex> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(canonical_code(g) == canonical_code(relabel(g, p)));
      const Graph h = oracle::random_graph(n, 0.5, rng);
      CHECK((canonical_code(g) == canonical_code(h)) == oracle::isomorphic(g, h));
    }
  }
}

TEST_CASE("scan_bounds") {
  SUBCASE("single C5") {
    const auto r = compute_record(oracle::cycle(5), 0);
    CHECK(r.longest_induced_cycle == 5);
    CHECK(r.degeneracy == 2);
    CHECK(r.chi == 3);
    CHECK(r.td == 4);
  }
  SUBCASE("K33") {
    const auto r = compute_record(oracle::complete_bipartite(3, 3), 0);
    CHECK(r.max_biclique == 3);
    CHECK(r.degeneracy == 3);
    CHECK(r.omega == 2);
  }
  SUBCASE("records match the brute-force oracles on all graphs up to 6 vertices") {
    const auto corpus = all_small_upto(6);
    const auto res = scan_bounds(corpus, ScanOptions{});
    REQUIRE(res.records.size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& g = corpus[i];
      const auto& r = res.records[i];
      CHECK(r.id == i);
      CHECK(r.longest_induced_path == oracle::longest_induced_path(g));
      CHECK(r.longest_induced_cycle == oracle::longest_induced_cycle(g));
      CHECK(r.max_biclique == oracle::max_balanced_biclique(g));
      CHECK(r.degeneracy == oracle::degeneracy(g));
      CHECK(r.chi == oracle::chromatic_number(g));
      CHECK(r.omega == oracle::clique_number(g));
      CHECK(r.tw == oracle::treewidth(g));
      CHECK(r.td == oracle::treedepth(g));
      CHECK(record_contradictions(r).empty());
    }
    // chordal, C4-subgraph-free bucket recomputed directly
    std::size_t expect = 0, maxdeg = 0;
    for (const auto& g : corpus)
      if (oracle::longest_induced_cycle(g) < 4 && !oracle::has_biclique(g, 2, 2)) {
        ++expect;
        maxdeg = std::max(maxdeg, oracle::degeneracy(g));
      }
    CHECK(res.summary.buckets[0].ell == 2);
    CHECK(res.summary.buckets[0].count == expect);
    CHECK(res.summary.buckets[0].max_degeneracy == maxdeg);
    CHECK(res.summary.excluded == 0);
    CHECK(res.summary.contradictions == 0);
  }
  SUBCASE("CSV is fixed across thread counts") {
    const auto corpus = generate("gnp", GenParams{.n = 9, .p = 0.4, .count = 40}, 3);
    const auto serial = to_csv(scan_bounds_serial(corpus, ScanOptions{}).records);
    for (int th : {1, 2, 4}) CHECK(to_csv(scan_bounds(corpus, ScanOptions{.threads = th}).records) == serial);
    CHECK(serial.rfind(std::string(kScanSchemaTag) + "\n", 0) == 0);
    CHECK(line_count(serial) == corpus.size() + 2);
  }
  SUBCASE("budget nulls are flagged, never guessed") {
    const auto g = generate("gnp", GenParams{.n = 40, .p = 0.5}, 1).front();
    const auto r = compute_record(g, 0, SearchBudget{5});
    CHECK_FALSE(r.exhausted.empty());
    CHECK_FALSE(r.chi);
    CHECK_FALSE(r.tw);
    const auto csv = to_csv({r});
    CHECK(csv.find("chi") != std::string::npos);
  }
  SUBCASE("summary JSON and slope") {
    const auto corpus = all_small_upto(5);
    const auto res = scan_bounds(corpus, ScanOptions{.t = 4, .ells = {2, 3, 4}});
    const auto j = to_json(res.summary, ScanOptions{});
    CHECK(j["buckets"].size() == 3);
    CHECK(res.summary.slope_points == 3);
    CHECK(res.summary.slope.has_value());
  }
}
