#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "chibound/colnum.hpp"
#include "chibound/generators.hpp"
#include "oracles.hpp"

using namespace chibound;

namespace {

LinearOrder order_of(std::vector<Vertex> s) { return LinearOrder(std::move(s)); }

std::size_t brute_opt(const Graph& g, std::size_t r, bool weak) {
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::size_t best = SIZE_MAX;
  do best = std::min(best, weak ? oracle::wcol(g, p, r) : oracle::scol(g, p, r));
  while (std::next_permutation(p.begin(), p.end()));
  return best;
}

}  // namespace

TEST_CASE("scol and wcol under a fixed order") {
  const Graph p3 = oracle::path(3);  // 0-1-2 as a-b-c
  SUBCASE("P3, a < b < c") {
    auto o = order_of({0, 1, 2});
    CHECK(scol(p3, o, kInfiniteRadius) == 2);
    CHECK(wcol(p3, o, kInfiniteRadius) == 3);
  }
  SUBCASE("P3, b < a < c") {
    auto o = order_of({1, 0, 2});
    CHECK(wcol(p3, o, kInfiniteRadius) == 2);
    CHECK(weak_reach_counts(p3, o, kInfiniteRadius) == std::vector<std::size_t>{2, 1, 2});
  }
  SUBCASE("edgeless") {
    const Graph e = oracle::edgeless(5);
    for (std::size_t r : {std::size_t{1}, std::size_t{3}, kInfiniteRadius}) {
      CHECK(scol(e, LinearOrder::identity(5), r) == 1);
      CHECK(wcol(e, LinearOrder::identity(5), r) == 1);
    }
  }
  SUBCASE("random graphs against path enumeration") {
    std::mt19937_64 rng(2);
    for (int it = 0; it < 300; ++it) {
      const std::size_t n = 1 + it % 9;
      const Graph g = oracle::random_graph(n, 0.2 + 0.6 * (it % 5) / 4.0, rng);
      std::vector<Vertex> seq(n);
      std::iota(seq.begin(), seq.end(), 0);
      std::shuffle(seq.begin(), seq.end(), rng);
      const LinearOrder o(seq);
      for (std::size_t r : {std::size_t{1}, std::size_t{2}, std::size_t{3}, n}) {
        const auto s = scol(g, o, r), w = wcol(g, o, r);
        CHECK(s == oracle::scol(g, seq, r));
        CHECK(w == oracle::wcol(g, seq, r));
        CHECK(s == scol_serial(g, o, r));
        CHECK(w == wcol_serial(g, o, r));
        CHECK(s <= w);
      }
    }
  }
  SUBCASE("wcol monotone in r and stable by n") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 40; ++it) {
      const Graph g = oracle::random_graph(12, 0.3, rng);
      const auto o = LinearOrder::identity(12);
      std::size_t prev = 0;
      for (std::size_t r = 1; r <= 14; ++r) {
        const auto w = wcol(g, o, r);
        CHECK(w >= prev);
        prev = w;
      }
      CHECK(wcol(g, o, 12) == wcol(g, o, kInfiniteRadius));
    }
  }
  SUBCASE("bad inputs") {
    CHECK_THROWS_AS(LinearOrder(std::vector<Vertex>{0, 0}), InputError);
    CHECK_THROWS_AS(scol(p3, LinearOrder::identity(2), 1), InputError);
    CHECK_THROWS_AS(scol(p3, LinearOrder::identity(3), 0), InputError);
  }
}

TEST_CASE("optimal orders") {
  SUBCASE("P3") { CHECK(wcol_opt(oracle::path(3), kInfiniteRadius).value == 2); }
  SUBCASE("K_n") {
    for (std::size_t n = 1; n <= 7; ++n)
      for (std::size_t r : {std::size_t{1}, kInfiniteRadius}) {
        CHECK(scol_opt(oracle::complete(n), r).value == n);
        CHECK(wcol_opt(oracle::complete(n), r).value == n);
      }
  }
  SUBCASE("star K_{1,4}") {
    auto r = wcol_opt(oracle::star(4), kInfiniteRadius);
    CHECK(r.value == 2);
    CHECK(r.order.sequence().front() == 0);
  }
  SUBCASE("brute force over all orders") {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 80; ++it) {
      const std::size_t n = 2 + it % 5;
      const Graph g = oracle::random_graph(n, 0.5, rng);
      for (std::size_t r : {std::size_t{1}, std::size_t{2}, n}) {
        const auto s = scol_opt(g, r), w = wcol_opt(g, r);
        CHECK(s.value == brute_opt(g, r, false));
        CHECK(w.value == brute_opt(g, r, true));
        CHECK(scol(g, s.order, r) == s.value);
        CHECK(wcol(g, w.order, r) == w.value);
      }
    }
  }
  SUBCASE("cap") { CHECK_THROWS_AS(scol_opt(oracle::path(10), 1), InputError); }
  SUBCASE("heuristic works beyond the cap") {
    const Graph g = oracle::path(40);
    CHECK(scol_heuristic(g, kInfiniteRadius).value == 2);
    CHECK(wcol_heuristic(g, 1).value == 2);
  }
}

TEST_CASE("treedepth and treewidth") {
  SUBCASE("paths") {
    for (std::size_t n = 1; n <= 14; ++n) {
      const auto td = treedepth_exact(oracle::path(n));
      CHECK(td.value == static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n + 1)))));
      CHECK(check_elimination_forest(oracle::path(n), td.parent) == td.value);
    }
    CHECK(treedepth_exact(oracle::path(7)).value == 3);
  }
  SUBCASE("fixed families") {
    for (std::size_t n = 1; n <= 8; ++n) {
      CHECK(treedepth_exact(oracle::complete(n)).value == n);
      CHECK(treewidth_exact(oracle::complete(n)) == n - 1);
    }
    for (std::size_t k = 1; k <= 8; ++k) CHECK(treedepth_exact(oracle::star(k)).value == 2);
    for (std::size_t n = 3; n <= 12; ++n) CHECK(treewidth_exact(oracle::cycle(n)) == 2);
    CHECK(treewidth_exact(oracle::complete(5)) == 4);
    for (std::size_t n = 2; n <= 14; ++n) CHECK(treewidth_exact(generate("tree", GenParams{.n = n}, n).front()) == 1);
    CHECK(treedepth_exact(oracle::cycle(5)).value == oracle::treedepth(oracle::cycle(5)));
    CHECK(treedepth_exact(oracle::cycle(5)).value == 4);
  }
  SUBCASE("random graphs against the oracles") {
    std::mt19937_64 rng(6);
    for (int it = 0; it < 150; ++it) {
      const std::size_t n = 1 + it % 8;
      const Graph g = oracle::random_graph(n, 0.2 + 0.6 * (it % 4) / 3.0, rng);
      const auto td = treedepth_exact(g);
      CHECK(td.value == oracle::treedepth(g));
      CHECK(check_elimination_forest(g, td.parent) == td.value);
      CHECK(treewidth_exact(g) == oracle::treewidth(g));
    }
  }
  SUBCASE("forest check rejects a bad forest") {
    const Graph g = oracle::path(3);
    std::vector<std::int64_t> flat{-1, -1, -1};
    CHECK_FALSE(check_elimination_forest(g, flat));
    std::vector<std::int64_t> loop{1, 0, 0};
    CHECK_FALSE(check_elimination_forest(g, loop));
  }
  SUBCASE("caps") {
    CHECK_THROWS_AS(treedepth_exact(oracle::path(15)), InputError);
    CHECK_THROWS_AS(treewidth_exact(oracle::path(15)), InputError);
  }
}

TEST_CASE("verify_identities") {
  SUBCASE("all graphs up to 5 vertices") {
    for (const auto& g : all_small_upto(5)) {
      const auto rep = verify_identities(g, 4);
      CHECK(rep.all_hold());
      CHECK(rep.tw + 1 == rep.scol_inf);
      CHECK(rep.td == rep.wcol_inf);
    }
  }
  SUBCASE("P7, t = 8") {
    const auto rep = verify_identities(oracle::path(7), 8);
    CHECK(rep.td == 3);
    CHECK(rep.tw == 1);
    CHECK(rep.pt_free);
    CHECK(rep.all_hold());
    const auto j = to_json(rep);
    CHECK(j["td"] == 3);
    CHECK(j["checks"].size() == 6);
  }
  SUBCASE("C5, t = 5") {
    const auto rep = verify_identities(oracle::cycle(5), 5);
    CHECK(rep.pt_free);
    CHECK(rep.td == 4);  // C5 minus a vertex is P4, of treedepth 3
    CHECK(rep.td <= 81);
    CHECK(rep.tw == 2);
    CHECK(rep.all_hold());
  }
  SUBCASE("extra orders are checked") {
    const Graph g = oracle::petersen();
    CHECK_THROWS_AS(verify_identities(g, 4), InputError);  // beyond the order-search cap
    const Graph c = oracle::cycle(6);
    const std::vector<LinearOrder> extra{order_of({5, 4, 3, 2, 1, 0})};
    CHECK(verify_identities(c, 0, extra).all_hold());
  }
}
