#include <doctest.h>

#include <random>
#include <sstream>

#include "chibound/graph_io.hpp"
#include "oracles.hpp"

using namespace chibound;

TEST_CASE("graph6 reference strings") {
  // nauty's encodings of small named graphs
  CHECK(to_graph6(oracle::complete(4)) == "C~");
  CHECK(to_graph6(oracle::cycle(5)) == "Dhc");
  CHECK(to_graph6(oracle::edgeless(0)) == "?");
  CHECK(to_graph6(oracle::edgeless(1)) == "@");
  CHECK(parse_graph6("C~") == oracle::complete(4));
  CHECK(parse_graph6(">>graph6<<Dhc") == oracle::cycle(5));
}

TEST_CASE("graph6 round trip including the long forms") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {0, 1, 2, 5, 62, 63, 64, 200}) {
    auto g = oracle::random_graph(n, 0.2, rng);
    const auto s = to_graph6(g);
    if (n >= 63) CHECK(s[0] == '~');
    CHECK(parse_graph6(s) == g);
  }
  // order 258048 needs the 8-byte prefix; the data section is too large to build here
  const std::string prefix = "~~???~??";
  const std::size_t bytes = (258048ULL * 258047ULL / 2 + 5) / 6;
  CHECK_THROWS_WITH_AS(parse_graph6(prefix), ("graph6: expected " + std::to_string(bytes) +
                                               " data bytes, found 0").c_str(), InputError);
  CHECK_THROWS_WITH_AS(parse_graph6("~?~~"), "graph6: expected 1397078 data bytes, found 0", InputError);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), InputError);
  CHECK_THROWS_AS(parse_graph6("C"), InputError);
  CHECK_THROWS_AS(parse_graph6("C~~"), InputError);
  CHECK_THROWS_AS(parse_graph6("C\x7f"), InputError);
  CHECK_THROWS_AS(parse_graph6("Bx"), InputError);  // nonzero padding
  CHECK_THROWS_AS(parse_graph6(":Fa@x^"), InputError);
}

TEST_CASE("dimacs round trip and validation") {
  std::mt19937_64 rng(12);
  auto g = oracle::random_graph(15, 0.3, rng);
  std::istringstream in(to_dimacs(g));
  CHECK(parse_dimacs(in) == g);

  std::istringstream ok("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
  CHECK(parse_dimacs(ok) == oracle::path(3));
  std::istringstream loop("p edge 3 1\ne 2 2\n");
  CHECK_THROWS_AS(parse_dimacs(loop), InputError);
  std::istringstream dup("p edge 3 2\ne 1 2\ne 2 1\n");
  CHECK_THROWS_AS(parse_dimacs(dup), InputError);
  std::istringstream count("p edge 3 3\ne 1 2\n");
  CHECK_THROWS_AS(parse_dimacs(count), InputError);
  std::istringstream range("p edge 3 1\ne 0 2\n");
  CHECK_THROWS_AS(parse_dimacs(range), InputError);
  std::istringstream none("e 1 2\n");
  CHECK_THROWS_AS(parse_dimacs(none), InputError);
}

TEST_CASE("multi-graph graph6 streams") {
  std::istringstream in(">>graph6<<C~\n\nDhc\n");
  auto gs = read_graphs(in, GraphFormat::Graph6);
  REQUIRE(gs.size() == 2);
  CHECK(gs[1] == oracle::cycle(5));
  CHECK_THROWS_AS(parse_format("xml"), InputError);
}
