#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

struct GenParams {
  std::size_t n = 8;
  double p = 0.5;
  std::size_t k = 4;  // planted cycle length / biclique side
  std::size_t count = 1;
};

/// gnp, split, cograph, chordal, interval, tree, planted-cycle,
/// planted-biclique, all-small.
const std::vector<std::string>& family_names();

/// Deterministic for a fixed seed. all-small ignores p, k and count and
/// returns every graph on exactly n vertices up to isomorphism.
std::vector<Graph> generate(std::string_view family, const GenParams& params, std::uint64_t seed);

/// All graphs on exactly n vertices (n <= 9), one per isomorphism class,
/// in increasing canonical-code order.
std::vector<Graph> all_small(std::size_t n);
/// all_small(1) .. all_small(max_n) concatenated.
std::vector<Graph> all_small_upto(std::size_t max_n);

/// Canonical adjacency code for n <= 11; equal iff isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// K_w with every edge subdivided once. Vertices 0..w-1 are the centres.
Graph subdivided_clique(std::size_t w);

}  // namespace chibound
