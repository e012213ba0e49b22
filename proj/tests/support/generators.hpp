#pragma once

// Seeded random inputs shared by the unit and acceptance suites.

#include "tpants/dyadic.hpp"
#include "tpants/triangulation.hpp"

#include <random>
#include <string>

namespace tpants::testing {

inline std::string random_word(std::mt19937_64& rng, std::size_t max_length) {
  static const char letters[] = {'a', 'A', 'b', 'B'};
  std::size_t len = rng() % (max_length + 1);
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(letters[rng() % 4]);
  return w;
}

inline CirclePoint random_point(std::mt19937_64& rng, int max_level = 8) {
  int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_level));
  return CirclePoint(Dyadic(static_cast<long long>(rng() % (1ULL << n)), n));
}

/// An anchored polygon with k vertices grown from the central quadrilateral
/// by adding the midpoint of a random outer gap.
inline Polygon random_anchored_polygon(std::mt19937_64& rng, std::size_t k) {
  Polygon p = Polygon::level(2);
  while (p.size() < k) {
    std::size_t i = rng() % p.size();
    auto v = p.vertices();
    v.emplace_back(p.outer_interval(i).midpoint());
    p = Polygon::from_vertices(std::move(v));
  }
  return p;
}

/// A random walk of flips from E that stays inside the region.
inline FinTriangulation random_vertex(std::mt19937_64& rng, const Region& region, int steps) {
  FinTriangulation v;
  for (int s = 0; s < steps; ++s) {
    auto arcs = tri_arcs_in_region(v, region);
    v = tri_flip(v, arcs[rng() % arcs.size()]);
  }
  return v;
}

}  // namespace tpants::testing
