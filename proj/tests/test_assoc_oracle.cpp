#include "doctest.h"
#include "tpants/assoc_oracle.hpp"
#include "tpants/pants_complex.hpp"

#include <map>
#include <set>

using namespace tpants;

namespace {

std::size_t catalan(int m) {
  std::size_t c = 1;
  for (int i = 0; i < m; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

bool cross(std::pair<int, int> x, std::pair<int, int> y) {
  auto in = [](int c, std::pair<int, int> d) { return d.first < c && c < d.second; };
  return in(y.first, x) != in(y.second, x) && y.first != x.first && y.first != x.second &&
         y.second != x.first && y.second != x.second;
}

std::vector<std::vector<std::size_t>> adjacency(const OracleGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertices.size());
  for (auto [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  return adj;
}

std::vector<std::size_t> bfs(const OracleGraph& g, std::size_t from) {
  auto adj = adjacency(g);
  std::vector<std::size_t> dist(g.vertices.size(), SIZE_MAX);
  std::vector<std::size_t> queue{from};
  dist[from] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (auto j : adj[queue[h]])
      if (dist[j] == SIZE_MAX) {
        dist[j] = dist[queue[h]] + 1;
        queue.push_back(j);
      }
  return dist;
}

// Rank over GF(2) of a set of edge-indicator vectors.
std::size_t gf2_rank(std::vector<std::vector<bool>> rows) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& r) { return r[c]; });
    if (pivot == rows.end()) continue;
    std::swap(*pivot, rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] = rows[r][k] != rows[rank][k];
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("enumeration counts and validity") {
  CHECK(enumerate_triangulations(4).size() == 2);
  CHECK(enumerate_triangulations(5).size() == 5);
  CHECK(enumerate_triangulations(6).size() == 14);
  for (int n = 3; n <= 10; ++n) {
    auto all = enumerate_triangulations(n);
    CHECK(all.size() == catalan(n - 2));
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    for (const auto& t : all) {
      REQUIRE(t.diagonals.size() == static_cast<std::size_t>(n - 3));
      for (std::size_t i = 0; i < t.diagonals.size(); ++i)
        for (std::size_t j = i + 1; j < t.diagonals.size(); ++j) CHECK_FALSE(cross(t.diagonals[i], t.diagonals[j]));
    }
  }
  CHECK_THROWS_AS(enumerate_triangulations(2), PreconditionError);
  CHECK_THROWS_AS(enumerate_triangulations(13), PreconditionError);
}

TEST_CASE("oracle flip graphs") {
  auto g4 = oracle_flip_graph(4);
  CHECK(g4.edges.size() == 1);
  auto g5 = oracle_flip_graph(5);
  CHECK(g5.edges.size() == 5);
  auto adj5 = adjacency(g5);
  for (const auto& a : adj5) CHECK(a.size() == 2);
  auto g6 = oracle_flip_graph(6);
  CHECK(g6.vertices.size() == 14);
  CHECK(g6.edges.size() == 21);
  for (int n = 4; n <= 9; ++n) {
    auto g = oracle_flip_graph(n);
    for (const auto& a : adjacency(g)) CHECK(a.size() == static_cast<std::size_t>(n - 3));
    auto d = bfs(g, 0);
    CHECK(std::find(d.begin(), d.end(), SIZE_MAX) == d.end());
  }
}

TEST_CASE("oracle distances") {
  auto g5 = oracle_flip_graph(5);
  CHECK(oracle_distance(g5.vertices[0], g5.vertices[0]) == 0);
  auto d5 = bfs(g5, 0);
  for (std::size_t i = 0; i < 5; ++i) CHECK(oracle_distance(g5.vertices[0], g5.vertices[i]) == d5[i]);
  CHECK(*std::max_element(d5.begin(), d5.end()) == 2);
  auto g6 = oracle_flip_graph(6);
  std::size_t diameter = 0;
  for (std::size_t i = 0; i < g6.vertices.size(); ++i) {
    auto d = bfs(g6, i);
    diameter = std::max(diameter, *std::max_element(d.begin(), d.end()));
  }
  CHECK(diameter == 4);
  CHECK_THROWS_AS(oracle_distance(g5.vertices[0], g6.vertices[0]), PreconditionError);
}

TEST_CASE("embedding E into a region") {
  auto emb = embed_region(Polygon::level(3));
  auto t = emb.to_poly(tri_base());
  CHECK(t == PolyTriangulation{8, {{0, 2}, {0, 4}, {0, 6}, {2, 4}, {4, 6}}});
  CHECK(emb.from_poly(t) == tri_base());
}

TEST_CASE("flips commute with the embedding on a hexagon") {
  std::vector<CirclePoint> pts;
  for (const char* x : {"0", "1/8", "1/4", "1/2", "5/8", "3/4"}) pts.emplace_back(Dyadic::parse(x));
  auto hex = Polygon::from_vertices(pts);
  REQUIRE(hex.size() == 6);
  auto emb = embed_region(hex);
  for (const auto& t : enumerate_triangulations(6)) {
    auto v = emb.from_poly(t);
    CHECK(emb.to_poly(v) == t);
    for (const auto& d : t.diagonals) CHECK(emb.to_poly(tri_flip(v, emb.to_arc(d))) == oracle_flip(t, d));
  }
}

TEST_CASE("region complex is isomorphic to the associahedron") {
  for (int m : {2, 3}) {
    std::vector<Polygon> regions{Polygon::level(m)};
    for (std::size_t k = Polygon::level(m).size() + 1; k <= 8; ++k) {
      auto v = regions.back().vertices();
      v.emplace_back(regions.back().outer_interval(0).midpoint());
      regions.push_back(Polygon::from_vertices(v));
    }
    for (const auto& p : regions) {
      int k = static_cast<int>(p.size());
      auto emb = embed_region(p);
      auto g = oracle_flip_graph(k);
      auto b = ball(tri_base(), 100, {p});
      REQUIRE(b.vertices.size() == catalan(k - 2));
      auto d = bfs(g, *g.index_of(emb.to_poly(tri_base())));
      std::set<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t i = 0; i < b.vertices.size(); ++i) {
        auto at = g.index_of(emb.to_poly(b.vertices[i]));
        REQUIRE(at);
        CHECK(d[*at] == b.distance[i]);
        for (const auto& nb : neighbors(b.vertices[i], {p})) {
          auto j = *g.index_of(emb.to_poly(nb.vertex));
          edges.insert({std::min(*at, j), std::max(*at, j)});
        }
      }
      CHECK(edges == std::set<std::pair<std::size_t, std::size_t>>(g.edges.begin(), g.edges.end()));
    }
  }
}

TEST_CASE("cells span the cycle space") {
  for (int k : {5, 6, 7}) {
    auto p = Polygon::level(2);
    while (static_cast<int>(p.size()) < k) {
      auto v = p.vertices();
      v.emplace_back(p.outer_interval(p.size() - 1).midpoint());
      p = Polygon::from_vertices(v);
    }
    auto emb = embed_region(p);
    auto g = oracle_flip_graph(k);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_id;
    for (std::size_t i = 0; i < g.edges.size(); ++i) edge_id[g.edges[i]] = i;
    std::set<std::set<std::size_t>> cells;
    std::vector<std::vector<bool>> rows;
    for (const auto& t : g.vertices) {
      auto v = emb.from_poly(t);
      auto arcs = tri_arcs_in_region(v, p);
      for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
          auto c = cell_at(v, arcs[i], arcs[j]);
          std::vector<std::size_t> ids;
          for (const auto& u : c.boundary) ids.push_back(*g.index_of(emb.to_poly(u)));
          if (!cells.insert({ids.begin(), ids.end()}).second) continue;
          std::vector<bool> row(g.edges.size(), false);
          for (std::size_t s = 0; s < ids.size(); ++s) {
            auto a = ids[s], b = ids[(s + 1) % ids.size()];
            row[edge_id.at({std::min(a, b), std::max(a, b)})] = true;
          }
          rows.push_back(std::move(row));
        }
    }
    std::size_t cycle_rank = g.edges.size() - g.vertices.size() + 1;
    CHECK(gf2_rank(rows) == cycle_rank);
    if (k == 5) CHECK(cells.size() == 1);
    if (k == 6) CHECK(cells.size() == cycle_rank + 1);
  }
}
