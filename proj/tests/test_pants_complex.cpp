#include "doctest.h"
#include "support/generators.hpp"
#include "tpants/pants_complex.hpp"

#include <set>

using namespace tpants;
using tpants::testing::random_anchored_polygon;
using tpants::testing::random_vertex;

namespace {

Dyadic d(const char* s) { return Dyadic::parse(s); }
CirclePoint cp(const char* s) { return CirclePoint(d(s)); }
Arc arc(const char* p, const char* q) { return Arc(d(p), d(q)); }

Polygon poly(std::initializer_list<const char*> pts) {
  std::vector<CirclePoint> v;
  for (auto p : pts) v.push_back(cp(p));
  return Polygon::from_vertices(v);
}

// Oracle: two arcs bound a common triangle iff they appear together among
// the sides of a triangle listed for the polygon.
bool share_triangle(const std::vector<Triangle>& tris, const Arc& x, const Arc& y) {
  for (const auto& t : tris) {
    std::set<Arc> s{Arc(t[0], t[1]), Arc(t[1], t[2]), Arc(t[0], t[2])};
    if (s.count(x) && s.count(y)) return true;
  }
  return false;
}

std::set<std::size_t> as_set(const std::array<std::size_t, 3>& t) { return {t[0], t[1], t[2]}; }

}  // namespace

TEST_CASE("adjacency of arcs") {
  auto e = tri_base();
  CHECK(arcs_adjacent(e, arc("0", "1/2"), arc("0", "1/4")));
  CHECK_FALSE(arcs_adjacent(e, arc("0", "1/4"), arc("1/2", "3/4")));
  CHECK_THROWS_AS(arcs_adjacent(e, arc("0", "1/2"), arc("0", "1/2")), PreconditionError);
  CHECK_THROWS_AS(arcs_adjacent(e, arc("0", "1/2"), arc("1/4", "3/4")), PreconditionError);
}

TEST_CASE("neighbours") {
  auto e = tri_base();
  auto quad = Polygon::level(2);
  auto n = neighbors(e, {quad});
  REQUIRE(n.size() == 1);
  CHECK(n[0].vertex == tri_flip(e, arc("0", "1/2")));
  std::mt19937_64 rng(61);
  for (int i = 0; i < 20; ++i) {
    auto p = random_anchored_polygon(rng, 4 + rng() % 9);
    auto v = random_vertex(rng, {p}, 6);
    auto nb = neighbors(v, {p});
    CHECK(nb.size() == p.size() - 3);
    for (const auto& x : nb) CHECK(tri_arc_difference(v, x.vertex) == 1);
  }
}

TEST_CASE("cells") {
  auto e = tri_base();
  auto u = tri_flip(e, arc("0", "1/2"));
  auto w = tri_flip(e, arc("0", "1/4"));
  auto c = cell_through(u, e, w);
  CHECK(c.kind == CellKind::Pentagon);
  REQUIRE(c.boundary.size() == 5);
  CHECK(c.boundary[1] == u);
  CHECK(c.boundary[4] == w);
  std::set<std::size_t> distinct;
  for (const auto& x : c.boundary) distinct.insert(x.hash());
  CHECK(distinct.size() == 5);

  auto s = cell_through(tri_flip(e, arc("0", "1/4")), e, tri_flip(e, arc("1/2", "3/4")));
  CHECK(s.kind == CellKind::Square);
  CHECK(s.boundary.size() == 4);

  auto back = cell_through(w, e, u);
  std::vector<FinTriangulation> reversed{c.boundary[0]};
  for (std::size_t i = c.boundary.size() - 1; i > 0; --i) reversed.push_back(c.boundary[i]);
  CHECK(back.boundary == reversed);

  CHECK_THROWS_AS(cell_through(u, e, u), PreconditionError);
  CHECK_THROWS_AS(cell_through(tri_flip(u, arc("0", "1/4")), e, w), PreconditionError);
}

TEST_CASE("cell kind follows triangle sharing; boundaries close") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 15; ++i) {
    auto p = random_anchored_polygon(rng, 6 + rng() % 5);
    auto v = random_vertex(rng, {p}, 10);
    auto tris = tri_triangles_in(v, p);
    auto arcs = tri_arcs_in_region(v, p);
    for (std::size_t a = 0; a < arcs.size(); ++a)
      for (std::size_t b = a + 1; b < arcs.size(); ++b) {
        auto c = cell_at(v, arcs[a], arcs[b]);
        bool shared = share_triangle(tris, arcs[a], arcs[b]);
        CHECK((c.kind == CellKind::Pentagon) == shared);
        CHECK(c.boundary.size() == (shared ? 5u : 4u));
        for (std::size_t k = 0; k < c.boundary.size(); ++k)
          CHECK(tri_arc_difference(c.boundary[k], c.boundary[(k + 1) % c.boundary.size()]) == 1);
      }
  }
}

TEST_CASE("balls and distances") {
  auto e = tri_base();
  auto oct = Polygon::level(3);
  auto b = ball(e, 0, {oct});
  CHECK(b.vertices.size() == 1);
  CHECK_THROWS_AS(ball(e, -1, {oct}), PreconditionError);
  auto b1 = ball(e, 1, {oct});
  CHECK(b1.vertices.size() == 6);

  auto dist0 = distance(e, e, {oct});
  CHECK(dist0.value == 0);
  CHECK(dist0.flag == DistanceFlag::Exact);
  auto f = tri_flip(e, arc("0", "1/2"));
  CHECK(distance(e, f, {oct}).value == 1);
  auto g = tri_flip(f, arc("0", "1/4"));
  auto dg = distance(e, g, {oct});
  CHECK(dg.value == 2);
  CHECK(dg.flag == DistanceFlag::Exact);
  CHECK(dg.path.size() == 3);

  // Octagon flip graph: Catalan(6) = 132 vertices; the full ball has them all.
  auto all = ball(e, 100, {oct});
  CHECK(all.vertices.size() == 132);
  std::mt19937_64 rng(71);
  for (int i = 0; i < 30; ++i) {
    auto& x = all.vertices[rng() % all.vertices.size()];
    auto& y = all.vertices[rng() % all.vertices.size()];
    auto& z = all.vertices[rng() % all.vertices.size()];
    auto dxy = distance(x, y, {oct}).value;
    CHECK(dxy == distance(y, x, {oct}).value);
    CHECK(dxy >= tri_arc_difference(x, y));
    CHECK(distance(x, z, {oct}).value <= dxy + distance(y, z, {oct}).value);
    CHECK(ball(x, 3, {oct}).distance_to(y).has_value() == ball(y, 3, {oct}).distance_to(x).has_value());
  }
  CHECK_THROWS_AS(distance(e, g, {Polygon::level(2)}), RegionError);
}

TEST_CASE("links") {
  auto e = tri_base();
  auto hexagon = poly({"0", "1/8", "1/4", "1/2", "3/4", "7/8"});
  auto l = link2(e, {hexagon});
  std::size_t interior = std::count(l.frontier.begin(), l.frontier.end(), false);
  CHECK(interior == 3);
  CHECK(l.vertices.size() == 9);
  CHECK(l.triangles.size() == 4);
  CHECK(link1(e, {hexagon}).triangles.empty());
  CHECK(link1(e, {hexagon}).edges == l.edges);

  std::mt19937_64 rng(73);
  for (int i = 0; i < 20; ++i) {
    auto p = random_anchored_polygon(rng, 5 + rng() % 6);
    auto v = random_vertex(rng, {p}, 8);
    auto g = link2(v, {p});
    CHECK(g.triangles.size() == p.size() - 2);
    std::vector<int> count(g.vertices.size(), 0);
    for (const auto& t : g.triangles)
      for (auto x : t) ++count[x];
    for (std::size_t k = 0; k < g.vertices.size(); ++k) CHECK(count[k] == (g.frontier[k] ? 1 : 2));
    // Orientation: each triangle's sides go counterclockwise.
    for (const auto& t : g.triangles) {
      std::set<CirclePoint> pts;
      for (auto x : t) {
        pts.insert(g.vertices[x].lo());
        pts.insert(g.vertices[x].hi());
      }
      std::vector<CirclePoint> s(pts.begin(), pts.end());
      REQUIRE(s.size() == 3);
      std::array<std::size_t, 3> expect{*g.index_of(Arc(s[0], s[1])), *g.index_of(Arc(s[1], s[2])),
                                        *g.index_of(Arc(s[2], s[0]))};
      CHECK(canonical_cycle(expect) == t);
    }
  }
}

TEST_CASE("flipping re-pairs exactly the two triangles at the arc") {
  auto e = tri_base();
  auto oct = Polygon::level(3);
  auto lf = link_after_flip(e, arc("0", "1/2"), {oct});
  CHECK(lf.created == arc("1/4", "3/4"));

  std::mt19937_64 rng(79);
  for (int i = 0; i < 20; ++i) {
    auto p = random_anchored_polygon(rng, 5 + rng() % 6);
    auto v = random_vertex(rng, {p}, 8);
    for (const auto& a : tri_arcs_in_region(v, p)) {
      auto r = link_after_flip(v, a, {p});
      std::size_t x = *r.before.index_of(a);
      std::vector<std::array<std::size_t, 3>> at_before, at_after, rest_before, rest_after;
      for (const auto& t : r.before.triangles) (as_set(t).count(x) ? at_before : rest_before).push_back(t);
      for (const auto& t : r.after.triangles) (as_set(t).count(x) ? at_after : rest_after).push_back(t);
      CHECK(rest_before == rest_after);
      REQUIRE(at_before.size() == 2);
      REQUIRE(at_after.size() == 2);
      // (x, u1, u2) and (x, u3, u4) become (x, u1, u4) and (x, u2, u3).
      auto from_x = [&](std::array<std::size_t, 3> t) {
        while (t[0] != x) std::rotate(t.begin(), t.begin() + 1, t.end());
        return t;
      };
      auto d1 = from_x(at_before[0]), d2 = from_x(at_before[1]);
      std::set<std::set<std::size_t>> expected{{x, d1[1], d2[2]}, {x, d1[2], d2[1]}};
      std::set<std::set<std::size_t>> got{as_set(at_after[0]), as_set(at_after[1])};
      CHECK(got == expected);
      // Flipping back restores the original triangles (compared by arcs,
      // since the second call labels vertices by the arcs of the flipped vertex).
      auto twice = link_after_flip(tri_flip(v, a), r.created, {p});
      auto by_arcs = [](const LinkGraph& g, const Arc& rename_from, const Arc& rename_to) {
        std::set<std::array<Arc, 3>> out;
        auto name = [&](std::size_t k) { return g.vertices[k] == rename_from ? rename_to : g.vertices[k]; };
        for (const auto& t : g.triangles) {
          std::array<Arc, 3> arcs{name(t[0]), name(t[1]), name(t[2])};
          std::rotate(arcs.begin(), std::min_element(arcs.begin(), arcs.end()), arcs.end());
          out.insert(arcs);
        }
        return out;
      };
      CHECK(by_arcs(twice.after, r.created, a) == by_arcs(r.before, a, a));
    }
  }
}

TEST_CASE("non-hyperbolicity instances") {
  for (int n = 1; n <= 4; ++n) {
    auto inst = nonhyp_instance(n);
    CHECK(tri_arc_difference(inst.u, inst.v) == static_cast<std::size_t>(n));
    CHECK(tri_arc_difference(inst.v, inst.w) == static_cast<std::size_t>(n));
    CHECK(tri_arc_difference(inst.u, inst.w) == static_cast<std::size_t>(2 * n));
    CHECK(inst.path_uw.size() == static_cast<std::size_t>(2 * n + 1));
    CHECK(inst.path_uw.back() == inst.w);
    for (std::size_t i = 0; i < inst.path_uw.size(); ++i) {
      CHECK(tri_arc_difference(inst.path_uw[i], inst.u) == i);
      CHECK(tri_arc_difference(inst.path_uw[i], inst.w) == 2 * n - i);
    }
    CHECK(thinness_certificate(inst) == static_cast<std::size_t>(n));
    CHECK(inst.squares.size() == static_cast<std::size_t>(2 * n));
  }
  CHECK(thinness_certificate(1) == 1);
  CHECK(thinness_certificate(2) == 2);
  CHECK(thinness_certificate(4) == 4);
  auto three = nonhyp_instance(3);
  CHECK(tri_arc_difference(three.u, three.w) == 6);
  CHECK_THROWS_AS(nonhyp_instance(0), PreconditionError);
}
