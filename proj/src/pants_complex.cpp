#include "tpants/pants_complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace tpants {

bool arcs_adjacent(const FinTriangulation& v, const Arc& e1, const Arc& e2) {
  if (e1 == e2) throw PreconditionError("arcs_adjacent needs two distinct arcs");
  for (const auto* e : {&e1, &e2})
    if (!v.contains(*e)) throw PreconditionError(e->to_string() + " is not an arc of the triangulation");
  for (bool inner : {true, false}) {
    CirclePoint x = v.apex(e1, inner);
    if (e2 == Arc(e1.lo(), x) || e2 == Arc(x, e1.hi())) return true;
  }
  return false;
}

std::vector<Neighbor> neighbors(const FinTriangulation& v, const Region& region) {
  std::vector<Neighbor> out;
  for (const auto& e : tri_arcs_in_region(v, region)) out.push_back({e, tri_flip(v, e)});
  return out;
}

Arc flipped_arc(const FinTriangulation& v, const FinTriangulation& u) {
  auto diff = tri_arcs_not_in(v, u);
  if (diff.size() != 1 || tri_arc_difference(u, v) != 1 || !(tri_flip(v, diff[0]) == u))
    throw PreconditionError("the two vertices are not joined by a flip");
  return diff[0];
}

Cell cell_at(const FinTriangulation& v, const Arc& e1, const Arc& e2) {
  CellKind kind = arcs_adjacent(v, e1, e2) ? CellKind::Pentagon : CellKind::Square;
  std::size_t expected = kind == CellKind::Square ? 4 : 5;
  Cell cell{kind, v, {e1, e2}, {v}};
  // Flipping alternately along the two current arcs walks once around the cell.
  FinTriangulation cur = v;
  Arc to_flip = e1, other = e2;
  for (std::size_t step = 1; step <= expected; ++step) {
    auto [next, created] = tri_flip_detailed(cur, to_flip);
    if (next == v) {
      if (step != expected) break;
      return cell;
    }
    cell.boundary.push_back(next);
    cur = next;
    to_flip = other;
    other = created;
  }
  throw std::logic_error("cell boundary did not close after the expected number of flips");
}

Cell cell_through(const FinTriangulation& u, const FinTriangulation& v, const FinTriangulation& w) {
  if (u == w) throw PreconditionError("cell_through needs u != w");
  return cell_at(v, flipped_arc(v, u), flipped_arc(v, w));
}

std::optional<std::size_t> Ball::distance_to(const FinTriangulation& w) const {
  auto it = index.find(w);
  if (it == index.end()) return std::nullopt;
  return distance[it->second];
}

Polygon default_region(const FinTriangulation& v) { return hull(v.support_triangles()).expanded(); }

Ball ball(const FinTriangulation& v, int r, const Region& region) {
  if (r < 0) throw PreconditionError("ball radius must be non-negative");
  if (!region_encloses(region, v)) throw RegionError("region does not enclose the support of the centre");
  Ball b;
  b.vertices.push_back(v);
  b.distance.push_back(0);
  b.index.emplace(v, 0);
  for (std::size_t head = 0; head < b.vertices.size(); ++head) {
    if (b.distance[head] == static_cast<std::size_t>(r)) break;
    auto cur = b.vertices[head];
    auto d = b.distance[head];
    for (auto& nb : neighbors(cur, region)) {
      if (b.index.count(nb.vertex)) continue;
      b.index.emplace(nb.vertex, b.vertices.size());
      b.vertices.push_back(std::move(nb.vertex));
      b.distance.push_back(d + 1);
    }
  }
  return b;
}

DistanceResult distance(const FinTriangulation& v, const FinTriangulation& w, const Region& region) {
  if (!region_encloses(region, v) || !region_encloses(region, w))
    throw RegionError("region does not enclose both supports");
  std::size_t bound = tri_arc_difference(v, w);
  std::vector<FinTriangulation> order{v};
  std::vector<std::size_t> parent{0}, dist{0};
  std::unordered_map<FinTriangulation, std::size_t> seen{{v, 0}};
  std::optional<std::size_t> found;
  if (v == w) found = 0;
  for (std::size_t head = 0; !found && head < order.size(); ++head) {
    auto cur = order[head];
    for (auto& nb : neighbors(cur, region)) {
      if (seen.count(nb.vertex)) continue;
      std::size_t id = order.size();
      seen.emplace(nb.vertex, id);
      bool hit = nb.vertex == w;
      order.push_back(std::move(nb.vertex));
      parent.push_back(head);
      dist.push_back(dist[head] + 1);
      if (hit) {
        found = id;
        break;
      }
    }
  }
  if (!found) throw RegionError("target not reachable inside the region");
  std::vector<FinTriangulation> path;
  for (std::size_t i = *found;; i = parent[i]) {
    path.push_back(order[i]);
    if (i == 0) break;
  }
  std::reverse(path.begin(), path.end());
  std::size_t value = dist[*found];
  return {value, bound, value == bound ? DistanceFlag::Exact : DistanceFlag::RegionExact, std::move(path)};
}

std::optional<std::size_t> LinkGraph::index_of(const Arc& e) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), e);
  if (it == vertices.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::array<std::size_t, 3> canonical_cycle(std::array<std::size_t, 3> t) {
  auto m = std::min_element(t.begin(), t.end());
  std::rotate(t.begin(), m, t.end());
  return t;
}

LinkGraph link2(const FinTriangulation& v, const Region& region) {
  validate_region(region);
  LinkGraph g;
  std::map<Arc, int> side_count;
  std::vector<Triangle> tris;
  g.vertices = tri_arcs_in_region(v, region);
  for (const auto& p : region) {
    for (const auto& s : p.sides()) {
      g.vertices.push_back(s);
      ++side_count[s];
    }
    auto t = tri_triangles_in(v, p);
    tris.insert(tris.end(), t.begin(), t.end());
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  for (const auto& e : g.vertices) {
    auto it = side_count.find(e);
    g.frontier.push_back(it != side_count.end() && it->second == 1);
  }
  for (const auto& t : tris) {
    std::array<std::size_t, 3> idx{*g.index_of(Arc(t[0], t[1])), *g.index_of(Arc(t[1], t[2])),
                                   *g.index_of(Arc(t[2], t[0]))};
    g.triangles.push_back(canonical_cycle(idx));
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) g.edges.push_back({std::min(idx[a], idx[b]), std::max(idx[a], idx[b])});
  }
  std::sort(g.triangles.begin(), g.triangles.end());
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

LinkGraph link1(const FinTriangulation& v, const Region& region) {
  auto g = link2(v, region);
  g.triangles.clear();
  return g;
}

LinkFlip link_after_flip(const FinTriangulation& v, const Arc& e, const Region& region) {
  auto before = link2(v, region);
  auto at = before.index_of(e);
  if (!at || before.frontier[*at]) throw PreconditionError("the flipped arc must lie inside the region");
  auto [w, created] = tri_flip_detailed(v, e);
  auto raw = link2(w, region);
  std::vector<std::size_t> relabel(raw.vertices.size());
  for (std::size_t i = 0; i < raw.vertices.size(); ++i)
    relabel[i] = raw.vertices[i] == created ? *at : *before.index_of(raw.vertices[i]);
  LinkGraph after;
  after.vertices = before.vertices;
  after.frontier = before.frontier;
  for (const auto& t : raw.triangles) after.triangles.push_back(canonical_cycle({relabel[t[0]], relabel[t[1]], relabel[t[2]]}));
  for (const auto& ed : raw.edges)
    after.edges.push_back({std::min(relabel[ed[0]], relabel[ed[1]]), std::max(relabel[ed[0]], relabel[ed[1]])});
  std::sort(after.triangles.begin(), after.triangles.end());
  std::sort(after.edges.begin(), after.edges.end());
  return {std::move(before), std::move(after), e, created};
}

NonhypInstance nonhyp_instance(int n) {
  if (n < 1) throw PreconditionError("nonhyp_instance needs n >= 1");
  NonhypInstance inst;
  inst.n = n;
  int m = 2;
  while ((1L << (m - 1)) < 2L * n) ++m;
  inst.level = m;
  for (int i = 0; i < 2 * n; ++i) inst.squares.push_back(e_arc(StdInterval(2 * i, m)));

  auto walk = [](FinTriangulation start, const std::vector<Arc>& arcs) {
    std::vector<FinTriangulation> path{start};
    for (const auto& a : arcs) path.push_back(tri_flip(path.back(), a));
    return path;
  };
  std::vector<Arc> first(inst.squares.begin(), inst.squares.begin() + n);
  std::vector<Arc> second(inst.squares.begin() + n, inst.squares.end());
  std::vector<Arc> descending(inst.squares.rbegin(), inst.squares.rend());

  inst.u = tri_base();
  inst.path_uv = walk(inst.u, first);
  inst.v = inst.path_uv.back();
  inst.path_vw = walk(inst.v, second);
  inst.w = inst.path_vw.back();
  inst.path_uw = walk(inst.u, descending);
  inst.p = inst.path_uw[n];
  return inst;
}

std::size_t thinness_certificate(const NonhypInstance& inst) {
  std::size_t best = SIZE_MAX;
  for (const auto* leg : {&inst.path_uv, &inst.path_vw})
    for (const auto& x : *leg) best = std::min(best, tri_arc_difference(inst.p, x));
  return best;
}

std::size_t thinness_certificate(int n) { return thinness_certificate(nonhyp_instance(n)); }

}  // namespace tpants
