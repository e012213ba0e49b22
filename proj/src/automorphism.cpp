#include "tpants/automorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace tpants {

AutElement psi(const ExtElement& g) { return {g}; }
AutElement psi(const TElement& f) { return {ext(f)}; }
AutElement aut_compose(const AutElement& a, const AutElement& b) { return {ext_compose(a.g, b.g)}; }
FinTriangulation aut_apply(const AutElement& a, const FinTriangulation& v) { return t_act(a.g, v); }
ExtElement phi_R() { return ext_reflection(); }
int orientation_sign(const AutElement& a) { return a.g.reflected ? 1 : 0; }

std::optional<Arc> LinkIso::image(const Arc& e) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), e,
                             [](const std::pair<Arc, Arc>& p, const Arc& x) { return p.first < x; });
  if (it == pairs.end() || it->first != e) return std::nullopt;
  return it->second;
}

namespace {

struct Links {
  LinkGraph source;
  LinkGraph target;
  /// image[i] is the target index of source vertex i.
  std::vector<std::size_t> image;
};

std::set<std::size_t> as_set(const std::array<std::size_t, 3>& t) { return {t[0], t[1], t[2]}; }

Links check_iso(const LinkIso& iso) {
  auto fail = [](const std::string& why) { throw PreconditionError("invalid link isomorphism: " + why); };
  Links l{link2(iso.source, {iso.source_region}), link2(iso.target, {iso.target_region}), {}};
  if (iso.pairs.size() != l.source.vertices.size() || iso.pairs.size() != l.target.vertices.size())
    fail("vertex counts differ");
  l.image.assign(iso.pairs.size(), 0);
  std::vector<char> hit(iso.pairs.size(), 0);
  for (std::size_t i = 0; i < iso.pairs.size(); ++i) {
    const auto& [a, b] = iso.pairs[i];
    if (i > 0 && !(iso.pairs[i - 1].first < a)) fail("pairs are not sorted by source arc");
    auto s = l.source.index_of(a);
    auto t = l.target.index_of(b);
    if (!s) fail(a.to_string() + " is not a link vertex of the source");
    if (!t) fail(b.to_string() + " is not a link vertex of the target");
    if (hit[*t]++) fail("two arcs map to " + b.to_string());
    if (l.source.frontier[*s] != l.target.frontier[*t]) fail("region sides must map to region sides");
    l.image[*s] = *t;
  }
  std::set<std::set<std::size_t>> targets;
  for (const auto& t : l.target.triangles) targets.insert(as_set(t));
  if (l.source.triangles.size() != l.target.triangles.size()) fail("triangle counts differ");
  for (const auto& t : l.source.triangles)
    if (!targets.count({l.image[t[0]], l.image[t[1]], l.image[t[2]]})) fail("a triangle does not map to a triangle");
  return l;
}

OrientationVerdict classify(const Links& l) {
  std::map<std::set<std::size_t>, std::array<std::size_t, 3>> oriented;
  for (const auto& t : l.target.triangles) oriented[as_set(t)] = t;
  OrientationVerdict out{Orientation::Preserving, {}, std::nullopt};
  for (const auto& t : l.source.triangles) {
    std::array<std::size_t, 3> img{l.image[t[0]], l.image[t[1]], l.image[t[2]]};
    out.signs.push_back(canonical_cycle(img) == oriented.at(as_set(img)) ? 1 : -1);
  }
  bool any_plus = std::count(out.signs.begin(), out.signs.end(), 1) > 0;
  bool any_minus = std::count(out.signs.begin(), out.signs.end(), -1) > 0;
  if (!any_minus) return out;
  if (!any_plus) {
    out.kind = Orientation::Reversing;
    return out;
  }
  out.kind = Orientation::Mixed;
  auto from = [&](std::array<std::size_t, 3> t, std::size_t x) {
    while (t[0] != x) std::rotate(t.begin(), t.begin() + 1, t.end());
    return std::array<Arc, 3>{l.source.vertices[t[0]], l.source.vertices[t[1]], l.source.vertices[t[2]]};
  };
  // Prefer a witness whose flipped arcs all lie inside the region, so the
  // obstructing cells are visible there too.
  std::optional<MixedWitness> fallback;
  for (std::size_t x = 0; x < l.source.vertices.size() && !out.witness; ++x) {
    std::optional<std::size_t> plus, minus;
    for (std::size_t k = 0; k < l.source.triangles.size(); ++k)
      if (as_set(l.source.triangles[k]).count(x)) (out.signs[k] > 0 ? plus : minus) = k;
    if (!plus || !minus) continue;
    MixedWitness w{from(l.source.triangles[*minus], x), from(l.source.triangles[*plus], x)};
    if (!l.source.frontier[*l.source.index_of(w.reversed[1])] &&
        !l.source.frontier[*l.source.index_of(w.preserved[2])])
      out.witness = w;
    else if (!fallback)
      fallback = w;
  }
  if (!out.witness) out.witness = fallback;
  return out;
}

Obstruction obstruction(const LinkIso& iso, const MixedWitness& wit) {
  const Arc& e0 = wit.reversed[0];
  const Arc& e1 = wit.reversed[1];
  const Arc& e4 = wit.preserved[2];
  auto u0 = tri_flip(iso.source, e0);
  auto u5 = tri_flip(u0, e1);
  auto u6 = tri_flip(u0, e4);
  auto i0 = tri_flip(iso.target, *iso.image(e0));
  auto i5 = tri_flip(i0, *iso.image(e1));
  auto i6 = tri_flip(i0, *iso.image(e4));
  auto source_cell = cell_through(u5, u0, u6);
  auto target_cell = cell_through(i5, i0, i6);
  Obstruction ob{wit, u0, u5, u6, i0, i5, i6, std::move(source_cell), std::move(target_cell)};
  return ob;
}

// Point map read off the triangles: the corner shared by two sides of a
// triangle goes to the corner shared by their images.
std::map<CirclePoint, CirclePoint> corner_map(const Links& l) {
  std::map<CirclePoint, CirclePoint> m;
  auto shared = [](const Arc& a, const Arc& b) { return a.has_endpoint(b.lo()) ? b.lo() : b.hi(); };
  for (const auto& t : l.source.triangles)
    for (int k = 0; k < 3; ++k) {
      auto i = t[k], j = t[(k + 1) % 3];
      CirclePoint x = shared(l.source.vertices[i], l.source.vertices[j]);
      CirclePoint y = shared(l.target.vertices[l.image[i]], l.target.vertices[l.image[j]]);
      auto [it, fresh] = m.emplace(x, y);
      if (!fresh && it->second != y)
        throw RegionError("the link isomorphism is not induced by a map of boundary points in this region");
    }
  return m;
}

}  // namespace

void validate_link_iso(const LinkIso& iso) { check_iso(iso); }

LinkIso induced_link_iso(const AutElement& a, const FinTriangulation& v, const Polygon& region) {
  if (!region_encloses({region}, v)) throw RegionError("region does not enclose the support of the vertex");
  LinkIso iso{v, aut_apply(a, v), region, map_polygon(a.g, region), {}};
  for (const auto& e : link2(v, {region}).vertices) iso.pairs.emplace_back(e, map_arc(a.g, e));
  return iso;
}

OrientationVerdict classify_orientation(const LinkIso& iso) { return classify(check_iso(iso)); }

Extension extend_link_iso(const LinkIso& iso) {
  auto links = check_iso(iso);
  auto verdict = classify(links);
  if (verdict.kind == Orientation::Mixed) return obstruction(iso, *verdict.witness);
  if (!iso.source_region.is_anchored() || !iso.target_region.is_anchored())
    throw RegionError("extension needs regions containing the central arc");
  if (!region_encloses({iso.source_region}, iso.source) || !region_encloses({iso.target_region}, iso.target))
    throw RegionError("regions must enclose the supports of both vertices");
  bool reversing = verdict.kind == Orientation::Reversing;
  std::vector<std::pair<Dyadic, Dyadic>> pairs;
  for (const auto& [x, y] : corner_map(links)) pairs.emplace_back((reversing ? reflect(x) : x).value(), y.value());
  ExtElement g;
  try {
    g = {t_from_vertex_map(std::move(pairs)), reversing};
  } catch (const PreconditionError& e) {
    throw RegionError(std::string("the boundary point map is not an element of T: ") + e.what());
  }
  auto check = induced_link_iso(psi(g), iso.source, iso.source_region);
  if (check.pairs != iso.pairs || !(check.target == iso.target) || check.target_region != iso.target_region)
    throw RegionError("the reconstructed element does not induce the given isomorphism");
  return g;
}

std::vector<std::pair<FinTriangulation, FinTriangulation>> first_ball_images(const LinkIso& iso) {
  std::vector<std::pair<FinTriangulation, FinTriangulation>> out;
  for (const auto& e : tri_arcs_in_region(iso.source, iso.source_region)) {
    auto img = iso.image(e);
    if (!img) throw PreconditionError("the isomorphism misses the arc " + e.to_string());
    out.emplace_back(tri_flip(iso.source, e), tri_flip(iso.target, *img));
  }
  return out;
}

Propagation propagate_images(const FinTriangulation& v, const FinTriangulation& w,
                             const std::vector<std::pair<FinTriangulation, FinTriangulation>>& first_ball, int r,
                             const Region& region) {
  auto b = ball(v, r, region);
  std::unordered_map<FinTriangulation, FinTriangulation> img{{v, w}};
  std::unordered_map<FinTriangulation, FinTriangulation> given(first_ball.begin(), first_ball.end());
  Propagation out;
  std::unordered_map<FinTriangulation, std::vector<FinTriangulation>> adj;
  auto nbrs = [&](const FinTriangulation& x) -> const std::vector<FinTriangulation>& {
    auto it = adj.find(x);
    if (it != adj.end()) return it->second;
    std::vector<FinTriangulation> n;
    for (auto& nb : neighbors(x, region)) n.push_back(std::move(nb.vertex));
    return adj.emplace(x, std::move(n)).first->second;
  };
  // Earliest-discovered neighbour one layer closer to v.
  auto parent = [&](const FinTriangulation& x) {
    std::size_t d = *b.distance_to(x), best = SIZE_MAX;
    for (const auto& y : nbrs(x)) {
      auto it = b.index.find(y);
      if (it != b.index.end() && b.distance[it->second] + 1 == d) best = std::min(best, it->second);
    }
    return b.vertices[best];
  };
  auto kind_through = [](const FinTriangulation& a, const FinTriangulation& m,
                         const FinTriangulation& c) -> std::optional<Cell> {
    try {
      return cell_through(a, m, c);
    } catch (const PreconditionError&) {
      return std::nullopt;
    }
  };
  // Every pair of neighbours of x must span a cell of the same kind as their images.
  auto check_vertex = [&](const FinTriangulation& x) {
    const auto& n = nbrs(x);
    for (std::size_t i = 0; i < n.size(); ++i)
      for (std::size_t j = i + 1; j < n.size(); ++j) {
        auto src = cell_through(n[i], x, n[j]);
        auto tgt = kind_through(img.at(n[i]), img.at(x), img.at(n[j]));
        if (!tgt || tgt->kind != src.kind) {
          std::size_t radius = std::max(*b.distance_to(n[i]), *b.distance_to(n[j]));
          out.contradiction = Contradiction{x, n[i], n[j], radius, src.kind,
                                            tgt ? std::optional<CellKind>(tgt->kind) : std::nullopt};
          return false;
        }
      }
    return true;
  };

  std::size_t i = 1;
  for (; i < b.vertices.size() && b.distance[i] == 1; ++i) {
    auto it = given.find(b.vertices[i]);
    if (it == given.end()) throw PreconditionError("no image given for a neighbour of the centre");
    img.emplace(b.vertices[i], it->second);
  }
  std::size_t checked = 0;  // vertices [0, checked) have had their cells checked
  auto check_layer = [&](std::size_t layer) {
    for (; checked < b.vertices.size() && b.distance[checked] == layer; ++checked)
      if (!check_vertex(b.vertices[checked])) return false;
    return true;
  };
  auto finish = [&] {
    for (const auto& x : b.vertices)
      if (img.count(x)) out.images.emplace_back(x, img.at(x));
    return out;
  };
  // Vertices at distance `known` and below have images, so those one layer
  // closer can have all their cells checked.
  std::size_t known = 1;
  if (r >= 1 && !check_layer(0)) return finish();
  for (; i < b.vertices.size(); ++i) {
    const auto& u = b.vertices[i];
    if (b.distance[i] > known + 1) {
      ++known;
      if (!check_layer(known - 1)) return finish();
    }
    auto un = parent(u);
    auto un1 = parent(un);
    auto cell = cell_through(un1, un, u);
    const auto& other = cell.boundary[2];
    auto image_cell = kind_through(img.at(other), img.at(un1), img.at(un));
    if (!image_cell || image_cell->kind != cell.kind) {
      out.contradiction = Contradiction{un1, other, un, b.distance[i], cell.kind,
                                        image_cell ? std::optional<CellKind>(image_cell->kind) : std::nullopt};
      return finish();
    }
    img.emplace(u, image_cell->boundary[image_cell->boundary.size() - 2]);
  }
  if (b.distance.back() > known) check_layer(known);
  return finish();
}

TElement transitive_element(const FinTriangulation& v) {
  if (v.is_base()) return t_identity();
  Polygon p = hull(v.support_triangles());
  auto arcs = tri_arcs_in_region(v, p);
  const Arc& a = arcs.front();
  std::map<CirclePoint, CirclePoint> to_e;
  to_e[a.lo()] = CirclePoint(Dyadic());
  to_e[v.apex(a, true)] = CirclePoint(Dyadic(BigInt(1), 2));
  to_e[a.hi()] = CirclePoint(Dyadic(BigInt(1), 1));
  to_e[v.apex(a, false)] = CirclePoint(Dyadic(BigInt(3), 2));
  // Walk across every diagonal whose endpoints are matched, matching the
  // third vertex beyond it to the E-triangle on the same side.
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& d : arcs) {
      auto lo = to_e.find(d.lo()), hi = to_e.find(d.hi());
      if (lo == to_e.end() || hi == to_e.end()) continue;
      auto s = is_E_arc(Arc(lo->second, hi->second));
      if (!s) throw std::logic_error("triangle matching left the tessellation");
      auto [t1, t2] = e_arc_adjacent_triangles(*s);
      for (bool inner : {true, false}) {
        CirclePoint z = v.apex(d, inner);
        if (to_e.count(z)) continue;
        for (const auto& t : {t1, t2}) {
          CirclePoint c = t.apex();
          for (const auto& x : t.vertices())
            if (x != lo->second && x != hi->second) c = x;
          if (circle_strictly_between(c, lo->second, hi->second) == inner) to_e[z] = c;
        }
        grew = true;
      }
    }
  }
  std::vector<std::pair<Dyadic, Dyadic>> pairs;
  for (const auto& [x, y] : to_e) pairs.emplace_back(y.value(), x.value());
  TElement f = t_from_vertex_map(std::move(pairs));
  if (!(t_act(f, tri_base()) == v)) throw std::logic_error("transitive_element failed its postcondition");
  return f;
}

FinTriangulation witness_vertex(const TElement& f) {
  if (f.is_identity()) throw PreconditionError("the identity moves no vertex");
  auto closed_between = [](const CirclePoint& x, const CirclePoint& p, const CirclePoint& q) {
    return x == p || x == q || circle_strictly_between(x, p, q);
  };
  for (const auto& b : f.source()) {
    CirclePoint q(b);
    if (t_evaluate(f, q) == q) continue;
    for (std::int64_t m = std::max<std::int64_t>(2, q.value().exponent());; ++m) {
      StdInterval i(q.value().over(m), m);
      StdInterval j = i.parent();
      CirclePoint lo(j.lo()), hi(j.hi());
      CirclePoint flo = t_evaluate(f, lo), fhi = t_evaluate(f, hi);
      if (closed_between(flo, lo, hi) || closed_between(fhi, lo, hi) || closed_between(lo, flo, fhi)) continue;
      auto v = tri_flip(tri_base(), e_arc(i));
      if (t_act(f, v) == v) throw std::logic_error("witness square is fixed");
      return v;
    }
  }
  throw std::logic_error("a non-identity element fixes all its breakpoints");
}

LinkIso mirrored_link_iso(const FinTriangulation& v, const Polygon& region, const Arc& e0) {
  auto inner = tri_arcs_in_region(v, region);
  if (!std::binary_search(inner.begin(), inner.end(), e0))
    throw PreconditionError(e0.to_string() + " is not an interior arc of the region");
  std::vector<CirclePoint> side;
  for (const auto& x : region.vertices())
    if (e0.lo() <= x && x <= e0.hi()) side.push_back(x);
  std::map<CirclePoint, CirclePoint> mirror;
  for (std::size_t i = 0; i < side.size(); ++i) mirror[side[i]] = side[side.size() - 1 - i];
  auto image = [&](const Arc& e) {
    auto a = mirror.find(e.lo()), b = mirror.find(e.hi());
    if (a == mirror.end() || b == mirror.end()) return e;
    return Arc(a->second, b->second);
  };
  std::vector<Arc> diagonals;
  for (const auto& e : inner) diagonals.push_back(image(e));
  LinkIso iso{v, tri_from_polygon(region, diagonals), region, region, {}};
  for (const auto& e : link2(v, {region}).vertices) iso.pairs.emplace_back(e, image(e));
  return iso;
}

LinkIso compose_link_iso(const AutElement& a, const LinkIso& iso) {
  LinkIso out{iso.source, aut_apply(a, iso.target), iso.source_region, map_polygon(a.g, iso.target_region), {}};
  for (const auto& [x, y] : iso.pairs) out.pairs.emplace_back(x, map_arc(a.g, y));
  return out;
}

}  // namespace tpants
