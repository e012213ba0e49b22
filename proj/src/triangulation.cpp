#include "tpants/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tpants {

namespace {

// [lo, hi] as a standard interval, if it is one; hi may be 1.
std::optional<StdInterval> as_std_interval(const Dyadic& lo, const Dyadic& hi) {
  Dyadic len = hi - lo;
  if (len <= Dyadic() || len.numerator() != 1 || len.exponent() < 1) return std::nullopt;
  auto n = len.exponent();
  if (lo.exponent() > n) return std::nullopt;
  return StdInterval(lo.over(n), n);
}

Dyadic gap_end(const std::vector<CirclePoint>& v, std::size_t i) {
  return i + 1 < v.size() ? v[i + 1].value() : Dyadic(1);
}

bool closed_ccw_between(const CirclePoint& x, const CirclePoint& p, const CirclePoint& q) {
  return x == p || x == q || circle_strictly_between(x, p, q);
}

bool sorted_contains(const std::vector<Arc>& v, const Arc& e) { return std::binary_search(v.begin(), v.end(), e); }

void sort_unique(std::vector<Arc>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// A triangulated convex polygon given by its vertices and an adjacency matrix.
struct LocalTri {
  std::vector<CirclePoint> vertices;
  std::vector<std::vector<char>> adj;

  LocalTri() = default;
  LocalTri(const Polygon& polygon, const std::vector<Arc>& diagonals) : vertices(polygon.vertices()) {
    std::size_t k = vertices.size();
    adj.assign(k, std::vector<char>(k, 0));
    for (std::size_t i = 0; i < k; ++i) connect(i, (i + 1) % k);
    for (const auto& d : diagonals) connect(index(d.lo()), index(d.hi()));
  }

  void connect(std::size_t i, std::size_t j) { adj[i][j] = adj[j][i] = 1; }

  std::size_t index(const CirclePoint& x) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
    if (it == vertices.end() || *it != x) throw PreconditionError("point is not a polygon vertex: " + x.to_string());
    return static_cast<std::size_t>(it - vertices.begin());
  }

  // Third vertex of the triangle on side {i, j}, i < j: strictly between
  // them in index order (inner) or outside that range.
  std::optional<std::size_t> apex(std::size_t i, std::size_t j, bool inner) const {
    std::size_t k = vertices.size();
    for (std::size_t x = 0; x < k; ++x) {
      bool in = i < x && x < j;
      if (x == i || x == j || in != inner) continue;
      if (adj[i][x] && adj[x][j]) return x;
    }
    return std::nullopt;
  }

  std::vector<std::array<std::size_t, 3>> triangles() const {
    std::vector<std::array<std::size_t, 3>> out;
    std::size_t k = vertices.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 2; j < k; ++j)
        if (adj[i][j])
          if (auto x = apex(i, j, true)) out.push_back({i, *x, j});
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace

// ---------------------------------------------------------------- Polygon

Polygon Polygon::from_vertices(std::vector<CirclePoint> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw PreconditionError("polygon has a repeated vertex");
  if (vertices.size() < 3) throw PreconditionError("polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Arc side(vertices[i], vertices[(i + 1) % vertices.size()]);
    if (!is_E_arc(side)) throw PreconditionError("polygon side " + side.to_string() + " is not an E-arc");
  }
  return Polygon(std::move(vertices));
}

Polygon Polygon::from_sides(const std::vector<StdInterval>& sides) {
  std::vector<CirclePoint> pts;
  std::vector<Arc> arcs;
  for (const auto& s : sides) {
    Arc e = e_arc(s);
    arcs.push_back(e);
    pts.push_back(e.lo());
    pts.push_back(e.hi());
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Polygon p = from_vertices(pts);
  sort_unique(arcs);
  auto expected = p.sides();
  std::sort(expected.begin(), expected.end());
  if (arcs != expected) throw PreconditionError("the given arcs do not bound a polygon");
  return p;
}

Polygon Polygon::level(int m) {
  if (m < 2) throw PreconditionError("level polygon needs m >= 2");
  if (m > 20) throw PreconditionError("level polygon too large");
  std::vector<CirclePoint> v;
  for (long a = 0; a < (1L << m); ++a) v.emplace_back(BigInt(a), m);
  return from_vertices(std::move(v));
}

std::optional<std::size_t> Polygon::index_of(const CirclePoint& x) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
  if (it == vertices_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<Arc> Polygon::sides() const {
  std::vector<Arc> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) out.emplace_back(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  return out;
}

bool Polygon::is_side(const Arc& e) const {
  auto i = index_of(e.lo()), j = index_of(e.hi());
  if (!i || !j) return false;
  return *j == *i + 1 || (*i == 0 && *j + 1 == vertices_.size());
}

bool Polygon::is_diagonal(const Arc& e) const { return has_vertex(e.lo()) && has_vertex(e.hi()) && !is_side(e); }

std::vector<Arc> Polygon::e_diagonals() const {
  std::int64_t top = 1;
  for (const auto& x : vertices_) top = std::max(top, x.value().exponent());
  std::set<Arc> out;
  for (const auto& x : vertices_)
    for (std::int64_t n = std::max<std::int64_t>(1, x.value().exponent()); n <= top; ++n) {
      CirclePoint y(x.value() + Dyadic(1, n));
      if (!has_vertex(y)) continue;
      Arc e(x, y);
      if (!is_side(e)) out.insert(e);
    }
  return {out.begin(), out.end()};
}

std::vector<ETriangle> Polygon::e_triangles() const {
  LocalTri t(*this, e_diagonals());
  std::vector<ETriangle> out;
  for (const auto& [i, j, l] : t.triangles()) out.push_back(*etriangle_from_vertices(vertices_[i], vertices_[j], vertices_[l]));
  std::sort(out.begin(), out.end());
  return out;
}

bool Polygon::is_anchored() const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!as_std_interval(vertices_[i].value(), gap_end(vertices_, i))) return false;
  return true;
}

StdInterval Polygon::outer_interval(std::size_t i) const {
  auto s = as_std_interval(vertices_.at(i).value(), gap_end(vertices_, i));
  if (!s) throw RegionError("polygon is not anchored at the central arc");
  return *s;
}

Polygon Polygon::expanded() const {
  auto v = vertices_;
  for (std::size_t i = 0; i < vertices_.size(); ++i) v.emplace_back(outer_interval(i).midpoint());
  return from_vertices(std::move(v));
}

std::string Polygon::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < vertices_.size(); ++i) s += (i ? ", " : "") + vertices_[i].to_string();
  return s + ")";
}

void validate_region(const Region& region) {
  auto disjoint = [](const Polygon& p, const Polygon& q) {
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& a = v[i];
      const auto& b = v[(i + 1) % v.size()];
      bool all = std::all_of(q.vertices().begin(), q.vertices().end(),
                             [&](const CirclePoint& x) { return closed_ccw_between(x, a, b); });
      if (all) return true;
    }
    return false;
  };
  if (region.empty()) throw RegionError("empty region");
  for (std::size_t i = 0; i < region.size(); ++i)
    for (std::size_t j = i + 1; j < region.size(); ++j)
      if (!disjoint(region[i], region[j])) throw RegionError("region polygons overlap");
}

Polygon hull(const std::vector<ETriangle>& triangles, const std::vector<CirclePoint>& points) {
  std::set<ETriangle> closed{ETriangle(0, 1), ETriangle(1, 1)};
  auto add = [&](ETriangle t) {
    while (closed.insert(t).second) {
      auto p = t.parent();
      if (!p) break;
      t = *p;
    }
  };
  for (const auto& t : triangles) add(t);
  for (const auto& x : points)
    if (auto t = triangle_with_apex(x)) add(*t);
  std::vector<CirclePoint> v{CirclePoint(Dyadic()), CirclePoint(Dyadic(1, 1))};
  for (const auto& t : closed) v.push_back(t.apex());
  return Polygon::from_vertices(std::move(v));
}

// ------------------------------------------------------- FinTriangulation

std::string to_string(TriangulationFault fault) {
  switch (fault) {
    case TriangulationFault::AddedEArc: return "added-arc-is-E-arc";
    case TriangulationFault::CrossingPair: return "crossing-added-arcs";
    case TriangulationFault::CrossesUnremoved: return "crosses-unremoved-E-arc";
    case TriangulationFault::RemovedNotCrossed: return "uncancelled-removed-arc";
    case TriangulationFault::CountMismatch: return "count-mismatch";
    case TriangulationFault::NonTriangleRegion: return "non-triangle-region";
  }
  return "unknown";
}

ValidationError::ValidationError(TriangulationFault fault, std::vector<Arc> witnesses, const std::string& what)
    : std::invalid_argument(what), fault_(fault), witnesses_(std::move(witnesses)) {}

namespace detail {

struct Component {
  Polygon polygon;
  std::vector<Arc> diagonals;
  LocalTri tri;
};

struct SupportMap {
  std::vector<Component> components;
  std::vector<Polygon> polygons;
  std::vector<ETriangle> triangles;
  std::map<ETriangle, std::size_t> component_of;

  std::size_t component_of_added(const Arc& e) const {
    auto crossed = crossed_e_arcs(e);
    return component_of.at(e_arc_adjacent_triangles(crossed.front()).first);
  }
};

}  // namespace detail

namespace {

// Groups E-triangles into components glued along removed arcs and assigns
// every added arc to its component. Reports NonTriangleRegion when a
// component's added arcs cannot triangulate it.
std::shared_ptr<const detail::SupportMap> build_support(const std::vector<Arc>& removed, const std::vector<Arc>& added) {
  auto map = std::make_shared<detail::SupportMap>();
  std::map<ETriangle, std::size_t> id;
  std::vector<std::size_t> parent;
  auto node = [&](const ETriangle& t) {
    auto [it, fresh] = id.emplace(t, parent.size());
    if (fresh) parent.push_back(parent.size());
    return it->second;
  };
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& r : removed) {
    auto [t1, t2] = e_arc_adjacent_triangles(*is_E_arc(r));
    std::size_t a = find(node(t1)), b = find(node(t2));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<ETriangle>> groups;
  for (const auto& [t, i] : id) groups[find(i)].push_back(t);

  std::vector<std::pair<Polygon, std::vector<ETriangle>>> comps;
  for (auto& [root, tris] : groups) {
    std::vector<CirclePoint> pts;
    for (const auto& t : tris)
      for (const auto& x : t.vertices()) pts.push_back(x);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    comps.emplace_back(Polygon::from_vertices(pts), std::move(tris));
  }
  std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  for (std::size_t c = 0; c < comps.size(); ++c) {
    map->components.push_back({comps[c].first, {}, {}});
    map->polygons.push_back(comps[c].first);
    for (const auto& t : comps[c].second) {
      map->component_of[t] = c;
      map->triangles.push_back(t);
    }
  }
  std::sort(map->triangles.begin(), map->triangles.end());
  for (const auto& e : added) map->components[map->component_of_added(e)].diagonals.push_back(e);
  for (auto& c : map->components) {
    if (c.diagonals.size() + 3 != c.polygon.size())
      throw ValidationError(TriangulationFault::NonTriangleRegion, c.diagonals,
                            "added arcs do not triangulate the support polygon " + c.polygon.to_string());
    c.tri = LocalTri(c.polygon, c.diagonals);
  }
  return map;
}

std::size_t hash_arcs(const std::vector<Arc>& removed, const std::vector<Arc>& added) {
  std::size_t h = removed.size() * 0x9e3779b97f4a7c15ULL;
  std::hash<Arc> ha;
  for (const auto& e : removed) h = (h ^ ha(e)) * 0x100000001b3ULL;
  h ^= 0x5bd1e995;
  for (const auto& e : added) h = (h ^ ha(e)) * 0x100000001b3ULL;
  return h;
}

}  // namespace

FinTriangulation::FinTriangulation() : FinTriangulation({}, {}) {}

FinTriangulation::FinTriangulation(std::vector<Arc> removed, std::vector<Arc> added)
    : removed_(std::move(removed)), added_(std::move(added)) {
  support_ = build_support(removed_, added_);
  hash_ = hash_arcs(removed_, added_);
}

FinTriangulation FinTriangulation::trusted(std::vector<Arc> removed, std::vector<Arc> added) {
  sort_unique(removed);
  sort_unique(added);
  return FinTriangulation(std::move(removed), std::move(added));
}

std::vector<StdInterval> FinTriangulation::removed_intervals() const {
  std::vector<StdInterval> out;
  for (const auto& e : removed_) out.push_back(*is_E_arc(e));
  return out;
}

bool FinTriangulation::is_removed(const Arc& e) const { return sorted_contains(removed_, e); }
bool FinTriangulation::is_added(const Arc& e) const { return sorted_contains(added_, e); }
bool FinTriangulation::contains(const Arc& e) const {
  if (is_added(e)) return true;
  return is_E_arc(e) && !is_removed(e);
}

const std::vector<Polygon>& FinTriangulation::support() const { return support_->polygons; }
const std::vector<ETriangle>& FinTriangulation::support_triangles() const { return support_->triangles; }

CirclePoint FinTriangulation::apex(const Arc& e, bool inner) const {
  auto local = [&](std::size_t c) {
    const auto& tri = support_->components[c].tri;
    auto x = tri.apex(tri.index(e.lo()), tri.index(e.hi()), inner);
    if (!x) throw PreconditionError("arc " + e.to_string() + " has no triangle on that side");
    return tri.vertices[*x];
  };
  if (is_added(e)) return local(support_->component_of_added(e));
  if (!contains(e)) throw PreconditionError("arc " + e.to_string() + " is not an arc of the triangulation");
  auto [t1, t2] = e_arc_adjacent_triangles(*is_E_arc(e));
  for (const auto& t : {t1, t2}) {
    CirclePoint z;
    for (const auto& x : t.vertices())
      if (!e.has_endpoint(x)) z = x;
    bool z_inner = e.lo() < z && z < e.hi();
    if (z_inner != inner) continue;
    auto it = support_->component_of.find(t);
    return it == support_->component_of.end() ? z : local(it->second);
  }
  throw PreconditionError("arc " + e.to_string() + " has no triangle on that side");
}

std::string FinTriangulation::to_string() const {
  std::ostringstream os;
  os << "removed [";
  for (std::size_t i = 0; i < removed_.size(); ++i) {
    auto s = *is_E_arc(removed_[i]);
    os << (i ? ", " : "") << "(" << s.a << "," << s.n << ")";
  }
  os << "] added [";
  for (std::size_t i = 0; i < added_.size(); ++i) os << (i ? ", " : "") << added_[i].to_string();
  os << "]";
  return os.str();
}

FinTriangulation tri_base() { return FinTriangulation(); }

FinTriangulation tri_validate(std::vector<StdInterval> removed_in, std::vector<Arc> added) {
  std::vector<Arc> removed;
  for (const auto& s : removed_in) removed.push_back(e_arc(s));
  sort_unique(removed);
  sort_unique(added);

  for (const auto& e : added)
    if (is_E_arc(e)) throw ValidationError(TriangulationFault::AddedEArc, {e}, "added arc " + e.to_string() + " is an E-arc");
  for (std::size_t i = 0; i < added.size(); ++i)
    for (std::size_t j = i + 1; j < added.size(); ++j)
      if (arcs_cross(added[i], added[j]))
        throw ValidationError(TriangulationFault::CrossingPair, {added[i], added[j]},
                              "added arcs " + added[i].to_string() + " and " + added[j].to_string() + " cross");
  std::set<Arc> crossed;
  for (const auto& e : added)
    for (const auto& s : crossed_e_arcs(e)) {
      Arc r = e_arc(s);
      if (!sorted_contains(removed, r))
        throw ValidationError(TriangulationFault::CrossesUnremoved, {e, r},
                              "added arc " + e.to_string() + " crosses E-arc " + r.to_string() + " which is not removed");
      crossed.insert(r);
    }
  for (const auto& r : removed)
    if (!crossed.count(r))
      throw ValidationError(TriangulationFault::RemovedNotCrossed, {r},
                            "removed E-arc " + r.to_string() + " is not crossed by any added arc");
  if (removed.size() != added.size())
    throw ValidationError(TriangulationFault::CountMismatch, {},
                          std::to_string(removed.size()) + " removed arcs but " + std::to_string(added.size()) + " added");
  return FinTriangulation::trusted(std::move(removed), std::move(added));
}

FinTriangulation tri_from_polygon(const Polygon& polygon, const std::vector<Arc>& diagonals) {
  for (const auto& d : diagonals)
    if (!polygon.is_diagonal(d)) throw PreconditionError(d.to_string() + " is not a diagonal of the polygon");
  if (diagonals.size() + 3 != polygon.size()) throw PreconditionError("wrong number of diagonals for the polygon");
  std::vector<Arc> ds = diagonals;
  sort_unique(ds);
  std::vector<StdInterval> removed;
  for (const auto& e : polygon.e_diagonals())
    if (!std::binary_search(ds.begin(), ds.end(), e)) removed.push_back(*is_E_arc(e));
  std::vector<Arc> added;
  for (const auto& d : ds)
    if (!is_E_arc(d)) added.push_back(d);
  return tri_validate(std::move(removed), std::move(added));
}

FlipResult tri_flip_detailed(const FinTriangulation& v, const Arc& e) {
  if (!v.contains(e)) throw PreconditionError("cannot flip " + e.to_string() + ": not an arc of the triangulation");
  Arc created(v.apex(e, true), v.apex(e, false));
  std::vector<Arc> removed = v.removed(), added = v.added();
  if (v.is_added(e)) {
    added.erase(std::find(added.begin(), added.end(), e));
    if (is_E_arc(created))
      removed.erase(std::find(removed.begin(), removed.end(), created));
    else
      added.push_back(created);
  } else {
    removed.push_back(e);
    added.push_back(created);
  }
  return {FinTriangulation::trusted(std::move(removed), std::move(added)), created};
}

FinTriangulation tri_flip(const FinTriangulation& v, const Arc& e) { return tri_flip_detailed(v, e).result; }

bool region_encloses(const Region& region, const FinTriangulation& v) {
  for (const auto& s : v.support()) {
    bool inside = std::any_of(region.begin(), region.end(), [&](const Polygon& p) {
      return std::all_of(s.vertices().begin(), s.vertices().end(), [&](const CirclePoint& x) { return p.has_vertex(x); });
    });
    if (!inside) return false;
  }
  return true;
}

namespace {

// Arcs of v strictly inside p, assuming no support component straddles p.
std::vector<Arc> arcs_inside(const FinTriangulation& v, const Polygon& p) {
  std::vector<Arc> out;
  for (const auto& e : p.e_diagonals())
    if (!v.is_removed(e)) out.push_back(e);
  for (const auto& e : v.added())
    if (p.has_vertex(e.lo()) && p.has_vertex(e.hi())) out.push_back(e);
  sort_unique(out);
  return out;
}

}  // namespace

std::vector<Arc> tri_arcs_in_region(const FinTriangulation& v, const Polygon& polygon) {
  return tri_arcs_in_region(v, Region{polygon});
}

std::vector<Arc> tri_arcs_in_region(const FinTriangulation& v, const Region& region) {
  if (!region_encloses(region, v)) throw RegionError("region does not enclose the support of the triangulation");
  std::vector<Arc> out;
  for (const auto& p : region) {
    auto in = arcs_inside(v, p);
    out.insert(out.end(), in.begin(), in.end());
  }
  sort_unique(out);
  return out;
}

Region tri_support(const FinTriangulation& v) { return v.support(); }

std::vector<Arc> tri_arcs_not_in(const FinTriangulation& v, const FinTriangulation& w) {
  // Arcs of v outside E are v.added; E-arcs of v missing from w are w.removed \ v.removed.
  std::vector<Arc> out;
  std::set_difference(w.removed().begin(), w.removed().end(), v.removed().begin(), v.removed().end(),
                      std::back_inserter(out));
  std::set_difference(v.added().begin(), v.added().end(), w.added().begin(), w.added().end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t tri_arc_difference(const FinTriangulation& v, const FinTriangulation& w) {
  return tri_arcs_not_in(v, w).size();
}

std::vector<Triangle> tri_triangles_in(const FinTriangulation& v, const Polygon& polygon) {
  auto arcs = arcs_inside(v, polygon);
  if (arcs.size() + 3 != polygon.size()) throw RegionError("a support component crosses the polygon boundary");
  LocalTri t(polygon, arcs);
  std::vector<Triangle> out;
  for (const auto& [i, j, l] : t.triangles()) out.push_back({t.vertices[i], t.vertices[j], t.vertices[l]});
  return out;
}

Arc map_arc(const ExtElement& g, const Arc& e) { return Arc(ext_evaluate(g, e.lo()), ext_evaluate(g, e.hi())); }

Polygon map_polygon(const ExtElement& g, const Polygon& polygon) {
  if (!polygon.is_anchored()) throw RegionError("polygon must contain the central arc");
  const auto& v = polygon.vertices();
  for (const auto& b : ext_breakpoints(g))
    for (std::size_t i = 0; i < v.size(); ++i)
      if (circle_strictly_between(b, v[i], v[(i + 1) % v.size()]))
        throw RegionError("the element is not affine outside the polygon " + polygon.to_string());
  std::vector<CirclePoint> image;
  for (const auto& x : v) image.push_back(ext_evaluate(g, x));
  return Polygon::from_vertices(std::move(image));
}

FinTriangulation t_act(const ExtElement& g, const FinTriangulation& v) {
  Polygon p = hull(v.support_triangles(), ext_breakpoints(g));
  Polygon q = map_polygon(g, p);
  std::vector<Arc> images;
  for (const auto& e : tri_arcs_in_region(v, p)) images.push_back(map_arc(g, e));
  std::sort(images.begin(), images.end());
  std::vector<Arc> removed, added;
  for (const auto& e : q.e_diagonals())
    if (!std::binary_search(images.begin(), images.end(), e)) removed.push_back(e);
  for (const auto& e : images)
    if (!is_E_arc(e)) added.push_back(e);
  return FinTriangulation::trusted(std::move(removed), std::move(added));
}

}  // namespace tpants
