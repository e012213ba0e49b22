#pragma once

// Vertices of the asymptotic pants complex: triangulations of the disk with
// dyadic vertices that differ from the base tessellation E in finitely many
// arcs. A vertex stores only that finite difference.

#include "tpants/dyadic.hpp"
#include "tpants/thompson.hpp"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpants {

/// A convex ideal polygon whose sides are E-arcs; it is a union of E-triangles.
class Polygon {
 public:
  /// Vertices may be given in any order; each cyclically consecutive pair must be an E-arc.
  static Polygon from_vertices(std::vector<CirclePoint> vertices);
  /// Sides as E-arcs in any order.
  static Polygon from_sides(const std::vector<StdInterval>& sides);
  /// The 2^m-gon with vertices a/2^m; m >= 2.
  static Polygon level(int m);

  const std::vector<CirclePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::optional<std::size_t> index_of(const CirclePoint& x) const;
  bool has_vertex(const CirclePoint& x) const { return index_of(x).has_value(); }

  /// Side i joins vertex i to vertex i+1 (cyclically).
  std::vector<Arc> sides() const;
  bool is_side(const Arc& e) const;
  /// Both endpoints are vertices and e is not a side.
  bool is_diagonal(const Arc& e) const;
  /// The E-arcs strictly inside, i.e. the diagonals of E restricted to the polygon.
  std::vector<Arc> e_diagonals() const;
  std::vector<ETriangle> e_triangles() const;

  /// True when the counterclockwise gap after every vertex is a standard
  /// interval: the polygon contains the central arc {0, 1/2} and the
  /// outside is a disjoint union of rigid fans.
  bool is_anchored() const;
  /// The standard interval cut off by side i; requires is_anchored().
  StdInterval outer_interval(std::size_t i) const;
  /// Adds the E-triangle beyond every side; requires is_anchored().
  Polygon expanded() const;

  std::string to_string() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;
  friend auto operator<=>(const Polygon&, const Polygon&) = default;

 private:
  explicit Polygon(std::vector<CirclePoint> v) : vertices_(std::move(v)) {}
  std::vector<CirclePoint> vertices_;
};

using SupportPolygon = Polygon;
/// A family of polygons with pairwise disjoint interiors.
using Region = std::vector<Polygon>;

void validate_region(const Region& region);

/// Smallest anchored polygon containing the given E-triangles and having
/// the given points as vertices; always contains the quadrilateral
/// (0, 1/4, 1/2, 3/4).
Polygon hull(const std::vector<ETriangle>& triangles, const std::vector<CirclePoint>& points = {});

class RegionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TriangulationFault {
  AddedEArc,
  CrossingPair,
  CrossesUnremoved,
  RemovedNotCrossed,
  CountMismatch,
  NonTriangleRegion,
};

std::string to_string(TriangulationFault fault);

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(TriangulationFault fault, std::vector<Arc> witnesses, const std::string& what);
  TriangulationFault fault() const { return fault_; }
  const std::vector<Arc>& witnesses() const { return witnesses_; }

 private:
  TriangulationFault fault_;
  std::vector<Arc> witnesses_;
};

namespace detail {
struct SupportMap;
}

/// A vertex of the complex, stored as its difference from E. Both arc lists
/// are sorted in canonical arc order; an arc is never both removed and added.
class FinTriangulation {
 public:
  /// The base tessellation E.
  FinTriangulation();

  const std::vector<Arc>& removed() const { return removed_; }
  std::vector<StdInterval> removed_intervals() const;
  const std::vector<Arc>& added() const { return added_; }
  bool is_base() const { return removed_.empty(); }

  /// True iff e is an arc of this triangulation.
  bool contains(const Arc& e) const;
  bool is_removed(const Arc& e) const;
  bool is_added(const Arc& e) const;

  /// Connected components of the non-E part, one polygon each.
  const std::vector<Polygon>& support() const;
  /// The E-triangles met by added arcs.
  const std::vector<ETriangle>& support_triangles() const;

  /// The vertex of the triangle of this triangulation that borders e on
  /// the side strictly between e.lo() and e.hi() (inner) or outside it.
  CirclePoint apex(const Arc& e, bool inner) const;

  std::size_t hash() const { return hash_; }
  std::string to_string() const;

  friend bool operator==(const FinTriangulation& x, const FinTriangulation& y) {
    return x.hash_ == y.hash_ && x.removed_ == y.removed_ && x.added_ == y.added_;
  }

  /// Builds from already canonical data without the full validation pass.
  static FinTriangulation trusted(std::vector<Arc> removed, std::vector<Arc> added);

 private:
  FinTriangulation(std::vector<Arc> removed, std::vector<Arc> added);
  std::vector<Arc> removed_;
  std::vector<Arc> added_;
  std::shared_ptr<const detail::SupportMap> support_;
  std::size_t hash_ = 0;
};

FinTriangulation tri_base();
/// Checks every vertex invariant and returns the canonical triangulation,
/// or throws ValidationError naming the first violated invariant.
FinTriangulation tri_validate(std::vector<StdInterval> removed, std::vector<Arc> added);
/// The triangulation that agrees with E outside the polygon and uses the
/// given diagonals inside it.
FinTriangulation tri_from_polygon(const Polygon& polygon, const std::vector<Arc>& diagonals);

struct FlipResult {
  FinTriangulation result;
  Arc created;
};

FlipResult tri_flip_detailed(const FinTriangulation& v, const Arc& e);
FinTriangulation tri_flip(const FinTriangulation& v, const Arc& e);

bool region_encloses(const Region& region, const FinTriangulation& v);
/// Arcs of v strictly inside the region, in canonical order.
std::vector<Arc> tri_arcs_in_region(const FinTriangulation& v, const Region& region);
std::vector<Arc> tri_arcs_in_region(const FinTriangulation& v, const Polygon& polygon);
Region tri_support(const FinTriangulation& v);
/// Number of arcs of v that are not arcs of w.
std::size_t tri_arc_difference(const FinTriangulation& v, const FinTriangulation& w);
/// Arcs of v that are not arcs of w, in canonical order.
std::vector<Arc> tri_arcs_not_in(const FinTriangulation& v, const FinTriangulation& w);

/// A triangle of v given by its vertices in counterclockwise order.
using Triangle = std::array<CirclePoint, 3>;
/// Triangles of v inside the polygon, which must enclose v's support there.
std::vector<Triangle> tri_triangles_in(const FinTriangulation& v, const Polygon& polygon);

Arc map_arc(const ExtElement& g, const Arc& e);
/// The image of a polygon under g; throws RegionError when g is not
/// affine on every outer gap of the polygon.
Polygon map_polygon(const ExtElement& g, const Polygon& polygon);
/// The vertex g . v whose arcs are {g(p), g(q)} for the arcs {p, q} of v.
FinTriangulation t_act(const ExtElement& g, const FinTriangulation& v);
inline FinTriangulation t_act(const TElement& f, const FinTriangulation& v) { return t_act(ext(f), v); }

}  // namespace tpants

template <>
struct std::hash<tpants::FinTriangulation> {
  std::size_t operator()(const tpants::FinTriangulation& v) const noexcept { return v.hash(); }
};
