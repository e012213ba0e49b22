#pragma once

// Local geometry of the asymptotic pants complex: flip edges, square and
// pentagon cells, region-restricted balls and distances, and links.

#include "tpants/triangulation.hpp"

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

namespace tpants {

/// True iff some triangle of v has both arcs on its boundary. The arcs must
/// be distinct arcs of v.
bool arcs_adjacent(const FinTriangulation& v, const Arc& e1, const Arc& e2);

struct Neighbor {
  Arc arc;
  FinTriangulation vertex;
};

/// Flips of every arc of v strictly inside the region, in arc order.
std::vector<Neighbor> neighbors(const FinTriangulation& v, const Region& region);

enum class CellKind { Square, Pentagon };

struct Cell {
  CellKind kind;
  FinTriangulation base;
  std::array<Arc, 2> arcs;
  /// Starts at base, then flip(base, arcs[0]); ends at flip(base, arcs[1]).
  std::vector<FinTriangulation> boundary;
};

/// The 2-cell at v spanned by the flips of two distinct arcs of v.
Cell cell_at(const FinTriangulation& v, const Arc& e1, const Arc& e2);
/// The unique 2-cell containing the path u - v - w.
Cell cell_through(const FinTriangulation& u, const FinTriangulation& v, const FinTriangulation& w);
/// The arc of v whose flip gives u; u must be a neighbour of v.
Arc flipped_arc(const FinTriangulation& v, const FinTriangulation& u);

struct Ball {
  /// In breadth-first order; flips are explored in arc order.
  std::vector<FinTriangulation> vertices;
  std::vector<std::size_t> distance;
  std::unordered_map<FinTriangulation, std::size_t> index;

  std::optional<std::size_t> distance_to(const FinTriangulation& w) const;
};

/// The hull of v's support grown by one layer of E-triangles, so that every
/// arc of v meeting the support is interior.
Polygon default_region(const FinTriangulation& v);

Ball ball(const FinTriangulation& v, int r, const Region& region);

enum class DistanceFlag { Exact, RegionExact };

struct DistanceResult {
  std::size_t value;
  /// Arcs of v not in w; no path can be shorter.
  std::size_t lower_bound;
  DistanceFlag flag;
  std::vector<FinTriangulation> path;
};

/// Shortest flip path using only flips inside the region.
DistanceResult distance(const FinTriangulation& v, const FinTriangulation& w, const Region& region);

/// Arcs of v in a region, grouped into the triangles of v.
struct LinkGraph {
  /// Diagonals and sides of the region polygons, in arc order.
  std::vector<Arc> vertices;
  /// Region sides: their second triangle lies outside the region.
  std::vector<bool> frontier;
  /// Pairs of vertices bounding a common triangle, i < j.
  std::vector<std::array<std::size_t, 2>> edges;
  /// Each triangle lists its sides counterclockwise, starting from the
  /// smallest index. Empty for link1.
  std::vector<std::array<std::size_t, 3>> triangles;

  std::optional<std::size_t> index_of(const Arc& e) const;
};

LinkGraph link1(const FinTriangulation& v, const Region& region);
LinkGraph link2(const FinTriangulation& v, const Region& region);

struct LinkFlip {
  LinkGraph before;
  /// Link of flip(v, e) on the same vertex list, with the new diagonal
  /// sitting at the index of e.
  LinkGraph after;
  Arc flipped;
  Arc created;
};

LinkFlip link_after_flip(const FinTriangulation& v, const Arc& e, const Region& region);

/// Rotates a cyclic triple so that its smallest entry comes first.
std::array<std::size_t, 3> canonical_cycle(std::array<std::size_t, 3> t);

struct NonhypInstance {
  int n;
  int level;
  /// Diagonals of the 2n disjoint inscribed squares.
  std::vector<Arc> squares;
  FinTriangulation u, v, w, p;
  std::vector<FinTriangulation> path_uv, path_vw, path_uw;
};

NonhypInstance nonhyp_instance(int n);
/// Smallest arc-difference from p to any vertex of the two legs u-v and v-w.
std::size_t thinness_certificate(int n);
std::size_t thinness_certificate(const NonhypInstance& instance);

}  // namespace tpants
