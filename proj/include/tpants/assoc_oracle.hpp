#pragma once

// Brute-force flip graph of triangulations of a convex n-gon on vertex
// indices 0..n-1. Shares no code with the dyadic model, so it can serve as
// ground truth for the region-restricted complex.

#include "tpants/triangulation.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace tpants {

struct PolyTriangulation {
  int n = 3;
  /// Sorted pairs (i, j) with i < j.
  std::vector<std::pair<int, int>> diagonals;

  friend bool operator==(const PolyTriangulation&, const PolyTriangulation&) = default;
  friend auto operator<=>(const PolyTriangulation&, const PolyTriangulation&) = default;
};

struct OracleGraph {
  int n = 3;
  std::vector<PolyTriangulation> vertices;
  /// Index pairs (i, j) with i < j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::optional<std::size_t> index_of(const PolyTriangulation& t) const;
};

/// Every triangulation of the n-gon, sorted by diagonal list. 3 <= n <= 12.
std::vector<PolyTriangulation> enumerate_triangulations(int n);
/// Replaces diagonal d by the other diagonal of the quadrilateral around it.
PolyTriangulation oracle_flip(const PolyTriangulation& t, std::pair<int, int> d);
OracleGraph oracle_flip_graph(int n);
/// Breadth-first flip distance.
std::size_t oracle_distance(const PolyTriangulation& t1, const PolyTriangulation& t2);

/// Numbers the vertices of a region polygon 0..k-1 in counterclockwise order
/// from 0, identifying vertices supported in it with triangulations of the k-gon.
class RegionEmbedding {
 public:
  explicit RegionEmbedding(Polygon region) : region_(std::move(region)) {}

  const Polygon& region() const { return region_; }
  PolyTriangulation to_poly(const FinTriangulation& v) const;
  FinTriangulation from_poly(const PolyTriangulation& t) const;
  std::pair<int, int> to_pair(const Arc& e) const;
  Arc to_arc(std::pair<int, int> d) const;

 private:
  Polygon region_;
};

RegionEmbedding embed_region(const Polygon& region);

}  // namespace tpants
