#include "tpants/assoc_oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace tpants {

namespace {

void check_size(int n) {
  if (n < 3 || n > 12) throw PreconditionError("polygon size must lie in [3, 12], got " + std::to_string(n));
}

using Diagonals = std::vector<std::pair<int, int>>;

// Triangulations of the sub-polygon i, i+1, ..., j by the apex k of the
// triangle on the side (i, j).
class Enumerator {
 public:
  const std::vector<Diagonals>& of(int i, int j) {
    auto key = std::make_pair(i, j);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Diagonals> out;
    if (j - i < 2) {
      out.push_back({});
    } else {
      for (int k = i + 1; k < j; ++k) {
        const auto left = of(i, k);
        const auto right = of(k, j);
        for (const auto& l : left)
          for (const auto& r : right) {
            Diagonals d = l;
            d.insert(d.end(), r.begin(), r.end());
            if (k > i + 1) d.emplace_back(i, k);
            if (j > k + 1) d.emplace_back(k, j);
            out.push_back(std::move(d));
          }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::map<std::pair<int, int>, std::vector<Diagonals>> memo_;
};

bool joined(const PolyTriangulation& t, int a, int b) {
  if (a > b) std::swap(a, b);
  if (b - a == 1 || (a == 0 && b == t.n - 1)) return true;
  return std::binary_search(t.diagonals.begin(), t.diagonals.end(), std::make_pair(a, b));
}

}  // namespace

std::optional<std::size_t> OracleGraph::index_of(const PolyTriangulation& t) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), t);
  if (it == vertices.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<PolyTriangulation> enumerate_triangulations(int n) {
  check_size(n);
  Enumerator e;
  std::vector<PolyTriangulation> out;
  for (auto d : e.of(0, n - 1)) {
    std::sort(d.begin(), d.end());
    out.push_back({n, std::move(d)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

PolyTriangulation oracle_flip(const PolyTriangulation& t, std::pair<int, int> d) {
  if (d.first > d.second) std::swap(d.first, d.second);
  if (!std::binary_search(t.diagonals.begin(), t.diagonals.end(), d))
    throw PreconditionError("not a diagonal of the triangulation");
  auto [a, b] = d;
  // The apex on each side is unique: two common neighbours on one side
  // would give two crossing edges.
  int inside = -1, outside = -1;
  for (int c = 0; c < t.n; ++c)
    if (c != a && c != b && joined(t, a, c) && joined(t, b, c)) ((a < c && c < b) ? inside : outside) = c;
  if (inside < 0 || outside < 0) throw std::logic_error("diagonal does not bound two triangles");
  PolyTriangulation out = t;
  out.diagonals.erase(std::find(out.diagonals.begin(), out.diagonals.end(), d));
  out.diagonals.push_back(std::minmax(inside, outside));
  std::sort(out.diagonals.begin(), out.diagonals.end());
  return out;
}

OracleGraph oracle_flip_graph(int n) {
  OracleGraph g;
  g.n = n;
  g.vertices = enumerate_triangulations(n);
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (const auto& d : g.vertices[i].diagonals) {
      std::size_t j = *g.index_of(oracle_flip(g.vertices[i], d));
      if (i < j) g.edges.emplace_back(i, j);
    }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::size_t oracle_distance(const PolyTriangulation& t1, const PolyTriangulation& t2) {
  if (t1.n != t2.n) throw PreconditionError("triangulations of polygons of different sizes");
  std::map<PolyTriangulation, std::size_t> dist{{t1, 0}};
  std::deque<PolyTriangulation> queue{t1};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    if (cur == t2) return dist[cur];
    for (const auto& d : cur.diagonals) {
      auto next = oracle_flip(cur, d);
      if (dist.emplace(next, dist[cur] + 1).second) queue.push_back(std::move(next));
    }
  }
  throw PreconditionError("second triangulation is not a triangulation of the same polygon");
}

std::pair<int, int> RegionEmbedding::to_pair(const Arc& e) const {
  auto i = region_.index_of(e.lo()), j = region_.index_of(e.hi());
  if (!i || !j) throw RegionError(e.to_string() + " does not join two vertices of the region");
  return {static_cast<int>(*i), static_cast<int>(*j)};
}

Arc RegionEmbedding::to_arc(std::pair<int, int> d) const {
  const auto& v = region_.vertices();
  return Arc(v.at(d.first), v.at(d.second));
}

PolyTriangulation RegionEmbedding::to_poly(const FinTriangulation& v) const {
  PolyTriangulation t{static_cast<int>(region_.size()), {}};
  for (const auto& e : tri_arcs_in_region(v, region_)) t.diagonals.push_back(to_pair(e));
  std::sort(t.diagonals.begin(), t.diagonals.end());
  return t;
}

FinTriangulation RegionEmbedding::from_poly(const PolyTriangulation& t) const {
  if (t.n != static_cast<int>(region_.size())) throw PreconditionError("polygon size differs from the region");
  std::vector<Arc> diagonals;
  for (const auto& d : t.diagonals) diagonals.push_back(to_arc(d));
  return tri_from_polygon(region_, diagonals);
}

RegionEmbedding embed_region(const Polygon& region) { return RegionEmbedding(region); }

}  // namespace tpants
