#pragma once

// Automorphisms of the pants complex: the action of T extended by the
// reflection, link isomorphisms, their orientation behaviour, and the
// reconstruction of an automorphism from its action on one link.

#include "tpants/pants_complex.hpp"
#include "tpants/thompson.hpp"
#include "tpants/triangulation.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace tpants {

/// An automorphism of the complex, in its classified form t o rho^r.
struct AutElement {
  ExtElement g;

  friend bool operator==(const AutElement&, const AutElement&) = default;
};

AutElement psi(const ExtElement& g);
AutElement psi(const TElement& f);
AutElement aut_compose(const AutElement& a, const AutElement& b);
FinTriangulation aut_apply(const AutElement& a, const FinTriangulation& v);
/// The reflection in the central arc {0, 1/2}.
ExtElement phi_R();
/// 0 for orientation preserving automorphisms, 1 for reversing ones.
int orientation_sign(const AutElement& a);

/// A bijection between the link vertices (arcs) of v in one polygon and
/// those of w in another, sending triangles to triangles.
struct LinkIso {
  FinTriangulation source;
  FinTriangulation target;
  Polygon source_region;
  Polygon target_region;
  /// Sorted by source arc.
  std::vector<std::pair<Arc, Arc>> pairs;

  std::optional<Arc> image(const Arc& e) const;
};

/// Throws PreconditionError unless the pairs are a bijection between the two
/// links that maps triangles onto triangles and region sides onto region sides.
void validate_link_iso(const LinkIso& iso);

/// The iso e -> g(e) on the link of v in the region. The region must be
/// anchored, enclose v's support, and contain g's breakpoints.
LinkIso induced_link_iso(const AutElement& a, const FinTriangulation& v, const Polygon& region);

enum class Orientation { Preserving, Reversing, Mixed };

/// Two link triangles sharing the arc u0, listed counterclockwise from u0:
/// the iso reverses (u0, u1, u2) and preserves (u0, u3, u4).
struct MixedWitness {
  std::array<Arc, 3> reversed;
  std::array<Arc, 3> preserved;
};

struct OrientationVerdict {
  Orientation kind;
  /// +1 or -1 for each triangle of the source link, in link order.
  std::vector<int> signs;
  std::optional<MixedWitness> witness;
};

OrientationVerdict classify_orientation(const LinkIso& iso);

/// Evidence that a mixed iso extends to no automorphism: the path u5 - u0 - u6
/// bounds a pentagon at v's side, while the vertices it is forced onto bound a square.
struct Obstruction {
  MixedWitness witness;
  FinTriangulation u0, u5, u6;
  FinTriangulation image_u0, image_u5, image_u6;
  Cell source_cell;
  Cell target_cell;
};

using Extension = std::variant<ExtElement, Obstruction>;

/// Both regions must be anchored and enclose the respective supports.
Extension extend_link_iso(const LinkIso& iso);

/// The images of the neighbours of v (inside the source region) under the iso.
std::vector<std::pair<FinTriangulation, FinTriangulation>> first_ball_images(const LinkIso& iso);

struct Contradiction {
  /// A vertex whose two neighbours span a cell of one kind while their
  /// forced images span a cell of the other kind (or are not neighbours).
  FinTriangulation at;
  FinTriangulation left, right;
  std::size_t radius;
  std::optional<CellKind> source_kind;
  std::optional<CellKind> target_kind;
};

struct Propagation {
  /// Ball vertices in breadth-first order with their forced images.
  std::vector<std::pair<FinTriangulation, FinTriangulation>> images;
  std::optional<Contradiction> contradiction;
};

/// Forces images over ball(v, r, region) from the images of v and its
/// neighbours using the unique-cell rule, checking every cell on the way.
Propagation propagate_images(const FinTriangulation& v, const FinTriangulation& w,
                             const std::vector<std::pair<FinTriangulation, FinTriangulation>>& first_ball, int r,
                             const Region& region);

/// Some f with f . E = v, built by matching the triangles of v to those of E.
TElement transitive_element(const FinTriangulation& v);

/// A vertex moved by f, obtained by flipping a small E-square at a point f moves.
FinTriangulation witness_vertex(const TElement& f);

/// An iso that reverses the triangles on one side of the interior arc e0 of v
/// (by mirroring that side) and fixes the other side; the target is the
/// correspondingly mirrored triangulation.
LinkIso mirrored_link_iso(const FinTriangulation& v, const Polygon& region, const Arc& e0);
/// Post-composes an iso with the action of g on its target.
LinkIso compose_link_iso(const AutElement& a, const LinkIso& iso);

}  // namespace tpants
