#pragma once

// Thompson's group T as piecewise-linear circle maps given by a pair of
// standard dyadic partitions, plus the Z/2 extension by the reflection
// x -> 1 - x fixing the central arc {0, 1/2}.

#include "tpants/dyadic.hpp"

#include <string_view>
#include <vector>

namespace tpants {

/// Breakpoints 0 = x_0 < x_1 < ... < x_k = 1 of a partition into standard intervals.
using StdPartition = std::vector<Dyadic>;

/// One affine branch: source is mapped onto target preserving orientation.
struct Piece {
  StdInterval source;
  StdInterval target;

  friend bool operator==(const Piece&, const Piece&) = default;
};

/// Image of x (a point of piece.source) under the affine branch.
Dyadic map_through(const Piece& piece, const Dyadic& x);
/// Image of a standard subinterval of piece.source.
StdInterval map_through(const Piece& piece, const StdInterval& sub);

/// An element of T. Pieces are sorted by source; the targets then run
/// once around the circle in counterclockwise order. Elements built by the
/// public constructors are reduced; t_expand deliberately produces
/// unreduced ones.
class TElement {
 public:
  /// The identity, on the partition {0, 1/2, 1}.
  TElement();

  /// Validates the pieces and reduces.
  static TElement from_pieces(std::vector<Piece> pieces);
  /// Validates the pieces but keeps them as given.
  static TElement unreduced(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }
  StdPartition source() const;
  StdPartition target() const;
  /// j such that source interval i maps to target interval (i + j) mod k.
  std::size_t offset() const;
  bool is_reduced() const;
  bool is_identity() const;

  /// Index of the piece whose source contains x (half-open on the right).
  std::size_t piece_index(const Dyadic& x) const;

  friend bool operator==(const TElement&, const TElement&) = default;

 private:
  explicit TElement(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}
  std::vector<Piece> pieces_;
};

TElement t_identity();
/// Rotation by a quarter turn: I_a^2 -> I_{a+1 mod 4}^2.
TElement t_alpha();
/// Order-three element: [1/2,1] -> [0,1/4] -> [1/4,1/2] -> [1/2,1].
TElement t_beta();

CirclePoint t_evaluate(const TElement& f, const CirclePoint& x);
TElement t_expand(const TElement& f, std::size_t index);
TElement t_reduce(const TElement& f);
/// x -> f(g(x)).
TElement t_compose(const TElement& f, const TElement& g);
TElement t_inverse(const TElement& f);
/// Letters a, A, b, B stand for alpha, alpha^-1, beta, beta^-1; the word
/// w1 w2 ... wn denotes w1 o w2 o ... o wn (rightmost applied first).
TElement t_from_word(std::string_view word);
/// The element mapping source interval i affinely onto target interval (i + j) mod k.
TElement t_from_polygons(const StdPartition& source, const StdPartition& target, std::size_t j);
/// The element sending each source vertex to its paired target vertex. The
/// source vertices must include 0 and the targets must be in cyclic order.
TElement t_from_vertex_map(std::vector<std::pair<Dyadic, Dyadic>> pairs);

/// Inverse word: reversed, with each letter's case swapped.
std::string t_inverse_word(std::string_view word);

struct Relator {
  std::string name;
  std::string word;
};

/// The defining relators of T in alpha and beta: the two generator orders,
/// (beta alpha)^5 and the two commutators.
std::vector<Relator> t_relators();

/// rho o f o rho with rho(x) = 1 - x.
TElement gamma_R(const TElement& f);
/// alpha^2 o gamma_R(f) o alpha^-2; sends alpha to alpha^-1 and beta to beta^-1.
TElement brin_outer(const TElement& f);

/// The circle map t o rho^reflected.
struct ExtElement {
  TElement t;
  bool reflected = false;

  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

inline ExtElement ext(TElement t) { return {std::move(t), false}; }
/// (identity, reflected): the reflection in the axis {0, 1/2}.
ExtElement ext_reflection();

ExtElement ext_compose(const ExtElement& g, const ExtElement& h);
ExtElement ext_inverse(const ExtElement& g);
CirclePoint ext_evaluate(const ExtElement& g, const CirclePoint& x);
/// Points where the circle map may fail to be affine on a standard interval.
std::vector<CirclePoint> ext_breakpoints(const ExtElement& g);

CirclePoint reflect(const CirclePoint& x);
StdInterval reflect(const StdInterval& s);

}  // namespace tpants
