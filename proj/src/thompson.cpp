#include "tpants/thompson.hpp"

#include <algorithm>

namespace tpants {

namespace {

BigInt pow2(std::int64_t k) { return BigInt(1) << static_cast<unsigned>(k); }

bool siblings(const StdInterval& left, const StdInterval& right) {
  return left.n >= 1 && left.n == right.n && left.is_left_child() && right.a == left.a + 1;
}

StdInterval interval_between(const Dyadic& lo, const Dyadic& hi) {
  Dyadic len = hi - lo;
  if (len.numerator() != 1 || lo.exponent() > len.exponent())
    throw PreconditionError("not a standard dyadic interval: [" + lo.to_string() + ", " +
                            hi.to_string() + "]");
  return {lo.over(len.exponent()), len.exponent()};
}

void validate(const std::vector<Piece>& pieces) {
  if (pieces.empty()) throw PreconditionError("element has no pieces");
  Dyadic cursor;
  for (const auto& p : pieces) {
    if (p.source.lo() != cursor) throw PreconditionError("source intervals do not tile [0,1]");
    cursor = p.source.hi();
  }
  if (cursor != Dyadic(1)) throw PreconditionError("source intervals do not reach 1");
  // Targets must tile the circle once, in the same cyclic order.
  std::size_t start = pieces.size();
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (pieces[i].target.lo().is_zero()) {
      if (start != pieces.size()) throw PreconditionError("two targets start at 0");
      start = i;
    }
  if (start == pieces.size()) throw PreconditionError("no target starts at 0");
  cursor = Dyadic();
  for (std::size_t r = 0; r < pieces.size(); ++r) {
    const auto& t = pieces[(start + r) % pieces.size()].target;
    if (t.lo() != cursor) throw PreconditionError("target intervals are not in cyclic order");
    cursor = t.hi();
  }
  if (cursor != Dyadic(1)) throw PreconditionError("target intervals do not cover the circle");
}

std::vector<Piece> reduce_pieces(const std::vector<Piece>& pieces) {
  std::vector<Piece> stack;
  stack.reserve(pieces.size());
  for (const auto& p : pieces) {
    stack.push_back(p);
    while (stack.size() >= 2) {
      const Piece& x = stack[stack.size() - 2];
      const Piece& y = stack.back();
      if (!siblings(x.source, y.source) || !siblings(x.target, y.target)) break;
      Piece merged{x.source.parent(), x.target.parent()};
      stack.pop_back();
      stack.back() = std::move(merged);
    }
  }
  if (stack.size() == 1) return t_identity().pieces();
  return stack;
}

Piece inverted(const Piece& p) { return {p.target, p.source}; }

}  // namespace

Dyadic map_through(const Piece& piece, const Dyadic& x) {
  return piece.target.lo() + (x - piece.source.lo()).scaled(piece.source.n - piece.target.n);
}

StdInterval map_through(const Piece& piece, const StdInterval& sub) {
  auto depth = sub.n - piece.source.n;
  if (depth < 0 || (sub.a >> static_cast<unsigned>(depth)) != piece.source.a)
    throw PreconditionError("interval is not inside the piece source");
  BigInt k = sub.a - (piece.source.a << static_cast<unsigned>(depth));
  return {(piece.target.a << static_cast<unsigned>(depth)) + k, piece.target.n + depth};
}

TElement::TElement() : pieces_{{StdInterval(0, 1), StdInterval(0, 1)}, {StdInterval(1, 1), StdInterval(1, 1)}} {}

TElement TElement::from_pieces(std::vector<Piece> pieces) {
  validate(pieces);
  return TElement(reduce_pieces(pieces));
}

TElement TElement::unreduced(std::vector<Piece> pieces) {
  validate(pieces);
  return TElement(std::move(pieces));
}

StdPartition TElement::source() const {
  StdPartition out;
  for (const auto& p : pieces_) out.push_back(p.source.lo());
  out.push_back(Dyadic(1));
  return out;
}

StdPartition TElement::target() const {
  StdPartition out;
  for (const auto& p : pieces_) out.push_back(p.target.lo());
  std::sort(out.begin(), out.end());
  out.push_back(Dyadic(1));
  return out;
}

std::size_t TElement::offset() const {
  std::size_t k = pieces_.size();
  for (std::size_t i = 0; i < k; ++i)
    if (pieces_[i].target.lo().is_zero()) return (k - i) % k;
  return 0;
}

bool TElement::is_reduced() const { return reduce_pieces(pieces_) == pieces_; }

bool TElement::is_identity() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& p) { return p.source == p.target; });
}

std::size_t TElement::piece_index(const Dyadic& x) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Dyadic& v, const Piece& p) { return v < p.source.lo(); });
  return static_cast<std::size_t>(it - pieces_.begin()) - 1;
}

TElement t_identity() { return TElement(); }

TElement t_alpha() {
  std::vector<Piece> pieces;
  for (int a = 0; a < 4; ++a) pieces.push_back({StdInterval(a, 2), StdInterval((a + 1) % 4, 2)});
  return TElement::from_pieces(std::move(pieces));
}

TElement t_beta() {
  return TElement::from_pieces({{StdInterval(0, 2), StdInterval(1, 2)},
                                {StdInterval(1, 2), StdInterval(1, 1)},
                                {StdInterval(1, 1), StdInterval(0, 2)}});
}

CirclePoint t_evaluate(const TElement& f, const CirclePoint& x) {
  const auto& piece = f.pieces()[f.piece_index(x.value())];
  return CirclePoint(map_through(piece, x.value()));
}

TElement t_expand(const TElement& f, std::size_t index) {
  if (index >= f.size()) throw PreconditionError("t_expand: index out of range");
  std::vector<Piece> pieces = f.pieces();
  Piece p = pieces[index];
  pieces[index] = {p.source.left_child(), p.target.left_child()};
  pieces.insert(pieces.begin() + static_cast<std::ptrdiff_t>(index) + 1,
                Piece{p.source.right_child(), p.target.right_child()});
  return TElement::unreduced(std::move(pieces));
}

TElement t_reduce(const TElement& f) { return TElement::from_pieces(f.pieces()); }

TElement t_compose(const TElement& f, const TElement& g) {
  const auto& fp = f.pieces();
  std::vector<Piece> out;
  out.reserve(fp.size() + g.size());
  for (const auto& pg : g.pieces()) {
    const StdInterval& mid = pg.target;
    std::size_t i = f.piece_index(mid.lo());
    if (fp[i].source.n <= mid.n) {
      out.push_back({pg.source, map_through(fp[i], mid)});
      continue;
    }
    // mid is a union of consecutive f-sources.
    Dyadic end = mid.hi();
    Piece back = inverted(pg);
    for (; i < fp.size() && fp[i].source.lo() < end; ++i)
      out.push_back({map_through(back, fp[i].source), fp[i].target});
  }
  return TElement::from_pieces(std::move(out));
}

TElement t_inverse(const TElement& f) {
  std::vector<Piece> pieces;
  for (const auto& p : f.pieces()) pieces.push_back(inverted(p));
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& x, const Piece& y) { return x.source.lo() < y.source.lo(); });
  return TElement::from_pieces(std::move(pieces));
}

TElement t_from_word(std::string_view word) {
  static const TElement alpha = t_alpha();
  static const TElement beta = t_beta();
  static const TElement alpha_inv = t_inverse(alpha);
  static const TElement beta_inv = t_inverse(beta);
  TElement result;
  for (char c : word) {
    switch (c) {
      case 'a': result = t_compose(result, alpha); break;
      case 'A': result = t_compose(result, alpha_inv); break;
      case 'b': result = t_compose(result, beta); break;
      case 'B': result = t_compose(result, beta_inv); break;
      default:
        throw PreconditionError(std::string("word letter must be one of a, A, b, B; got '") + c + "'");
    }
  }
  return result;
}

TElement t_from_polygons(const StdPartition& source, const StdPartition& target, std::size_t j) {
  if (source.size() != target.size())
    throw PreconditionError("t_from_polygons: partitions have different sizes");
  if (source.size() < 2) throw PreconditionError("t_from_polygons: empty partition");
  for (const StdPartition* part : {&source, &target})
    if (!part->front().is_zero() || part->back() != Dyadic(1))
      throw PreconditionError("t_from_polygons: partition must run from 0 to 1");
  std::size_t k = source.size() - 1;
  if (j >= k) throw PreconditionError("t_from_polygons: offset out of range");
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t t = (i + j) % k;
    pieces.push_back({interval_between(source[i], source[i + 1]), interval_between(target[t], target[t + 1])});
  }
  return TElement::from_pieces(std::move(pieces));
}

TElement t_from_vertex_map(std::vector<std::pair<Dyadic, Dyadic>> pairs) {
  if (pairs.size() < 2) throw PreconditionError("t_from_vertex_map: need at least two vertices");
  std::sort(pairs.begin(), pairs.end());
  if (!pairs.front().first.is_zero())
    throw PreconditionError("t_from_vertex_map: source vertices must include 0");
  StdPartition source, target;
  for (const auto& [x, y] : pairs) {
    source.push_back(x);
    target.push_back(y);
  }
  source.push_back(Dyadic(1));
  Dyadic first = target.front();
  std::sort(target.begin(), target.end());
  if (!target.front().is_zero())
    throw PreconditionError("t_from_vertex_map: target vertices must include 0");
  if (std::adjacent_find(target.begin(), target.end()) != target.end())
    throw PreconditionError("t_from_vertex_map: target vertices repeat");
  auto j = static_cast<std::size_t>(std::lower_bound(target.begin(), target.end(), first) - target.begin());
  // The image sequence must be the sorted targets rotated by j.
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].second != target[(i + j) % pairs.size()])
      throw PreconditionError("t_from_vertex_map: images are not in cyclic order");
  target.push_back(Dyadic(1));
  return t_from_polygons(source, target, j);
}

CirclePoint reflect(const CirclePoint& x) { return CirclePoint(Dyadic(1) - x.value()); }

StdInterval reflect(const StdInterval& s) { return {pow2(s.n) - 1 - s.a, s.n}; }

std::string t_inverse_word(std::string_view word) {
  std::string out(word.rbegin(), word.rend());
  for (auto& c : out) {
    if (c == 'a' || c == 'b')
      c = static_cast<char>(c - 'a' + 'A');
    else if (c == 'A' || c == 'B')
      c = static_cast<char>(c - 'A' + 'a');
    else
      throw PreconditionError(std::string("unknown letter in word: ") + c);
  }
  return out;
}

std::vector<Relator> t_relators() {
  auto commutator = [](const std::string& x, const std::string& y) {
    return x + y + t_inverse_word(x) + t_inverse_word(y);
  };
  return {{"alpha^4", "aaaa"},
          {"beta^3", "bbb"},
          {"(beta alpha)^5", "bababababa"},
          {"[beta alpha beta, alpha^2 beta alpha beta alpha^2]", commutator("bab", "aababaa")},
          {"[beta alpha beta, alpha^2 beta^2 alpha^2 beta alpha beta alpha^2 beta alpha^2]",
           commutator("bab", "aabbaababaabaa")}};
}

TElement gamma_R(const TElement& f) {
  std::vector<Piece> pieces;
  for (const auto& p : f.pieces()) pieces.push_back({reflect(p.source), reflect(p.target)});
  std::reverse(pieces.begin(), pieces.end());
  return TElement::from_pieces(std::move(pieces));
}

TElement brin_outer(const TElement& f) {
  static const TElement half_turn = t_from_word("aa");
  return t_compose(half_turn, t_compose(gamma_R(f), half_turn));
}

ExtElement ext_reflection() { return {TElement(), true}; }

ExtElement ext_compose(const ExtElement& g, const ExtElement& h) {
  // t1 rho^r1 t2 rho^r2 = t1 (rho^r1 t2 rho^r1) rho^(r1 + r2)
  TElement moved = g.reflected ? gamma_R(h.t) : h.t;
  return {t_compose(g.t, moved), g.reflected != h.reflected};
}

ExtElement ext_inverse(const ExtElement& g) {
  TElement inv = t_inverse(g.t);
  return {g.reflected ? gamma_R(inv) : inv, g.reflected};
}

CirclePoint ext_evaluate(const ExtElement& g, const CirclePoint& x) {
  return t_evaluate(g.t, g.reflected ? reflect(x) : x);
}

std::vector<CirclePoint> ext_breakpoints(const ExtElement& g) {
  std::vector<CirclePoint> out;
  for (const auto& p : g.t.pieces()) {
    CirclePoint x(p.source.lo());
    out.push_back(g.reflected ? reflect(x) : x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tpants
