#pragma once

// Exact dyadic rationals, points of the circle R/Z, and the combinatorics of
// the Farey-style tessellation E whose arcs join a/2^n to (a+1)/2^n.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tpants {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// numerator / 2^exponent, kept in canonical form: the numerator is odd, or
/// the value is zero and stored as (0, 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt numerator, std::int64_t exponent);
  explicit Dyadic(long long integer) : Dyadic(BigInt(integer), 0) {}

  const BigInt& numerator() const { return num_; }
  std::int64_t exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  /// value * 2^shift (shift may be negative).
  Dyadic scaled(std::int64_t shift) const;
  Dyadic half() const { return scaled(-1); }
  /// Representative of the value modulo 1 in [0, 1).
  Dyadic frac() const;
  /// Largest integer <= value.
  BigInt floor() const;
  /// numerator of the value written over 2^level; requires exponent() <= level.
  BigInt over(std::int64_t level) const;

  friend Dyadic operator+(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator-(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator-(const Dyadic& x);
  friend bool operator==(const Dyadic& x, const Dyadic& y) = default;
  friend std::strong_ordering operator<=>(const Dyadic& x, const Dyadic& y);

  /// "num/2^k" in canonical form; zero is "0".
  std::string to_string() const;
  /// Accepts "num/2^k", "num/d" with d a power of two, or a bare integer.
  static Dyadic parse(std::string_view text);

  std::size_t hash() const;

 private:
  BigInt num_{0};
  std::int64_t exp_{0};
};

Dyadic dyadic_normalize(BigInt numerator, std::int64_t exponent);

/// A point of the boundary circle S^1 = [0,1]/0~1, parametrised counterclockwise.
class CirclePoint {
 public:
  CirclePoint() = default;
  /// Reduces modulo 1.
  explicit CirclePoint(const Dyadic& value) : value_(value.frac()) {}
  CirclePoint(BigInt numerator, std::int64_t exponent)
      : CirclePoint(Dyadic(std::move(numerator), exponent)) {}

  const Dyadic& value() const { return value_; }
  std::string to_string() const { return value_.to_string(); }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
  friend std::strong_ordering operator<=>(const CirclePoint& x, const CirclePoint& y) {
    return x.value_ <=> y.value_;
  }

 private:
  Dyadic value_;
};

/// True iff x lies strictly inside the counterclockwise interval from p to q.
bool circle_strictly_between(const CirclePoint& x, const CirclePoint& p, const CirclePoint& q);

/// The standard dyadic interval [a/2^n, (a+1)/2^n].
struct StdInterval {
  BigInt a;
  std::int64_t n = 0;

  StdInterval() = default;
  StdInterval(BigInt a_, std::int64_t n_);

  Dyadic lo() const { return Dyadic(a, n); }
  Dyadic hi() const { return Dyadic(a + 1, n); }
  Dyadic midpoint() const { return Dyadic(2 * a + 1, n + 1); }
  StdInterval left_child() const { return {2 * a, n + 1}; }
  StdInterval right_child() const { return {2 * a + 1, n + 1}; }
  StdInterval parent() const;
  bool is_left_child() const { return (a & 1) == 0; }
  bool contains(const Dyadic& x) const { return lo() <= x && x <= hi(); }

  friend bool operator==(const StdInterval&, const StdInterval&) = default;
  friend std::strong_ordering operator<=>(const StdInterval& x, const StdInterval& y);
};

/// An unordered pair of distinct boundary points, smaller value first.
class Arc {
 public:
  Arc(const CirclePoint& p, const CirclePoint& q);
  Arc(const Dyadic& p, const Dyadic& q) : Arc(CirclePoint(p), CirclePoint(q)) {}

  const CirclePoint& lo() const { return lo_; }
  const CirclePoint& hi() const { return hi_; }
  bool has_endpoint(const CirclePoint& x) const { return x == lo_ || x == hi_; }
  std::string to_string() const;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend std::strong_ordering operator<=>(const Arc&, const Arc&) = default;

 private:
  CirclePoint lo_;
  CirclePoint hi_;
};

/// The geodesic of E carried by a standard interval; n must be at least 1.
Arc e_arc(const StdInterval& s);

/// True iff the two chords cross in the open disk; sharing an endpoint is not crossing.
bool arcs_cross(const Arc& e, const Arc& f);

/// Returns (a, n), n >= 1, when e is the E-arc {a/2^n, (a+1)/2^n}. The
/// geodesic {0, 1/2} is reported as (0, 1).
std::optional<StdInterval> is_E_arc(const Arc& e);

/// The E-triangle with vertices a/2^n, (2a+1)/2^(n+1), (a+1)/2^n.
struct ETriangle {
  BigInt a;
  std::int64_t n = 1;

  ETriangle() = default;
  ETriangle(BigInt a_, std::int64_t n_);

  StdInterval base() const { return {a, n}; }
  CirclePoint apex() const { return CirclePoint(base().midpoint()); }
  /// Vertices in increasing circle-value order.
  std::vector<CirclePoint> vertices() const;
  std::vector<Arc> sides() const;
  /// The neighbouring triangle across the base, or none for the two level-1 triangles.
  std::optional<ETriangle> parent() const;

  friend bool operator==(const ETriangle&, const ETriangle&) = default;
  friend std::strong_ordering operator<=>(const ETriangle& x, const ETriangle& y);
};

/// The two E-triangles bordering the E-arc of s: the child (a, n) and the
/// parent (a/2, n-1); for n = 1 the two level-1 triangles.
std::pair<ETriangle, ETriangle> e_arc_adjacent_triangles(const StdInterval& s);

/// The E-triangle with the given three vertices, if they span one.
std::optional<ETriangle> etriangle_from_vertices(const CirclePoint& x, const CirclePoint& y,
                                                 const CirclePoint& z);

/// The E-arcs crossed by the chord e (finitely many).
std::vector<StdInterval> crossed_e_arcs(const Arc& e);

/// The E-triangle whose apex is x; none for 0 and 1/2, which are vertices of the central arc.
std::optional<ETriangle> triangle_with_apex(const CirclePoint& x);

}  // namespace tpants

template <>
struct std::hash<tpants::Dyadic> {
  std::size_t operator()(const tpants::Dyadic& d) const noexcept { return d.hash(); }
};

template <>
struct std::hash<tpants::CirclePoint> {
  std::size_t operator()(const tpants::CirclePoint& p) const noexcept {
    return p.value().hash();
  }
};

template <>
struct std::hash<tpants::Arc> {
  std::size_t operator()(const tpants::Arc& e) const noexcept {
    return e.lo().value().hash() * 0x9e3779b97f4a7c15ULL ^ e.hi().value().hash();
  }
};
