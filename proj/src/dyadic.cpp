#include "tpants/dyadic.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace tpants {

namespace {

BigInt pow2(std::int64_t k) { return BigInt(1) << static_cast<unsigned>(k); }

BigInt floor_div_pow2(const BigInt& num, std::int64_t k) {
  if (k == 0) return num;
  BigInt m = pow2(k);
  BigInt q = num / m;
  if (num < 0 && q * m != num) q -= 1;
  return q;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed integer");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw std::invalid_argument("malformed integer: " + std::string(s));
  return BigInt(std::string(s));
}

}  // namespace

Dyadic::Dyadic(BigInt numerator, std::int64_t exponent) : num_(std::move(numerator)), exp_(exponent) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ < 0) {
    num_ <<= static_cast<unsigned>(-exp_);
    exp_ = 0;
    return;
  }
  if (exp_ > 0) {
    auto sign = num_ < 0;
    if (sign) num_ = -num_;
    auto tz = static_cast<std::int64_t>(boost::multiprecision::lsb(num_));
    auto strip = std::min(tz, exp_);
    if (strip > 0) {
      num_ >>= static_cast<unsigned>(strip);
      exp_ -= strip;
    }
    if (sign) num_ = -num_;
  }
}

Dyadic dyadic_normalize(BigInt numerator, std::int64_t exponent) {
  if (exponent < 0) throw PreconditionError("dyadic exponent must be non-negative");
  return Dyadic(std::move(numerator), exponent);
}

Dyadic Dyadic::scaled(std::int64_t shift) const { return Dyadic(num_, exp_ - shift); }

BigInt Dyadic::floor() const { return floor_div_pow2(num_, exp_); }

Dyadic Dyadic::frac() const {
  if (exp_ == 0) return Dyadic();
  BigInt m = pow2(exp_);
  BigInt r = num_ % m;
  if (r < 0) r += m;
  return Dyadic(std::move(r), exp_);
}

BigInt Dyadic::over(std::int64_t level) const {
  if (exp_ > level) throw PreconditionError("dyadic is finer than the requested level");
  return num_ << static_cast<unsigned>(level - exp_);
}

Dyadic operator+(const Dyadic& x, const Dyadic& y) {
  if (x.exp_ == y.exp_) return Dyadic(x.num_ + y.num_, x.exp_);
  if (x.exp_ < y.exp_)
    return Dyadic((x.num_ << static_cast<unsigned>(y.exp_ - x.exp_)) + y.num_, y.exp_);
  return Dyadic(x.num_ + (y.num_ << static_cast<unsigned>(x.exp_ - y.exp_)), x.exp_);
}

Dyadic operator-(const Dyadic& x) {
  Dyadic r = x;
  r.num_ = -r.num_;
  return r;
}

Dyadic operator-(const Dyadic& x, const Dyadic& y) { return x + (-y); }

std::strong_ordering operator<=>(const Dyadic& x, const Dyadic& y) {
  int c;
  if (x.exp_ == y.exp_) {
    c = x.num_.compare(y.num_);
  } else if (x.exp_ < y.exp_) {
    BigInt lhs = x.num_ << static_cast<unsigned>(y.exp_ - x.exp_);
    c = lhs.compare(y.num_);
  } else {
    BigInt rhs = y.num_ << static_cast<unsigned>(x.exp_ - y.exp_);
    c = x.num_.compare(rhs);
  }
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::to_string() const {
  if (num_ == 0) return "0";
  return num_.str() + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_int(text), 0);
  BigInt num = parse_int(text.substr(0, slash));
  std::string_view den = trim(text.substr(slash + 1));
  if (den.starts_with("2^")) {
    BigInt k = parse_int(den.substr(2));
    if (k < 0 || k > (BigInt(1) << 62)) throw std::invalid_argument("bad exponent in dyadic");
    return dyadic_normalize(std::move(num), static_cast<std::int64_t>(k));
  }
  BigInt d = parse_int(den);
  if (d <= 0 || (d & (d - 1)) != 0)
    throw std::invalid_argument("denominator is not a power of two: " + std::string(text));
  return Dyadic(std::move(num), static_cast<std::int64_t>(boost::multiprecision::msb(d)));
}

std::size_t Dyadic::hash() const {
  return std::hash<BigInt>()(num_) ^ (static_cast<std::size_t>(exp_) * 0x100000001b3ULL);
}

bool circle_strictly_between(const CirclePoint& x, const CirclePoint& p, const CirclePoint& q) {
  if (p == q) throw PreconditionError("circle_strictly_between: empty interval (p == q)");
  if (p < q) return p < x && x < q;
  return x > p || x < q;
}

StdInterval::StdInterval(BigInt a_, std::int64_t n_) : a(std::move(a_)), n(n_) {
  if (n < 0) throw PreconditionError("standard interval level must be non-negative");
  if (a < 0 || a >= pow2(n)) throw PreconditionError("standard interval index out of range");
}

StdInterval StdInterval::parent() const {
  if (n == 0) throw PreconditionError("the unit interval has no parent");
  return {a >> 1, n - 1};
}

std::strong_ordering operator<=>(const StdInterval& x, const StdInterval& y) {
  if (auto c = x.n <=> y.n; c != 0) return c;
  int c = x.a.compare(y.a);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Arc::Arc(const CirclePoint& p, const CirclePoint& q) {
  if (p == q) throw PreconditionError("arc endpoints must be distinct: " + p.to_string());
  if (p < q) {
    lo_ = p;
    hi_ = q;
  } else {
    lo_ = q;
    hi_ = p;
  }
}

std::string Arc::to_string() const { return "{" + lo_.to_string() + ", " + hi_.to_string() + "}"; }

Arc e_arc(const StdInterval& s) {
  if (s.n < 1) throw PreconditionError("I_0^0 is not an arc");
  return Arc(s.lo(), s.hi());
}

bool arcs_cross(const Arc& e, const Arc& f) {
  if (e.has_endpoint(f.lo()) || e.has_endpoint(f.hi())) return false;
  bool a = e.lo() < f.lo() && f.lo() < e.hi();
  bool b = e.lo() < f.hi() && f.hi() < e.hi();
  return a != b;
}

std::optional<StdInterval> is_E_arc(const Arc& e) {
  const Dyadic& p = e.lo().value();
  const Dyadic& q = e.hi().value();
  Dyadic gap = q - p;
  if (gap.numerator() == 1 && gap.exponent() >= 1 && p.exponent() <= gap.exponent())
    return StdInterval(p.over(gap.exponent()), gap.exponent());
  Dyadic wrap = Dyadic(1) - gap;
  if (p.is_zero() && wrap.numerator() == 1 && wrap.exponent() >= 1) {
    auto n = wrap.exponent();
    return StdInterval(pow2(n) - 1, n);
  }
  return std::nullopt;
}

ETriangle::ETriangle(BigInt a_, std::int64_t n_) : a(std::move(a_)), n(n_) {
  if (n < 1) throw PreconditionError("E-triangles live at level >= 1");
  if (a < 0 || a >= pow2(n)) throw PreconditionError("E-triangle index out of range");
}

std::vector<CirclePoint> ETriangle::vertices() const {
  auto b = base();
  std::vector<CirclePoint> v{CirclePoint(b.lo()), CirclePoint(b.midpoint()), CirclePoint(b.hi())};
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Arc> ETriangle::sides() const {
  auto b = base();
  return {e_arc(b), e_arc(b.left_child()), e_arc(b.right_child())};
}

std::optional<ETriangle> ETriangle::parent() const {
  if (n == 1) return std::nullopt;
  return ETriangle(a >> 1, n - 1);
}

std::strong_ordering operator<=>(const ETriangle& x, const ETriangle& y) {
  return StdInterval(x.a, x.n) <=> StdInterval(y.a, y.n);
}

std::pair<ETriangle, ETriangle> e_arc_adjacent_triangles(const StdInterval& s) {
  if (s.n < 1) throw PreconditionError("e_arc_adjacent_triangles: n must be >= 1");
  if (s.n == 1) return {ETriangle(0, 1), ETriangle(1, 1)};
  return {ETriangle(s.a, s.n), ETriangle(s.a >> 1, s.n - 1)};
}

std::optional<ETriangle> etriangle_from_vertices(const CirclePoint& x, const CirclePoint& y,
                                                 const CirclePoint& z) {
  std::vector<CirclePoint> v{x, y, z};
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2]) return std::nullopt;
  for (int r = 0; r < 3; ++r) {
    const Dyadic& p = v[r].value();
    const Dyadic& m = v[(r + 1) % 3].value();
    const Dyadic& q = v[(r + 2) % 3].value();
    Dyadic len = q - p;
    if (len < Dyadic()) len = len + Dyadic(1);
    if (len.numerator() != 1 || len.exponent() < 1) continue;
    auto n = len.exponent();
    if (p.exponent() > n) continue;
    if ((p + len.half()).frac() != m) continue;
    return ETriangle(p.over(n), n);
  }
  return std::nullopt;
}

std::vector<StdInterval> crossed_e_arcs(const Arc& e) {
  std::set<StdInterval> out;
  for (const CirclePoint* p : {&e.lo(), &e.hi()}) {
    const Dyadic& x = p->value();
    for (std::int64_t n = 1; n < x.exponent(); ++n) {
      StdInterval s(x.scaled(n).floor(), n);
      if (n == 1) s = StdInterval(0, 1);
      if (arcs_cross(e_arc(s), e)) out.insert(s);
    }
  }
  return {out.begin(), out.end()};
}

std::optional<ETriangle> triangle_with_apex(const CirclePoint& x) {
  const Dyadic& d = x.value();
  if (d.exponent() < 2) return std::nullopt;
  return ETriangle(d.numerator() >> 1, d.exponent() - 1);
}

}  // namespace tpants
