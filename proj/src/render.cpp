#include "tpants/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace tpants {

namespace {

double to_double(const Dyadic& x) {
  return std::ldexp(x.numerator().convert_to<double>(), -static_cast<int>(x.exponent()));
}

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

// "3/4" rather than the serialized "3/2^2".
std::string label(const CirclePoint& x) {
  const Dyadic& d = x.value();
  if (d.is_zero()) return "0";
  return d.numerator().str() + "/" + (BigInt(1) << static_cast<unsigned>(d.exponent())).str();
}

struct Canvas {
  double c, r;

  double angle(const CirclePoint& x) const { return 2 * std::numbers::pi * to_double(x.value()); }
  // SVG y grows downwards, so counterclockwise on the circle is -y.
  std::string at(double theta, double radius) const {
    return fixed(c + radius * std::cos(theta)) + " " + fixed(c - radius * std::sin(theta));
  }

  std::string geodesic(const Arc& e) const {
    Dyadic span = e.hi().value() - e.lo().value();
    Dyadic half(BigInt(1), 1);
    if (span == half) return "M " + at(angle(e.lo()), r) + " L " + at(angle(e.hi()), r);
    // Start where the counterclockwise gap to the other endpoint is short.
    const CirclePoint& p = span < half ? e.lo() : e.hi();
    const CirclePoint& q = span < half ? e.hi() : e.lo();
    double delta = to_double((span < half ? span : Dyadic(1) - span));
    double radius = r * std::tan(std::numbers::pi * delta);
    return "M " + at(angle(p), r) + " A " + fixed(radius) + " " + fixed(radius) + " 0 0 1 " + at(angle(q), r);
  }
};

}  // namespace

std::string render_svg(const FinTriangulation& v, const Polygon& region, const RenderOptions& options) {
  double size = options.size;
  Canvas cv{size / 2, size / 2 - 40};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size << "\" height=\"" << options.size
      << "\" viewBox=\"0 0 " << options.size << " " << options.size << "\">\n";
  out << "<circle cx=\"" << fixed(cv.c) << "\" cy=\"" << fixed(cv.c) << "\" r=\"" << fixed(cv.r)
      << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  auto draw = [&](const Arc& e, const char* colour, double width) {
    out << "<path d=\"" << cv.geodesic(e) << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\""
        << width << "\"/>\n";
  };
  for (const auto& s : region.sides()) draw(s, v.is_removed(s) ? "#cccccc" : "#000000", 1.5);
  for (const auto& e : tri_arcs_in_region(v, region)) draw(e, v.is_added(e) ? "#cc0000" : "#000000", 1.5);
  if (options.labels)
    for (const auto& x : region.vertices()) {
      double theta = cv.angle(x);
      out << "<circle cx=\"" << fixed(cv.c + cv.r * std::cos(theta)) << "\" cy=\""
          << fixed(cv.c - cv.r * std::sin(theta)) << "\" r=\"2\" fill=\"#000000\"/>\n";
      std::string pos = cv.at(theta, cv.r + 18);
      auto space = pos.find(' ');
      out << "<text x=\"" << pos.substr(0, space) << "\" y=\"" << pos.substr(space + 1)
          << "\" font-family=\"serif\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
          << label(x) << "</text>\n";
    }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tpants
