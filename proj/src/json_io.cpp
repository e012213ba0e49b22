#include "tpants/json_io.hpp"

#include <algorithm>
#include <limits>

namespace tpants::io {

namespace {

Json big(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw FormatError("expected an integer, got " + j.dump());
}

template <class T>
Json list(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

const char* kind_name(CellKind k) { return k == CellKind::Square ? "square" : "pentagon"; }

Json witness_json(const MixedWitness& w) {
  Json out;
  out["reversed"] = Json::array();
  out["preserved"] = Json::array();
  for (const auto& e : w.reversed) out["reversed"].push_back(to_json(e));
  for (const auto& e : w.preserved) out["preserved"].push_back(to_json(e));
  return out;
}

}  // namespace

Json to_json(const Dyadic& x) { return x.to_string(); }
Json to_json(const CirclePoint& x) { return x.to_string(); }
Json to_json(const Arc& e) { return Json::array({to_json(e.lo()), to_json(e.hi())}); }

Json to_json(const TElement& f) {
  Json out;
  out["source"] = list(f.source());
  out["target"] = list(f.target());
  out["offset"] = f.offset();
  return out;
}

Json to_json(const ExtElement& g) {
  Json out = to_json(g.t);
  out["reflected"] = g.reflected ? 1 : 0;
  return out;
}

Json to_json(const FinTriangulation& v) {
  Json out;
  out["removed"] = list(v.removed());
  out["added"] = list(v.added());
  return out;
}

Json to_json(const Polygon& p) {
  Json out = Json::array();
  for (const auto& s : p.sides()) {
    auto i = *is_E_arc(s);
    out.push_back(Json::array({big(i.a), i.n}));
  }
  return out;
}

Json to_json(const Ball& b) {
  Json out;
  out["vertices"] = list(b.vertices);
  out["distances"] = b.distance;
  return out;
}

Json to_json(const LinkGraph& l) {
  Json out;
  out["vertices"] = list(l.vertices);
  out["frontier"] = l.frontier;
  out["edges"] = l.edges;
  out["triangles"] = l.triangles;
  return out;
}

Json to_json(const Cell& c) {
  Json out;
  out["kind"] = kind_name(c.kind);
  out["base"] = to_json(c.base);
  out["arcs"] = Json::array({to_json(c.arcs[0]), to_json(c.arcs[1])});
  out["boundary"] = list(c.boundary);
  return out;
}

Json to_json(const DistanceResult& d) {
  Json out;
  out["distance"] = d.value;
  out["lower_bound"] = d.lower_bound;
  out["flag"] = d.flag == DistanceFlag::Exact ? "EXACT" : "REGION-EXACT";
  out["path"] = list(d.path);
  return out;
}

Json to_json(const LinkIso& iso) {
  Json out;
  out["source"] = to_json(iso.source);
  out["target"] = to_json(iso.target);
  out["source_region"] = to_json(iso.source_region);
  out["target_region"] = to_json(iso.target_region);
  out["pairs"] = Json::array();
  for (const auto& [a, b] : iso.pairs) out["pairs"].push_back(Json::array({to_json(a), to_json(b)}));
  return out;
}

Json to_json(const OrientationVerdict& v) {
  static const char* names[] = {"preserving", "reversing", "mixed"};
  Json out;
  out["orientation"] = names[static_cast<int>(v.kind)];
  out["signs"] = v.signs;
  if (v.witness) out["witness"] = witness_json(*v.witness);
  return out;
}

Json to_json(const Obstruction& o) {
  Json out;
  out["witness"] = witness_json(o.witness);
  out["u0"] = to_json(o.u0);
  out["u5"] = to_json(o.u5);
  out["u6"] = to_json(o.u6);
  out["image_u0"] = to_json(o.image_u0);
  out["image_u5"] = to_json(o.image_u5);
  out["image_u6"] = to_json(o.image_u6);
  out["source_cell"] = to_json(o.source_cell);
  out["target_cell"] = to_json(o.target_cell);
  return out;
}

Json to_json(const NonhypInstance& inst) {
  Json out;
  out["n"] = inst.n;
  out["level"] = inst.level;
  out["squares"] = list(inst.squares);
  out["u"] = to_json(inst.u);
  out["v"] = to_json(inst.v);
  out["w"] = to_json(inst.w);
  out["p"] = to_json(inst.p);
  return out;
}

Json to_json(const PolyTriangulation& t) { return t.diagonals; }

Json to_json(const OracleGraph& g) {
  Json out;
  out["n"] = g.n;
  out["vertices"] = list(g.vertices);
  out["edges"] = g.edges;
  return out;
}

Json to_json(const ValidationError& e) {
  Json out;
  out["error"] = "validation";
  out["fault"] = to_string(e.fault());
  out["witnesses"] = list(e.witnesses());
  out["message"] = e.what();
  return out;
}

Dyadic dyadic_from_json(const Json& j) {
  if (j.is_number_integer()) return Dyadic(j.get<long long>());
  if (!j.is_string()) throw FormatError("expected a dyadic string, got " + j.dump());
  try {
    return Dyadic::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Arc arc_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("an arc is a pair of dyadics, got " + j.dump());
  return Arc(dyadic_from_json(j[0]), dyadic_from_json(j[1]));
}

ExtElement element_from_json(const Json& j) {
  std::vector<Dyadic> source, target;
  for (const auto& x : field(j, "source")) source.push_back(dyadic_from_json(x));
  for (const auto& x : field(j, "target")) target.push_back(dyadic_from_json(x));
  const auto& off = field(j, "offset");
  if (!off.is_number_integer() || off.get<std::int64_t>() < 0) throw FormatError("offset must be a natural number");
  bool reflected = j.contains("reflected") && j.at("reflected").get<int>() != 0;
  return {t_from_polygons(source, target, off.get<std::size_t>()), reflected};
}

FinTriangulation vertex_from_json(const Json& j) {
  std::vector<StdInterval> removed;
  std::vector<Arc> added;
  for (const auto& x : field(j, "removed")) {
    Arc e = arc_from_json(x);
    auto s = is_E_arc(e);
    if (!s) throw FormatError("removed arc " + e.to_string() + " is not an E-arc");
    removed.push_back(*s);
  }
  for (const auto& x : field(j, "added")) added.push_back(arc_from_json(x));
  return tri_validate(std::move(removed), std::move(added));
}

Polygon polygon_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("a region is a list of [a, n] pairs");
  std::vector<StdInterval> sides;
  for (const auto& s : j) {
    if (!s.is_array() || s.size() != 2 || !s[1].is_number_integer())
      throw FormatError("a region side is an [a, n] pair, got " + s.dump());
    sides.emplace_back(big_from_json(s[0]), s[1].get<std::int64_t>());
  }
  return Polygon::from_sides(sides);
}

LinkIso link_iso_from_json(const Json& j) {
  LinkIso iso{vertex_from_json(field(j, "source")), vertex_from_json(field(j, "target")),
              polygon_from_json(field(j, "source_region")), polygon_from_json(field(j, "target_region")), {}};
  for (const auto& p : field(j, "pairs")) {
    if (!p.is_array() || p.size() != 2) throw FormatError("a pair is [source arc, target arc]");
    iso.pairs.emplace_back(arc_from_json(p[0]), arc_from_json(p[1]));
  }
  std::sort(iso.pairs.begin(), iso.pairs.end());
  return iso;
}

PolyTriangulation poly_from_json(const Json& j, int n) {
  if (!j.is_array()) throw FormatError("a triangulation is a list of [i, j] diagonals");
  PolyTriangulation t{n, {}};
  for (const auto& d : j) {
    if (!d.is_array() || d.size() != 2) throw FormatError("a diagonal is an [i, j] pair, got " + d.dump());
    int a = d[0].get<int>(), b = d[1].get<int>();
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw FormatError("diagonal index out of range: " + d.dump());
    t.diagonals.push_back(std::minmax(a, b));
  }
  std::sort(t.diagonals.begin(), t.diagonals.end());
  return t;
}

Polygon parse_region(const std::string& text) {
  if (text.starts_with("level:")) {
    int m;
    try {
      m = std::stoi(text.substr(6));
    } catch (const std::exception&) {
      throw FormatError("bad region shorthand: " + text);
    }
    if (m < 1 || m > 20) throw FormatError("region level must lie in [1, 20]");
    return Polygon::level(m);
  }
  try {
    return polygon_from_json(Json::parse(text));
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("region is neither level:m nor JSON: ") + e.what());
  }
}

}  // namespace tpants::io
