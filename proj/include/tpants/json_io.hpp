#pragma once

// JSON forms of the model objects. Dyadics are "num/2^k" strings, arcs are
// two-element arrays with the smaller endpoint first.

#include "tpants/assoc_oracle.hpp"
#include "tpants/automorphism.hpp"
#include "tpants/pants_complex.hpp"

#include <json.hpp>

#include <string>

namespace tpants::io {

using Json = nlohmann::ordered_json;

/// Malformed JSON input: wrong shape or unparsable values.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Dyadic& x);
Json to_json(const CirclePoint& x);
Json to_json(const Arc& e);
Json to_json(const TElement& f);
Json to_json(const ExtElement& g);
Json to_json(const FinTriangulation& v);
/// Sides as E-arc pairs [a, n].
Json to_json(const Polygon& p);
Json to_json(const Ball& b);
Json to_json(const LinkGraph& l);
Json to_json(const Cell& c);
Json to_json(const DistanceResult& d);
Json to_json(const LinkIso& iso);
Json to_json(const OrientationVerdict& v);
Json to_json(const Obstruction& o);
Json to_json(const NonhypInstance& inst);
Json to_json(const PolyTriangulation& t);
Json to_json(const OracleGraph& g);
Json to_json(const ValidationError& e);

Dyadic dyadic_from_json(const Json& j);
Arc arc_from_json(const Json& j);
/// Accepts TElement and ExtElement JSON; "reflected" defaults to 0.
ExtElement element_from_json(const Json& j);
/// Runs full validation; throws ValidationError for inconsistent arc lists.
FinTriangulation vertex_from_json(const Json& j);
Polygon polygon_from_json(const Json& j);
LinkIso link_iso_from_json(const Json& j);
/// A diagonal list [[i, j], ...] of an n-gon triangulation.
PolyTriangulation poly_from_json(const Json& j, int n);

/// "level:m" or a JSON list of E-arc pairs.
Polygon parse_region(const std::string& text);

}  // namespace tpants::io
