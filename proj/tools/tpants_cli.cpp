#include "tpants/assoc_oracle.hpp"
#include "tpants/automorphism.hpp"
#include "tpants/json_io.hpp"
#include "tpants/pants_complex.hpp"
#include "tpants/render.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace tpants;
using io::Json;

namespace {

enum Exit { Ok = 0, Usage = 1, Invalid = 2, Obstructed = 3 };

// A file path or inline text.
std::string read_arg(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && arg.front() != '{' && arg.front() != '[' && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

Json read_json(const std::string& arg) { return Json::parse(read_arg(arg)); }

// Words over a, A, b, B and r (the reflection), or element JSON.
ExtElement parse_element(const std::string& arg) {
  std::string text = read_arg(arg);
  if (!text.empty() && text.front() == '{') return io::element_from_json(Json::parse(text));
  ExtElement g = ext(t_identity());
  for (char c : text) {
    if (c == 'r' || c == 'R')
      g = ext_compose(g, ext_reflection());
    else
      g = ext_compose(g, ext(t_from_word(std::string(1, c))));
  }
  return g;
}

FinTriangulation parse_vertex(const std::string& arg) {
  if (arg == "E") return tri_base();
  return io::vertex_from_json(read_json(arg));
}

Arc parse_arc(const std::string& arg) {
  auto comma = arg.find(',');
  if (arg.front() != '[' && comma != std::string::npos)
    return Arc(Dyadic::parse(arg.substr(0, comma)), Dyadic::parse(arg.substr(comma + 1)));
  return io::arc_from_json(Json::parse(arg));
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int fail(const char* kind, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  print(j);
  return Invalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thompson group T acting on the asymptotic pants complex"};
  app.require_subcommand(1);
  int result = Ok;

  std::string word, x, element_arg, vertex_arg, vertex2_arg, arc_arg, arc2_arg, region_arg, svg_out;
  std::vector<std::string> words;
  std::vector<std::string> oracle_pair;
  int radius = 1, n = 1;

  auto region_or = [&](const FinTriangulation& v) {
    return region_arg.empty() ? default_region(v) : io::parse_region(read_arg(region_arg));
  };

  auto eval = app.add_subcommand("eval", "Evaluate a word at a dyadic point");
  eval->add_option("WORD", word)->required();
  eval->add_option("X", x)->required();
  eval->callback([&] { std::cout << ext_evaluate(parse_element(word), CirclePoint(Dyadic::parse(x))).to_string() << "\n"; });

  auto compose = app.add_subcommand("compose", "Compose words, leftmost applied last");
  compose->add_option("WORDS", words)->required();
  compose->callback([&] {
    ExtElement g = ext(t_identity());
    for (const auto& w : words) g = ext_compose(g, parse_element(w));
    print(io::to_json(g));
  });

  auto reduce = app.add_subcommand("reduce", "Reduce an element given as JSON");
  reduce->add_option("ELEMENT", element_arg)->required();
  reduce->callback([&] {
    auto g = parse_element(element_arg);
    g.t = t_reduce(g.t);
    print(io::to_json(g));
  });

  auto relcheck = app.add_subcommand("relcheck", "Check the defining relators of T");
  relcheck->callback([&] {
    Json report;
    report["relators"] = Json::array();
    bool all = true;
    for (const auto& r : t_relators()) {
      bool id = t_reduce(t_from_word(r.word)).is_identity();
      all = all && id;
      report["relators"].push_back({{"name", r.name}, {"word", r.word}, {"identity", id}});
    }
    report["all_identity"] = all;
    print(report);
    if (!all) result = Invalid;
  });

  auto act = app.add_subcommand("act", "Apply an element to a vertex");
  act->add_option("ELEMENT", element_arg)->required();
  act->add_option("VERTEX", vertex_arg)->required();
  act->callback([&] { print(io::to_json(t_act(parse_element(element_arg), parse_vertex(vertex_arg)))); });

  auto flip = app.add_subcommand("flip", "Flip an arc of a vertex");
  flip->add_option("VERTEX", vertex_arg)->required();
  flip->add_option("ARC", arc_arg)->required();
  flip->callback([&] { print(io::to_json(tri_flip(parse_vertex(vertex_arg), parse_arc(arc_arg)))); });

  auto ballc = app.add_subcommand("ball", "Vertices within flip distance R inside a region");
  ballc->add_option("VERTEX", vertex_arg)->required();
  ballc->add_option("R", radius)->required()->check(CLI::NonNegativeNumber);
  ballc->add_option("--region", region_arg, "level:m or a JSON list of [a, n] sides");
  ballc->callback([&] {
    auto v = parse_vertex(vertex_arg);
    print(io::to_json(ball(v, radius, {region_or(v)})));
  });

  auto dist = app.add_subcommand("distance", "Flip distance inside a region");
  dist->add_option("V", vertex_arg)->required();
  dist->add_option("W", vertex2_arg)->required();
  dist->add_option("--region", region_arg, "level:m or a JSON list of [a, n] sides");
  dist->callback([&] {
    auto v = parse_vertex(vertex_arg), w = parse_vertex(vertex2_arg);
    auto both = [&] {
      auto tris = v.support_triangles();
      auto more = w.support_triangles();
      tris.insert(tris.end(), more.begin(), more.end());
      return hull(tris).expanded();
    };
    Polygon p = region_arg.empty() ? both() : io::parse_region(read_arg(region_arg));
    print(io::to_json(distance(v, w, {p})));
  });

  auto link = app.add_subcommand("link", "Link of a vertex inside a region");
  link->add_option("VERTEX", vertex_arg)->required();
  link->add_option("--region", region_arg, "level:m or a JSON list of [a, n] sides");
  link->callback([&] {
    auto v = parse_vertex(vertex_arg);
    print(io::to_json(link2(v, {region_or(v)})));
  });

  auto cell = app.add_subcommand("cell", "The 2-cell spanned by two arcs of a vertex");
  cell->add_option("VERTEX", vertex_arg)->required();
  cell->add_option("ARC1", arc_arg)->required();
  cell->add_option("ARC2", arc2_arg)->required();
  cell->callback([&] { print(io::to_json(cell_at(parse_vertex(vertex_arg), parse_arc(arc_arg), parse_arc(arc2_arg)))); });

  auto induced = app.add_subcommand("induced", "The link isomorphism induced by an element");
  induced->add_option("ELEMENT", element_arg)->required();
  induced->add_option("VERTEX", vertex_arg)->required();
  induced->add_option("--region", region_arg, "level:m or a JSON list of [a, n] sides");
  induced->callback([&] {
    auto g = parse_element(element_arg);
    auto v = parse_vertex(vertex_arg);
    Polygon p = region_arg.empty() ? hull(v.support_triangles(), ext_breakpoints(g)).expanded()
                                   : io::parse_region(read_arg(region_arg));
    print(io::to_json(induced_link_iso(psi(g), v, p)));
  });

  auto mirror = app.add_subcommand("mirror", "A mixed-orientation link isomorphism mirroring one side of an arc");
  mirror->add_option("VERTEX", vertex_arg)->required();
  mirror->add_option("ARC", arc_arg)->required();
  mirror->add_option("--region", region_arg, "level:m or a JSON list of [a, n] sides");
  mirror->callback([&] {
    auto v = parse_vertex(vertex_arg);
    print(io::to_json(mirrored_link_iso(v, region_or(v), parse_arc(arc_arg))));
  });

  auto extend = app.add_subcommand("extend", "Extend a link isomorphism to an automorphism");
  extend->add_option("LINKISO", element_arg)->required();
  extend->callback([&] {
    auto iso = io::link_iso_from_json(read_json(element_arg));
    auto res = extend_link_iso(iso);
    if (auto* g = std::get_if<ExtElement>(&res)) {
      Json out;
      out["orientation"] = g->reflected ? "reversing" : "preserving";
      out["element"] = io::to_json(*g);
      print(out);
    } else {
      Json out;
      out["orientation"] = "mixed";
      out["obstruction"] = io::to_json(std::get<Obstruction>(res));
      print(out);
      result = Obstructed;
    }
  });

  auto transitive = app.add_subcommand("transitive", "An element of T taking E to the vertex");
  transitive->add_option("VERTEX", vertex_arg)->required();
  transitive->callback([&] { print(io::to_json(ext(transitive_element(parse_vertex(vertex_arg))))); });

  auto witness = app.add_subcommand("witness", "A vertex moved by a nontrivial element of T");
  witness->add_option("ELEMENT", element_arg)->required();
  witness->callback([&] {
    auto g = parse_element(element_arg);
    if (g.reflected) throw PreconditionError("witness takes an element of T, not a reflection");
    print(io::to_json(witness_vertex(g.t)));
  });

  auto nonhyp = app.add_subcommand("nonhyp", "Fat geodesic triangles with sides n, n, 2n");
  nonhyp->add_option("N", n)->required()->check(CLI::PositiveNumber);
  nonhyp->callback([&] {
    auto inst = nonhyp_instance(n);
    auto side = [](const std::vector<FinTriangulation>& path) {
      std::size_t len = path.size() - 1, bound = tri_arc_difference(path.front(), path.back());
      return Json{{"path_length", len}, {"lower_bound", bound}, {"flag", len == bound ? "EXACT" : "UPPER-BOUND"}};
    };
    Json out;
    out["n"] = n;
    out["d_uv"] = side(inst.path_uv);
    out["d_vw"] = side(inst.path_vw);
    out["d_uw"] = side(inst.path_uw);
    out["thinness"] = thinness_certificate(inst);
    out["instance"] = io::to_json(inst);
    print(out);
  });

  auto oracle = app.add_subcommand("oracle", "Brute-force flip graph of the n-gon");
  oracle->add_option("N", n)->required();
  oracle->add_option("--distance", oracle_pair, "two diagonal lists T1 T2")->expected(2)->allow_extra_args(false);
  oracle->callback([&] {
    if (oracle_pair.empty()) {
      print(io::to_json(oracle_flip_graph(n)));
      return;
    }
    auto t1 = io::poly_from_json(read_json(oracle_pair[0]), n);
    auto t2 = io::poly_from_json(read_json(oracle_pair[1]), n);
    auto all = enumerate_triangulations(n);
    for (const auto* t : {&t1, &t2})
      if (!std::binary_search(all.begin(), all.end(), *t)) throw io::FormatError("not a triangulation of the n-gon");
    print(Json{{"n", n}, {"distance", oracle_distance(t1, t2)}});
  });

  auto render = app.add_subcommand("render", "Draw a vertex in the Poincare disk");
  render->add_option("VERTEX", vertex_arg)->required();
  render->add_option("--svg", svg_out, "output file")->required();
  render->add_option("--region", region_arg, "level:m or a JSON list of [a, n] sides");
  render->callback([&] {
    auto v = parse_vertex(vertex_arg);
    std::ofstream out(svg_out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + svg_out);
    out << render_svg(v, region_or(v));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Usage;
  } catch (const ValidationError& e) {
    print(io::to_json(e));
    return Invalid;
  } catch (const RegionError& e) {
    return fail("region", e.what());
  } catch (const io::FormatError& e) {
    return fail("format", e.what());
  } catch (const Json::exception& e) {
    return fail("format", e.what());
  } catch (const PreconditionError& e) {
    return fail("precondition", e.what());
  } catch (const std::invalid_argument& e) {
    return fail("invalid", e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  }
  return result;
}
