#include "doctest.h"
#include "support/generators.hpp"
#include "tpants/thompson.hpp"

#include <cmath>

using namespace tpants;
using tpants::testing::random_point;
using tpants::testing::random_word;

namespace {

Dyadic d(const char* s) { return Dyadic::parse(s); }
CirclePoint cp(const char* s) { return CirclePoint(d(s)); }

// Oracle: a PL circle map written directly from an interval correspondence,
// evaluated in floating point (all test values are exactly representable).
struct PlMap {
  struct Branch {
    double src_lo, src_hi, dst_lo, dst_hi;
  };
  std::vector<Branch> branches;
  double operator()(double x) const {
    for (const auto& b : branches)
      if (b.src_lo <= x && x < b.src_hi)
        return std::fmod(b.dst_lo + (x - b.src_lo) * (b.dst_hi - b.dst_lo) / (b.src_hi - b.src_lo), 1.0);
    return -1;
  }
};

const PlMap alpha_oracle{{{0, .25, .25, .5}, {.25, .5, .5, .75}, {.5, .75, .75, 1}, {.75, 1, 0, .25}}};
const PlMap beta_oracle{{{.5, 1, 0, .25}, {0, .25, .25, .5}, {.25, .5, .5, 1}}};

double to_double(const CirclePoint& p) {
  return static_cast<double>(p.value().numerator()) / std::ldexp(1.0, static_cast<int>(p.value().exponent()));
}

}  // namespace

TEST_CASE("identity") {
  auto id = t_identity();
  CHECK(t_evaluate(id, cp("0")) == cp("0"));
  CHECK(t_evaluate(id, cp("5/8")) == cp("5/8"));
  CHECK(id.size() == 2);
  CHECK(id.source() == StdPartition{d("0"), d("1/2"), d("1")});
}

TEST_CASE("alpha and beta agree with the interval-correspondence oracle") {
  auto alpha = t_alpha();
  auto beta = t_beta();
  CHECK(t_evaluate(alpha, cp("0")) == cp("1/4"));
  CHECK(t_evaluate(alpha, cp("1/8")) == cp("3/8"));
  CHECK(t_evaluate(alpha, cp("1/2")) == cp("3/4"));
  CHECK(t_evaluate(beta, cp("0")) == cp("1/4"));
  CHECK(t_evaluate(beta, cp("1/4")) == cp("1/2"));
  CHECK(t_evaluate(beta, cp("3/4")) == cp("1/8"));
  for (long a = 0; a < 64; ++a) {
    CirclePoint x(Dyadic(a, 6));
    CHECK(to_double(t_evaluate(alpha, x)) == alpha_oracle(to_double(x)));
    CHECK(to_double(t_evaluate(beta, x)) == beta_oracle(to_double(x)));
  }
  CHECK(alpha.size() == 4);
  CHECK(alpha.offset() == 1);
  CHECK(beta.size() == 3);
}

TEST_CASE("generator orders and the full presentation") {
  CHECK(t_from_word("aaaa").is_identity());
  CHECK(t_from_word("bbb").is_identity());
  CHECK(t_from_word("bababababa").is_identity());
  auto commutator = [](const std::string& x, const std::string& y) {
    auto inv = [](std::string w) {
      std::reverse(w.begin(), w.end());
      for (auto& c : w) c = std::isupper(static_cast<unsigned char>(c)) ? static_cast<char>(std::tolower(c))
                                                                      : static_cast<char>(std::toupper(c));
      return w;
    };
    return x + y + inv(x) + inv(y);
  };
  CHECK(t_from_word(commutator("bab", "aababaa")) == t_identity());
  CHECK(t_from_word(commutator("bab", "aabbaababaabaa")) == t_identity());
  CHECK(t_from_word("") == t_identity());
  CHECK(t_evaluate(t_from_word("aa"), cp("0")) == cp("1/2"));
  CHECK_THROWS_AS(t_from_word("ax"), PreconditionError);
}

TEST_CASE("(beta alpha)^5 fixes sampled points") {
  auto f = t_from_word("bababababa");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto x = random_point(rng, 10);
    CHECK(t_evaluate(f, x) == x);
  }
}

TEST_CASE("expand and reduce") {
  auto id = t_identity();
  auto e = t_expand(id, 0);
  CHECK(e.source() == StdPartition{d("0"), d("1/4"), d("1/2"), d("1")});
  CHECK(e.target() == e.source());
  CHECK_FALSE(e.is_reduced());
  CHECK(t_reduce(t_expand(t_alpha(), 2)) == t_alpha());
  CHECK_THROWS_AS(t_expand(id, 2), PreconditionError);

  std::vector<Piece> uniform;
  for (int a = 0; a < 16; ++a) uniform.push_back({StdInterval(a, 4), StdInterval(a, 4)});
  auto big = TElement::unreduced(uniform);
  auto small = t_reduce(big);
  CHECK(small == t_identity());
  CHECK(small.size() == 2);
  CHECK(t_alpha().is_reduced());
  CHECK(t_beta().is_reduced());
  CHECK(t_reduce(t_alpha()) == t_alpha());
}

TEST_CASE("expanding every interval doubles the size") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    auto f = t_from_word(random_word(rng, 10));
    TElement g = f;
    for (std::size_t j = 0; j < f.size(); ++j) g = t_expand(g, 2 * j);
    CHECK(g.size() == 2 * f.size());
    CHECK(t_reduce(g) == f);
  }
}

TEST_CASE("reduction is confluent under random expansion sequences") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    auto f = t_from_word(random_word(rng, 12));
    TElement g = f;
    int steps = 1 + static_cast<int>(rng() % 8);
    for (int s = 0; s < steps; ++s) g = t_expand(g, rng() % g.size());
    CHECK(t_reduce(g) == f);
    for (int k = 0; k < 10; ++k) {
      auto x = random_point(rng, 9);
      CHECK(t_evaluate(g, x) == t_evaluate(f, x));
    }
  }
}

TEST_CASE("group axioms on random words") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    auto f = t_from_word(random_word(rng, 20));
    auto g = t_from_word(random_word(rng, 20));
    auto h = t_from_word(random_word(rng, 20));
    CHECK(t_compose(t_compose(f, g), h) == t_compose(f, t_compose(g, h)));
    CHECK(t_compose(f, t_identity()) == f);
    CHECK(t_compose(t_identity(), f) == f);
    CHECK(t_compose(f, t_inverse(f)) == t_identity());
    CHECK(t_compose(t_inverse(f), f) == t_identity());
    auto fg = t_compose(f, g);
    for (int k = 0; k < 5; ++k) {
      auto x = random_point(rng, 9);
      CHECK(t_evaluate(fg, x) == t_evaluate(f, t_evaluate(g, x)));
    }
  }
}

TEST_CASE("words compose left to right") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 30; ++i) {
    auto u = random_word(rng, 10), v = random_word(rng, 10);
    CHECK(t_from_word(u + v) == t_compose(t_from_word(u), t_from_word(v)));
  }
}

TEST_CASE("inverse") {
  CHECK(t_inverse(t_identity()) == t_identity());
  CHECK(t_inverse(t_alpha()) == t_from_word("aaa"));
  CHECK(t_evaluate(t_inverse(t_beta()), cp("1/2")) == cp("1/4"));
  auto f = t_from_word("abBab");
  CHECK(f.offset() < f.size());
  auto fi = t_inverse(f);
  CHECK(fi.offset() == (f.size() - f.offset()) % f.size());
}

TEST_CASE("orientation: cyclic order is preserved") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    auto f = t_from_word(random_word(rng, 15));
    auto x = random_point(rng, 7), y = random_point(rng, 7), z = random_point(rng, 7);
    if (x == y || y == z || x == z) continue;
    bool before = circle_strictly_between(y, x, z);
    bool after = circle_strictly_between(t_evaluate(f, y), t_evaluate(f, x), t_evaluate(f, z));
    CHECK(before == after);
    ExtElement g{f, true};
    bool flipped = circle_strictly_between(ext_evaluate(g, y), ext_evaluate(g, x), ext_evaluate(g, z));
    CHECK(before != flipped);
  }
}

TEST_CASE("t_from_polygons") {
  StdPartition quarters{d("0"), d("1/4"), d("1/2"), d("3/4"), d("1")};
  CHECK(t_from_polygons(quarters, quarters, 1) == t_alpha());
  StdPartition halves{d("0"), d("1/2"), d("1")};
  CHECK(t_from_polygons(halves, halves, 0) == t_identity());
  StdPartition tri{d("0"), d("1/4"), d("1/2"), d("1")};
  CHECK(t_from_polygons(tri, tri, 1) == t_beta());
  CHECK_THROWS_AS(t_from_polygons(tri, quarters, 0), PreconditionError);
  StdPartition bad{d("0"), d("1/4"), d("3/4"), d("1")};
  CHECK_THROWS_AS(t_from_polygons(bad, tri, 0), PreconditionError);
  CHECK(t_from_vertex_map({{d("0"), d("1/4")}, {d("1/4"), d("1/2")}, {d("1/2"), d("0")}}) == t_beta());
}

TEST_CASE("reflection, gamma_R and Brin's outer automorphism") {
  auto phi = ext_reflection();
  CHECK(ext_compose(phi, phi) == ext(t_identity()));
  CHECK(ext_evaluate(phi, cp("1/4")) == cp("3/4"));
  CHECK(ext_compose(phi, ext(t_alpha())).reflected);

  CHECK(gamma_R(t_alpha()) == t_inverse(t_alpha()));
  CHECK(gamma_R(t_beta()) == t_from_word("aaBaa"));
  CHECK(gamma_R(t_identity()) == t_identity());
  CHECK(brin_outer(t_alpha()) == t_inverse(t_alpha()));
  CHECK(brin_outer(t_beta()) == t_inverse(t_beta()));
  // brin_outer twice is conjugation by alpha^2 gamma_R(alpha^2), which is trivial.
  auto conjugator = t_compose(t_from_word("aa"), gamma_R(t_from_word("aa")));
  CHECK(conjugator == t_identity());
  for (const auto& gen : {t_alpha(), t_beta()})
    CHECK(brin_outer(brin_outer(gen)) == t_compose(conjugator, t_compose(gen, t_inverse(conjugator))));

  std::mt19937_64 rng(37);
  for (int i = 0; i < 40; ++i) {
    auto f = t_from_word(random_word(rng, 15));
    auto g = t_from_word(random_word(rng, 15));
    CHECK(gamma_R(gamma_R(f)) == f);
    CHECK(gamma_R(t_compose(f, g)) == t_compose(gamma_R(f), gamma_R(g)));
    CHECK(ext_compose(phi, ext_compose(ext(f), phi)) == ext(gamma_R(f)));
    CHECK(brin_outer(t_compose(f, g)) == t_compose(brin_outer(f), brin_outer(g)));
    ExtElement e{f, (rng() & 1) != 0};
    CHECK(ext_compose(e, ext_inverse(e)) == ext(t_identity()));
    auto x = random_point(rng, 8);
    ExtElement h{g, (rng() & 1) != 0};
    CHECK(ext_evaluate(ext_compose(e, h), x) == ext_evaluate(e, ext_evaluate(h, x)));
  }
}
