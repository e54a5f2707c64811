#include "dgog/boundary.hpp"
#include "dgog/error.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace dgog;

namespace {

std::string acted(GraphOfGroups const& g, std::string const& gamma, std::string const& alpha,
                  std::size_t max_steps = default_max_steps) {
  return format_action(g, act(g, fixtures::word(g, gamma), parse_lasso(g, alpha), max_steps));
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("lassos are canonical") {
  GraphOfGroups g = fixtures::bs12();
  CHECK(format_lasso(g, parse_lasso(g, "1:e.0:e|0:e.0:e")) == "1:e|0:e");
  CHECK(format_lasso(g, parse_lasso(g, "0:e|1:e.0:e")) == "|0:e.1:e");
  CHECK(parse_lasso(g, "0:e.1:e|0:e.1:e") == parse_lasso(g, "|0:e.1:e"));
  LassoPath a = parse_lasso(g, "1:e|0:e.1:e");
  CHECK(a.letter(0) == SigmaLetter{1, 0});
  CHECK(a.letter(1) == SigmaLetter{0, 0});
  CHECK(a.letter(4) == SigmaLetter{1, 0});

  CHECK(kind_of([&] { parse_lasso(g, "0:e|"); }) == ErrorKind::Validation);
  CHECK(kind_of([&] { parse_lasso(g, "|2:e"); }) == ErrorKind::Validation);
  CHECK(kind_of([&] { parse_lasso(g, "0:e"); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { parse_lasso(g, "|0:x"); }) == ErrorKind::Parse);

  GraphOfGroups m = fixtures::mixed();
  // f runs a <- b and g runs b <- a, so f then f does not compose.
  CHECK(kind_of([&] { parse_lasso(m, "|0:f.0:f"); }) == ErrorKind::NotComposable);
  CHECK(parse_lasso(m, "|0:f.0:g").base() == *m.find_vertex("a"));
}

TEST_CASE("the odometer") {
  GraphOfGroups g = fixtures::bs12();
  CHECK(acted(g, "1@v", "|1:e") == "|0:e");
  CHECK(acted(g, "1@v", "|0:e") == "1:e|0:e");
  CHECK(acted(g, "-1@v", "|0:e") == "|1:e");
  CHECK(acted(g, "3@v", "|0:e") == "1:e.1:e|0:e");
  CHECK(acted(g, "0@v", "1:e|0:e") == "1:e|0:e");
  CHECK(acted(g, "1@v", "|0:e.1:e") == "1:e|1:e.0:e");
}

TEST_CASE("reversed letters cancel against the path") {
  GraphOfGroups g = fixtures::bs12();
  LassoPath alpha = parse_lasso(g, "|0:e");
  NormalWord gamma = fixtures::word(g, "1 e~ 0");
  auto split = decompose_action(g, gamma, alpha);
  REQUIRE(split.has_value());
  CHECK(multiply(g, split->lambda.word(), invert(g, split->mu.word())) == gamma);
  CHECK(extends(alpha, split->mu));

  NormalWord back = fixtures::word(g, "0 e~ 0");
  CHECK(acted(g, "0 e~ 0", "0:e|1:e") == "|1:e");
  CHECK_FALSE(decompose_action(g, back, parse_lasso(g, "|1:e")).has_value());
  CHECK(kind_of([&] { act(g, back, parse_lasso(g, "|1:e")); }) == ErrorKind::NotInDomain);
  CHECK(acted(g, "0 e 0", "|1:e") == "0:e|1:e");
}

TEST_CASE("an unbounded carry reports a prefix") {
  GraphOfGroups g = fixtures::loop(1, 2);
  ActionResult r = act(g, fixtures::word(g, "1@v"), parse_lasso(g, "|0:e"), 50);
  REQUIRE(std::holds_alternative<PrefixResult>(r));
  CHECK(std::get<PrefixResult>(r).letters.letters.size() == 50);
  CHECK(format_action(g, r).ends_with("..."));
}

TEST_CASE("property: action laws") {
  gen::Rng rng(42);
  for (auto const& g : {fixtures::bs12(), fixtures::finite(), fixtures::rose(2)}) {
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
      auto alpha = gen::lasso(g, rng, gen::index(rng, g.vertex_count()), 3, 3);
      if (!alpha) continue;
      CHECK(parse_lasso(g, format_lasso(g, *alpha)) == *alpha);
      CHECK(act(g, NormalWord::identity(g, alpha->base()), *alpha) == ActionResult(*alpha));

      NormalWord b = normalize(g, gen::raw_word(g, rng, 4));
      if (b.source() != alpha->base() || !decompose_action(g, b, *alpha)) continue;
      ActionResult moved = act(g, b, *alpha);
      REQUIRE(std::holds_alternative<LassoPath>(moved));
      LassoPath beta = std::get<LassoPath>(moved);
      CHECK(act(g, invert(g, b), beta) == ActionResult(*alpha));

      NormalWord a = normalize(g, gen::raw_word(g, rng, 4));
      if (a.source() != beta.base() || !decompose_action(g, a, beta)) continue;
      CHECK(act(g, multiply(g, a, b), *alpha) == act(g, a, beta));
      ++checked;
    }
    CHECK(checked > 10);
  }
}
