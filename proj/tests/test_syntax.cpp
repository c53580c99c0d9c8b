#include "doctest.h"
#include "helpers.hpp"
#include "lc/random.hpp"

using namespace lc;
using namespace lc::testing;

TEST_CASE("parse basics") {
  CHECK(alpha_eq(p("\\x. x"), I));
  CHECK(alpha_eq(p("λx. x"), I));
  CHECK(alpha_eq(p("\\x y. x"), T));
  CHECK(alpha_eq(p("\\x.\\y. y"), F));
  CHECK(alpha_eq(p("f a b"), app(app(var("f"), var("a")), var("b"))));
  CHECK(alpha_eq(p("f (a b)"), app(var("f"), app(var("a"), var("b")))));
  CHECK(alpha_eq(p("\\x. x x"), lam("x", app(var("x"), var("x")))));
  CHECK(alpha_eq(p("  ( (x) )  # comment"), var("x")));
  CHECK(alpha_eq(p("x' x_1"), app(var("x'"), var("x_1"))));
}

TEST_CASE("a trailing abstraction extends to the right") {
  CHECK(alpha_eq(p("f \\x. x y"), app(var("f"), lam("x", app(var("x"), var("y"))))));
}

TEST_CASE("parse errors carry positions") {
  try {
    (void)parse(SourceText{"(\\x. x x", "<inline>"});
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 9);
    CHECK(std::string(e.what()) == "<inline>:1:9: expected ')', found end of input");
  }
  CHECK_THROWS_AS(parse(SourceText{""}), ParseError);
  CHECK_THROWS_AS(parse(SourceText{"\\. x"}), ParseError);
  CHECK_THROWS_AS(parse(SourceText{"x )"}), ParseError);
  CHECK_THROWS_AS(parse(SourceText{"x $"}), ParseError);
  try {
    (void)parse(SourceText{"x\n  (y", "f.lc"});
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.origin() == "f.lc");
    CHECK(e.line() == 2);
  }
}

TEST_CASE("programs with definitions") {
  const Program prog = parse_program(SourceText{
      "T = \\x y. x\n"
      "F = \\x y. y\n"
      "pair = \\a b s. s a b\n"
      "pair T F\n"});
  CHECK(prog.definitions.entries().size() == 3);
  REQUIRE(prog.body.has_value());
  CHECK(alpha_eq(prog.value(), app(app(p("\\a b s. s a b"), T), F)));

  SUBCASE("value falls back to the last definition") {
    const Program defs_only = parse_program(SourceText{"I = \\x. x\nK = \\x y. x\n"});
    CHECK_FALSE(defs_only.body.has_value());
    CHECK(alpha_eq(defs_only.value(), T));
  }
  SUBCASE("later definitions shadow earlier ones") {
    const Program prog2 = parse_program(SourceText{"a = \\x. x\na = \\x y. x\na\n"});
    CHECK(alpha_eq(prog2.value(), T));
  }
  SUBCASE("unknown names inside definitions") {
    try {
      (void)parse_program(SourceText{"a = \\x. b\n", "d.lc"});
      FAIL("expected UnknownName");
    } catch (const UnknownName& e) {
      CHECK(e.name() == "b");
      CHECK(e.line() == 1);
    }
  }
  SUBCASE("free names in the body stay free") {
    const Program prog3 = parse_program(SourceText{"I = \\x. x\nI z\n"});
    CHECK(alpha_eq(prog3.value(), app(I, var("z"))));
  }
  SUBCASE("a definition may continue while parentheses are open") {
    const Program prog4 = parse_program(SourceText{"K = (\\x.\n  \\y. x)\nK\n"});
    CHECK(alpha_eq(prog4.value(), T));
  }
  SUBCASE("empty program") { CHECK_THROWS_AS(parse_program(SourceText{"# nothing\n"}), ParseError); }
  SUBCASE("base definitions") {
    Definitions base;
    base.define("K", T);
    CHECK(alpha_eq(parse_program(SourceText{"K2 = K K\n"}, base).value(), app(T, T)));
    CHECK(alpha_eq(parse(SourceText{"K"}, base), T));
  }
}

TEST_CASE("printing") {
  CHECK(print(I) == "\\x. x");
  CHECK(canonical(I) == "\\a. a");
  CHECK(canonical(p("\\x y. y x")) == "\\a.\\b. b a");
  CHECK(print(p("(\\x. x) y")) == "(\\x. x) y");
  CHECK(print(p("f (g x)")) == "f (g x)");
  CHECK(print(p("f (\\x. x)")) == "f (\\x. x)");
  // A free variable named like a canonical binder is skipped over.
  CHECK(canonical(p("\\x. x a")) == "\\b. b a");
  CHECK(canonical(p("\\x. \\x. x")) == "\\a.\\b. b");
  CHECK(print(p("\\x. \\x. x")) != "\\x.\\x. x");
}

TEST_CASE("print then parse is the identity up to alpha") {
  Rng rng(201);
  RandomTermParams params;
  params.max_depth = 7;
  params.free_names = {"a", "x", "x1"};
  for (int i = 0; i < 1000; ++i) {
    const Term t = random_term(rng, params);
    CHECK(alpha_eq(parse(SourceText{print(t)}), t));
    CHECK(alpha_eq(parse(SourceText{canonical(t)}), t));
    // canonical text of rehinted parses is stable
    CHECK(canonical(parse(SourceText{print(t)})) == canonical(t));
  }
}
