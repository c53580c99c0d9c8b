#include "doctest.h"
#include "helpers.hpp"
#include "lc/numerals.hpp"
#include "oracles.hpp"

using namespace lc;
using namespace lc::testing;

namespace {

// d_n written out as source text and parsed, independent of nour_numeral.
Term nour_by_text(std::size_t n) {
  std::string ps;
  for (std::size_t i = 1; i <= n; ++i) ps += "\\x" + std::to_string(i) + ". ";
  ps += "\\x. x";
  return p(std::string("\\s. s ") + (n == 0 ? "(\\a b. a)" : "(\\a b. b)") + " (" + ps + ")");
}

Term church_by_text(std::size_t n) {
  std::string body = "x";
  for (std::size_t i = 0; i < n; ++i) body = "f (" + body + ")";
  return p("\\f x. " + body);
}

}  // namespace

TEST_CASE("numeral constructors") {
  CHECK(alpha_eq(p_term(0), I));
  CHECK(alpha_eq(p_term(1), F));
  CHECK(alpha_eq(p_term(3), p("\\a b c d. d")));
  CHECK(p_term(2).name() == "x_1");
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(alpha_eq(nour_numeral(n), nour_by_text(n)));
    CHECK(alpha_eq(church_numeral(n), church_by_text(n)));
  }
}

TEST_CASE("builtin systems") {
  CHECK(builtin_names() == std::vector<std::string>{"church", "nour", "nour-paper"});
  CHECK(builtin("church").name == "church");
  CHECK(builtin("nour").name == "nour");
  CHECK(builtin("nour-paper").name == "nour-paper");
  CHECK_THROWS_AS(builtin("scott"), UnknownSystem);
  CHECK(alpha_eq(nour_system().successor, p("\\n s. s (\\a b. b) (\\x. n (\\a b. b))")));
  CHECK(alpha_eq(nour_paper_system().successor, p("\\n s. s (\\a b. b) (\\x. n)")));
  CHECK(alpha_eq(nour_system().zero_test, p("\\n. n (\\a b. a)")));
  CHECK(alpha_eq(church_system().zero_test, p("\\n. n (\\z a b. b) (\\a b. a)")));
  for (const auto& name : builtin_names()) CHECK_NOTHROW(validate(builtin(name)));
}

TEST_CASE("validate rejects open or non-normal components") {
  NumeralSystem bad = nour_system();
  bad.successor = p("\\n. m");
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad = nour_system();
  bad.zero = app(I, I);
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("numeral iterates") {
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(alpha_eq(*numeral(nour_system(), n, kDefaultFuel), nour_numeral(n)));
    CHECK(alpha_eq(*numeral(church_system(), n, kDefaultFuel), church_numeral(n)));
  }
  // successor iterates cross-checked against the textbook reducer
  Term d = nour_system().zero;
  for (std::size_t n = 1; n <= 6; ++n) {
    const oracle::Run r = oracle::normalize(app(nour_system().successor, d), 1000);
    REQUIRE(r.reached);
    d = oracle::to_term(r.result);
    CHECK(alpha_eq(d, nour_numeral(n)));
  }
  CHECK_FALSE(numeral(nour_system(), 3, 2).has_value());
  CHECK(numerals(nour_system(), 5, kDefaultFuel).size() == 5);
  CHECK(numerals(nour_system(), 5, 3).size() == 1);
}

TEST_CASE("law verification") {
  const LawReport church = verify_laws(church_system(), 12, kDefaultFuel);
  CHECK(church.all_pass());
  CHECK(church.per_index.size() == 13);
  CHECK(church.system == "church");
  CHECK(church.bound == 12);

  const LawReport nour = verify_laws(nour_system(), 12, kDefaultFuel);
  CHECK(nour.all_pass());
  for (const auto& rec : nour.per_index) CHECK(rec.passed());

  SUBCASE("the unpatched successor fails at one") {
    const LawReport unpatched = verify_laws(nour_paper_system(), 1, kDefaultFuel);
    REQUIRE_FALSE(unpatched.all_pass());
    const LawFailure* f = unpatched.first_failure();
    CHECK(f->n == 1);
    CHECK(f->law == law::kClosedForm);
    CHECK(f->expected == "\\a. a (\\b.\\c. c) (\\b.\\c. c)");
    CHECK(f->actual == "\\a. a (\\b.\\c. c) (\\b.\\c. c (\\d.\\e. d) (\\d. d))");
    CHECK(unpatched.per_index[0].passed());
  }
  SUBCASE("a constant successor breaks distinctness and the zero test") {
    NumeralSystem stuck = nour_system();
    stuck.name = "stuck";
    stuck.successor = p("\\n. n");
    stuck.closed_form = nullptr;
    const LawReport rep = verify_laws(stuck, 2, kDefaultFuel);
    REQUIRE_FALSE(rep.all_pass());
    CHECK(rep.first_failure()->n == 1);
    CHECK(rep.first_failure()->law == law::kDistinct);
    bool zero_test_failed = false;
    for (const auto& f : rep.failures) zero_test_failed |= f.law == law::kZeroTest;
    CHECK(zero_test_failed);
  }
  SUBCASE("fuel exhaustion stops the run") {
    const LawReport rep = verify_laws(nour_system(), 10, 3);
    REQUIRE_FALSE(rep.all_pass());
    CHECK(rep.per_index.size() == 2);
    CHECK(rep.failures.back().n == 1);
    CHECK(rep.failures.back().law == law::kSuccessor);
  }
}

TEST_CASE("numerals are pairwise distinct and the zero test separates them") {
  for (const NumeralSystem& sys : {church_system(), nour_system()}) {
    const std::vector<Term> ds = numerals(sys, 16, kDefaultFuel);
    REQUIRE(ds.size() == 16);
    for (std::size_t i = 0; i < ds.size(); ++i) {
      for (std::size_t j = i + 1; j < ds.size(); ++j) CHECK_FALSE(alpha_eq(ds[i], ds[j]));
      const oracle::Run z = oracle::normalize(app(sys.zero_test, ds[i]), 1000);
      REQUIRE(z.reached);
      CHECK(alpha_eq(oracle::to_term(z.result), i == 0 ? T : F));
    }
  }
}
