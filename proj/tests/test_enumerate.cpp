#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "lc/enumerate.hpp"
#include "oracles.hpp"

using namespace lc;
using namespace lc::testing;

TEST_CASE("closed-term counts") {
  const std::uint64_t pinned[] = {0, 1, 2, 4, 13, 42, 139, 506, 1915, 7558, 31092, 132170};
  ClosedTermEnumerator e;
  for (std::size_t s = 1; s <= 12; ++s) {
    CAPTURE(s);
    CHECK(count_closed(s) == pinned[s - 1]);
    CHECK(oracle::count_terms(s, 0) == pinned[s - 1]);
    if (s <= 10) CHECK(e.stratum(s, 0).size() == pinned[s - 1]);
  }
  for (std::size_t s = 1; s <= 7; ++s) CHECK(oracle::count_closed_by_shapes(s) == count_closed(s));
}

TEST_CASE("enumeration order") {
  const std::vector<Term> terms = enumerate_closed(4);
  std::vector<std::string> texts;
  for (const Term& t : terms) texts.push_back(canonical(t));
  CHECK(texts == std::vector<std::string>{
                     "\\a. a",
                     "\\a.\\b. b",
                     "\\a.\\b. a",
                     "\\a.\\b.\\c. c",
                     "\\a.\\b.\\c. b",
                     "\\a.\\b.\\c. a",
                     "\\a. a a",
                 });
}

TEST_CASE("every closed term appears once, sizes never decrease") {
  std::set<std::string> seen;
  std::size_t last = 0;
  std::size_t count = 0;
  for_each_closed(8, [&](const Term& t) {
    CHECK(t.is_closed());
    CHECK(t.size() >= last);
    last = t.size();
    CHECK(seen.insert(canonical(t)).second);
    ++count;
    return true;
  });
  CHECK(count == 1 + 2 + 4 + 13 + 42 + 139 + 506);
}

TEST_CASE("early stop") {
  std::size_t visits = 0;
  for_each_closed(10, [&](const Term&) { return ++visits < 5; });
  CHECK(visits == 5);
}

TEST_CASE("strata with free indices") {
  ClosedTermEnumerator e;
  CHECK(e.stratum(1, 3).size() == 3);
  CHECK(e.stratum(3, 1).size() == oracle::count_terms(3, 1));
  CHECK(e.stratum(5, 2).size() == oracle::count_terms(5, 2));
  CHECK(e.stratum(0, 4).empty());
}
