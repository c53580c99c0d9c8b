#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lc/reduction.hpp"
#include "lc/term.hpp"

namespace lc {

class UnknownSystem : public std::invalid_argument {
 public:
  explicit UnknownSystem(const std::string& name)
      : std::invalid_argument("unknown numeral system '" + name + "' (expected church, nour or nour-paper)") {}
};

// A candidate encoding of the naturals: zero, successor and zero test, plus
// an optional direct generator of the n-th numeral.
struct NumeralSystem {
  std::string name;
  Term zero;
  Term successor;
  Term zero_test;
  std::function<Term(std::size_t)> closed_form;
};

// Checks that zero, successor and zero_test are closed and zero is normal.
// Throws std::invalid_argument naming the offending component.
void validate(const NumeralSystem& sys);

// \x_1 ... \x_n \x. x
Term p_term(std::size_t n);
// <T, p_0> for n = 0, <F, p_n> otherwise.
Term nour_numeral(std::size_t n);
// \f.\x. f^n x
Term church_numeral(std::size_t n);

NumeralSystem church_system();
// Successor \n.<F, \x.(n F)>.
NumeralSystem nour_system();
// Successor \n.<F, \x. n>; kept as a fixture that fails the successor law.
NumeralSystem nour_paper_system();

NumeralSystem builtin(std::string_view name);
std::vector<std::string> builtin_names();

// Normal form of the successor applied n times to zero, normalizing after
// each application. nullopt if any normalization runs out of fuel.
std::optional<Term> numeral(const NumeralSystem& sys, std::size_t n, Fuel fuel);

// The first count numerals, stopping early if one cannot be computed.
std::vector<Term> numerals(const NumeralSystem& sys, std::size_t count, Fuel fuel);

// Law names used in reports.
namespace law {
inline constexpr std::string_view kSuccessor = "successor";
inline constexpr std::string_view kNormal = "normal";
inline constexpr std::string_view kClosedForm = "closed_form";
inline constexpr std::string_view kDistinct = "distinct";
inline constexpr std::string_view kZeroTest = "zero_test";
}  // namespace law

struct LawFailure {
  std::size_t n = 0;
  std::string law;
  std::string expected;  // canonical text, or a description
  std::string actual;
};

struct LawRecord {
  std::size_t n = 0;
  bool successor_ok = false;  // numeral computed within fuel
  bool normal_ok = false;
  bool closed_form_ok = false;  // true when there is no closed form
  bool distinct_ok = false;
  bool zerotest_ok = false;

  bool passed() const noexcept {
    return successor_ok && normal_ok && closed_form_ok && distinct_ok && zerotest_ok;
  }
};

struct LawReport {
  std::string system;
  std::size_t bound = 0;
  Fuel fuel = 0;
  std::vector<LawRecord> per_index;
  // Every failed law, in index order; the first one is the verdict.
  std::vector<LawFailure> failures;

  bool all_pass() const noexcept { return failures.empty(); }
  const LawFailure* first_failure() const noexcept { return failures.empty() ? nullptr : &failures.front(); }
};

// Checks numerals 0..bound: normal form, pairwise distinctness, agreement
// with the closed form, and the zero-test laws.
LawReport verify_laws(const NumeralSystem& sys, std::size_t bound, Fuel fuel);

}  // namespace lc
