#include "lc/numerals.hpp"

#include "lc/syntax.hpp"

namespace lc {

Term p_term(std::size_t n) {
  Term t = Term::lam("x", Term::bound(0));
  for (std::size_t i = n; i >= 1; --i) t = Term::lam("x_" + std::to_string(i), t);
  return t;
}

Term nour_numeral(std::size_t n) { return pair(n == 0 ? true_term() : false_term(), p_term(n)); }

Term church_numeral(std::size_t n) {
  Term body = Term::bound(0);
  for (std::size_t i = 0; i < n; ++i) body = Term::app(Term::bound(1), body);
  return Term::lam("f", Term::lam("x", body));
}

NumeralSystem church_system() {
  const Term f = var("f");
  const Term x = var("x");
  const Term n = var("n");
  return NumeralSystem{
      "church",
      church_numeral(0),
      lam({"n", "f", "x"}, app(f, app(n, {f, x}))),
      lam("n", app(n, {lam("z", false_term()), true_term()})),
      church_numeral,
  };
}

NumeralSystem nour_system() {
  const Term n = var("n");
  return NumeralSystem{
      "nour",
      nour_numeral(0),
      lam("n", pair(false_term(), lam("x", app(n, false_term())))),
      lam("n", app(n, true_term())),
      nour_numeral,
  };
}

NumeralSystem nour_paper_system() {
  NumeralSystem sys = nour_system();
  sys.name = "nour-paper";
  sys.successor = lam("n", pair(false_term(), lam("x", var("n"))));
  return sys;
}

std::vector<std::string> builtin_names() { return {"church", "nour", "nour-paper"}; }

NumeralSystem builtin(std::string_view name) {
  if (name == "church") return church_system();
  if (name == "nour") return nour_system();
  if (name == "nour-paper") return nour_paper_system();
  throw UnknownSystem(std::string(name));
}

void validate(const NumeralSystem& sys) {
  auto require_closed = [&](const Term& t, const char* what) {
    if (!t.is_closed()) {
      throw std::invalid_argument("numeral system '" + sys.name + "': " + what + " is not closed");
    }
  };
  require_closed(sys.zero, "zero");
  require_closed(sys.successor, "successor");
  require_closed(sys.zero_test, "zero test");
  if (!is_normal(sys.zero)) throw std::invalid_argument("numeral system '" + sys.name + "': zero is not normal");
}

std::optional<Term> numeral(const NumeralSystem& sys, std::size_t n, Fuel fuel) {
  Term current = sys.zero;
  for (std::size_t i = 0; i < n; ++i) {
    ReductionOutcome next = normalize(Term::app(sys.successor, current), fuel);
    if (!next.reached()) return std::nullopt;
    current = std::move(next.result);
  }
  return current;
}

std::vector<Term> numerals(const NumeralSystem& sys, std::size_t count, Fuel fuel) {
  std::vector<Term> out;
  if (count == 0) return out;
  out.push_back(sys.zero);
  while (out.size() < count) {
    ReductionOutcome next = normalize(Term::app(sys.successor, out.back()), fuel);
    if (!next.reached()) break;
    out.push_back(std::move(next.result));
  }
  return out;
}

LawReport verify_laws(const NumeralSystem& sys, std::size_t bound, Fuel fuel) {
  validate(sys);
  LawReport report{sys.name, bound, fuel, {}, {}};
  auto fail = [&](std::size_t n, std::string_view law, std::string expected, std::string actual) {
    report.failures.push_back(LawFailure{n, std::string(law), std::move(expected), std::move(actual)});
  };

  std::vector<Term> seen;
  for (std::size_t n = 0; n <= bound; ++n) {
    LawRecord rec;
    rec.n = n;

    std::optional<Term> current;
    if (n == 0) {
      current = sys.zero;
    } else {
      ReductionOutcome next = normalize(Term::app(sys.successor, seen.back()), fuel);
      if (next.reached()) current = std::move(next.result);
    }
    if (!current) {
      // Later numerals are built from this one, so the report ends here.
      fail(n, law::kSuccessor, "normal form within " + std::to_string(fuel) + " steps", "fuel exhausted");
      report.per_index.push_back(rec);
      break;
    }
    rec.successor_ok = true;
    const Term& d = *current;

    const ReductionOutcome renorm = normalize(d, fuel);
    rec.normal_ok = renorm.reached() && renorm.steps == 0;
    if (!rec.normal_ok) fail(n, law::kNormal, "normal form", canonical(d));

    rec.closed_form_ok = true;
    if (sys.closed_form) {
      const Term expected = sys.closed_form(n);
      rec.closed_form_ok = alpha_eq(expected, d);
      if (!rec.closed_form_ok) fail(n, law::kClosedForm, canonical(expected), canonical(d));
    }

    rec.distinct_ok = true;
    for (std::size_t m = 0; m < seen.size(); ++m) {
      if (alpha_eq(seen[m], d)) {
        rec.distinct_ok = false;
        fail(n, law::kDistinct, "distinct from numeral " + std::to_string(m), canonical(d));
        break;
      }
    }

    const Term& truth = n == 0 ? true_term() : false_term();
    const ReductionOutcome tested = normalize(Term::app(sys.zero_test, d), fuel);
    rec.zerotest_ok = tested.reached() && alpha_eq(tested.result, truth);
    if (!rec.zerotest_ok) {
      fail(n, law::kZeroTest, canonical(truth), tested.reached() ? canonical(tested.result) : "fuel exhausted");
    }

    report.per_index.push_back(rec);
    seen.push_back(d);
  }
  return report;
}

}  // namespace lc
