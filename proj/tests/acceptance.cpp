// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits are wall-clock seconds on the build machine.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "lc/adequacy.hpp"
#include "lc/enumerate.hpp"
#include "lc/random.hpp"
#include "lc/report.hpp"
#include "lc/syntax.hpp"
#include "oracles.hpp"

using namespace lc;

namespace {

struct Criterion {
  const char* id;
  const char* name;
  double limit_seconds;  // 0 = no limit
  std::function<bool(std::ostream&)> run;
};

const Term& delta() {
  static const Term d = lam("w", app(var("w"), var("w")));
  return d;
}

bool church_laws(std::ostream& log) {
  const LawReport laws = verify_laws(church_system(), 50, kDefaultFuel);
  const PredecessorReport pred = check_predecessor(church_system(), church_pred(), 50, kDefaultFuel);
  log << "laws " << (laws.all_pass() ? "AllPass" : "FirstFailure") << ", predecessor "
      << (pred.all_pass() ? "AllPass" : "FirstFailure");
  return laws.all_pass() && pred.all_pass() && laws.per_index.size() == 51 && pred.per_index.size() == 50;
}

bool nour_laws(std::ostream& log) {
  const LawReport laws = verify_laws(nour_system(), 50, kDefaultFuel);
  bool ok = laws.all_pass() && laws.per_index.size() == 51;
  for (const auto& rec : laws.per_index) ok = ok && rec.distinct_ok && rec.zerotest_ok && rec.closed_form_ok;
  // pairwise distinctness, recomputed from scratch
  const std::vector<Term> ds = numerals(nour_system(), 51, kDefaultFuel);
  std::set<std::string> texts;
  for (const Term& d : ds) texts.insert(canonical(d));
  ok = ok && ds.size() == 51 && texts.size() == 51;
  log << "laws " << (laws.all_pass() ? "AllPass" : "FirstFailure") << ", " << texts.size() << " distinct numerals";
  return ok;
}

bool unpatched_successor(std::ostream& log) {
  const LawReport laws = verify_laws(nour_paper_system(), 1, kDefaultFuel);
  const LawFailure* f = laws.first_failure();
  if (f == nullptr) {
    log << "no failure reported";
    return false;
  }
  log << "n=" << f->n << " law=" << f->law << "\n    expected: " << f->expected << "\n    actual:   " << f->actual;
  return f->n == 1 && f->law == law::kClosedForm && f->expected == "\\a. a (\\b.\\c. c) (\\b.\\c. c)" &&
         f->actual == "\\a. a (\\b.\\c. c) (\\b.\\c. c (\\d.\\e. d) (\\d. d))";
}

std::vector<Term> random_battery() {
  Rng rng(20240611);
  RandomTermParams params;
  params.max_depth = 7;
  std::vector<Term> out;
  std::set<std::string> seen;
  while (out.size() < 20) {
    const Term t = random_term(rng, params);
    if (t.size() < 4 || !normalize(t, 1000).reached()) continue;
    if (seen.insert(canonical(t)).second) out.push_back(t);
  }
  return out;
}

std::set<ProbeCase> battery_cases;

bool refutation_battery(std::ostream& log) {
  std::vector<Term> battery = {lam("n", var("n")), lam("p", app(var("p"), false_term())), lam({"n", "z"}, var("z")),
                               church_pred(), nour_system().successor};
  for (const Term& t : random_battery()) battery.push_back(t);
  std::size_t refuted = 0;
  std::map<ProbeCase, int> tally;
  for (const Term& candidate : battery) {
    const RefutationResult r = refute(nour_system(), candidate, kDefaultFuel);
    const auto* cert = std::get_if<RefutationCertificate>(&r);
    if (cert == nullptr) {
      log << "survivor: " << canonical(candidate) << "\n    ";
      continue;
    }
    ++tally[cert->classification.kind];
    battery_cases.insert(cert->classification.kind);
    if (cert->verdict == RefutationVerdict::Refuted && cert->direct_check.verdict == BetaVerdict::No) {
      ++refuted;
    } else {
      log << "not refuted: " << canonical(candidate) << "\n    ";
    }
  }
  log << refuted << "/" << battery.size() << " refuted;";
  for (const auto& [kind, count] : tally) log << " " << to_string(kind) << "=" << count;
  return refuted == battery.size();
}

bool case_coverage(std::ostream& log) {
  bool ok = battery_cases.count(ProbeCase::HeadX) && battery_cases.count(ProbeCase::HeadY) &&
            battery_cases.count(ProbeCase::HeadNu);
  const Term lambda_headed = lam({"n", "a", "b", "c", "d"}, var("d"));
  const Term unsolvable = lam({"n", "t"}, app(var("t"), {delta(), var("t"), delta()}));
  const RefutationResult a = refute(nour_system(), lambda_headed, kDefaultFuel);
  const RefutationResult b = refute(nour_system(), unsolvable, 2000);
  const auto* ca = std::get_if<RefutationCertificate>(&a);
  const auto* cb = std::get_if<RefutationCertificate>(&b);
  ok = ok && ca && ca->classification.kind == ProbeCase::LambdaHeaded && ca->verdict == RefutationVerdict::Refuted;
  ok = ok && cb && cb->classification.kind == ProbeCase::Unsolvable && cb->verdict == RefutationVerdict::Refuted;
  log << "battery cases:";
  for (ProbeCase c : battery_cases) log << " " << to_string(c);
  log << "; fixtures: " << (ca ? to_string(ca->classification.kind) : "?") << ", "
      << (cb ? to_string(cb->classification.kind) : "?");
  return ok;
}

bool exhaustive_search(std::ostream& log) {
  const SearchResult r = search_predecessor(nour_system(), 12, 3, 500);
  log << (r.found ? "Found " + canonical(*r.found) : std::string("NoneFound")) << ", tried " << r.stats.tried
      << ", rejected at n=0 " << r.stats.rejected_at_zero << ", later " << r.stats.rejected_later
      << ", fuel exhausted " << r.stats.fuel_exhausted;
  std::uint64_t expected = 0;
  for (std::size_t s = 1; s <= 12; ++s) expected += oracle::count_terms(s, 0);
  return !r.found && r.stats.tried == expected;
}

bool substitution_lemma(std::ostream& log) {
  Rng rng(7001);
  RandomTermParams params;
  params.max_depth = 7;
  params.free_names = {"u", "v", "w"};
  std::uniform_int_distribution<int> budget(0, 30);
  int ok = 0;
  int reached = 0;
  for (int i = 0; i < 1000; ++i) {
    const Term m = random_term(rng, params);
    const ReductionOutcome r = head_reduce(m, static_cast<Fuel>(budget(rng)));
    const Substitution sigma = random_substitution(rng, params.free_names, params);
    const ReductionOutcome moved = head_reduce(substitute(m, sigma), r.steps);
    if (r.reached()) ++reached;
    if (moved.steps == r.steps && alpha_eq(moved.result, substitute(r.result, sigma))) ++ok;
  }
  log << ok << "/1000 cases (" << reached << " reached a head normal form)";
  return ok == 1000;
}

bool syntax_round_trip(std::ostream& log) {
  Rng rng(7002);
  RandomTermParams params;
  params.max_depth = 7;
  params.free_names = {"a", "x", "y1"};
  std::vector<Term> terms;
  int trips = 0;
  for (int i = 0; i < 1000; ++i) {
    const Term t = random_term(rng, params);
    if (alpha_eq(parse(SourceText{print(t)}), t) && alpha_eq(parse(SourceText{canonical(t)}), t)) ++trips;
    terms.push_back(t);
  }
  // canonical text is equal exactly when the terms are alpha-equivalent
  std::size_t mismatches = 0;
  std::vector<std::string> texts;
  for (const Term& t : terms) texts.push_back(canonical(t));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if ((texts[i] == texts[j]) != alpha_eq(terms[i], terms[j])) ++mismatches;
    }
  }
  log << trips << "/1000 round trips, " << mismatches << " canonical mismatches";
  return trips == 1000 && mismatches == 0;
}

bool enumeration_counts(std::ostream& log) {
  const std::uint64_t pinned[] = {0, 1, 2, 4, 13, 42, 139, 506, 1915};
  ClosedTermEnumerator e;
  bool ok = true;
  for (std::size_t s = 1; s <= 9; ++s) {
    const std::uint64_t got = e.stratum(s, 0).size();
    ok = ok && got == oracle::count_terms(s, 0) && got == pinned[s - 1] && count_closed(s) == got;
    log << (s > 1 ? " " : "") << got;
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"C1", "church laws and predecessor, bound 50", 30, church_laws},
      {"C2", "nour laws, bound 50", 0, nour_laws},
      {"C3", "unpatched successor fails at n=1", 0, unpatched_successor},
      {"C4", "refutation battery", 60, refutation_battery},
      {"C5", "probe case coverage", 0, case_coverage},
      {"C6", "exhaustive search, nour, size 12", 600, exhaustive_search},
      {"C7", "substitution lemma, 1000 cases", 0, substitution_lemma},
      {"C8", "syntax round trip, 1000 terms", 0, syntax_round_trip},
      {"C9", "enumeration counts, sizes 1..9", 0, enumeration_counts},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::ostringstream log;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || secs <= c.limit_seconds;
    if (!in_time) log << " (over the " << c.limit_seconds << " s limit)";
    ok = ok && in_time;
    if (!ok) ++failed;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS " : "FAIL ") << c.id << " " << c.name << " [" << timing << "]\n    " << log.str()
              << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
