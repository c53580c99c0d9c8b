#include <algorithm>
#include <functional>
#include <ostream>

#include "cli.hpp"
#include "lc/adequacy.hpp"
#include "lc/enumerate.hpp"
#include "lc/numerals.hpp"
#include "lc/random.hpp"
#include "lc/syntax.hpp"

namespace lc::cli {

namespace {

struct Check {
  const char* name;
  std::function<bool()> run;
};

bool subset_of(const std::set<std::string, std::less<>>& a, const std::set<std::string, std::less<>>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

int selftest(std::ostream& out, Fuel fuel) {
  const std::vector<std::string> names = {"u", "v", "w"};
  RandomTermParams params;
  params.max_depth = 6;
  params.free_names = names;

  const std::vector<Check> checks = {
      {"alpha_eq is an equivalence",
       [&] {
         Rng rng(11);
         for (int i = 0; i < 200; ++i) {
           const Term a = random_term(rng, params);
           const Term b = parse(SourceText{print(a)});
           const Term c = parse(SourceText{print(b, PrintMode::Canonical)});
           if (!alpha_eq(a, a) || alpha_eq(a, b) != alpha_eq(b, a)) return false;
           if (alpha_eq(a, b) && alpha_eq(b, c) && !alpha_eq(a, c)) return false;
         }
         return true;
       }},
      {"substitution free-variable bound",
       [&] {
         Rng rng(12);
         for (int i = 0; i < 200; ++i) {
           const Term m = random_term(rng, params);
           const Substitution sigma = random_substitution(rng, {"u", "v"}, params);
           const auto original = free_vars(m);
           auto allowed = original;
           for (const auto& [name, image] : sigma) allowed.erase(name);
           for (const auto& [name, image] : sigma) {
             if (original.count(name) > 0) {
               for (const auto& v : free_vars(image)) allowed.insert(v);
             }
           }
           if (!subset_of(free_vars(substitute(m, sigma)), allowed)) return false;
         }
         return true;
       }},
      {"print/parse round trip",
       [&] {
         Rng rng(13);
         for (int i = 0; i < 200; ++i) {
           const Term t = random_term(rng, params);
           if (!alpha_eq(parse(SourceText{print(t)}), t)) return false;
           if (!alpha_eq(parse(SourceText{canonical(t)}), t)) return false;
         }
         return true;
       }},
      {"head reduction commutes with substitution",
       [&] {
         Rng rng(14);
         std::uniform_int_distribution<int> budget(0, 20);
         for (int i = 0; i < 200; ++i) {
           const Term m = random_term(rng, params);
           const ReductionOutcome n = head_reduce(m, static_cast<Fuel>(budget(rng)));
           const Substitution sigma = random_substitution(rng, names, params);
           const ReductionOutcome moved = head_reduce(substitute(m, sigma), n.steps);
           if (moved.steps != n.steps || !alpha_eq(moved.result, substitute(n.result, sigma))) return false;
         }
         return true;
       }},
      {"church and nour laws (bound 10)",
       [&] {
         return verify_laws(church_system(), 10, fuel).all_pass() && verify_laws(nour_system(), 10, fuel).all_pass();
       }},
      {"nour-paper successor fails at n=1",
       [&] {
         const LawReport rep = verify_laws(nour_paper_system(), 1, fuel);
         return rep.first_failure() != nullptr && rep.first_failure()->n == 1 &&
                rep.first_failure()->law == law::kClosedForm;
       }},
      {"church predecessor (bound 10)",
       [&] { return check_predecessor(church_system(), church_pred(), 10, fuel).all_pass(); }},
      {"refutation of fixed candidates",
       [&] {
         const Term n = var("n");
         const std::vector<Term> candidates = {lam("n", n), lam("p", app(var("p"), false_term())),
                                               lam({"n", "z"}, var("z")), church_pred(), nour_system().successor};
         for (const Term& c : candidates) {
           const RefutationResult r = refute(nour_system(), c, fuel);
           const auto* cert = std::get_if<RefutationCertificate>(&r);
           if (cert == nullptr || cert->verdict != RefutationVerdict::Refuted) return false;
         }
         return true;
       }},
      {"enumeration counts (size <= 7)",
       [&] {
         ClosedTermEnumerator e;
         for (std::size_t s = 1; s <= 7; ++s) {
           if (e.stratum(s, 0).size() != count_closed(s)) return false;
         }
         return true;
       }},
      {"no predecessor for nour up to size 8",
       [&] { return !search_predecessor(nour_system(), 8, 3, 500).found.has_value(); }},
  };

  int failed = 0;
  for (const auto& check : checks) {
    bool ok = false;
    try {
      ok = check.run();
    } catch (const std::exception&) {
      ok = false;
    }
    out << (ok ? "PASS " : "FAIL ") << check.name << "\n";
    if (!ok) ++failed;
  }
  out << (failed == 0 ? "selftest: all checks passed\n" : "selftest: " + std::to_string(failed) + " check(s) failed\n");
  return failed == 0 ? kOk : kFailed;
}

}  // namespace lc::cli
