#include "lc/report.hpp"

#include <sstream>

#include "lc/syntax.hpp"

namespace lc::report {

namespace {

json term_or_null(const std::optional<Term>& t) { return t ? json(canonical(*t)) : json(nullptr); }

std::string shape_text(const HnfShape& s) {
  std::ostringstream out;
  out << "binders=" << s.binders << " head=" << s.head.name << " args=" << s.args;
  return out.str();
}

}  // namespace

json to_json(const HnfShape& shape) {
  return json{{"binders", shape.binders},
              {"head", shape.head.name},
              {"head_bound", shape.head.bound},
              {"args", shape.args}};
}

json to_json(const ReductionOutcome& outcome) {
  json j{{"status", to_string(outcome.status)},
         {"strategy", to_string(outcome.strategy)},
         {"steps", outcome.steps},
         {"result", canonical(outcome.result)}};
  if (outcome.trace) {
    json steps = json::array();
    for (std::size_t i = 0; i < outcome.trace->size(); ++i) {
      steps.push_back(json{{"step", i}, {"term", canonical((*outcome.trace)[i])}});
    }
    j["trace"] = std::move(steps);
  }
  return j;
}

json to_json(const LawReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back(json{{"n", f.n}, {"law", f.law}, {"expected", f.expected}, {"actual", f.actual}});
  }
  json j{{"system", report.system},
         {"bound", report.bound},
         {"fuel", report.fuel},
         {"verdict", report.all_pass() ? "AllPass" : "FirstFailure"},
         {"failures", std::move(failures)}};
  if (const LawFailure* first = report.first_failure()) {
    j["first_failure"] = json{{"n", first->n}, {"law", first->law}};
  } else {
    j["first_failure"] = nullptr;
  }
  return j;
}

json to_json(const PredecessorReport& report) {
  json per_index = json::array();
  for (const auto& c : report.per_index) {
    per_index.push_back(
        json{{"n", c.n}, {"pass", c.pass}, {"verdict", to_string(c.verdict)}, {"observed", term_or_null(c.observed)}});
  }
  const auto first = report.first_failure();
  return json{{"system", report.system},
              {"candidate", canonical(report.candidate)},
              {"bound", report.bound},
              {"fuel", report.fuel},
              {"verdict", first ? "FirstFailure" : "AllPass"},
              {"first_failure", first ? json(*first) : json(nullptr)},
              {"per_index", std::move(per_index)}};
}

json to_json(const ProbeClassification& c) {
  json j{{"case", to_string(c.kind)}, {"steps", c.steps}};
  if (c.shape) {
    j["binders"] = c.shape->binders;
    j["head"] = c.shape->head.name;
    j["args"] = c.shape->args;
  } else {
    j["binders"] = nullptr;
    j["head"] = nullptr;
    j["args"] = nullptr;
  }
  return j;
}

namespace {

json direct_check_json(const DirectCheck& d) {
  return json{{"lhs_nf", term_or_null(d.lhs)}, {"rhs_nf", term_or_null(d.rhs)}, {"verdict", to_string(d.verdict)}};
}

}  // namespace

json to_json(const RefutationCertificate& cert) {
  json observed{{"status", to_string(cert.observed.status)},
                {"steps", cert.observed.steps},
                {"hnf", cert.observed.shape ? to_json(*cert.observed.shape) : json(nullptr)},
                {"is_required", cert.observed.reached_required}};
  return json{{"candidate", canonical(cert.candidate)},
              {"probe", canonical(cert.probe)},
              {"classification", to_json(cert.classification)},
              {"counterexample",
               json{{"n", cert.counterexample.n},
                    {"required", cert.counterexample.required},
                    {"observed", std::move(observed)}}},
              {"direct_check", direct_check_json(cert.direct_check)},
              {"fuel", cert.fuel},
              {"verdict", to_string(cert.verdict)}};
}

json to_json(const CandidateSurvives& survivor) {
  return json{{"candidate", canonical(survivor.candidate)},
              {"classification", to_json(survivor.classification)},
              {"counterexample", json{{"n", survivor.counterexample.n}, {"required", survivor.counterexample.required}}},
              {"direct_check", direct_check_json(survivor.direct_check)},
              {"verdict", "CandidateSurvives"}};
}

json to_json(const RefutationResult& result) {
  return std::visit([](const auto& r) { return to_json(r); }, result);
}

json to_json(const SearchResult& result, const std::string& system, std::size_t max_size, std::size_t law_bound,
             Fuel fuel) {
  return json{{"system", system},
              {"max_size", max_size},
              {"law_bound", law_bound},
              {"fuel", fuel},
              {"result", result.found ? "Found" : "NoneFound"},
              {"found", term_or_null(result.found)},
              {"stats",
               json{{"tried", result.stats.tried},
                    {"rejected_at_zero", result.stats.rejected_at_zero},
                    {"rejected_later", result.stats.rejected_later},
                    {"fuel_exhausted", result.stats.fuel_exhausted}}}};
}

std::string trace_text(const ReductionOutcome& outcome) {
  std::string out;
  if (!outcome.trace) return out;
  for (std::size_t i = 0; i < outcome.trace->size(); ++i) {
    out += std::to_string(i) + ": " + canonical((*outcome.trace)[i]) + "\n";
  }
  return out;
}

std::string to_text(const ReductionOutcome& outcome) {
  std::ostringstream out;
  out << "strategy: " << to_string(outcome.strategy) << "\n"
      << "status: " << to_string(outcome.status) << "\n"
      << "steps: " << outcome.steps << "\n"
      << "result: " << canonical(outcome.result) << "\n";
  return out.str();
}

std::string to_text(const LawReport& report) {
  std::ostringstream out;
  out << "system: " << report.system << "\n"
      << "bound: " << report.bound << "\n"
      << "fuel: " << report.fuel << "\n";
  if (const LawFailure* first = report.first_failure()) {
    out << "verdict: FirstFailure n=" << first->n << " law=" << first->law << "\n";
  } else {
    out << "verdict: AllPass\n";
  }
  for (const auto& f : report.failures) {
    out << "failure: n=" << f.n << " law=" << f.law << "\n"
        << "  expected: " << f.expected << "\n"
        << "  actual:   " << f.actual << "\n";
  }
  return out.str();
}

std::string to_text(const PredecessorReport& report) {
  std::ostringstream out;
  out << "system: " << report.system << "\n"
      << "candidate: " << canonical(report.candidate) << "\n"
      << "bound: " << report.bound << "\n"
      << "fuel: " << report.fuel << "\n";
  if (const auto first = report.first_failure()) {
    out << "verdict: FirstFailure n=" << *first << "\n";
  } else {
    out << "verdict: AllPass\n";
  }
  for (const auto& c : report.per_index) {
    out << "n=" << c.n << " " << (c.pass ? "pass" : "fail") << " " << to_string(c.verdict) << " observed="
        << (c.observed ? canonical(*c.observed) : "<fuel exhausted>") << "\n";
  }
  return out.str();
}

std::string to_text(const RefutationResult& result) {
  std::ostringstream out;
  auto classification = [&](const ProbeClassification& c) {
    out << "classification: " << to_string(c.kind);
    if (c.shape) out << " (" << shape_text(*c.shape) << ")";
    out << " after " << c.steps << " head steps\n";
  };
  auto direct = [&](const DirectCheck& d) {
    out << "direct check: " << to_string(d.verdict) << "\n"
        << "  lhs: " << (d.lhs ? canonical(*d.lhs) : "<fuel exhausted>") << "\n"
        << "  rhs: " << (d.rhs ? canonical(*d.rhs) : "<fuel exhausted>") << "\n";
  };
  if (const auto* cert = std::get_if<RefutationCertificate>(&result)) {
    out << "candidate: " << canonical(cert->candidate) << "\n"
        << "probe: " << canonical(cert->probe) << "\n";
    classification(cert->classification);
    out << "counterexample: n=" << cert->counterexample.n << " required=" << cert->counterexample.required << "\n"
        << "  probe instance: " << to_string(cert->observed.status);
    if (cert->observed.shape) out << " (" << shape_text(*cert->observed.shape) << ")";
    out << (cert->observed.reached_required ? " reaches" : " does not reach") << " the required variable\n";
    direct(cert->direct_check);
    out << "fuel: " << cert->fuel << "\n"
        << "verdict: " << to_string(cert->verdict) << "\n";
  } else {
    const auto& s = std::get<CandidateSurvives>(result);
    out << "candidate: " << canonical(s.candidate) << "\n";
    classification(s.classification);
    out << "counterexample: n=" << s.counterexample.n << " required=" << s.counterexample.required << "\n";
    direct(s.direct_check);
    out << "verdict: CandidateSurvives\n";
  }
  return out.str();
}

std::string to_text(const SearchResult& result, const std::string& system, std::size_t max_size,
                    std::size_t law_bound, Fuel fuel) {
  std::ostringstream out;
  out << "system: " << system << "\n"
      << "max size: " << max_size << "\n"
      << "law bound: " << law_bound << "\n"
      << "fuel: " << fuel << "\n"
      << "result: " << (result.found ? "Found " + canonical(*result.found) : std::string("NoneFound")) << "\n"
      << "tried: " << result.stats.tried << "\n"
      << "rejected at n=0: " << result.stats.rejected_at_zero << "\n"
      << "rejected at n>=1: " << result.stats.rejected_later << "\n"
      << "fuel exhausted: " << result.stats.fuel_exhausted << "\n";
  return out.str();
}

}  // namespace lc::report
