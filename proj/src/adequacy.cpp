#include "lc/adequacy.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "lc/enumerate.hpp"

namespace lc {

std::optional<std::size_t> PredecessorReport::first_failure() const {
  for (const auto& check : per_index) {
    if (!check.pass) return check.n;
  }
  return std::nullopt;
}

PredecessorReport check_predecessor(const NumeralSystem& sys, const Term& candidate, std::size_t bound, Fuel fuel) {
  if (!candidate.is_closed()) throw NotClosed("predecessor candidate");
  PredecessorReport report{sys.name, candidate, bound, fuel, {}};
  const std::vector<Term> ds = numerals(sys, bound + 1, fuel);
  for (std::size_t n = 0; n < bound; ++n) {
    PredecessorCheck check;
    check.n = n;
    if (n + 1 < ds.size()) {
      ReductionOutcome out = normalize(Term::app(candidate, ds[n + 1]), fuel);
      if (out.reached()) {
        check.verdict = alpha_eq(out.result, ds[n]) ? BetaVerdict::Yes : BetaVerdict::No;
        check.observed = std::move(out.result);
      }
    }
    check.pass = check.verdict == BetaVerdict::Yes;
    report.per_index.push_back(std::move(check));
  }
  return report;
}

Term church_pred() {
  static const Term pred = [] {
    const Term p = var("p");
    const Term n = var("n");
    const Term second = app(p, false_term());
    const Term step = lam("p", pair(second, app(church_system().successor, second)));
    const Term start = pair(church_numeral(0), church_numeral(0));
    return lam("n", app(app(n, {step, start}), true_term()));
  }();
  return pred;
}

Term build_probe(const Term& candidate) {
  if (!candidate.is_closed()) throw NotClosed("predecessor candidate");
  return Term::lam("n", app(candidate, {pair(false_term(), Term::bound(0)), true_term()}));
}

ProbeClassification classify_probe(const Term& probe, Fuel fuel) {
  if (!probe.is_closed()) throw NotClosed("probe");
  const ReductionOutcome out = head_reduce(app(probe, {var(kProbeNu), var(kProbeX), var(kProbeY)}), fuel);
  ProbeClassification c;
  c.steps = out.steps;
  if (!out.reached()) {
    c.kind = ProbeCase::Unsolvable;
    return c;
  }
  c.shape = hnf_shape(out.result);
  if (c.shape->binders > 0) {
    c.kind = ProbeCase::LambdaHeaded;
  } else if (c.shape->head.name == kProbeX) {
    c.kind = ProbeCase::HeadX;
  } else if (c.shape->head.name == kProbeY) {
    c.kind = ProbeCase::HeadY;
  } else {
    // A closed probe leaves nu as the only other possible head.
    c.kind = ProbeCase::HeadNu;
  }
  return c;
}

Counterexample counterexample_for(const ProbeClassification& c) {
  switch (c.kind) {
    case ProbeCase::HeadX:
      // nu := p_2 keeps head x, but d_1 must select y.
      return {1, kProbeY};
    case ProbeCase::HeadY:
      // nu := p_1 keeps head y, but d_0 must select x.
      return {0, kProbeX};
    case ProbeCase::HeadNu:
      // nu := p_{k+2} applied to k arguments still leaves an abstraction.
      return {c.args() + 1, kProbeY};
    case ProbeCase::LambdaHeaded:
      // Substitution keeps the leading binder, so no instance is bare x.
      return {0, kProbeX};
    case ProbeCase::Unsolvable:
      return {0, kProbeX};
  }
  return {0, kProbeX};
}

namespace {

void require_nour_shape(const NumeralSystem& sys, Fuel fuel) {
  for (std::size_t n = 0; n <= 2; ++n) {
    const std::optional<Term> d = numeral(sys, n, fuel);
    if (!d || !alpha_eq(*d, nour_numeral(n))) throw WrongSystem(sys.name);
  }
}

}  // namespace

RefutationResult refute(const NumeralSystem& sys, const Term& candidate, Fuel fuel) {
  if (!candidate.is_closed()) throw NotClosed("predecessor candidate");
  require_nour_shape(sys, fuel);

  const Term probe = build_probe(candidate);
  const ProbeClassification classification = classify_probe(probe, fuel);
  const Counterexample cex = counterexample_for(classification);

  ProbeObservation observed;
  const ReductionOutcome instance =
      head_reduce(app(probe, {p_term(cex.n + 1), var(kProbeX), var(kProbeY)}), fuel);
  observed.status = instance.status;
  observed.steps = instance.steps;
  if (instance.reached()) {
    observed.shape = hnf_shape(instance.result);
    observed.reached_required = alpha_eq(instance.result, var(cex.required));
  }

  DirectCheck direct;
  direct.rhs = numeral(sys, cex.n, fuel);
  if (const std::optional<Term> next = numeral(sys, cex.n + 1, fuel)) {
    ReductionOutcome lhs = normalize(Term::app(candidate, *next), fuel);
    if (lhs.reached()) direct.lhs = std::move(lhs.result);
  }
  if (direct.lhs && direct.rhs) {
    direct.verdict = alpha_eq(*direct.lhs, *direct.rhs) ? BetaVerdict::Yes : BetaVerdict::No;
  }

  if (direct.verdict == BetaVerdict::Yes) {
    return CandidateSurvives{candidate, classification, cex, std::move(direct)};
  }
  const auto verdict =
      direct.verdict == BetaVerdict::No ? RefutationVerdict::Refuted : RefutationVerdict::RefutedModuloFuel;
  return RefutationCertificate{candidate, probe, classification, cex, observed, std::move(direct), fuel, verdict};
}

std::string to_string(ProbeCase c) {
  switch (c) {
    case ProbeCase::HeadX: return "HeadX";
    case ProbeCase::HeadY: return "HeadY";
    case ProbeCase::HeadNu: return "HeadNu";
    case ProbeCase::LambdaHeaded: return "LambdaHeaded";
    case ProbeCase::Unsolvable: return "Unsolvable";
  }
  return "?";
}

std::string to_string(RefutationVerdict v) {
  return v == RefutationVerdict::Refuted ? "Refuted" : "RefutedModuloFuel";
}

namespace {

enum class Outcome : std::uint8_t { Pending, Survived, RejectedAtZero, RejectedLater, FuelExhausted };

Outcome try_candidate(const Term& candidate, const std::vector<Term>& ds, std::size_t law_bound, Fuel fuel) {
  for (std::size_t n = 0; n < law_bound; ++n) {
    if (n + 1 >= ds.size()) return Outcome::FuelExhausted;
    const ReductionOutcome out = normalize(Term::app(candidate, ds[n + 1]), fuel);
    if (!out.reached()) return Outcome::FuelExhausted;
    if (!alpha_eq(out.result, ds[n])) return n == 0 ? Outcome::RejectedAtZero : Outcome::RejectedLater;
  }
  return Outcome::Survived;
}

}  // namespace

SearchResult search_predecessor(const NumeralSystem& sys, std::size_t max_size, std::size_t law_bound, Fuel fuel,
                                unsigned threads) {
  const std::vector<Term> candidates = enumerate_closed(max_size);
  const std::vector<Term> ds = numerals(sys, law_bound + 1, fuel);
  std::vector<Outcome> outcomes(candidates.size(), Outcome::Pending);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> earliest{candidates.size()};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= candidates.size() || i > earliest.load(std::memory_order_relaxed)) return;
      outcomes[i] = try_candidate(candidates[i], ds, law_bound, fuel);
      if (outcomes[i] == Outcome::Survived) {
        std::size_t seen = earliest.load();
        while (i < seen && !earliest.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  // Indices are claimed in increasing order, so everything before the
  // earliest survivor has been decided.
  SearchResult result;
  const std::size_t stop = earliest.load();
  for (std::size_t i = 0; i < candidates.size() && i <= stop; ++i) {
    ++result.stats.tried;
    switch (outcomes[i]) {
      case Outcome::RejectedAtZero: ++result.stats.rejected_at_zero; break;
      case Outcome::RejectedLater: ++result.stats.rejected_later; break;
      case Outcome::FuelExhausted: ++result.stats.fuel_exhausted; break;
      case Outcome::Survived:
      case Outcome::Pending: break;
    }
  }
  if (stop < candidates.size()) result.found = candidates[stop];
  return result;
}

}  // namespace lc
