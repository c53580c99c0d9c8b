#include "lc/reduction.hpp"

#include <functional>

namespace lc {

namespace {

// A term split as \b_1 ... \b_n (head a_1 ... a_m). Only the head position is
// ever rewritten, so the binder list and argument stack stay valid between
// contractions.
class HeadMachine {
 public:
  explicit HeadMachine(const Term& t) : head_(t) { unwind(); }

  bool at_redex() const noexcept { return head_.is_lam() && !args_.empty(); }

  void contract() {
    head_ = instantiate(head_.body(), args_.back());
    args_.pop_back();
    unwind();
  }

  Term rebuild() const {
    Term t = head_;
    for (auto it = args_.rbegin(); it != args_.rend(); ++it) t = Term::app(t, *it);
    return wrap(t);
  }

  Term wrap(Term t) const {
    for (auto it = binders_.rbegin(); it != binders_.rend(); ++it) t = Term::lam(*it, std::move(t));
    return t;
  }

  const Term& head() const noexcept { return head_; }
  const std::vector<std::string>& binders() const noexcept { return binders_; }

  // Arguments in application order.
  std::vector<Term> arguments() const { return {args_.rbegin(), args_.rend()}; }

 private:
  void unwind() {
    for (;;) {
      if (head_.is_app()) {
        args_.push_back(head_.arg());
        Term fn = head_.fn();
        head_ = std::move(fn);
      } else if (head_.is_lam() && args_.empty()) {
        binders_.push_back(head_.name());
        Term body = head_.body();
        head_ = std::move(body);
      } else {
        return;
      }
    }
  }

  std::vector<std::string> binders_;
  Term head_;
  std::vector<Term> args_;  // reversed: back() is the first argument
};

using Plug = std::function<Term(const Term&)>;

class Normalizer {
 public:
  Normalizer(Fuel fuel, std::vector<Term>* trace, std::size_t trace_limit)
      : fuel_(fuel), trace_(trace), trace_limit_(trace_limit) {}

  Term run(const Term& t, const Plug* plug) {
    HeadMachine machine(t);
    while (machine.at_redex()) {
      if (steps_ == fuel_) {
        exhausted_ = true;
        return machine.rebuild();
      }
      machine.contract();
      ++steps_;
      record(plug, machine.rebuild());
    }
    std::vector<Term> args = machine.arguments();
    for (std::size_t i = 0; i < args.size() && !exhausted_; ++i) {
      if (trace_ == nullptr) {
        args[i] = run(args[i], nullptr);
        continue;
      }
      Plug inner = [&, i](const Term& sub) {
        std::vector<Term> filled = args;
        filled[i] = sub;
        return (*plug)(machine.wrap(app(machine.head(), filled)));
      };
      args[i] = run(args[i], &inner);
    }
    return machine.wrap(app(machine.head(), args));
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t steps() const noexcept { return steps_; }

 private:
  void record(const Plug* plug, const Term& local) {
    if (trace_ == nullptr || trace_->size() > trace_limit_) return;
    trace_->push_back((*plug)(local));
  }

  Fuel fuel_;
  std::uint64_t steps_ = 0;
  bool exhausted_ = false;
  std::vector<Term>* trace_;
  std::size_t trace_limit_;
};

}  // namespace

std::optional<Term> head_step(const Term& m) {
  HeadMachine machine(m);
  if (!machine.at_redex()) return std::nullopt;
  machine.contract();
  return machine.rebuild();
}

ReductionOutcome head_reduce(const Term& m, Fuel fuel, const ReduceOptions& options) {
  HeadMachine machine(m);
  std::optional<std::vector<Term>> trace;
  if (options.trace) trace.emplace().push_back(m);
  std::uint64_t steps = 0;
  while (machine.at_redex() && steps < fuel) {
    machine.contract();
    ++steps;
    if (trace && trace->size() <= options.trace_limit) trace->push_back(machine.rebuild());
  }
  const auto status = machine.at_redex() ? ReductionStatus::FuelExhausted : ReductionStatus::Reached;
  return ReductionOutcome{status, machine.rebuild(), steps, Strategy::Head, std::move(trace)};
}

std::optional<HnfShape> hnf_shape(const Term& m) {
  HeadMachine machine(m);
  if (machine.at_redex()) return std::nullopt;
  HnfShape shape;
  shape.binders = machine.binders().size();
  shape.args = machine.arguments().size();
  const Term& head = machine.head();
  if (head.is_free()) {
    shape.head.name = head.name();
  } else {
    shape.head.bound = true;
    shape.head.index = head.index();
    if (head.index() < shape.binders) {
      shape.head.name = machine.binders()[shape.binders - 1 - head.index()];
    } else {
      shape.head.name = "_loose" + std::to_string(head.index() - shape.binders);
    }
  }
  return shape;
}

ReductionOutcome normalize(const Term& m, Fuel fuel, const ReduceOptions& options) {
  std::optional<std::vector<Term>> trace;
  if (options.trace) trace.emplace().push_back(m);
  Normalizer normalizer(fuel, trace ? &*trace : nullptr, options.trace_limit);
  const Plug top = [](const Term& t) { return t; };
  Term result = normalizer.run(m, trace ? &top : nullptr);
  const auto status = normalizer.exhausted() ? ReductionStatus::FuelExhausted : ReductionStatus::Reached;
  return ReductionOutcome{status, std::move(result), normalizer.steps(), Strategy::NormalOrder, std::move(trace)};
}

BetaVerdict beta_eq(const Term& a, const Term& b, Fuel fuel) {
  const ReductionOutcome na = normalize(a, fuel);
  if (!na.reached()) return BetaVerdict::Unknown;
  const ReductionOutcome nb = normalize(b, fuel);
  if (!nb.reached()) return BetaVerdict::Unknown;
  return alpha_eq(na.result, nb.result) ? BetaVerdict::Yes : BetaVerdict::No;
}

Solvability is_solvable(const Term& m, Fuel fuel) {
  const ReductionOutcome out = head_reduce(m, fuel);
  return Solvability{out.reached(), out.steps};
}

bool is_normal(const Term& m) {
  switch (m.kind()) {
    case Term::Kind::Bound:
    case Term::Kind::Free:
      return true;
    case Term::Kind::Lam:
      return is_normal(m.body());
    case Term::Kind::App:
      return !m.fn().is_lam() && is_normal(m.fn()) && is_normal(m.arg());
  }
  return true;
}

std::string to_string(BetaVerdict v) {
  switch (v) {
    case BetaVerdict::Yes: return "Yes";
    case BetaVerdict::No: return "No";
    case BetaVerdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(Strategy s) { return s == Strategy::Head ? "head" : "normal-order"; }

std::string to_string(ReductionStatus s) {
  return s == ReductionStatus::Reached ? "Reached" : "FuelExhausted";
}

}  // namespace lc
