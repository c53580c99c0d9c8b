#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lc/term.hpp"

namespace lc {

// Fuel counts beta-contractions.
using Fuel = std::uint64_t;
inline constexpr Fuel kDefaultFuel = 100000;
inline constexpr std::size_t kMaxTraceSteps = 10000;

enum class Strategy { Head, NormalOrder };
enum class ReductionStatus { Reached, FuelExhausted };

struct ReduceOptions {
  bool trace = false;
  // Number of contractions recorded after the initial term.
  std::size_t trace_limit = kMaxTraceSteps;
};

struct ReductionOutcome {
  ReductionStatus status = ReductionStatus::FuelExhausted;
  Term result;
  std::uint64_t steps = 0;
  Strategy strategy = Strategy::Head;
  // Entry i is the whole term after i contractions; entry 0 is the input.
  std::optional<std::vector<Term>> trace;

  bool reached() const noexcept { return status == ReductionStatus::Reached; }
};

// The head variable of a head normal form. Bound heads refer to one of the
// leading binders; `name` is then that binder's hint.
struct HeadVariable {
  bool bound = false;
  std::uint32_t index = 0;
  std::string name;

  friend bool operator==(const HeadVariable& a, const HeadVariable& b) {
    return a.bound == b.bound && (a.bound ? a.index == b.index : a.name == b.name);
  }
};

// \x_1 ... \x_n (h v_1 ... v_m) has binders n, head h, args m.
struct HnfShape {
  std::size_t binders = 0;
  HeadVariable head;
  std::size_t args = 0;

  friend bool operator==(const HnfShape& a, const HnfShape& b) {
    return a.binders == b.binders && a.head == b.head && a.args == b.args;
  }
};

// Contracts the head redex, or returns nullopt when m is a head normal form.
std::optional<Term> head_step(const Term& m);

ReductionOutcome head_reduce(const Term& m, Fuel fuel, const ReduceOptions& options = {});

std::optional<HnfShape> hnf_shape(const Term& m);

// Leftmost-outermost reduction to beta-normal form: reach a head normal form,
// then normalize its arguments left to right. Fuel is shared by the whole run.
ReductionOutcome normalize(const Term& m, Fuel fuel, const ReduceOptions& options = {});

enum class BetaVerdict { Yes, No, Unknown };

// Each side gets its own fuel budget. Unknown when either side runs dry.
BetaVerdict beta_eq(const Term& a, const Term& b, Fuel fuel);

struct Solvability {
  bool solvable = false;
  std::uint64_t steps = 0;  // head steps to the hnf, or fuel spent
};

Solvability is_solvable(const Term& m, Fuel fuel);

bool is_normal(const Term& m);

std::string to_string(BetaVerdict v);
std::string to_string(Strategy s);
std::string to_string(ReductionStatus s);

}  // namespace lc
