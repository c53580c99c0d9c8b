#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lc/numerals.hpp"
#include "lc/reduction.hpp"
#include "lc/term.hpp"

namespace lc {

class NotClosed : public std::invalid_argument {
 public:
  explicit NotClosed(const std::string& what) : std::invalid_argument(what + " is not closed") {}
};

class WrongSystem : public std::invalid_argument {
 public:
  explicit WrongSystem(const std::string& name)
      : std::invalid_argument("numeral system '" + name + "' does not have the <T|F, p_n> pairing shape") {}
};

// ---------------------------------------------------------------------------
// Predecessor law

struct PredecessorCheck {
  std::size_t n = 0;
  bool pass = false;
  BetaVerdict verdict = BetaVerdict::Unknown;
  // Normal form of (candidate d_{n+1}); absent when it ran out of fuel or
  // d_{n+1} itself could not be computed.
  std::optional<Term> observed;
};

struct PredecessorReport {
  std::string system;
  Term candidate;
  std::size_t bound = 0;
  Fuel fuel = 0;
  std::vector<PredecessorCheck> per_index;

  std::optional<std::size_t> first_failure() const;
  bool all_pass() const { return !first_failure().has_value(); }
};

// Evaluates (candidate d_{n+1}) = d_n for n = 0 .. bound-1. Throws NotClosed.
PredecessorReport check_predecessor(const NumeralSystem& sys, const Term& candidate, std::size_t bound, Fuel fuel);

// Pair-based predecessor for Church numerals:
//   \n. fst (n (\p. <snd p, succ (snd p)>) <c_0, c_0>)
Term church_pred();

// ---------------------------------------------------------------------------
// Probe analysis

// Free variables applied to the probe. Candidates are closed, so they can
// never capture these.
inline constexpr const char* kProbeNu = "nu";
inline constexpr const char* kProbeX = "x";
inline constexpr const char* kProbeY = "y";

// \n. ((candidate <F, n>) T). Throws NotClosed.
Term build_probe(const Term& candidate);

enum class ProbeCase { HeadX, HeadY, HeadNu, LambdaHeaded, Unsolvable };

struct ProbeClassification {
  ProbeCase kind = ProbeCase::Unsolvable;
  // Shape of the head normal form of (probe nu x y); absent when unsolvable.
  std::optional<HnfShape> shape;
  // Head steps to the hnf, or the fuel spent.
  std::uint64_t steps = 0;

  std::size_t args() const noexcept { return shape ? shape->args : 0; }
};

// Head-reduces (probe nu x y) and classifies its head normal form.
ProbeClassification classify_probe(const Term& probe, Fuel fuel);

struct Counterexample {
  std::size_t n = 0;
  // The bare variable (probe p_{n+1} x y) would have to reach.
  std::string required;
};

// The index at which the predecessor law must fail for a given probe case.
Counterexample counterexample_for(const ProbeClassification& c);

enum class RefutationVerdict { Refuted, RefutedModuloFuel };

struct ProbeObservation {
  ReductionStatus status = ReductionStatus::FuelExhausted;
  std::optional<HnfShape> shape;
  std::uint64_t steps = 0;
  // Whether head reduction ended on the required bare variable.
  bool reached_required = false;
};

struct DirectCheck {
  // Normal form of (candidate d_{n+1}); absent when it ran out of fuel.
  std::optional<Term> lhs;
  std::optional<Term> rhs;  // d_n
  BetaVerdict verdict = BetaVerdict::Unknown;
};

struct RefutationCertificate {
  Term candidate;
  Term probe;
  ProbeClassification classification;
  Counterexample counterexample;
  ProbeObservation observed;
  DirectCheck direct_check;
  Fuel fuel = 0;
  RefutationVerdict verdict = RefutationVerdict::RefutedModuloFuel;
};

// Reported only if the direct check finds the law holding at the index the
// case analysis picked.
struct CandidateSurvives {
  Term candidate;
  ProbeClassification classification;
  Counterexample counterexample;
  DirectCheck direct_check;
};

using RefutationResult = std::variant<RefutationCertificate, CandidateSurvives>;

// Runs the probe case analysis against a system with the <T|F, p_n> pairing
// and confirms the predicted counterexample by direct normalization.
// Throws NotClosed or WrongSystem.
RefutationResult refute(const NumeralSystem& sys, const Term& candidate, Fuel fuel);

std::string to_string(ProbeCase c);
std::string to_string(RefutationVerdict v);

// ---------------------------------------------------------------------------
// Brute-force search

struct SearchStats {
  std::uint64_t tried = 0;
  std::uint64_t rejected_at_zero = 0;
  std::uint64_t rejected_later = 0;
  std::uint64_t fuel_exhausted = 0;
};

struct SearchResult {
  std::optional<Term> found;
  SearchStats stats;
};

// Tries every closed term of size <= max_size as a predecessor for
// n = 0 .. law_bound-1, smallest n first. Returns the enumeration-earliest
// survivor; the statistics cover every candidate up to it. `threads` = 0
// uses the hardware concurrency.
SearchResult search_predecessor(const NumeralSystem& sys, std::size_t max_size, std::size_t law_bound, Fuel fuel,
                                unsigned threads = 0);

}  // namespace lc
