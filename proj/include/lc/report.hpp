#pragma once

#include <string>

#include "json.hpp"

#include "lc/adequacy.hpp"
#include "lc/numerals.hpp"
#include "lc/reduction.hpp"

// Machine-readable (JSON) and human-readable renderings of every report.
// All terms are printed canonically, so output is stable across runs.
namespace lc::report {

using nlohmann::json;

json to_json(const HnfShape& shape);
json to_json(const ReductionOutcome& outcome);
json to_json(const LawReport& report);
json to_json(const PredecessorReport& report);
json to_json(const ProbeClassification& c);
json to_json(const RefutationCertificate& cert);
json to_json(const CandidateSurvives& survivor);
json to_json(const RefutationResult& result);
json to_json(const SearchResult& result, const std::string& system, std::size_t max_size, std::size_t law_bound,
             Fuel fuel);

// One line per recorded term: "<step>: <canonical term>".
std::string trace_text(const ReductionOutcome& outcome);

std::string to_text(const ReductionOutcome& outcome);
std::string to_text(const LawReport& report);
std::string to_text(const PredecessorReport& report);
std::string to_text(const RefutationResult& result);
std::string to_text(const SearchResult& result, const std::string& system, std::size_t max_size,
                    std::size_t law_bound, Fuel fuel);

}  // namespace lc::report
