#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lc/reduction.hpp"

namespace lc::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  // law failure, survivor found, fuel exhausted
inline constexpr int kUsage = 2;   // bad flags, malformed terms, unreadable files

// Name of the environment variable that overrides the default fuel.
inline constexpr const char* kFuelEnv = "LCW_FUEL";

// Default fuel: $LCW_FUEL when it holds a number, else kDefaultFuel.
Fuel default_fuel();

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Runs the invariant suite at reduced bounds; one PASS/FAIL line per check.
int selftest(std::ostream& out, Fuel fuel);

}  // namespace lc::cli
