#pragma once

#include <string>

#include "lc/syntax.hpp"
#include "lc/term.hpp"

namespace lc::testing {

inline Term p(const std::string& text) { return parse(SourceText{text, "<test>"}); }

inline const Term T = true_term();
inline const Term F = false_term();
inline const Term I = identity();

}  // namespace lc::testing
