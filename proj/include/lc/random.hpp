#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "lc/term.hpp"

namespace lc {

struct RandomTermParams {
  // Nesting budget; a term never has more than this many nested nodes.
  std::size_t max_depth = 6;
  // Free names a variable may pick besides the enclosing binders.
  std::vector<std::string> free_names;
  // Relative weights of the node kinds while budget remains.
  double var_weight = 1.0;
  double lam_weight = 1.0;
  double app_weight = 1.5;
};

using Rng = std::mt19937_64;

// Draws a term top-down. With no free names the result is closed.
Term random_term(Rng& rng, const RandomTermParams& params);

// A random substitution over `names`, each image drawn with `params`.
Substitution random_substitution(Rng& rng, const std::vector<std::string>& names, const RandomTermParams& params);

}  // namespace lc
