#include "lc/random.hpp"

namespace lc {

namespace {

std::string binder_name(std::size_t depth) {
  static constexpr std::string_view kNames = "abcdefghijk";
  std::string s(1, kNames[depth % kNames.size()]);
  if (depth >= kNames.size()) s += std::to_string(depth / kNames.size());
  return s;
}

Term draw(Rng& rng, const RandomTermParams& p, std::size_t budget, std::size_t binders) {
  const std::size_t vars = binders + p.free_names.size();
  double w_var = vars > 0 ? p.var_weight : 0.0;
  double w_lam = budget > 0 ? p.lam_weight : 0.0;
  double w_app = budget > 0 ? p.app_weight : 0.0;
  if (w_var + w_lam + w_app <= 0.0) {
    // Out of budget with nothing in scope: the smallest closed term.
    return Term::lam(binder_name(binders), Term::bound(0));
  }
  std::discrete_distribution<int> kind({w_var, w_lam, w_app});
  switch (kind(rng)) {
    case 0: {
      std::uniform_int_distribution<std::size_t> pick(0, vars - 1);
      const std::size_t i = pick(rng);
      if (i < binders) return Term::bound(static_cast<std::uint32_t>(i));
      return Term::free(p.free_names[i - binders]);
    }
    case 1:
      return Term::lam(binder_name(binders), draw(rng, p, budget - 1, binders + 1));
    default: {
      Term fn = draw(rng, p, budget - 1, binders);
      return Term::app(std::move(fn), draw(rng, p, budget - 1, binders));
    }
  }
}

}  // namespace

Term random_term(Rng& rng, const RandomTermParams& params) { return draw(rng, params, params.max_depth, 0); }

Substitution random_substitution(Rng& rng, const std::vector<std::string>& names, const RandomTermParams& params) {
  Substitution sigma;
  for (const auto& name : names) sigma.insert_or_assign(name, random_term(rng, params));
  return sigma;
}

}  // namespace lc
