#include "lc/enumerate.hpp"

#include <map>
#include <utility>

namespace lc {

namespace {

// Binder hints by depth, so enumerated terms print with distinct names.
std::string hint_for_depth(std::size_t depth) {
  static constexpr std::string_view kNames = "xyzuvwabcdefghijklmnopqrst";
  std::string s(1, kNames[depth % kNames.size()]);
  if (depth >= kNames.size()) s += std::to_string(depth / kNames.size());
  return s;
}

}  // namespace

const std::vector<Term>& ClosedTermEnumerator::stratum(std::size_t size, std::size_t depth) {
  if (table_.size() <= size) {
    table_.resize(size + 1);
    built_.resize(size + 1);
  }
  if (table_[size].size() <= depth) {
    table_[size].resize(depth + 1);
    built_[size].resize(depth + 1, false);
  }
  if (built_[size][depth]) return table_[size][depth];

  std::vector<Term> out;
  if (size == 1) {
    for (std::size_t i = 0; i < depth; ++i) out.push_back(Term::bound(static_cast<std::uint32_t>(i)));
  } else if (size >= 2) {
    // Copy: recursive calls may reallocate the table.
    const std::vector<Term> bodies = stratum(size - 1, depth + 1);
    for (const Term& body : bodies) out.push_back(Term::lam(hint_for_depth(depth), body));
    for (std::size_t left = 1; left + 1 < size; ++left) {
      const std::vector<Term> fns = stratum(left, depth);
      const std::vector<Term> args = stratum(size - 1 - left, depth);
      for (const Term& fn : fns) {
        for (const Term& arg : args) out.push_back(Term::app(fn, arg));
      }
    }
  }
  table_[size][depth] = std::move(out);
  built_[size][depth] = true;
  return table_[size][depth];
}

void for_each_closed(std::size_t max_size, const std::function<bool(const Term&)>& visit) {
  ClosedTermEnumerator enumerator;
  for (std::size_t size = 1; size <= max_size; ++size) {
    const std::vector<Term> terms = enumerator.stratum(size, 0);
    for (const Term& t : terms) {
      if (!visit(t)) return;
    }
  }
}

std::vector<Term> enumerate_closed(std::size_t max_size) {
  std::vector<Term> out;
  for_each_closed(max_size, [&](const Term& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::uint64_t count_closed(std::size_t size) {
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> memo;
  std::function<std::uint64_t(std::size_t, std::size_t)> count = [&](std::size_t s, std::size_t d) -> std::uint64_t {
    if (s == 0) return 0;
    if (s == 1) return d;
    auto key = std::make_pair(s, d);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = count(s - 1, d + 1);
    for (std::size_t left = 1; left + 1 < s; ++left) total += count(left, d) * count(s - 1 - left, d);
    memo[key] = total;
    return total;
  };
  return count(size, 0);
}

}  // namespace lc
