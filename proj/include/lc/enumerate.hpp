#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "lc/term.hpp"

namespace lc {

// Closed terms by size, in a fixed order: increasing size; within a size,
// variables before abstractions before applications. Variables order by
// de Bruijn index, abstractions by body, applications by the size of the
// function part, then function, then argument.
class ClosedTermEnumerator {
 public:
  // All terms of exactly `size` nodes whose loose indices are < depth.
  const std::vector<Term>& stratum(std::size_t size, std::size_t depth);

 private:
  std::vector<std::vector<std::vector<Term>>> table_;  // [size][depth]
  std::vector<std::vector<bool>> built_;
};

// Every closed term of size <= max_size, exactly once. The visitor returns
// false to stop early.
void for_each_closed(std::size_t max_size, const std::function<bool(const Term&)>& visit);

std::vector<Term> enumerate_closed(std::size_t max_size);

// Number of closed terms of exactly `size` nodes.
std::uint64_t count_closed(std::size_t size);

}  // namespace lc
