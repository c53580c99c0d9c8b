#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lc/term.hpp"

namespace lc {

struct SourceText {
  std::string text;
  std::string origin = "<input>";
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string origin, std::size_t line, std::size_t column, const std::string& message);

  const std::string& origin() const noexcept { return origin_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  // The message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string origin_;
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

// A reference inside a definition that names nothing defined before it.
class UnknownName : public ParseError {
 public:
  UnknownName(std::string origin, std::size_t line, std::size_t column, const std::string& name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// Named closed terms, in definition order. Later entries may shadow earlier ones.
class Definitions {
 public:
  void define(std::string name, Term value);
  const Term* find(std::string_view name) const;
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<std::pair<std::string, Term>>& entries() const noexcept { return entries_; }

 private:
  std::vector<std::pair<std::string, Term>> entries_;
};

// A term file: `name = term` lines followed by an optional body term.
struct Program {
  Definitions definitions;
  std::optional<Term> body;

  // The body, or the last definition when there is no body.
  Term value() const;
};

// Parses a single term. Free names that match a definition are inlined;
// any other free name stays a free variable.
Term parse(const SourceText& src, const Definitions& defs = {});

// Parses a term file. Every free name inside a definition must refer to an
// earlier definition (or one in `base`); unresolved names raise UnknownName.
// A body, if present, follows the definitions and may span several lines.
Program parse_program(const SourceText& src, const Definitions& base = {});

enum class PrintMode { Readable, Canonical };

// Readable mode reuses binder hints where that cannot capture; canonical
// mode names binders by depth, so alpha-equivalent terms print identically.
std::string print(const Term& m, PrintMode mode = PrintMode::Readable);
std::string print(const NamedTerm& m);

inline std::string canonical(const Term& m) { return print(m, PrintMode::Canonical); }

}  // namespace lc
