#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lc {

// An untyped lambda term.
//
// Bound variables are stored as de Bruijn indices (0 = nearest enclosing
// binder), free variables by name. Abstractions keep the surface name of
// their binder as a printing hint only; it never affects equality.
//
// Terms are immutable and share structure; copying a Term is a reference
// count bump.
class Term {
 public:
  enum class Kind : std::uint8_t { Bound, Free, Lam, App };

  // Nameless constructors. `bound(i)` may produce a term with loose indices;
  // such terms only make sense underneath enough binders.
  static Term bound(std::uint32_t index);
  static Term free(std::string name);
  static Term lam(std::string hint, Term body);
  static Term app(Term fn, Term arg);

  Kind kind() const noexcept;
  bool is_bound() const noexcept { return kind() == Kind::Bound; }
  bool is_free() const noexcept { return kind() == Kind::Free; }
  bool is_lam() const noexcept { return kind() == Kind::Lam; }
  bool is_app() const noexcept { return kind() == Kind::App; }

  std::uint32_t index() const noexcept;     // Bound
  const std::string& name() const noexcept; // Free name or Lam hint
  const Term& body() const noexcept;        // Lam
  const Term& fn() const noexcept;          // App
  const Term& arg() const noexcept;         // App

  // Node count: variable 1, abstraction 1 + body, application 1 + both.
  std::size_t size() const noexcept;
  // One more than the largest loose de Bruijn index, 0 if there is none.
  std::uint32_t loose() const noexcept;
  bool has_free_names() const noexcept;
  bool is_closed() const noexcept { return loose() == 0 && !has_free_names(); }

  bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

  struct Node;

 private:
  friend struct Node;
  Term() = default;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Kind kind;
  std::uint32_t index = 0;
  std::uint32_t loose = 0;
  bool has_free = false;
  std::size_t size = 1;
  std::string name;
  // Children are only populated for Lam (left = body) and App.
  Term left;
  Term right;
};

inline Term::Kind Term::kind() const noexcept { return node_->kind; }
inline std::uint32_t Term::index() const noexcept { return node_->index; }
inline const std::string& Term::name() const noexcept { return node_->name; }
inline const Term& Term::body() const noexcept { return node_->left; }
inline const Term& Term::fn() const noexcept { return node_->left; }
inline const Term& Term::arg() const noexcept { return node_->right; }
inline std::size_t Term::size() const noexcept { return node_->size; }
inline std::uint32_t Term::loose() const noexcept { return node_->loose; }
inline bool Term::has_free_names() const noexcept { return node_->has_free; }

// Simultaneous substitution of free variables.
using Substitution = std::map<std::string, Term, std::less<>>;

// Named construction helpers. `lam(x, body)` binds every free occurrence of
// `x` in `body`.
Term var(std::string name);
Term lam(std::string_view name, const Term& body);
Term lam(std::initializer_list<std::string_view> names, const Term& body);
Term app(const Term& fn, const Term& arg);
Term app(const Term& fn, std::initializer_list<Term> args);
Term app(const Term& fn, const std::vector<Term>& args);

bool alpha_eq(const Term& a, const Term& b) noexcept;
std::set<std::string, std::less<>> free_vars(const Term& m);
inline std::size_t size(const Term& m) noexcept { return m.size(); }

// Capture-avoiding, simultaneous replacement of free variables. Images are
// expected to have no loose indices; they are never rescanned.
Term substitute(const Term& m, const Substitution& sigma);

// Shifts every loose index >= cutoff by delta.
Term shift(const Term& t, std::int64_t delta, std::uint32_t cutoff = 0);
// Replaces index 0 of `body` (the body of an abstraction) with `arg` and
// lowers the remaining loose indices by one: the contractum of (\.body) arg.
Term instantiate(const Term& body, const Term& arg);

// T = \x.\y. x, F = \x.\y. y
Term true_term();
Term false_term();
Term identity();
// \x. x x applied to itself.
Term omega();
// <m, n> = \z. z m n
Term pair(const Term& m, const Term& n);

// Explicit-name view of a term. Every variable carries a name; binders
// introduce names. Used by the parser and printer.
struct NamedTerm {
  enum class Kind : std::uint8_t { Var, Lam, App };
  Kind kind = Kind::Var;
  std::string name;
  std::shared_ptr<const NamedTerm> left;  // Lam body or App function
  std::shared_ptr<const NamedTerm> right; // App argument
  std::size_t line = 0;
  std::size_t column = 0;

  static NamedTerm variable(std::string name, std::size_t line = 0, std::size_t column = 0);
  static NamedTerm abstraction(std::string binder, NamedTerm body);
  static NamedTerm application(NamedTerm fn, NamedTerm arg);
};

// A letter followed by letters, digits, '_' or '\''.
bool is_identifier(std::string_view s);

enum class NamingMode { Readable, Canonical };

// Names every binder so that the named view resolves back to the same term.
NamedTerm to_named(const Term& m, NamingMode mode = NamingMode::Readable);
// Resolves names innermost-binder-first; unbound names become free variables.
Term from_named(const NamedTerm& m);

}  // namespace lc
