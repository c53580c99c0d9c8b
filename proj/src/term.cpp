#include "lc/term.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lc {

Term Term::bound(std::uint32_t index) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Bound;
  node->index = index;
  node->loose = index + 1;
  return Term(std::move(node));
}

Term Term::free(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Free;
  node->has_free = true;
  node->name = std::move(name);
  return Term(std::move(node));
}

Term Term::lam(std::string hint, Term body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Lam;
  node->name = std::move(hint);
  node->loose = body.loose() == 0 ? 0 : body.loose() - 1;
  node->has_free = body.has_free_names();
  node->size = 1 + body.size();
  node->left = std::move(body);
  return Term(std::move(node));
}

Term Term::app(Term fn, Term arg) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::App;
  node->loose = std::max(fn.loose(), arg.loose());
  node->has_free = fn.has_free_names() || arg.has_free_names();
  node->size = 1 + fn.size() + arg.size();
  node->left = std::move(fn);
  node->right = std::move(arg);
  return Term(std::move(node));
}

namespace {

Term close_over(const Term& t, std::string_view name, std::uint32_t depth) {
  if (!t.has_free_names() && t.loose() <= depth) return t;
  switch (t.kind()) {
    case Term::Kind::Free:
      return t.name() == name ? Term::bound(depth) : t;
    case Term::Kind::Bound:
      return t.index() >= depth ? Term::bound(t.index() + 1) : t;
    case Term::Kind::Lam:
      return Term::lam(t.name(), close_over(t.body(), name, depth + 1));
    case Term::Kind::App:
      return Term::app(close_over(t.fn(), name, depth), close_over(t.arg(), name, depth));
  }
  return t;
}

Term replace_index(const Term& t, std::uint32_t depth, const Term& arg) {
  if (t.loose() <= depth) return t;
  switch (t.kind()) {
    case Term::Kind::Bound:
      if (t.index() == depth) return shift(arg, depth, 0);
      return Term::bound(t.index() - 1);  // loose() > depth rules out index < depth
    case Term::Kind::Lam:
      return Term::lam(t.name(), replace_index(t.body(), depth + 1, arg));
    case Term::Kind::App:
      return Term::app(replace_index(t.fn(), depth, arg), replace_index(t.arg(), depth, arg));
    case Term::Kind::Free:
      break;
  }
  return t;
}

Term substitute_at(const Term& t, const Substitution& sigma, std::uint32_t depth) {
  if (!t.has_free_names()) return t;
  switch (t.kind()) {
    case Term::Kind::Free: {
      auto it = sigma.find(t.name());
      return it == sigma.end() ? t : shift(it->second, depth, 0);
    }
    case Term::Kind::Lam:
      return Term::lam(t.name(), substitute_at(t.body(), sigma, depth + 1));
    case Term::Kind::App:
      return Term::app(substitute_at(t.fn(), sigma, depth), substitute_at(t.arg(), sigma, depth));
    case Term::Kind::Bound:
      break;
  }
  return t;
}

void collect_free(const Term& t, std::set<std::string, std::less<>>& out) {
  if (!t.has_free_names()) return;
  switch (t.kind()) {
    case Term::Kind::Free:
      out.insert(t.name());
      break;
    case Term::Kind::Lam:
      collect_free(t.body(), out);
      break;
    case Term::Kind::App:
      collect_free(t.fn(), out);
      collect_free(t.arg(), out);
      break;
    case Term::Kind::Bound:
      break;
  }
}

}  // namespace

Term shift(const Term& t, std::int64_t delta, std::uint32_t cutoff) {
  if (delta == 0 || t.loose() <= cutoff) return t;
  switch (t.kind()) {
    case Term::Kind::Bound: {
      const std::int64_t moved = static_cast<std::int64_t>(t.index()) + delta;
      if (moved < 0) throw std::logic_error("shift: de Bruijn index would become negative");
      return Term::bound(static_cast<std::uint32_t>(moved));
    }
    case Term::Kind::Lam:
      return Term::lam(t.name(), shift(t.body(), delta, cutoff + 1));
    case Term::Kind::App:
      return Term::app(shift(t.fn(), delta, cutoff), shift(t.arg(), delta, cutoff));
    case Term::Kind::Free:
      break;
  }
  return t;
}

Term instantiate(const Term& body, const Term& arg) { return replace_index(body, 0, arg); }

Term var(std::string name) { return Term::free(std::move(name)); }

Term lam(std::string_view name, const Term& body) {
  return Term::lam(std::string(name), close_over(body, name, 0));
}

Term lam(std::initializer_list<std::string_view> names, const Term& body) {
  Term result = body;
  for (auto it = std::rbegin(names); it != std::rend(names); ++it) result = lam(*it, result);
  return result;
}

Term app(const Term& fn, const Term& arg) { return Term::app(fn, arg); }

Term app(const Term& fn, std::initializer_list<Term> args) {
  Term result = fn;
  for (const auto& a : args) result = Term::app(result, a);
  return result;
}

Term app(const Term& fn, const std::vector<Term>& args) {
  Term result = fn;
  for (const auto& a : args) result = Term::app(result, a);
  return result;
}

bool alpha_eq(const Term& a, const Term& b) noexcept {
  if (a.same_node(b)) return true;
  if (a.kind() != b.kind() || a.size() != b.size() || a.loose() != b.loose()) return false;
  switch (a.kind()) {
    case Term::Kind::Bound:
      return a.index() == b.index();
    case Term::Kind::Free:
      return a.name() == b.name();
    case Term::Kind::Lam:
      return alpha_eq(a.body(), b.body());
    case Term::Kind::App:
      return alpha_eq(a.fn(), b.fn()) && alpha_eq(a.arg(), b.arg());
  }
  return false;
}

std::set<std::string, std::less<>> free_vars(const Term& m) {
  std::set<std::string, std::less<>> out;
  collect_free(m, out);
  return out;
}

Term substitute(const Term& m, const Substitution& sigma) {
  if (sigma.empty()) return m;
  return substitute_at(m, sigma, 0);
}

Term true_term() {
  static const Term t = lam({"x", "y"}, var("x"));
  return t;
}

Term false_term() {
  static const Term f = lam({"x", "y"}, var("y"));
  return f;
}

Term identity() {
  static const Term i = lam("x", var("x"));
  return i;
}

Term omega() {
  static const Term half = lam("x", app(var("x"), var("x")));
  static const Term o = app(half, half);
  return o;
}

Term pair(const Term& m, const Term& n) {
  // Built namelessly: index 0 is the selector, so m and n need no renaming.
  return Term::lam("z", app(Term::bound(0), {shift(m, 1), shift(n, 1)}));
}

// ---------------------------------------------------------------------------
// Named view

NamedTerm NamedTerm::variable(std::string name, std::size_t line, std::size_t column) {
  NamedTerm t;
  t.kind = Kind::Var;
  t.name = std::move(name);
  t.line = line;
  t.column = column;
  return t;
}

NamedTerm NamedTerm::abstraction(std::string binder, NamedTerm body) {
  NamedTerm t;
  t.kind = Kind::Lam;
  t.name = std::move(binder);
  t.line = body.line;
  t.column = body.column;
  t.left = std::make_shared<const NamedTerm>(std::move(body));
  return t;
}

NamedTerm NamedTerm::application(NamedTerm fn, NamedTerm arg) {
  NamedTerm t;
  t.kind = Kind::App;
  t.line = fn.line;
  t.column = fn.column;
  t.left = std::make_shared<const NamedTerm>(std::move(fn));
  t.right = std::make_shared<const NamedTerm>(std::move(arg));
  return t;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

namespace {

constexpr std::string_view kReadableAlphabet = "xyzuvwabcdefghijklmnopqrst";

std::string alphabet_name(std::string_view alphabet, std::size_t i) {
  std::string s(1, alphabet[i % alphabet.size()]);
  if (i >= alphabet.size()) s += std::to_string(i / alphabet.size());
  return s;
}

class Namer {
 public:
  Namer(const Term& root, NamingMode mode) : mode_(mode), free_(free_vars(root)) {}

  NamedTerm name(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Free:
        return NamedTerm::variable(t.name());
      case Term::Kind::Bound:
        if (t.index() < scope_.size()) return NamedTerm::variable(scope_[scope_.size() - 1 - t.index()]);
        return NamedTerm::variable("_loose" + std::to_string(t.index() - scope_.size()));
      case Term::Kind::Lam: {
        std::string binder = pick(t.name());
        scope_.push_back(binder);
        NamedTerm body = name(t.body());
        scope_.pop_back();
        return NamedTerm::abstraction(std::move(binder), std::move(body));
      }
      case Term::Kind::App:
        return NamedTerm::application(name(t.fn()), name(t.arg()));
    }
    return NamedTerm{};
  }

 private:
  bool taken(const std::string& s) const {
    return free_.count(s) > 0 || std::find(scope_.begin(), scope_.end(), s) != scope_.end();
  }

  std::string pick(const std::string& hint) {
    if (mode_ == NamingMode::Canonical) {
      // The d-th name of a fixed sequence that skips the term's free names.
      std::size_t depth = scope_.size();
      while (canonical_.size() <= depth) {
        std::string candidate = alphabet_name("abcdefghijklmnopqrstuvwxyz", next_canonical_++);
        if (free_.count(candidate) == 0) canonical_.push_back(std::move(candidate));
      }
      return canonical_[depth];
    }
    std::string base = is_identifier(hint) ? hint : alphabet_name(kReadableAlphabet, scope_.size());
    if (!taken(base)) return base;
    for (std::size_t suffix = 1;; ++suffix) {
      std::string candidate = base + std::to_string(suffix);
      if (!taken(candidate)) return candidate;
    }
  }

  NamingMode mode_;
  std::set<std::string, std::less<>> free_;
  std::vector<std::string> scope_;
  std::vector<std::string> canonical_;
  std::size_t next_canonical_ = 0;
};

Term resolve(const NamedTerm& t, std::vector<std::string>& scope) {
  switch (t.kind) {
    case NamedTerm::Kind::Var: {
      for (std::size_t i = scope.size(); i-- > 0;) {
        if (scope[i] == t.name) return Term::bound(static_cast<std::uint32_t>(scope.size() - 1 - i));
      }
      return Term::free(t.name);
    }
    case NamedTerm::Kind::Lam: {
      scope.push_back(t.name);
      Term body = resolve(*t.left, scope);
      scope.pop_back();
      return Term::lam(t.name, std::move(body));
    }
    case NamedTerm::Kind::App:
      return Term::app(resolve(*t.left, scope), resolve(*t.right, scope));
  }
  throw std::logic_error("resolve: bad named term");
}

}  // namespace

NamedTerm to_named(const Term& m, NamingMode mode) { return Namer(m, mode).name(m); }

Term from_named(const NamedTerm& m) {
  std::vector<std::string> scope;
  return resolve(m, scope);
}

}  // namespace lc
