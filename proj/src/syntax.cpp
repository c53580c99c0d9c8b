#include "lc/syntax.hpp"

#include <cctype>
#include <sstream>

namespace lc {

ParseError::ParseError(std::string origin, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      origin_(std::move(origin)),
      line_(line),
      column_(column),
      detail_(message) {}

UnknownName::UnknownName(std::string origin, std::size_t line, std::size_t column, const std::string& name)
    : ParseError(std::move(origin), line, column, "unknown name '" + name + "'"), name_(name) {}

void Definitions::define(std::string name, Term value) { entries_.emplace_back(std::move(name), std::move(value)); }

const Term* Definitions::find(std::string_view name) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->first == name) return &it->second;
  }
  return nullptr;
}

Term Program::value() const {
  if (body) return *body;
  if (definitions.empty()) throw std::logic_error("Program::value: empty program");
  return definitions.entries().back().second;
}

namespace {

enum class Tok { Lambda, Ident, Dot, LParen, RParen, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Lambda: return "'\\'";
    case Tok::Ident: return "identifier '" + t.text + "'";
    case Tok::Dot: return "'.'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of input";
  }
  return "token";
}

bool ident_start(unsigned char c) { return std::isalpha(c) != 0; }
bool ident_continue(unsigned char c) { return std::isalnum(c) != 0 || c == '_' || c == '\''; }

std::vector<Token> lex(const SourceText& src) {
  std::vector<Token> out;
  const std::string& s = src.text;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(c)) {
      ++i;
      ++column;
      continue;
    }
    const std::size_t start_col = column;
    auto single = [&](Tok kind) {
      out.push_back({kind, std::string(1, s[i]), line, start_col});
      ++i;
      ++column;
    };
    switch (c) {
      case '\\': single(Tok::Lambda); continue;
      case '.': single(Tok::Dot); continue;
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case '=': single(Tok::Equals); continue;
      default: break;
    }
    // U+03BB GREEK SMALL LETTER LAMDA
    if (c == 0xCE && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0xBB) {
      out.push_back({Tok::Lambda, "\xCE\xBB", line, start_col});
      i += 2;
      ++column;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < s.size() && ident_continue(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), line, start_col});
      column += j - i;
      i = j;
      continue;
    }
    // Report the whole code point for non-ASCII input.
    std::size_t len = 1;
    if (c >= 0xF0) len = 4;
    else if (c >= 0xE0) len = 3;
    else if (c >= 0xC0) len = 2;
    throw ParseError(src.origin, line, start_col, "unexpected character '" + s.substr(i, len) + "'");
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

class Parser {
 public:
  Parser(const SourceText& src, const std::vector<Token>& tokens, std::size_t begin, std::size_t end)
      : src_(src), tokens_(tokens), pos_(begin), end_(end) {}

  NamedTerm parse_all() {
    NamedTerm t = term();
    if (pos_ != end_) fail(peek(), "unexpected " + describe(peek()));
    return t;
  }

 private:
  // Tokens past `end_` read as the terminator of this slice.
  const Token& peek() const { return pos_ < end_ ? tokens_[pos_] : end_token(); }
  const Token& end_token() const { return end_ < tokens_.size() ? tokens_[end_] : tokens_.back(); }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(src_.origin, at.line, at.column, message);
  }

  bool at(Tok kind) const { return pos_ < end_ && tokens_[pos_].kind == kind; }

  const Token& expect(Tok kind, const char* what) {
    if (!at(kind)) fail(peek(), std::string("expected ") + what + ", found " + describe(peek()));
    return tokens_[pos_++];
  }

  NamedTerm term() {
    if (at(Tok::Lambda)) return abstraction();
    return application();
  }

  NamedTerm abstraction() {
    expect(Tok::Lambda, "'\\'");
    std::vector<const Token*> binders;
    binders.push_back(&expect(Tok::Ident, "binder name"));
    while (at(Tok::Ident)) binders.push_back(&tokens_[pos_++]);
    expect(Tok::Dot, "'.'");
    NamedTerm body = term();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      body = NamedTerm::abstraction((*it)->text, std::move(body));
    }
    return body;
  }

  NamedTerm application() {
    NamedTerm result = atom();
    while (at(Tok::Ident) || at(Tok::LParen) || at(Tok::Lambda)) {
      // A trailing abstraction extends to the end, so it is the last argument.
      if (at(Tok::Lambda)) return NamedTerm::application(std::move(result), abstraction());
      result = NamedTerm::application(std::move(result), atom());
    }
    return result;
  }

  NamedTerm atom() {
    if (at(Tok::Ident)) {
      const Token& t = tokens_[pos_++];
      return NamedTerm::variable(t.text, t.line, t.column);
    }
    if (at(Tok::LParen)) {
      ++pos_;
      NamedTerm inner = term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    fail(peek(), "expected a term, found " + describe(peek()));
  }

  const SourceText& src_;
  const std::vector<Token>& tokens_;
  std::size_t pos_;
  std::size_t end_;
};

class Resolver {
 public:
  Resolver(const SourceText& src, const Definitions& defs, bool strict)
      : src_(src), defs_(defs), strict_(strict) {}

  Term resolve(const NamedTerm& t) {
    switch (t.kind) {
      case NamedTerm::Kind::Var: {
        for (std::size_t i = scope_.size(); i-- > 0;) {
          if (scope_[i] == t.name) return Term::bound(static_cast<std::uint32_t>(scope_.size() - 1 - i));
        }
        if (const Term* def = defs_.find(t.name)) return *def;
        if (strict_) throw UnknownName(src_.origin, t.line, t.column, t.name);
        return Term::free(t.name);
      }
      case NamedTerm::Kind::Lam: {
        scope_.push_back(t.name);
        Term body = resolve(*t.left);
        scope_.pop_back();
        return Term::lam(t.name, std::move(body));
      }
      case NamedTerm::Kind::App: {
        Term fn = resolve(*t.left);
        return Term::app(std::move(fn), resolve(*t.right));
      }
    }
    throw std::logic_error("resolve: bad named term");
  }

 private:
  const SourceText& src_;
  const Definitions& defs_;
  bool strict_;
  std::vector<std::string> scope_;
};

void render(const NamedTerm& t, std::string& out) {
  switch (t.kind) {
    case NamedTerm::Kind::Var:
      out += t.name;
      return;
    case NamedTerm::Kind::Lam:
      out += '\\';
      out += t.name;
      out += '.';
      if (t.left->kind != NamedTerm::Kind::Lam) out += ' ';
      render(*t.left, out);
      return;
    case NamedTerm::Kind::App: {
      const NamedTerm& fn = *t.left;
      const NamedTerm& arg = *t.right;
      if (fn.kind == NamedTerm::Kind::Lam) {
        out += '(';
        render(fn, out);
        out += ')';
      } else {
        render(fn, out);
      }
      out += ' ';
      if (arg.kind == NamedTerm::Kind::Var) {
        out += arg.name;
      } else {
        out += '(';
        render(arg, out);
        out += ')';
      }
      return;
    }
  }
}

}  // namespace

Term parse(const SourceText& src, const Definitions& defs) {
  const std::vector<Token> tokens = lex(src);
  NamedTerm named = Parser(src, tokens, 0, tokens.size() - 1).parse_all();
  return Resolver(src, defs, false).resolve(named);
}

Program parse_program(const SourceText& src, const Definitions& base) {
  const std::vector<Token> tokens = lex(src);
  const std::size_t end = tokens.size() - 1;
  Program program;
  program.definitions = base;

  std::size_t pos = 0;
  while (pos + 1 < end && tokens[pos].kind == Tok::Ident && tokens[pos + 1].kind == Tok::Equals) {
    const Token& name = tokens[pos];
    std::size_t stop = pos + 2;
    int depth = 0;
    // A definition ends at the end of its line unless a parenthesis is open.
    while (stop < end && (tokens[stop].line == name.line || depth > 0)) {
      if (tokens[stop].kind == Tok::LParen) ++depth;
      if (tokens[stop].kind == Tok::RParen) --depth;
      ++stop;
    }
    if (stop == pos + 2) {
      throw ParseError(src.origin, tokens[pos + 1].line, tokens[pos + 1].column + 1,
                       "expected a term after '='");
    }
    NamedTerm named = Parser(src, tokens, pos + 2, stop).parse_all();
    program.definitions.define(name.text, Resolver(src, program.definitions, true).resolve(named));
    pos = stop;
  }

  if (pos < end) {
    NamedTerm named = Parser(src, tokens, pos, end).parse_all();
    program.body = Resolver(src, program.definitions, false).resolve(named);
  } else if (program.definitions.entries().size() == base.entries().size()) {
    throw ParseError(src.origin, tokens[end].line, tokens[end].column, "empty input");
  }
  return program;
}

std::string print(const NamedTerm& m) {
  std::string out;
  render(m, out);
  return out;
}

std::string print(const Term& m, PrintMode mode) {
  return print(to_named(m, mode == PrintMode::Canonical ? NamingMode::Canonical : NamingMode::Readable));
}

}  // namespace lc
