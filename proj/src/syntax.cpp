#include "ljplus/syntax.hpp"

#include <cctype>
#include <vector>

namespace ljplus {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      detail_(message),
      line_(line),
      column_(column) {}

ArityError::ArityError(const std::string& symbol, std::size_t expected, std::size_t found)
    : std::runtime_error("symbol " + symbol + " used with arity " + std::to_string(found) +
                         " but declared with arity " + std::to_string(expected)),
      symbol_(symbol) {}

void Signature::declare(const std::string& name, std::size_t arity) {
  auto [it, inserted] = arities_.emplace(name, arity);
  if (!inserted && it->second != arity) throw ArityError(name, it->second, arity);
}

void Signature::declare_all(const Formula& f) {
  if (f.is(Kind::Atom)) declare(f.symbol(), f.args().size());
  for (std::size_t i = 0; i < f.child_count(); ++i) declare_all(f.child(i));
}

std::optional<std::size_t> Signature::arity(const std::string& name) const {
  auto it = arities_.find(name);
  if (it == arities_.end()) return std::nullopt;
  return it->second;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

namespace {

bool is_keyword(std::string_view s) {
  return s == "top" || s == "bot" || s == "forall" || s == "exists";
}

}  // namespace

bool is_variable(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    bool ok = std::islower(static_cast<unsigned char>(c)) ||
              std::isdigit(static_cast<unsigned char>(c)) || c == '_';
    if (!ok) return false;
  }
  return !is_keyword(s);
}

namespace {

enum class Tok {
  Ident,
  Var,
  Top,
  Bot,
  Forall,
  Exists,
  Not,
  And,
  Or,
  Arrow,
  Turnstile,
  LParen,
  RParen,
  Comma,
  Dot,
  End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "symbol";
    case Tok::Var: return "variable";
    case Tok::Top: return "'top'";
    case Tok::Bot: return "'bot'";
    case Tok::Forall: return "'forall'";
    case Tok::Exists: return "'exists'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Turnstile: return "'|-'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  struct Alias {
    std::string_view utf8;
    Tok kind;
  };
  static constexpr Alias aliases[] = {
      {"\xC2\xAC", Tok::Not},           {"\xE2\x88\xA7", Tok::And},
      {"\xE2\x88\xA8", Tok::Or},        {"\xE2\x8A\x83", Tok::Arrow},
      {"\xE2\x88\x80", Tok::Forall},    {"\xE2\x88\x83", Tok::Exists},
      {"\xE2\x8A\xA4", Tok::Top},       {"\xE2\x8A\xA5", Tok::Bot},
      {"\xE2\x8A\xA2", Tok::Turnstile},
  };

  std::vector<Token> out;
  std::size_t line = 1, column = 1, i = 0;
  auto advance = [&](std::size_t bytes, std::size_t columns) {
    i += bytes;
    column += columns;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1, 1);
      continue;
    }
    Token tok{Tok::End, {}, line, column};
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      tok.text = std::string(text.substr(i, j - i));
      if (tok.text == "top") tok.kind = Tok::Top;
      else if (tok.text == "bot") tok.kind = Tok::Bot;
      else if (tok.text == "forall") tok.kind = Tok::Forall;
      else if (tok.text == "exists") tok.kind = Tok::Exists;
      else if (is_identifier(tok.text)) tok.kind = Tok::Ident;
      else if (is_variable(tok.text)) tok.kind = Tok::Var;
      else throw ParseError("malformed name '" + tok.text + "'", line, column);
      advance(j - i, j - i);
      out.push_back(std::move(tok));
      continue;
    }
    bool matched = false;
    for (const auto& a : aliases) {
      if (text.substr(i, a.utf8.size()) == a.utf8) {
        tok.kind = a.kind;
        advance(a.utf8.size(), 1);
        matched = true;
        break;
      }
    }
    if (!matched) {
      switch (c) {
        case '~': tok.kind = Tok::Not; advance(1, 1); break;
        case '&': tok.kind = Tok::And; advance(1, 1); break;
        case '(': tok.kind = Tok::LParen; advance(1, 1); break;
        case ')': tok.kind = Tok::RParen; advance(1, 1); break;
        case ',': tok.kind = Tok::Comma; advance(1, 1); break;
        case '.': tok.kind = Tok::Dot; advance(1, 1); break;
        case '|':
          if (i + 1 < text.size() && text[i + 1] == '-') {
            tok.kind = Tok::Turnstile;
            advance(2, 2);
          } else {
            tok.kind = Tok::Or;
            advance(1, 1);
          }
          break;
        case '-':
          if (i + 1 < text.size() && text[i + 1] == '>') {
            tok.kind = Tok::Arrow;
            advance(2, 2);
            break;
          }
          [[fallthrough]];
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line, column);
      }
    }
    out.push_back(std::move(tok));
  }
  out.push_back(Token{Tok::End, {}, line, column});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, Signature& sig) : toks_(tokenize(text)), sig_(sig) {}

  Formula formula() {
    if (peek().kind == Tok::Forall || peek().kind == Tok::Exists) {
      Kind k = next().kind == Tok::Forall ? Kind::Forall : Kind::Exists;
      std::string v = expect(Tok::Var).text;
      expect(Tok::Dot);
      return Formula::quantifier(k, v, formula());
    }
    return implication();
  }

  Sequent sequent() {
    Sequent s;
    if (peek().kind != Tok::Turnstile) {
      s.antecedent.push_back(formula());
      while (peek().kind == Tok::Comma) {
        next();
        s.antecedent.push_back(formula());
      }
    }
    expect(Tok::Turnstile);
    if (peek().kind != Tok::End) s.succedent = formula();
    return s;
  }

  void finish() { expect(Tok::End); }

 private:
  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Arrow) {
      next();
      return Formula::implication(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().kind == Tok::Or) {
      next();
      f = Formula::disjunction(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = negation();
    while (peek().kind == Tok::And) {
      next();
      f = Formula::conjunction(f, negation());
    }
    return f;
  }

  Formula negation() {
    if (peek().kind == Tok::Not) {
      next();
      return Formula::negation(negation());
    }
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Top:
        next();
        return Formula::top();
      case Tok::Bot:
        next();
        return Formula::bot();
      case Tok::LParen: {
        next();
        Formula f = formula();
        expect(Tok::RParen);
        return f;
      }
      case Tok::Ident: {
        Token id = next();
        std::vector<std::string> args;
        if (peek().kind == Tok::LParen) {
          next();
          args.push_back(expect(Tok::Var).text);
          while (peek().kind == Tok::Comma) {
            next();
            args.push_back(expect(Tok::Var).text);
          }
          expect(Tok::RParen);
        }
        try {
          sig_.declare(id.text, args.size());
        } catch (const ArityError& e) {
          throw ParseError(e.what(), id.line, id.column);
        }
        return Formula::atom(id.text, std::move(args));
      }
      case Tok::Forall:
      case Tok::Exists:
        throw ParseError("quantified formula must be parenthesized here", t.line, t.column);
      default:
        throw ParseError(std::string("expected formula, found ") + describe(t.kind), t.line,
                         t.column);
    }
  }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  Token expect(Tok kind) {
    const Token& t = peek();
    if (t.kind != kind) {
      throw ParseError(std::string("expected ") + describe(kind) + ", found " + describe(t.kind),
                       t.line, t.column);
    }
    return next();
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature& sig_;
};

}  // namespace

Formula parse_formula(std::string_view text, Signature& signature) {
  Parser p(text, signature);
  Formula f = p.formula();
  p.finish();
  return f;
}

Formula parse_formula(std::string_view text) {
  Signature sig;
  return parse_formula(text, sig);
}

Sequent parse_sequent(std::string_view text, Signature& signature) {
  Parser p(text, signature);
  Sequent s = p.sequent();
  p.finish();
  return s;
}

Sequent parse_sequent(std::string_view text) {
  Signature sig;
  return parse_sequent(text, sig);
}

std::string render_formula(const Formula& f) { return to_string(f); }

}  // namespace ljplus
