#include "ljplus/derivation_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ljplus {

namespace {

enum class SK { LParen, RParen, Keyword, String, Word, End };

struct SToken {
  SK kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<SToken> lex(std::string_view text) {
  std::vector<SToken> out;
  std::size_t line = 1, col = 1, i = 0;
  auto bump = [&](char c) {
    ++i;
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(c);
      continue;
    }
    if (c == ';') {
      while (i < text.size() && text[i] != '\n') bump(text[i]);
      continue;
    }
    SToken t{SK::End, {}, line, col};
    if (c == '(' || c == ')') {
      t.kind = c == '(' ? SK::LParen : SK::RParen;
      bump(c);
    } else if (c == '"') {
      t.kind = SK::String;
      bump(c);
      bool closed = false;
      while (i < text.size()) {
        char d = text[i];
        if (d == '"') {
          bump(d);
          closed = true;
          break;
        }
        if (d == '\\' && i + 1 < text.size()) {
          bump(d);
          d = text[i];
        }
        t.text += d;
        bump(d);
      }
      if (!closed) throw ParseError("unterminated string", t.line, t.column);
    } else {
      t.kind = c == ':' ? SK::Keyword : SK::Word;
      while (i < text.size()) {
        char d = text[i];
        if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == '"' ||
            d == ';') {
          break;
        }
        t.text += d;
        bump(d);
      }
    }
    out.push_back(std::move(t));
  }
  out.push_back(SToken{SK::End, {}, line, col});
  return out;
}

class Reader {
 public:
  Reader(std::string_view text, Signature& sig) : toks_(lex(text)), sig_(sig) {}

  Derivation document() {
    Derivation d = node();
    if (peek().kind != SK::End) fail("trailing input after derivation", peek());
    return d;
  }

 private:
  Derivation node() {
    expect(SK::LParen, "'('");
    const SToken tag_tok = expect(SK::Word, "rule tag");
    auto tag = tag_from_name(tag_tok.text);
    if (!tag) fail("unknown rule tag '" + tag_tok.text + "'", tag_tok);

    Derivation d;
    d.rule.tag = *tag;
    const SToken kw = expect(SK::Keyword, ":concl");
    if (kw.text != ":concl") fail("expected :concl, found " + kw.text, kw);
    const SToken s = expect(SK::String, "sequent string");
    d.rule.conclusion = sequent(s);

    while (peek().kind == SK::Keyword) {
      const SToken key = next();
      attribute(d, key);
    }
    require_attributes(d, tag_tok);
    while (peek().kind == SK::LParen) d.premises.push_back(node());
    expect(SK::RParen, "')'");
    if (d.premises.size() != premise_count(*tag)) {
      fail(tag_tok.text + " takes " + std::to_string(premise_count(*tag)) + " premise(s), found " +
               std::to_string(d.premises.size()),
           tag_tok);
    }
    return d;
  }

  void attribute(Derivation& d, const SToken& key) {
    const RuleTag tag = d.rule.tag;
    auto& a = d.rule.attrs;
    auto allowed = [&](bool ok) {
      if (!ok) fail("attribute " + key.text + " not allowed on " + std::string(tag_name(tag)), key);
    };
    auto once = [&](bool present) {
      if (present) fail("duplicate attribute " + key.text, key);
    };
    if (key.text == ":pos" || key.text == ":split") {
      allowed(key.text == ":pos" ? tag == RuleTag::Exchange : tag == RuleTag::ImpAnt);
      once(a.index.has_value());
      a.index = integer(expect(SK::Word, "integer"));
    } else if (key.text == ":eigen" || key.text == ":witness") {
      allowed(key.text == ":eigen" ? has_eigenvariable(tag) : has_witness(tag));
      once(a.variable.has_value());
      a.variable = variable(expect(SK::Word, "variable"));
    } else if (key.text == ":bound") {
      allowed(is_quantifier_rule(tag));
      once(a.bound.has_value());
      a.bound = variable(expect(SK::Word, "variable"));
    } else if (key.text == ":formula" || key.text == ":n" || key.text == ":a") {
      bool ok = (key.text == ":formula" && (tag == RuleTag::Cut || tag == RuleTag::Mix)) ||
                (key.text == ":n" && tag == RuleTag::Neutralization) ||
                (key.text == ":a" && tag == RuleTag::LemAxiom);
      allowed(ok);
      once(a.formula.has_value());
      a.formula = formula(expect(SK::String, "formula string"));
    } else {
      fail("unknown attribute " + key.text, key);
    }
  }

  void require_attributes(const Derivation& d, const SToken& at) {
    const auto& a = d.rule.attrs;
    const RuleTag tag = d.rule.tag;
    auto need = [&](bool present, const char* name) {
      if (!present) fail(std::string(tag_name(tag)) + " requires " + name, at);
    };
    switch (tag) {
      case RuleTag::Exchange: need(a.index.has_value(), ":pos"); break;
      case RuleTag::ImpAnt: need(a.index.has_value(), ":split"); break;
      case RuleTag::ForallSuc:
      case RuleTag::ExistsAnt:
        need(a.variable.has_value(), ":eigen");
        need(a.bound.has_value(), ":bound");
        break;
      case RuleTag::ForallAnt:
      case RuleTag::ExistsSuc:
        need(a.variable.has_value(), ":witness");
        need(a.bound.has_value(), ":bound");
        break;
      case RuleTag::Cut:
      case RuleTag::Mix: need(a.formula.has_value(), ":formula"); break;
      case RuleTag::Neutralization: need(a.formula.has_value(), ":n"); break;
      case RuleTag::LemAxiom: need(a.formula.has_value(), ":a"); break;
      default: break;
    }
  }

  Sequent sequent(const SToken& t) {
    try {
      return parse_sequent(t.text, sig_);
    } catch (const ParseError& e) {
      fail("in sequent: " + std::string(e.what()), t);
    }
  }

  Formula formula(const SToken& t) {
    try {
      return parse_formula(t.text, sig_);
    } catch (const ParseError& e) {
      fail("in formula: " + std::string(e.what()), t);
    }
  }

  std::size_t integer(const SToken& t) {
    if (t.text.empty()) fail("expected integer", t);
    for (char c : t.text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected integer, found " + t.text, t);
    }
    return std::stoul(t.text);
  }

  std::string variable(const SToken& t) {
    if (!is_variable(t.text)) fail("expected variable, found " + t.text, t);
    return t.text;
  }

  [[noreturn]] void fail(const std::string& msg, const SToken& t) {
    throw ParseError(msg, t.line, t.column);
  }

  const SToken& peek() const { return toks_[pos_]; }
  SToken next() { return toks_[pos_ + 1 < toks_.size() ? pos_++ : pos_]; }
  SToken expect(SK kind, const char* what) {
    if (peek().kind != kind) {
      std::string found = peek().kind == SK::End ? "end of input" : "'" + peek().text + "'";
      if (peek().kind == SK::LParen) found = "'('";
      if (peek().kind == SK::RParen) found = "')'";
      if (peek().kind == SK::String) found = "string";
      fail(std::string("expected ") + what + ", found " + found, peek());
    }
    return next();
  }

  std::vector<SToken> toks_;
  std::size_t pos_ = 0;
  Signature& sig_;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void write_node(const Derivation& d, int indent, std::ostringstream& os) {
  os << std::string(static_cast<std::size_t>(indent), ' ') << '(' << tag_name(d.tag())
     << " :concl " << quote(to_string(d.conclusion()));
  const auto& a = d.rule.attrs;
  switch (d.tag()) {
    case RuleTag::Exchange: os << " :pos " << *a.index; break;
    case RuleTag::ImpAnt: os << " :split " << *a.index; break;
    case RuleTag::ForallSuc:
    case RuleTag::ExistsAnt: os << " :eigen " << *a.variable << " :bound " << *a.bound; break;
    case RuleTag::ForallAnt:
    case RuleTag::ExistsSuc: os << " :witness " << *a.variable << " :bound " << *a.bound; break;
    case RuleTag::Cut:
    case RuleTag::Mix: os << " :formula " << quote(to_string(*a.formula)); break;
    case RuleTag::Neutralization: os << " :n " << quote(to_string(*a.formula)); break;
    case RuleTag::LemAxiom: os << " :a " << quote(to_string(*a.formula)); break;
    default: break;
  }
  for (const auto& p : d.premises) {
    os << '\n';
    write_node(p, indent + 2, os);
  }
  os << ')';
}

}  // namespace

Derivation parse_derivation(std::string_view text, Signature& signature) {
  Reader r(text, signature);
  return r.document();
}

Derivation parse_derivation(std::string_view text) {
  Signature sig;
  return parse_derivation(text, sig);
}

std::string write_derivation(const Derivation& d) {
  std::ostringstream os;
  write_node(d, 0, os);
  os << '\n';
  return os.str();
}

std::optional<CalculusMode> mode_directive(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto p = line.find_first_not_of(" \t");
    if (p == std::string::npos || line[p] != ';') continue;
    auto q = line.find("mode:", p);
    if (q == std::string::npos) continue;
    std::string rest = line.substr(q + 5);
    auto b = rest.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    auto e = rest.find_first_of(" \t\r", b);
    return mode_from_name(rest.substr(b, e == std::string::npos ? std::string::npos : e - b));
  }
  return std::nullopt;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Derivation read_derivation_file(const std::string& path) { return parse_derivation(read_text_file(path)); }

void write_derivation_file(const std::string& path, const Derivation& d,
                           std::optional<CalculusMode> mode, const std::string& comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (!comment.empty()) out << "; " << comment << "\n";
  if (mode) out << "; mode: " << mode_name(*mode) << "\n";
  out << write_derivation(d);
}

}  // namespace ljplus
