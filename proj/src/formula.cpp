#include "ljplus/formula.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <stdexcept>

namespace ljplus {

Formula Formula::make(Node node) {
  std::size_t size = 1;
  for (const auto& c : node.children) size += c.size();
  node.size = size;
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::atom(std::string symbol, std::vector<std::string> args) {
  return make(Node{Kind::Atom, std::move(symbol), std::move(args), {}});
}

Formula Formula::top() {
  static const Formula t = make(Node{Kind::Top, {}, {}, {}});
  return t;
}

Formula Formula::bot() {
  static const Formula b = make(Node{Kind::Bot, {}, {}, {}});
  return b;
}

Formula Formula::negation(Formula child) {
  return make(Node{Kind::Not, {}, {}, {std::move(child)}});
}

Formula Formula::conjunction(Formula left, Formula right) {
  return binary(Kind::And, std::move(left), std::move(right));
}

Formula Formula::disjunction(Formula left, Formula right) {
  return binary(Kind::Or, std::move(left), std::move(right));
}

Formula Formula::implication(Formula left, Formula right) {
  return binary(Kind::Implies, std::move(left), std::move(right));
}

Formula Formula::forall(std::string var, Formula body) {
  return quantifier(Kind::Forall, std::move(var), std::move(body));
}

Formula Formula::exists(std::string var, Formula body) {
  return quantifier(Kind::Exists, std::move(var), std::move(body));
}

Formula Formula::binary(Kind kind, Formula left, Formula right) {
  if (kind != Kind::And && kind != Kind::Or && kind != Kind::Implies) {
    throw std::invalid_argument("not a binary connective");
  }
  return make(Node{kind, {}, {}, {std::move(left), std::move(right)}});
}

Formula Formula::quantifier(Kind kind, std::string var, Formula body) {
  if (kind != Kind::Forall && kind != Kind::Exists) {
    throw std::invalid_argument("not a quantifier");
  }
  return make(Node{kind, std::move(var), {}, {std::move(body)}});
}

Kind Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  return kind() == Kind::And || kind() == Kind::Or || kind() == Kind::Implies;
}

bool Formula::is_quantifier() const { return kind() == Kind::Forall || kind() == Kind::Exists; }

const std::string& Formula::symbol() const {
  assert(kind() == Kind::Atom);
  return node_->name;
}

const std::vector<std::string>& Formula::args() const { return node_->args; }

const std::string& Formula::var() const {
  assert(is_quantifier());
  return node_->name;
}

std::size_t Formula::child_count() const { return node_->children.size(); }

const Formula& Formula::child(std::size_t i) const { return node_->children.at(i); }

std::size_t Formula::size() const { return node_->size; }

bool Formula::operator==(const Formula& other) const { return alpha_equivalent(*this, other); }

bool identical(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.node_->name != b.node_->name || a.node_->args != b.node_->args) {
    return false;
  }
  for (std::size_t i = 0; i < a.child_count(); ++i) {
    if (!identical(a.child(i), b.child(i))) return false;
  }
  return true;
}

namespace {

// Index of the innermost binder of `v`, counted from the top of the stack,
// or -1 when free.
long binder_index(const std::vector<std::string>& stack, const std::string& v) {
  for (std::size_t i = stack.size(); i-- > 0;) {
    if (stack[i] == v) return static_cast<long>(stack.size() - 1 - i);
  }
  return -1;
}

bool alpha_rec(const Formula& a, const Formula& b, std::vector<std::string>& sa,
               std::vector<std::string>& sb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Top:
    case Kind::Bot:
      return true;
    case Kind::Atom: {
      if (a.symbol() != b.symbol() || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i) {
        long ia = binder_index(sa, a.args()[i]);
        long ib = binder_index(sb, b.args()[i]);
        if (ia != ib) return false;
        if (ia < 0 && a.args()[i] != b.args()[i]) return false;
      }
      return true;
    }
    case Kind::Forall:
    case Kind::Exists: {
      sa.push_back(a.var());
      sb.push_back(b.var());
      bool r = alpha_rec(a.body(), b.body(), sa, sb);
      sa.pop_back();
      sb.pop_back();
      return r;
    }
    default:
      for (std::size_t i = 0; i < a.child_count(); ++i) {
        if (!alpha_rec(a.child(i), b.child(i), sa, sb)) return false;
      }
      return true;
  }
}

void free_rec(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::Atom:
      for (const auto& a : f.args()) {
        if (std::find(bound.begin(), bound.end(), a) == bound.end()) out.insert(a);
      }
      return;
    case Kind::Forall:
    case Kind::Exists:
      bound.push_back(f.var());
      free_rec(f.body(), bound, out);
      bound.pop_back();
      return;
    default:
      for (std::size_t i = 0; i < f.child_count(); ++i) free_rec(f.child(i), bound, out);
  }
}

void all_rec(const Formula& f, std::set<std::string>& out) {
  if (f.is(Kind::Atom)) out.insert(f.args().begin(), f.args().end());
  if (f.is_quantifier()) out.insert(f.var());
  for (std::size_t i = 0; i < f.child_count(); ++i) all_rec(f.child(i), out);
}

}  // namespace

bool alpha_equivalent(const Formula& a, const Formula& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::string> sa, sb;
  return alpha_rec(a, b, sa, sb);
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  free_rec(f, bound, out);
  return out;
}

std::set<std::string> all_variables(const Formula& f) {
  std::set<std::string> out;
  all_rec(f, out);
  return out;
}

bool occurs_free(const Formula& f, const std::string& var) {
  switch (f.kind()) {
    case Kind::Atom:
      return std::find(f.args().begin(), f.args().end(), var) != f.args().end();
    case Kind::Forall:
    case Kind::Exists:
      return f.var() != var && occurs_free(f.body(), var);
    default:
      for (std::size_t i = 0; i < f.child_count(); ++i) {
        if (occurs_free(f.child(i), var)) return true;
      }
      return false;
  }
}

std::string fresh_variable(const std::string& base, const std::set<std::string>& avoid) {
  std::string stem = base.empty() ? "v" : base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (stem.empty() || stem.back() == '_') stem += "v";
  for (std::size_t n = 1;; ++n) {
    std::string candidate = stem + std::to_string(n);
    if (!avoid.count(candidate)) return candidate;
  }
}

Formula substitute(const Formula& f, const std::string& var, const std::string& replacement) {
  if (var == replacement || !occurs_free(f, var)) return f;
  switch (f.kind()) {
    case Kind::Atom: {
      std::vector<std::string> args = f.args();
      for (auto& a : args) {
        if (a == var) a = replacement;
      }
      return Formula::atom(f.symbol(), std::move(args));
    }
    case Kind::Not:
      return Formula::negation(substitute(f.body(), var, replacement));
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      return Formula::binary(f.kind(), substitute(f.left(), var, replacement),
                             substitute(f.right(), var, replacement));
    case Kind::Forall:
    case Kind::Exists: {
      // var occurs free, so the binder differs from var.
      if (f.var() == replacement) {
        auto avoid = all_variables(f.body());
        avoid.insert(replacement);
        avoid.insert(var);
        std::string renamed = fresh_variable(f.var(), avoid);
        Formula body = substitute(f.body(), f.var(), renamed);
        return Formula::quantifier(f.kind(), renamed, substitute(body, var, replacement));
      }
      return Formula::quantifier(f.kind(), f.var(), substitute(f.body(), var, replacement));
    }
    default:
      return f;
  }
}

bool substitute_strict(const Formula& f, const std::string& var, const std::string& replacement,
                       Formula& out) {
  if (var == replacement || !occurs_free(f, var)) {
    out = f;
    return true;
  }
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Top:
    case Kind::Bot:
      out = substitute(f, var, replacement);
      return true;
    case Kind::Not: {
      Formula c = f;
      if (!substitute_strict(f.body(), var, replacement, c)) return false;
      out = Formula::negation(c);
      return true;
    }
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      Formula l = f, r = f;
      if (!substitute_strict(f.left(), var, replacement, l)) return false;
      if (!substitute_strict(f.right(), var, replacement, r)) return false;
      out = Formula::binary(f.kind(), l, r);
      return true;
    }
    case Kind::Forall:
    case Kind::Exists: {
      if (f.var() == replacement) return false;
      Formula b = f;
      if (!substitute_strict(f.body(), var, replacement, b)) return false;
      out = Formula::quantifier(f.kind(), f.var(), b);
      return true;
    }
  }
  return false;
}

namespace {

// Grammar levels: 0 formula (quantifiers), 1 implication, 2 disjunction,
// 3 conjunction, 4 negation, 5 primary.
int level_of(const Formula& f) {
  switch (f.kind()) {
    case Kind::Forall:
    case Kind::Exists:
      return 0;
    case Kind::Implies:
      return 1;
    case Kind::Or:
      return 2;
    case Kind::And:
      return 3;
    case Kind::Not:
      return 4;
    default:
      return 5;
  }
}

void render(std::string& out, const Formula& f, int required) {
  bool parens = level_of(f) < required;
  if (parens) out += '(';
  switch (f.kind()) {
    case Kind::Top:
      out += "top";
      break;
    case Kind::Bot:
      out += "bot";
      break;
    case Kind::Atom:
      out += f.symbol();
      if (!f.args().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ',';
          out += f.args()[i];
        }
        out += ')';
      }
      break;
    case Kind::Not:
      out += '~';
      render(out, f.body(), 4);
      break;
    case Kind::And:
      render(out, f.left(), 3);
      out += " & ";
      render(out, f.right(), 4);
      break;
    case Kind::Or:
      render(out, f.left(), 2);
      out += " | ";
      render(out, f.right(), 3);
      break;
    case Kind::Implies:
      render(out, f.left(), 2);
      out += " -> ";
      render(out, f.right(), 1);
      break;
    case Kind::Forall:
    case Kind::Exists:
      out += f.is(Kind::Forall) ? "forall " : "exists ";
      out += f.var();
      out += ". ";
      render(out, f.body(), 0);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  render(out, f, 0);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

}  // namespace ljplus
