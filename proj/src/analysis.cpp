#include "ljplus/analysis.hpp"

#include <functional>

namespace ljplus {

bool is_valid_path(const Formula& f, const OccurrencePath& path) {
  const Formula* cur = &f;
  for (auto step : path) {
    if (step >= cur->child_count()) return false;
    cur = &cur->child(step);
  }
  return true;
}

const Formula& subformula_at(const Formula& f, const OccurrencePath& path) {
  const Formula* cur = &f;
  for (auto step : path) {
    if (step >= cur->child_count()) throw InvalidPath("occurrence path leaves the formula");
    cur = &cur->child(step);
  }
  return *cur;
}

namespace {

Formula replace_rec(const Formula& f, const OccurrencePath& path, std::size_t depth,
                    const Formula& replacement) {
  if (depth == path.size()) return replacement;
  auto step = path[depth];
  if (step >= f.child_count()) throw InvalidPath("occurrence path leaves the formula");
  Formula sub = replace_rec(f.child(step), path, depth + 1, replacement);
  switch (f.kind()) {
    case Kind::Not:
      return Formula::negation(sub);
    case Kind::Forall:
    case Kind::Exists:
      return Formula::quantifier(f.kind(), f.var(), sub);
    default:
      return step == 0 ? Formula::binary(f.kind(), sub, f.right())
                       : Formula::binary(f.kind(), f.left(), sub);
  }
}

void occurrences_rec(const Formula& f, OccurrencePath& path,
                     const std::function<void(const OccurrencePath&, const Formula&)>& fn) {
  fn(path, f);
  for (std::size_t i = 0; i < f.child_count(); ++i) {
    path.push_back(static_cast<std::uint8_t>(i));
    occurrences_rec(f.child(i), path, fn);
    path.pop_back();
  }
}

Polarity flip(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

void polarity_rec(const Formula& f, Polarity p, OccurrencePath& path,
                  std::map<OccurrencePath, Polarity>& out) {
  out[path] = p;
  for (std::size_t i = 0; i < f.child_count(); ++i) {
    Polarity child = p;
    if (f.is(Kind::Not) || (f.is(Kind::Implies) && i == 0)) child = flip(p);
    path.push_back(static_cast<std::uint8_t>(i));
    polarity_rec(f.child(i), child, path, out);
    path.pop_back();
  }
}

void symbols_rec(const Formula& f, std::map<std::string, std::size_t>& out) {
  if (f.is(Kind::Atom)) out.emplace(f.symbol(), f.args().size());
  for (std::size_t i = 0; i < f.child_count(); ++i) symbols_rec(f.child(i), out);
}

}  // namespace

Formula replace_at(const Formula& f, const OccurrencePath& path, const Formula& replacement) {
  return replace_rec(f, path, 0, replacement);
}

void for_each_occurrence(const Formula& f,
                         const std::function<void(const OccurrencePath&, const Formula&)>& fn) {
  OccurrencePath path;
  occurrences_rec(f, path, fn);
}

std::map<OccurrencePath, Polarity> occurrence_polarities(const Formula& f) {
  std::map<OccurrencePath, Polarity> out;
  OccurrencePath path;
  polarity_rec(f, Polarity::Positive, path, out);
  return out;
}

bool is_unipolar(const Formula& f) {
  std::map<std::string, Polarity> seen;
  for (const auto& [path, pol] : occurrence_polarities(f)) {
    const Formula& sub = subformula_at(f, path);
    if (!sub.is(Kind::Atom) || !sub.args().empty()) continue;
    auto [it, inserted] = seen.emplace(sub.symbol(), pol);
    if (!inserted && it->second != pol) return false;
  }
  return true;
}

bool is_strictly_positive(const Formula& f, const OccurrencePath& path) {
  const Formula* cur = &f;
  for (auto step : path) {
    if (step >= cur->child_count()) throw InvalidPath("occurrence path leaves the formula");
    if (!cur->is(Kind::And) && !cur->is(Kind::Or)) return false;
    cur = &cur->child(step);
  }
  return true;
}

std::map<std::string, std::size_t> symbols(const Formula& f) {
  std::map<std::string, std::size_t> out;
  symbols_rec(f, out);
  return out;
}

std::map<std::string, std::size_t> symbols(const Sequent& s) {
  std::map<std::string, std::size_t> out;
  for (const auto& f : s.antecedent) symbols_rec(f, out);
  if (s.succedent) symbols_rec(*s.succedent, out);
  return out;
}

FormulaClass classify(const Formula& f) {
  bool prop = false, pred = false;
  for (const auto& [name, arity] : symbols(f)) {
    (arity == 0 ? prop : pred) = true;
  }
  if (prop && pred) return FormulaClass::Mixed;
  if (pred) return FormulaClass::PurelyPredicate;
  if (prop) return FormulaClass::Propositional;
  return FormulaClass::ConstantOnly;
}

bool is_propositional(const Formula& f) {
  auto c = classify(f);
  return c == FormulaClass::Propositional || c == FormulaClass::ConstantOnly;
}

const char* to_string(FormulaClass c) {
  switch (c) {
    case FormulaClass::Propositional: return "propositional";
    case FormulaClass::PurelyPredicate: return "purely-predicate";
    case FormulaClass::Mixed: return "mixed";
    case FormulaClass::ConstantOnly: return "constant-only";
  }
  return "?";
}

Formula subst_prop(const Formula& a, const std::string& symbol, const Formula& replacement) {
  switch (a.kind()) {
    case Kind::Atom:
      return (a.args().empty() && a.symbol() == symbol) ? replacement : a;
    case Kind::Top:
    case Kind::Bot:
      return a;
    case Kind::Not:
      return Formula::negation(subst_prop(a.body(), symbol, replacement));
    case Kind::Forall:
    case Kind::Exists:
      return Formula::quantifier(a.kind(), a.var(), subst_prop(a.body(), symbol, replacement));
    default:
      return Formula::binary(a.kind(), subst_prop(a.left(), symbol, replacement),
                             subst_prop(a.right(), symbol, replacement));
  }
}

std::vector<OccurrencePath> atom_paths(const Formula& f, const std::string& symbol) {
  std::vector<OccurrencePath> out;
  for_each_occurrence(f, [&](const OccurrencePath& p, const Formula& sub) {
    if (sub.is(Kind::Atom) && sub.symbol() == symbol) out.push_back(p);
  });
  return out;
}

bool generalizes(const Formula& f_a, const std::string& a, const std::string& x,
                 const Formula& f_x) {
  Formula replaced = f_a;
  if (!substitute_strict(f_a, a, x, replaced)) return false;
  return replaced == f_x;
}

}  // namespace ljplus
