#include "ljplus/prop_decision.hpp"

#include "ljplus/analysis.hpp"
#include "ljplus/builder.hpp"
#include "ljplus/kernel.hpp"
#include "ljplus/transform.hpp"

namespace ljplus {

using namespace build;

namespace {

void require_propositional(const Formula& f) {
  if (!is_propositional(f)) throw DecisionError("not a propositional formula: " + to_string(f));
}

std::vector<std::string> prop_symbols(const Formula& f) {
  std::vector<std::string> out;
  for (const auto& [name, arity] : symbols(f)) {
    if (arity == 0) out.push_back(name);
  }
  return out;
}

Derivation refuted(const Formula& c);

Derivation proved(const Formula& c) {
  switch (c.kind()) {
    case Kind::Top: return top_axiom();
    case Kind::Not: return not_suc(refuted(c.body()));
    case Kind::And: return and_suc(proved(c.left()), proved(c.right()));
    case Kind::Or:
      if (eval_prop(c.left(), {})) return or_suc_l(c.right(), proved(c.left()));
      return or_suc_r(c.left(), proved(c.right()));
    case Kind::Implies:
      if (eval_prop(c.right(), {})) return imp_suc(thin_ant(c.left(), proved(c.right())));
      return imp_suc(thin_suc(c.right(), refuted(c.left())));
    case Kind::Forall: return forall_suc(c, fresh_variable("v", all_variables(c)), proved(c.body()));
    case Kind::Exists: return exists_suc(c, fresh_variable("v", all_variables(c)), proved(c.body()));
    default: throw std::logic_error("proved: formula is not true: " + to_string(c));
  }
}

Derivation refuted(const Formula& c) {
  switch (c.kind()) {
    case Kind::Bot: return bot_axiom();
    case Kind::Not: return not_ant(proved(c.body()));
    case Kind::And:
      if (!eval_prop(c.left(), {})) return and_ant_l(c.right(), refuted(c.left()));
      return and_ant_r(c.left(), refuted(c.right()));
    case Kind::Or: return or_ant(refuted(c.left()), refuted(c.right()));
    case Kind::Implies: return imp_ant(proved(c.left()), refuted(c.right()));
    case Kind::Forall: return forall_ant(c, fresh_variable("v", all_variables(c)), refuted(c.body()));
    case Kind::Exists: return exists_ant(c, fresh_variable("v", all_variables(c)), refuted(c.body()));
    default: throw std::logic_error("refuted: formula is not false: " + to_string(c));
  }
}

}  // namespace

bool eval_prop(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Kind::Top: return true;
    case Kind::Bot: return false;
    case Kind::Atom: {
      if (!f.args().empty()) throw DecisionError("predicate symbol " + f.symbol() + " in propositional evaluation");
      auto it = v.find(f.symbol());
      if (it == v.end()) throw DecisionError("valuation does not assign " + f.symbol());
      return it->second;
    }
    case Kind::Not: return !eval_prop(f.body(), v);
    case Kind::And: return eval_prop(f.left(), v) && eval_prop(f.right(), v);
    case Kind::Or: return eval_prop(f.left(), v) || eval_prop(f.right(), v);
    case Kind::Implies: return !eval_prop(f.left(), v) || eval_prop(f.right(), v);
    case Kind::Forall:
    case Kind::Exists: return eval_prop(f.body(), v);
  }
  return false;
}

Derivation derive_constant(const Formula& c) {
  if (classify(c) != FormulaClass::ConstantOnly) throw DecisionError("not a constant-only formula: " + to_string(c));
  return eval_prop(c, {}) ? proved(c) : refuted(c);
}

std::optional<Valuation> falsify(const Formula& f, std::size_t symbol_limit) {
  require_propositional(f);
  const auto syms = prop_symbols(f);
  if (syms.size() > symbol_limit) {
    throw DecisionError(std::to_string(syms.size()) + " symbols exceed the truth-table limit of " +
                        std::to_string(symbol_limit));
  }
  for (std::size_t bits = 0; bits < (std::size_t{1} << syms.size()); ++bits) {
    Valuation v;
    // The last symbol in name order varies fastest.
    for (std::size_t i = 0; i < syms.size(); ++i) v[syms[i]] = (bits >> (syms.size() - 1 - i)) & 1;
    if (!eval_prop(f, v)) return v;
  }
  return std::nullopt;
}

Derivation synthesize_proof(const Formula& f) {
  require_propositional(f);
  const auto syms = prop_symbols(f);
  if (syms.empty()) {
    if (!eval_prop(f, {})) throw DecisionError("not a tautology: " + to_string(f));
    return derive_constant(f);
  }
  if (falsify(f)) throw DecisionError("not a tautology: " + to_string(f));
  const std::string& r = syms.front();
  Derivation top = synthesize_proof(subst_prop(f, r, Formula::top()));
  Derivation bot = synthesize_proof(subst_prop(f, r, Formula::bot()));
  return merge_by_substitution(top, bot, f, r);
}

Decision decide_prop(const Formula& f, std::size_t symbol_limit) {
  if (auto v = falsify(f, symbol_limit)) return NotDerivable{*v};
  return Derivable{synthesize_proof(f)};
}

}  // namespace ljplus
