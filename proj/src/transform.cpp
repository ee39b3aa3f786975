#include "ljplus/transform.hpp"

#include <functional>

#include "ljplus/analysis.hpp"
#include "ljplus/builder.hpp"
#include "ljplus/kernel.hpp"

namespace ljplus {

using namespace build;

namespace {

bool is_prop_atom(const Formula& f) { return f.is(Kind::Atom) && f.args().empty(); }

Derivation with_premises(const Derivation& d, std::vector<Derivation> premises) {
  Derivation out;
  out.rule = d.rule;
  out.premises = std::move(premises);
  return out;
}

// Bottom-up rewrite: `fn` sees the node with already-rewritten premises.
Derivation rewrite(const Derivation& d, const std::function<Derivation(Derivation)>& fn) {
  std::vector<Derivation> ps;
  ps.reserve(d.premises.size());
  for (const auto& p : d.premises) ps.push_back(rewrite(p, fn));
  return fn(with_premises(d, std::move(ps)));
}

// B ⊢ B turned into B, ¬B ⊢.
Derivation refute(const Formula& b) { return exchange(0, not_ant(axiom(b))); }

Derivation in_context(Derivation d, std::vector<Formula> ant) {
  Sequent goal{std::move(ant), d.conclusion().succedent};
  return weaken(std::move(d), goal);
}

Derivation in_context(Derivation d, std::vector<Formula> ant, const Formula& suc) {
  return weaken(std::move(d), Sequent{std::move(ant), suc});
}

using AtomLeaf = std::function<Derivation(const Formula&)>;

class LemBuilder {
 public:
  explicit LemBuilder(AtomLeaf atom) : atom_(std::move(atom)) {}

  Derivation lem(const Formula& n) {
    switch (n.kind()) {
      case Kind::Atom:
        if (!n.args().empty()) throw TransformError("LEM derivation requires a propositional formula");
        return atom_(n);
      case Kind::Top:
        return or_suc_l(Formula::negation(n), top_axiom());
      case Kind::Bot:
        return or_suc_r(n, not_suc(bot_axiom()));
      case Kind::Not:
      case Kind::Forall:
      case Kind::Exists: {
        const Formula& b = n.body();
        Derivation lb = lem(b);
        return split(lb, unary_leaf(n, true), unary_leaf(n, false));
      }
      default: {
        const Formula &b = n.left(), &c = n.right();
        Derivation lb = lem(b), lc = lem(c);
        auto under = [&](bool bv) { return split(lc, binary_leaf(n, bv, true), binary_leaf(n, bv, false)); };
        return split(lb, under(true), under(false));
      }
    }
  }

 private:
  // From ⊢ X ∨ ¬X, X, Γ ⊢ g and ¬X, Γ ⊢ g to Γ ⊢ g.
  static Derivation split(const Derivation& lem_x, Derivation pos, Derivation neg) {
    return cut(lem_x, or_ant(std::move(pos), std::move(neg)));
  }

  static Derivation yes(const Formula& n, Derivation d) { return or_suc_l(Formula::negation(n), std::move(d)); }
  static Derivation no(const Formula& n, Derivation d) { return or_suc_r(n, std::move(d)); }

  // lit(B) ⊢ n ∨ ¬n for n = ¬B, ∀x B, ∃x B.
  static Derivation unary_leaf(const Formula& n, bool b_true) {
    const Formula& b = n.body();
    const Formula nb = Formula::negation(b);
    const std::string v = fresh_variable("v", all_variables(n));
    switch (n.kind()) {
      case Kind::Not:
        if (b_true) return no(n, not_suc(not_ant(axiom(b))));
        return yes(n, axiom(nb));
      case Kind::Forall:
        if (b_true) return yes(n, forall_suc(n, v, axiom(b)));
        return no(n, not_suc(forall_ant(n, v, refute(b))));
      default:
        if (b_true) return yes(n, exists_suc(n, v, axiom(b)));
        return no(n, not_suc(exists_ant(n, v, refute(b))));
    }
  }

  // lit(C), lit(B) ⊢ n ∨ ¬n for a binary n = B ∘ C.
  static Derivation binary_leaf(const Formula& n, bool bv, bool cv) {
    const Formula &b = n.left(), &c = n.right();
    const Formula lb = bv ? b : Formula::negation(b);
    const Formula lc = cv ? c : Formula::negation(c);
    const std::vector<Formula> ctx{lc, lb};
    auto with = [&](const Formula& front) { return std::vector<Formula>{front, lc, lb}; };
    switch (n.kind()) {
      case Kind::And:
        if (bv && cv) {
          return yes(n, and_suc(in_context(axiom(b), ctx), in_context(axiom(c), ctx)));
        }
        if (!bv) return no(n, not_suc(in_context(and_ant_l(c, refute(b)), with(n))));
        return no(n, not_suc(in_context(and_ant_r(b, refute(c)), with(n))));
      case Kind::Or:
        if (bv) return yes(n, or_suc_l(c, in_context(axiom(b), ctx)));
        if (cv) return yes(n, or_suc_r(b, in_context(axiom(c), ctx)));
        return no(n, not_suc(or_ant(in_context(refute(b), with(b)), in_context(refute(c), with(c)))));
      default:  // implication
        if (cv) return yes(n, imp_suc(in_context(axiom(c), with(b))));
        if (!bv) return yes(n, imp_suc(in_context(refute(b), with(b), c)));
        return no(n, not_suc(in_context(imp_ant(axiom(b), refute(c)), with(n))));
    }
  }

  AtomLeaf atom_;
};

}  // namespace

Derivation lem_gadget(const Formula& n) {
  const Formula nn = Formula::negation(n);
  return neutralization(n, or_suc_l(nn, axiom(n)), or_suc_r(n, axiom(nn)));
}

Derivation lem_to_neutralization(const Derivation& d) {
  return rewrite(d, [](Derivation n) {
    if (n.tag() != RuleTag::LemAxiom) return n;
    const Formula& a = *n.rule.attrs.formula;
    if (!is_prop_atom(a)) {
      throw TransformError("LEM axiom for non-atomic formula " + to_string(a) +
                           " has no neutralization counterpart");
    }
    return lem_gadget(a);
  });
}

Derivation derive_lem(const Formula& n) {
  if (!is_propositional(n)) throw TransformError("not a propositional formula: " + to_string(n));
  return LemBuilder(lem_gadget).lem(n);
}

Derivation derive_lem_atomic(const Formula& n) {
  if (!is_propositional(n)) throw TransformError("not a propositional formula: " + to_string(n));
  return LemBuilder([](const Formula& a) { return lem_axiom(a); }).lem(n);
}

Derivation neutralization_to_lem(const Derivation& d) {
  return rewrite(d, [](Derivation n) {
    if (n.tag() != RuleTag::Neutralization) return n;
    Derivation cases = or_ant(std::move(n.premises[0]), std::move(n.premises[1]));
    return cut(derive_lem_atomic(*n.rule.attrs.formula), std::move(cases));
  });
}

Derivation specialize(const Derivation& d, const std::string& r, const Formula& c) {
  return map_formulas(d, [&](const Formula& f) { return subst_prop(f, r, c); });
}

Derivation regularize(const Derivation& d, VariablePool& pool) {
  Derivation out = d;
  if (has_eigenvariable(d.tag())) {
    const std::string old = *d.rule.attrs.variable;
    const std::string fresh = pool.fresh(old);
    out.premises[0] = rename_variable(d.premises[0], old, fresh);
    out.rule.attrs.variable = fresh;
  }
  for (auto& p : out.premises) p = regularize(p, pool);
  return out;
}

Derivation cut_to_mix(const Derivation& d) {
  return rewrite(d, [](Derivation n) {
    if (n.tag() != RuleTag::Cut) return n;
    Sequent goal = n.conclusion();
    Derivation m = mix(*n.rule.attrs.formula, std::move(n.premises[0]), std::move(n.premises[1]));
    return weaken(std::move(m), goal);
  });
}

// ---------------------------------------------------------------------------
// Merging a ⊤ case and a ⊥ case into one derivation.

Derivation replacement_lemma(const Formula& x, const Formula& y, const std::string& r, bool top) {
  const Formula R = Formula::atom(r);
  const Formula h = top ? R : Formula::negation(R);
  const Kind c = top ? Kind::Top : Kind::Bot;
  auto goal = [&](const Formula& left, const Formula& right) {
    return Sequent{{left, h}, right};
  };
  if (x == y) return weaken(axiom(x), goal(x, y));
  if (is_prop_atom(x) && x.symbol() == r && y.is(c)) {
    return top ? weaken(top_axiom(), goal(x, y)) : weaken(refute(R), goal(x, y));
  }
  if (x.is(c) && is_prop_atom(y) && y.symbol() == r) {
    return top ? weaken(axiom(R), goal(x, y)) : weaken(bot_axiom(), goal(x, y));
  }
  if (x.kind() != y.kind()) {
    throw TransformError("formulas " + to_string(x) + " and " + to_string(y) +
                         " differ beyond the substituted symbol");
  }
  switch (x.kind()) {
    case Kind::And: {
      Derivation l = and_ant_l(x.right(), replacement_lemma(x.left(), y.left(), r, top));
      Derivation rr = and_ant_r(x.left(), replacement_lemma(x.right(), y.right(), r, top));
      return and_suc(std::move(l), std::move(rr));
    }
    case Kind::Or: {
      Derivation l = or_suc_l(y.right(), replacement_lemma(x.left(), y.left(), r, top));
      Derivation rr = or_suc_r(y.left(), replacement_lemma(x.right(), y.right(), r, top));
      return or_ant(std::move(l), std::move(rr));
    }
    case Kind::Not: {
      Derivation back = replacement_lemma(y.body(), x.body(), r, top);
      return not_suc(exchange(0, not_ant(std::move(back))));
    }
    case Kind::Implies: {
      Derivation back = replacement_lemma(y.left(), x.left(), r, top);
      Derivation fwd = replacement_lemma(x.right(), y.right(), r, top);
      Derivation both = imp_ant(std::move(back), std::move(fwd));
      return imp_suc(weaken(std::move(both), Sequent{{y.left(), x, h}, y.right()}));
    }
    case Kind::Forall:
    case Kind::Exists: {
      std::set<std::string> used = all_variables(x);
      auto more = all_variables(y);
      used.insert(more.begin(), more.end());
      const std::string v = fresh_variable("v", used);
      Formula xb = substitute(x.body(), x.var(), v);
      Formula yb = substitute(y.body(), y.var(), v);
      Derivation inner = replacement_lemma(xb, yb, r, top);
      if (x.is(Kind::Forall)) return forall_suc(y, v, forall_ant(x, v, std::move(inner)));
      return exists_ant(x, v, exists_suc(y, v, std::move(inner)));
    }
    default:
      throw TransformError("formulas " + to_string(x) + " and " + to_string(y) +
                           " differ beyond the substituted symbol");
  }
}

namespace {

class Merger {
 public:
  Merger(std::string r, bool top)
      : r_(std::move(r)),
        top_(top),
        R_(Formula::atom(r_)),
        h_(top ? R_ : Formula::negation(R_)),
        c_(top ? Formula::top() : Formula::bot()) {}

  struct Built {
    Derivation d;
    bool has_h;
  };

  // The actual formula with r restored wherever `pat` has r and the actual
  // formula has the substituted constant.
  Formula overlay(const Formula& actual, const Formula& pat) const {
    if (actual.kind() == c_.kind() && is_prop_atom(pat) && pat.symbol() == r_) return R_;
    if (actual.kind() != pat.kind()) return actual;
    switch (actual.kind()) {
      case Kind::Not: return Formula::negation(overlay(actual.body(), pat.body()));
      case Kind::Forall:
      case Kind::Exists:
        return Formula::quantifier(actual.kind(), actual.var(), overlay(actual.body(), pat.body()));
      case Kind::And:
      case Kind::Or:
      case Kind::Implies:
        return Formula::binary(actual.kind(), overlay(actual.left(), pat.left()),
                               overlay(actual.right(), pat.right()));
      default: return actual;
    }
  }

  Sequent overlay(const Sequent& actual, const Sequent& pat) const {
    Sequent out;
    for (std::size_t i = 0; i < actual.antecedent.size(); ++i) {
      out.antecedent.push_back(overlay(actual.antecedent[i], pat.antecedent[i]));
    }
    if (actual.succedent) out.succedent = overlay(*actual.succedent, *pat.succedent);
    return out;
  }

  Built build(const Derivation& d, const Sequent& pat) const {
    const auto& P = pat.antecedent;
    const auto& S = pat.succedent;
    switch (d.tag()) {
      case RuleTag::Axiom:
        if (P[0] == *S) return {axiom(P[0]), false};
        return {replacement_lemma(P[0], *S, r_, top_), true};
      case RuleTag::TopAxiom:
        if (S->is(Kind::Top)) return {top_axiom(), false};
        return {axiom(R_), true};
      case RuleTag::BotAxiom:
        if (P[0].is(Kind::Bot)) return {bot_axiom(), false};
        return {refute(R_), true};
      case RuleTag::LemAxiom:
        return {d, false};
      default:
        break;
    }

    std::vector<Sequent> want = premise_patterns(d, pat);
    std::vector<Built> built;
    bool any_h = false;
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
      built.push_back(build(d.premises[i], overlay(d.premises[i].conclusion(), want[i])));
      any_h = any_h || built.back().has_h;
    }
    if (!any_h) {
      std::vector<Derivation> ps;
      for (auto& b : built) ps.push_back(std::move(b.d));
      return {node_like(d, pat, std::move(ps)), false};
    }
    Sequent goal = pat;
    goal.antecedent.push_back(h_);
    if (d.tag() == RuleTag::Cut || d.tag() == RuleTag::Mix || d.tag() == RuleTag::ImpAnt) {
      Derivation n = d.tag() == RuleTag::Cut ? cut(std::move(built[0].d), std::move(built[1].d))
                     : d.tag() == RuleTag::Mix
                         ? mix(*d.rule.attrs.formula, std::move(built[0].d), std::move(built[1].d))
                         : imp_ant(std::move(built[0].d), std::move(built[1].d));
      return {weaken(std::move(n), goal), true};
    }
    std::vector<Derivation> ps;
    for (auto& b : built) {
      if (b.has_h) {
        ps.push_back(std::move(b.d));
      } else {
        Sequent s = b.d.conclusion();
        s.antecedent.push_back(h_);
        ps.push_back(weaken(std::move(b.d), s));
      }
    }
    return {node_like(d, goal, std::move(ps)), true};
  }

  Derivation finish(Built b, const Sequent& pat) const {
    if (b.has_h) return std::move(b.d);
    Sequent goal = pat;
    goal.antecedent.push_back(h_);
    return weaken(std::move(b.d), goal);
  }

 private:
  static Derivation node_like(const Derivation& d, const Sequent& concl, std::vector<Derivation> ps) {
    Derivation out;
    out.rule = d.rule;
    out.rule.conclusion = concl;
    if (is_quantifier_rule(d.tag())) out.rule.attrs.bound = principal_quantifier(out.rule)->var();
    out.premises = std::move(ps);
    return out;
  }

  static std::vector<Formula> slice(const std::vector<Formula>& v, std::size_t from, std::size_t to) {
    return std::vector<Formula>(v.begin() + static_cast<std::ptrdiff_t>(from),
                                v.begin() + static_cast<std::ptrdiff_t>(to));
  }

  static std::vector<Formula> cons(const Formula& f, std::vector<Formula> v) {
    v.insert(v.begin(), f);
    return v;
  }

  // Marked versions of the premises' conclusions, derived from the marked
  // conclusion. Formulas a rule discharges are left unmarked.
  static std::vector<Sequent> premise_patterns(const Derivation& d, const Sequent& pat) {
    const auto& P = pat.antecedent;
    const auto& S = pat.succedent;
    const std::size_t n = P.size();
    auto prem = [&](std::size_t i) -> const Sequent& { return d.premises[i].conclusion(); };
    switch (d.tag()) {
      case RuleTag::ThinAnt: return {Sequent{slice(P, 1, n), S}};
      case RuleTag::ThinSuc: return {Sequent{P, std::nullopt}};
      case RuleTag::Contract: return {Sequent{cons(P[0], P), S}};
      case RuleTag::Exchange: {
        auto q = P;
        std::swap(q[*d.rule.attrs.index], q[*d.rule.attrs.index + 1]);
        return {Sequent{q, S}};
      }
      case RuleTag::Cut: {
        std::size_t g = prem(0).antecedent.size();
        return {Sequent{slice(P, 0, g), prem(0).succedent},
                Sequent{cons(prem(1).antecedent[0], slice(P, g, n)), S}};
      }
      case RuleTag::Mix: {
        std::size_t g = prem(0).antecedent.size();
        const Formula& a = *d.rule.attrs.formula;
        std::vector<Formula> right;
        std::size_t j = g;
        for (const auto& f : prem(1).antecedent) right.push_back(f == a ? f : P[j++]);
        return {Sequent{slice(P, 0, g), prem(0).succedent}, Sequent{right, S}};
      }
      case RuleTag::AndSuc: return {Sequent{P, S->left()}, Sequent{P, S->right()}};
      case RuleTag::AndAntL: return {Sequent{cons(P[0].left(), slice(P, 1, n)), S}};
      case RuleTag::AndAntR: return {Sequent{cons(P[0].right(), slice(P, 1, n)), S}};
      case RuleTag::OrAnt:
        return {Sequent{cons(P[0].left(), slice(P, 1, n)), S},
                Sequent{cons(P[0].right(), slice(P, 1, n)), S}};
      case RuleTag::OrSucL: return {Sequent{P, S->left()}};
      case RuleTag::OrSucR: return {Sequent{P, S->right()}};
      case RuleTag::NotSuc: return {Sequent{cons(S->body(), P), std::nullopt}};
      case RuleTag::NotAnt: return {Sequent{slice(P, 1, n), P[0].body()}};
      case RuleTag::ImpSuc: return {Sequent{cons(S->left(), P), S->right()}};
      case RuleTag::ImpAnt: {
        std::size_t s = *d.rule.attrs.index;
        return {Sequent{slice(P, 1, 1 + s), P[0].left()},
                Sequent{cons(P[0].right(), slice(P, 1 + s, n)), S}};
      }
      case RuleTag::ForallSuc:
      case RuleTag::ExistsSuc: return {Sequent{P, S->body()}};
      case RuleTag::ForallAnt:
      case RuleTag::ExistsAnt: return {Sequent{cons(P[0].body(), slice(P, 1, n)), S}};
      case RuleTag::Neutralization:
        return {Sequent{cons(prem(0).antecedent[0], P), S}, Sequent{cons(prem(1).antecedent[0], P), S}};
      default: return {};
    }
  }

  std::string r_;
  bool top_;
  Formula R_, h_, c_;
};

}  // namespace

Derivation merge_by_substitution(const Derivation& d_top, const Derivation& d_bot, const Formula& a,
                                 const std::string& r) {
  auto sym = symbols(a);
  auto it = sym.find(r);
  if (it == sym.end()) throw TransformError("symbol " + r + " does not occur in " + to_string(a));
  if (it->second != 0) throw TransformError("symbol " + r + " is not propositional");

  Derivation halves[2] = {d_top, d_bot};
  for (int i = 0; i < 2; ++i) {
    const bool top = i == 0;
    Sequent expected{{}, subst_prop(a, r, top ? Formula::top() : Formula::bot())};
    if (halves[i].conclusion() != expected) {
      throw TransformError(std::string("endsequent mismatch: the ") + (top ? "top" : "bottom") +
                           " derivation must end in " + to_string(expected) + ", found " +
                           to_string(halves[i].conclusion()));
    }
    auto report = check(halves[i], CalculusMode::LJ_PLUS);
    if (!report.ok()) {
      throw TransformError(std::string("the ") + (top ? "top" : "bottom") +
                           " derivation does not check: " + report.failure->message);
    }
    Merger m(r, top);
    Sequent pat = m.overlay(halves[i].conclusion(), Sequent{{}, a});
    halves[i] = m.finish(m.build(halves[i], pat), pat);
  }
  Derivation out = neutralization(Formula::atom(r), std::move(halves[0]), std::move(halves[1]));
  auto report = check(out, CalculusMode::LJ_PLUS);
  if (!report.ok()) throw std::logic_error("merge produced an invalid derivation: " + report.failure->message);
  return out;
}

// ---------------------------------------------------------------------------

Derivation derive_impl_disj_equiv(const Formula& n, const Formula& f, EquivDirection direction) {
  if (!is_propositional(n)) throw TransformError("not a propositional formula: " + to_string(n));
  const Formula nn = Formula::negation(n);
  const Formula imp = Formula::implication(n, f);
  const Formula disj = Formula::disjunction(nn, f);
  if (direction == EquivDirection::ImpToDisj) {
    // N ⊃ F, N ⊢ F, then exchange so N leads.
    Derivation yes = exchange(0, or_suc_r(nn, imp_ant(axiom(n), axiom(f))));
    Derivation no = exchange(0, thin_ant(imp, or_suc_l(f, axiom(nn))));
    return neutralization(n, std::move(yes), std::move(no));
  }
  Derivation left = thin_suc(f, not_ant(axiom(n)));
  Derivation right = exchange(0, thin_ant(n, axiom(f)));
  return imp_suc(exchange(0, or_ant(std::move(left), std::move(right))));
}

}  // namespace ljplus
