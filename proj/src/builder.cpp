#include "ljplus/builder.hpp"

#include "ljplus/kernel.hpp"

namespace ljplus::build {

namespace {

Derivation node(RuleTag tag, Sequent concl, std::vector<Derivation> premises,
                RuleAttributes attrs = {}) {
  Derivation d;
  d.rule = RuleInstance{tag, std::move(concl), std::move(attrs)};
  d.premises = std::move(premises);
  return d;
}

const Formula& front(const Derivation& d, const char* rule) {
  if (d.conclusion().antecedent.empty()) {
    throw BuildError(std::string(rule) + ": premise antecedent is empty");
  }
  return d.conclusion().antecedent.front();
}

const Formula& succ(const Derivation& d, const char* rule) {
  if (!d.conclusion().succedent) {
    throw BuildError(std::string(rule) + ": premise succedent is empty");
  }
  return *d.conclusion().succedent;
}

std::vector<Formula> tail(const std::vector<Formula>& v) {
  return std::vector<Formula>(v.begin() + 1, v.end());
}

std::vector<Formula> cons(const Formula& f, std::vector<Formula> v) {
  v.insert(v.begin(), f);
  return v;
}

bool same_ant(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace

Derivation axiom(const Formula& a) { return node(RuleTag::Axiom, Sequent{{a}, a}, {}); }

Derivation top_axiom() { return node(RuleTag::TopAxiom, Sequent{{}, Formula::top()}, {}); }

Derivation bot_axiom() { return node(RuleTag::BotAxiom, Sequent{{Formula::bot()}, std::nullopt}, {}); }

Derivation lem_axiom(const Formula& a) {
  RuleAttributes attrs;
  attrs.formula = a;
  return node(RuleTag::LemAxiom, Sequent{{}, Formula::disjunction(a, Formula::negation(a))}, {},
              attrs);
}

Derivation thin_ant(const Formula& a, Derivation d) {
  Sequent c{cons(a, d.conclusion().antecedent), d.conclusion().succedent};
  return node(RuleTag::ThinAnt, std::move(c), {std::move(d)});
}

Derivation thin_suc(const Formula& a, Derivation d) {
  if (d.conclusion().succedent) throw BuildError("ThinSuc: premise succedent is not empty");
  Sequent c{d.conclusion().antecedent, a};
  return node(RuleTag::ThinSuc, std::move(c), {std::move(d)});
}

Derivation contract(Derivation d) {
  const auto& ant = d.conclusion().antecedent;
  if (ant.size() < 2 || ant[0] != ant[1]) throw BuildError("Contract: no leading duplicate");
  Sequent c{tail(ant), d.conclusion().succedent};
  return node(RuleTag::Contract, std::move(c), {std::move(d)});
}

Derivation exchange(std::size_t pos, Derivation d) {
  auto ant = d.conclusion().antecedent;
  if (pos + 1 >= ant.size()) throw BuildError("Exchange: position out of range");
  std::swap(ant[pos], ant[pos + 1]);
  RuleAttributes attrs;
  attrs.index = pos;
  Sequent c{std::move(ant), d.conclusion().succedent};
  return node(RuleTag::Exchange, std::move(c), {std::move(d)}, attrs);
}

Derivation move(Derivation d, std::size_t from, std::size_t to) {
  while (from > to) {
    d = exchange(from - 1, std::move(d));
    --from;
  }
  while (from < to) {
    d = exchange(from, std::move(d));
    ++from;
  }
  return d;
}

Derivation cut(Derivation left, Derivation right) {
  const Formula c = succ(left, "Cut");
  if (front(right, "Cut") != c) throw BuildError("Cut: right premise does not start with " + to_string(c));
  auto ant = left.conclusion().antecedent;
  auto rest = tail(right.conclusion().antecedent);
  ant.insert(ant.end(), rest.begin(), rest.end());
  RuleAttributes attrs;
  attrs.formula = c;
  Sequent concl{std::move(ant), right.conclusion().succedent};
  return node(RuleTag::Cut, std::move(concl), {std::move(left), std::move(right)}, attrs);
}

Derivation mix(const Formula& a, Derivation left, Derivation right) {
  if (succ(left, "Mix") != a) throw BuildError("Mix: left succedent is not the mix formula");
  if (!contains_formula(right.conclusion().antecedent, a)) {
    throw BuildError("Mix: mix formula " + to_string(a) + " absent from the right antecedent");
  }
  auto ant = left.conclusion().antecedent;
  auto rest = remove_all(right.conclusion().antecedent, a);
  ant.insert(ant.end(), rest.begin(), rest.end());
  RuleAttributes attrs;
  attrs.formula = a;
  Sequent concl{std::move(ant), right.conclusion().succedent};
  return node(RuleTag::Mix, std::move(concl), {std::move(left), std::move(right)}, attrs);
}

Derivation and_suc(Derivation left, Derivation right) {
  if (!same_ant(left.conclusion().antecedent, right.conclusion().antecedent)) {
    throw BuildError("AndSuc: premises have different antecedents");
  }
  Sequent c{left.conclusion().antecedent,
            Formula::conjunction(succ(left, "AndSuc"), succ(right, "AndSuc"))};
  return node(RuleTag::AndSuc, std::move(c), {std::move(left), std::move(right)});
}

Derivation and_ant_l(const Formula& b, Derivation d) {
  Formula p = Formula::conjunction(front(d, "AndAntL"), b);
  Sequent c{cons(p, tail(d.conclusion().antecedent)), d.conclusion().succedent};
  return node(RuleTag::AndAntL, std::move(c), {std::move(d)});
}

Derivation and_ant_r(const Formula& a, Derivation d) {
  Formula p = Formula::conjunction(a, front(d, "AndAntR"));
  Sequent c{cons(p, tail(d.conclusion().antecedent)), d.conclusion().succedent};
  return node(RuleTag::AndAntR, std::move(c), {std::move(d)});
}

Derivation or_ant(Derivation left, Derivation right) {
  const auto& la = left.conclusion().antecedent;
  const auto& ra = right.conclusion().antecedent;
  if (la.empty() || ra.empty() || !same_ant(tail(la), tail(ra))) {
    throw BuildError("OrAnt: premises have different side formulas");
  }
  Formula p = Formula::disjunction(la[0], ra[0]);
  Sequent c{cons(p, tail(la)), left.conclusion().succedent};
  return node(RuleTag::OrAnt, std::move(c), {std::move(left), std::move(right)});
}

Derivation or_suc_l(const Formula& b, Derivation d) {
  Sequent c{d.conclusion().antecedent, Formula::disjunction(succ(d, "OrSucL"), b)};
  return node(RuleTag::OrSucL, std::move(c), {std::move(d)});
}

Derivation or_suc_r(const Formula& a, Derivation d) {
  Sequent c{d.conclusion().antecedent, Formula::disjunction(a, succ(d, "OrSucR"))};
  return node(RuleTag::OrSucR, std::move(c), {std::move(d)});
}

Derivation not_suc(Derivation d) {
  if (d.conclusion().succedent) throw BuildError("NotSuc: premise succedent is not empty");
  Formula a = front(d, "NotSuc");
  Sequent c{tail(d.conclusion().antecedent), Formula::negation(a)};
  return node(RuleTag::NotSuc, std::move(c), {std::move(d)});
}

Derivation not_ant(Derivation d) {
  Formula a = succ(d, "NotAnt");
  Sequent c{cons(Formula::negation(a), d.conclusion().antecedent), std::nullopt};
  return node(RuleTag::NotAnt, std::move(c), {std::move(d)});
}

Derivation imp_suc(Derivation d) {
  Formula a = front(d, "ImpSuc");
  Sequent c{tail(d.conclusion().antecedent), Formula::implication(a, succ(d, "ImpSuc"))};
  return node(RuleTag::ImpSuc, std::move(c), {std::move(d)});
}

Derivation imp_ant(Derivation left, Derivation right) {
  Formula p = Formula::implication(succ(left, "ImpAnt"), front(right, "ImpAnt"));
  std::vector<Formula> ant{p};
  const auto& la = left.conclusion().antecedent;
  ant.insert(ant.end(), la.begin(), la.end());
  auto rest = tail(right.conclusion().antecedent);
  ant.insert(ant.end(), rest.begin(), rest.end());
  RuleAttributes attrs;
  attrs.index = la.size();
  Sequent c{std::move(ant), right.conclusion().succedent};
  return node(RuleTag::ImpAnt, std::move(c), {std::move(left), std::move(right)}, attrs);
}

namespace {

Derivation quantifier(RuleTag tag, const Formula& q, const std::string& v, Derivation d) {
  if (!q.is_quantifier()) throw BuildError(std::string(tag_name(tag)) + ": not a quantified formula");
  RuleAttributes attrs;
  attrs.variable = v;
  attrs.bound = q.var();
  Sequent c = d.conclusion();
  if (tag == RuleTag::ForallSuc || tag == RuleTag::ExistsSuc) {
    c.succedent = q;
  } else {
    if (c.antecedent.empty()) throw BuildError(std::string(tag_name(tag)) + ": premise antecedent is empty");
    c.antecedent[0] = q;
  }
  return node(tag, std::move(c), {std::move(d)}, attrs);
}

}  // namespace

Derivation forall_suc(const Formula& q, const std::string& a, Derivation d) {
  return quantifier(RuleTag::ForallSuc, q, a, std::move(d));
}
Derivation forall_ant(const Formula& q, const std::string& t, Derivation d) {
  return quantifier(RuleTag::ForallAnt, q, t, std::move(d));
}
Derivation exists_suc(const Formula& q, const std::string& t, Derivation d) {
  return quantifier(RuleTag::ExistsSuc, q, t, std::move(d));
}
Derivation exists_ant(const Formula& q, const std::string& a, Derivation d) {
  return quantifier(RuleTag::ExistsAnt, q, a, std::move(d));
}

Derivation neutralization(const Formula& n, Derivation pos, Derivation neg) {
  const auto& pa = pos.conclusion().antecedent;
  const auto& na = neg.conclusion().antecedent;
  if (pa.empty() || pa[0] != n || na.empty() || na[0] != Formula::negation(n)) {
    throw BuildError("Neutralization: premises must start with N and ~N");
  }
  if (!same_ant(tail(pa), tail(na))) throw BuildError("Neutralization: premises have different side formulas");
  RuleAttributes attrs;
  attrs.formula = n;
  Sequent c{tail(pa), pos.conclusion().succedent};
  return node(RuleTag::Neutralization, std::move(c), {std::move(pos), std::move(neg)}, attrs);
}

Derivation apply_chain(Derivation d, const std::vector<RuleInstance>& chain) {
  for (const auto& r : chain) {
    Derivation n;
    n.rule = r;
    n.premises.push_back(std::move(d));
    d = std::move(n);
  }
  return d;
}

bool can_weaken(const Sequent& from, const Sequent& goal) {
  Sequent s = from;
  if (!s.succedent && goal.succedent) s.succedent = goal.succedent;
  return elaborate_structural(goal, {s}).has_value();
}

Derivation weaken(Derivation d, const Sequent& goal) {
  if (!d.conclusion().succedent && goal.succedent) d = thin_suc(*goal.succedent, std::move(d));
  auto chain = elaborate_structural(goal, {d.conclusion()});
  if (!chain) {
    throw BuildError("cannot reach " + to_string(goal) + " from " + to_string(d.conclusion()) +
                     " by structural rules");
  }
  return apply_chain(std::move(d), *chain);
}

}  // namespace ljplus::build
