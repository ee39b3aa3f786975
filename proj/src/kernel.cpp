#include "ljplus/kernel.hpp"

#include <algorithm>
#include <sstream>

#include "ljplus/analysis.hpp"

namespace ljplus {

std::string_view mode_name(CalculusMode mode) {
  switch (mode) {
    case CalculusMode::LJ: return "lj";
    case CalculusMode::LJ_PLUS: return "lj+";
    case CalculusMode::LJ_ATOMIC_LEM: return "lj-atomic-lem";
    case CalculusMode::LK_LEM: return "lk";
  }
  return "?";
}

std::optional<CalculusMode> mode_from_name(std::string_view name) {
  if (name == "lj") return CalculusMode::LJ;
  if (name == "lj+" || name == "ljplus") return CalculusMode::LJ_PLUS;
  if (name == "lj-atomic-lem") return CalculusMode::LJ_ATOMIC_LEM;
  if (name == "lk" || name == "lk-lem") return CalculusMode::LK_LEM;
  return std::nullopt;
}

std::string_view code_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::ArityMismatch: return "arity-mismatch";
    case ViolationCode::ShapeMismatch: return "shape-mismatch";
    case ViolationCode::EigenvariableViolation: return "eigenvariable-violation";
    case ViolationCode::ModeViolation: return "mode-violation";
    case ViolationCode::AttributeMismatch: return "attribute-mismatch";
    case ViolationCode::SubformulaViolation: return "subformula-violation";
  }
  return "?";
}

namespace {

const char* mode_label(CalculusMode mode) {
  switch (mode) {
    case CalculusMode::LJ: return "LJ";
    case CalculusMode::LJ_PLUS: return "LJ+";
    case CalculusMode::LJ_ATOMIC_LEM: return "LJ with atomic LEM";
    case CalculusMode::LK_LEM: return "LK";
  }
  return "?";
}

struct Violation {
  ViolationCode code;
  std::string message;
};

using Result = std::optional<Violation>;

Result shape(std::string message) { return Violation{ViolationCode::ShapeMismatch, std::move(message)}; }
Result attribute(std::string message) {
  return Violation{ViolationCode::AttributeMismatch, std::move(message)};
}

bool same(const std::optional<Formula>& a, const std::optional<Formula>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || *a == *b;
}

bool same_seq(const std::vector<Formula>& a, std::size_t a_from, const std::vector<Formula>& b,
              std::size_t b_from) {
  if (a.size() < a_from || b.size() < b_from) return false;
  if (a.size() - a_from != b.size() - b_from) return false;
  for (std::size_t i = 0; a_from + i < a.size(); ++i) {
    if (a[a_from + i] != b[b_from + i]) return false;
  }
  return true;
}

// Premise antecedent without its first formula equals the conclusion
// antecedent without its first formula; succedents are equal.
Result principal_front(const Sequent& premise, const Sequent& concl, const char* rule) {
  if (premise.antecedent.empty() || concl.antecedent.empty()) {
    return shape(std::string(rule) + ": principal formula missing from antecedent");
  }
  if (!same_seq(premise.antecedent, 1, concl.antecedent, 1)) {
    return shape(std::string(rule) + ": side formulas differ between premise and conclusion");
  }
  if (!same(premise.succedent, concl.succedent)) {
    return shape(std::string(rule) + ": succedent differs between premise and conclusion");
  }
  return std::nullopt;
}

Result same_antecedent(const Sequent& premise, const Sequent& concl, const char* rule) {
  if (!same_seq(premise.antecedent, 0, concl.antecedent, 0)) {
    return shape(std::string(rule) + ": antecedent differs between premise and conclusion");
  }
  return std::nullopt;
}

Result need_formula(const RuleAttributes& a, const char* what) {
  if (!a.formula) return attribute(std::string("missing ") + what + " attribute");
  return std::nullopt;
}

Result check_mode(const RuleInstance& r, CalculusMode mode) {
  if (r.tag == RuleTag::Neutralization) {
    if (mode != CalculusMode::LJ_PLUS) {
      return Violation{ViolationCode::ModeViolation,
                       std::string("neutralization not allowed in ") + mode_label(mode)};
    }
    if (r.attrs.formula && !is_propositional(*r.attrs.formula)) {
      return Violation{ViolationCode::ModeViolation,
                       "neutralization formula must be propositional: " + to_string(*r.attrs.formula)};
    }
  }
  if (r.tag == RuleTag::LemAxiom) {
    if (mode == CalculusMode::LJ || mode == CalculusMode::LJ_PLUS) {
      return Violation{ViolationCode::ModeViolation,
                       std::string("LEM axiom not allowed in ") + mode_label(mode)};
    }
    if (mode == CalculusMode::LJ_ATOMIC_LEM && r.attrs.formula &&
        !(r.attrs.formula->is(Kind::Atom) && r.attrs.formula->args().empty())) {
      return Violation{ViolationCode::ModeViolation,
                       "LEM axiom restricted to propositional symbols: " + to_string(*r.attrs.formula)};
    }
  }
  return std::nullopt;
}

// Shared logic of the four quantifier rules.
Result check_quantifier(const RuleInstance& r, const Sequent& p) {
  const Sequent& c = r.conclusion;
  const bool on_succedent = r.tag == RuleTag::ForallSuc || r.tag == RuleTag::ExistsSuc;
  const Kind want = (r.tag == RuleTag::ForallSuc || r.tag == RuleTag::ForallAnt) ? Kind::Forall
                                                                                 : Kind::Exists;
  const char* name = tag_name(r.tag).data();
  if (!r.attrs.variable) {
    return attribute(std::string(name) + ": missing " +
                     (has_eigenvariable(r.tag) ? ":eigen" : ":witness") + " attribute");
  }
  if (!r.attrs.bound) return attribute(std::string(name) + ": missing :bound attribute");

  std::optional<Formula> q;
  std::optional<Formula> instance;
  if (on_succedent) {
    if (!c.succedent) return shape(std::string(name) + ": conclusion has empty succedent");
    if (!p.succedent) return shape(std::string(name) + ": premise has empty succedent");
    if (auto v = same_antecedent(p, c, name)) return v;
    q = c.succedent;
    instance = p.succedent;
  } else {
    if (auto v = principal_front(p, c, name)) return v;
    q = c.antecedent.front();
    instance = p.antecedent.front();
  }
  if (!q->is(want)) {
    return shape(std::string(name) + ": principal formula " + to_string(*q) + " has the wrong shape");
  }
  if (q->var() != *r.attrs.bound) {
    return attribute(std::string(name) + ": :bound " + *r.attrs.bound +
                     " does not match the quantified variable " + q->var());
  }
  const std::string& a = *r.attrs.variable;
  Formula expected = q->body();
  if (!substitute_strict(q->body(), q->var(), a, expected) || expected != *instance) {
    return shape(std::string(name) + ": " + to_string(*instance) + " is not the instance of " +
                 to_string(*q) + " at " + a);
  }
  if (has_eigenvariable(r.tag) && free_variables(c).count(a)) {
    return Violation{ViolationCode::EigenvariableViolation,
                     std::string(name) + ": eigenvariable " + a + " occurs free in the lower sequent"};
  }
  return std::nullopt;
}

Result check_shape(const RuleInstance& r, const std::vector<Sequent>& ps) {
  const Sequent& c = r.conclusion;
  const auto& ca = c.antecedent;
  switch (r.tag) {
    case RuleTag::Axiom:
      if (ca.size() != 1 || !c.succedent || ca[0] != *c.succedent) {
        return shape("Axiom: conclusion must have the form A |- A");
      }
      return std::nullopt;
    case RuleTag::TopAxiom:
      if (!ca.empty() || !c.succedent || !c.succedent->is(Kind::Top)) {
        return shape("TopAxiom: conclusion must be |- top");
      }
      return std::nullopt;
    case RuleTag::BotAxiom:
      if (ca.size() != 1 || !ca[0].is(Kind::Bot) || c.succedent) {
        return shape("BotAxiom: conclusion must be bot |-");
      }
      return std::nullopt;
    case RuleTag::LemAxiom: {
      if (auto v = need_formula(r.attrs, ":a")) return v;
      const Formula& a = *r.attrs.formula;
      if (!ca.empty() || !c.succedent ||
          *c.succedent != Formula::disjunction(a, Formula::negation(a))) {
        return shape("LemAxiom: conclusion must be |- A | ~A for A = " + to_string(a));
      }
      return std::nullopt;
    }
    case RuleTag::ThinAnt: {
      const Sequent& p = ps[0];
      if (ca.empty() || !same_seq(p.antecedent, 0, ca, 1) || !same(p.succedent, c.succedent)) {
        return shape("ThinAnt: conclusion must add one formula in front of the premise");
      }
      return std::nullopt;
    }
    case RuleTag::ThinSuc: {
      const Sequent& p = ps[0];
      if (p.succedent) return shape("ThinSuc: premise succedent must be empty");
      if (!c.succedent) return shape("ThinSuc: conclusion succedent must be nonempty");
      return same_antecedent(p, c, "ThinSuc");
    }
    case RuleTag::Contract: {
      const Sequent& p = ps[0];
      if (p.antecedent.size() < 2 || p.antecedent[0] != p.antecedent[1]) {
        return shape("Contract: premise must start with two copies of a formula");
      }
      if (!same_seq(p.antecedent, 1, ca, 0) || !same(p.succedent, c.succedent)) {
        return shape("Contract: conclusion must drop one of the two leading copies");
      }
      return std::nullopt;
    }
    case RuleTag::Exchange: {
      const Sequent& p = ps[0];
      if (!r.attrs.index) return attribute("Exchange: missing :pos attribute");
      std::size_t i = *r.attrs.index;
      if (i + 1 >= p.antecedent.size() || p.antecedent.size() != ca.size()) {
        return shape("Exchange: position " + std::to_string(i) + " out of range");
      }
      for (std::size_t j = 0; j < ca.size(); ++j) {
        std::size_t src = j == i ? i + 1 : (j == i + 1 ? i : j);
        if (ca[j] != p.antecedent[src]) {
          return shape("Exchange: conclusion is not the premise with positions " +
                       std::to_string(i) + " and " + std::to_string(i + 1) + " swapped");
        }
      }
      if (!same(p.succedent, c.succedent)) return shape("Exchange: succedent changed");
      return std::nullopt;
    }
    case RuleTag::Cut: {
      if (auto v = need_formula(r.attrs, ":formula")) return v;
      const Formula& cf = *r.attrs.formula;
      const Sequent &l = ps[0], &rr = ps[1];
      if (!l.succedent || *l.succedent != cf) return shape("Cut: left premise must end in the cut formula");
      if (rr.antecedent.empty() || rr.antecedent[0] != cf) {
        return shape("Cut: right premise must start with the cut formula");
      }
      std::vector<Formula> want = l.antecedent;
      want.insert(want.end(), rr.antecedent.begin() + 1, rr.antecedent.end());
      if (!same_seq(want, 0, ca, 0) || !same(rr.succedent, c.succedent)) {
        return shape("Cut: conclusion must be Gamma, Pi |- Lambda");
      }
      return std::nullopt;
    }
    case RuleTag::Mix: {
      if (auto v = need_formula(r.attrs, ":formula")) return v;
      const Formula& mf = *r.attrs.formula;
      const Sequent &l = ps[0], &rr = ps[1];
      if (!l.succedent || *l.succedent != mf) return shape("Mix: left premise must end in the mix formula");
      if (!contains_formula(rr.antecedent, mf)) {
        return shape("Mix: mix formula does not occur in the right antecedent");
      }
      std::vector<Formula> want = l.antecedent;
      auto rest = remove_all(rr.antecedent, mf);
      want.insert(want.end(), rest.begin(), rest.end());
      if (!same_seq(want, 0, ca, 0) || !same(rr.succedent, c.succedent)) {
        return shape("Mix: conclusion must be Gamma, Pi* |- Lambda");
      }
      return std::nullopt;
    }
    case RuleTag::AndSuc: {
      const Sequent &l = ps[0], &rr = ps[1];
      if (!c.succedent || !c.succedent->is(Kind::And)) return shape("AndSuc: succedent must be a conjunction");
      if (!l.succedent || *l.succedent != c.succedent->left() || !rr.succedent ||
          *rr.succedent != c.succedent->right()) {
        return shape("AndSuc: premises must prove the two conjuncts");
      }
      if (auto v = same_antecedent(l, c, "AndSuc")) return v;
      return same_antecedent(rr, c, "AndSuc");
    }
    case RuleTag::AndAntL:
    case RuleTag::AndAntR: {
      const char* name = r.tag == RuleTag::AndAntL ? "AndAntL" : "AndAntR";
      if (auto v = principal_front(ps[0], c, name)) return v;
      if (!ca[0].is(Kind::And)) return shape(std::string(name) + ": principal formula must be a conjunction");
      const Formula& part = r.tag == RuleTag::AndAntL ? ca[0].left() : ca[0].right();
      if (ps[0].antecedent[0] != part) return shape(std::string(name) + ": premise must start with the conjunct");
      return std::nullopt;
    }
    case RuleTag::OrAnt: {
      if (auto v = principal_front(ps[0], c, "OrAnt")) return v;
      if (auto v = principal_front(ps[1], c, "OrAnt")) return v;
      if (!ca[0].is(Kind::Or)) return shape("OrAnt: principal formula must be a disjunction");
      if (ps[0].antecedent[0] != ca[0].left() || ps[1].antecedent[0] != ca[0].right()) {
        return shape("OrAnt: premises must start with the two disjuncts");
      }
      return std::nullopt;
    }
    case RuleTag::OrSucL:
    case RuleTag::OrSucR: {
      const char* name = r.tag == RuleTag::OrSucL ? "OrSucL" : "OrSucR";
      const Sequent& p = ps[0];
      if (!c.succedent || !c.succedent->is(Kind::Or)) {
        return shape(std::string(name) + ": succedent must be a disjunction");
      }
      const Formula& part = r.tag == RuleTag::OrSucL ? c.succedent->left() : c.succedent->right();
      if (!p.succedent || *p.succedent != part) {
        return shape(std::string(name) + ": premise must prove the disjunct");
      }
      return same_antecedent(p, c, name);
    }
    case RuleTag::NotSuc: {
      const Sequent& p = ps[0];
      if (!c.succedent || !c.succedent->is(Kind::Not)) return shape("NotSuc: succedent must be a negation");
      if (p.succedent) return shape("NotSuc: premise succedent must be empty");
      if (p.antecedent.empty() || p.antecedent[0] != c.succedent->body() ||
          !same_seq(p.antecedent, 1, ca, 0)) {
        return shape("NotSuc: premise must be A, Gamma |-");
      }
      return std::nullopt;
    }
    case RuleTag::NotAnt: {
      const Sequent& p = ps[0];
      if (ca.empty() || !ca[0].is(Kind::Not)) return shape("NotAnt: principal formula must be a negation");
      if (c.succedent) return shape("NotAnt: conclusion succedent must be empty");
      if (!p.succedent || *p.succedent != ca[0].body() || !same_seq(p.antecedent, 0, ca, 1)) {
        return shape("NotAnt: premise must be Gamma |- A");
      }
      return std::nullopt;
    }
    case RuleTag::ImpSuc: {
      const Sequent& p = ps[0];
      if (!c.succedent || !c.succedent->is(Kind::Implies)) {
        return shape("ImpSuc: succedent must be an implication");
      }
      if (p.antecedent.empty() || p.antecedent[0] != c.succedent->left() ||
          !same_seq(p.antecedent, 1, ca, 0) || !p.succedent || *p.succedent != c.succedent->right()) {
        return shape("ImpSuc: premise must be A, Gamma |- B");
      }
      return std::nullopt;
    }
    case RuleTag::ImpAnt: {
      if (!r.attrs.index) return attribute("ImpAnt: missing :split attribute");
      const Sequent &l = ps[0], &rr = ps[1];
      std::size_t split = *r.attrs.index;
      if (ca.empty() || !ca[0].is(Kind::Implies)) return shape("ImpAnt: principal formula must be an implication");
      if (split != l.antecedent.size()) {
        return attribute("ImpAnt: :split " + std::to_string(split) +
                         " does not match the left premise antecedent length " +
                         std::to_string(l.antecedent.size()));
      }
      if (!l.succedent || *l.succedent != ca[0].left()) return shape("ImpAnt: left premise must prove the antecedent");
      if (rr.antecedent.empty() || rr.antecedent[0] != ca[0].right()) {
        return shape("ImpAnt: right premise must start with the consequent");
      }
      std::vector<Formula> want{ca[0]};
      want.insert(want.end(), l.antecedent.begin(), l.antecedent.end());
      want.insert(want.end(), rr.antecedent.begin() + 1, rr.antecedent.end());
      if (!same_seq(want, 0, ca, 0) || !same(rr.succedent, c.succedent)) {
        return shape("ImpAnt: conclusion must be A -> B, Gamma, Pi |- Lambda");
      }
      return std::nullopt;
    }
    case RuleTag::ForallSuc:
    case RuleTag::ForallAnt:
    case RuleTag::ExistsSuc:
    case RuleTag::ExistsAnt:
      return check_quantifier(r, ps[0]);
    case RuleTag::Neutralization: {
      if (auto v = need_formula(r.attrs, ":n")) return v;
      const Formula& n = *r.attrs.formula;
      const Formula neg = Formula::negation(n);
      for (std::size_t i = 0; i < 2; ++i) {
        const Sequent& p = ps[i];
        const Formula& lead = i == 0 ? n : neg;
        if (p.antecedent.empty() || p.antecedent[0] != lead || !same_seq(p.antecedent, 1, ca, 0) ||
            !same(p.succedent, c.succedent)) {
          return shape(std::string("Neutralization: ") + (i == 0 ? "left" : "right") +
                       " premise must be " + (i == 0 ? "N" : "~N") + ", Gamma |- Lambda");
        }
      }
      return std::nullopt;
    }
  }
  return shape("unknown rule");
}

void check_tree(const Derivation& d, CalculusMode mode, std::vector<std::size_t>& path,
                std::optional<CheckFailure>& failure) {
  if (failure) return;
  std::vector<Sequent> premises;
  premises.reserve(d.premises.size());
  for (const auto& p : d.premises) premises.push_back(p.conclusion());
  CheckReport local = check_rule(d.rule, premises, mode);
  if (local.failure) {
    failure = CheckFailure{path, local.failure->code, local.failure->message};
    return;
  }
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(i);
    check_tree(d.premises[i], mode, path, failure);
    path.pop_back();
    if (failure) return;
  }
}

}  // namespace

CheckStats collect_stats(const Derivation& d) {
  CheckStats s;
  for_each_node(d, [&](const std::vector<std::size_t>& path, const Derivation& n) {
    ++s.rule_counts[static_cast<std::size_t>(n.tag())];
    ++s.size;
    s.height = std::max(s.height, path.size() + 1);
  });
  s.cuts = s.rule_counts[static_cast<std::size_t>(RuleTag::Cut)];
  s.mixes = s.rule_counts[static_cast<std::size_t>(RuleTag::Mix)];
  s.neutralizations = s.rule_counts[static_cast<std::size_t>(RuleTag::Neutralization)];
  return s;
}

CheckReport check_rule(const RuleInstance& instance, const std::vector<Sequent>& premises,
                       CalculusMode mode) {
  CheckReport report;
  report.stats.size = 1;
  report.stats.height = 1;
  ++report.stats.rule_counts[static_cast<std::size_t>(instance.tag)];
  auto fail = [&](const Violation& v) {
    report.failure = CheckFailure{{}, v.code, v.message};
    return report;
  };
  std::size_t want = premise_count(instance.tag);
  if (premises.size() != want) {
    return fail({ViolationCode::ArityMismatch,
                 std::string(tag_name(instance.tag)) + " takes " + std::to_string(want) +
                     " premise(s), got " + std::to_string(premises.size())});
  }
  if (auto v = check_mode(instance, mode)) return fail(*v);
  if (auto v = check_shape(instance, premises)) return fail(*v);
  return report;
}

CheckReport check(const Derivation& d, CalculusMode mode) {
  CheckReport report;
  report.stats = collect_stats(d);
  std::vector<std::size_t> path;
  check_tree(d, mode, path, report.failure);
  return report;
}

namespace {

RuleInstance structural(RuleTag tag, std::vector<Formula> antecedent,
                        const std::optional<Formula>& succedent,
                        std::optional<std::size_t> index = std::nullopt) {
  RuleInstance r{tag, Sequent{std::move(antecedent), succedent}, {}};
  r.attrs.index = index;
  return r;
}

std::size_t count_in(const std::vector<Formula>& v, const Formula& f) {
  return static_cast<std::size_t>(std::count(v.begin(), v.end(), f));
}

// Moves the formula at `from` to position `to` (to <= from) by exchanges.
void bubble_left(std::vector<Formula>& cur, std::size_t from, std::size_t to,
                 const std::optional<Formula>& suc, std::vector<RuleInstance>& chain) {
  for (std::size_t j = from; j > to; --j) {
    std::swap(cur[j - 1], cur[j]);
    chain.push_back(structural(RuleTag::Exchange, cur, suc, j - 1));
  }
}

std::optional<std::vector<RuleInstance>> chain_from(const Sequent& goal, const Sequent& start) {
  if (!same(goal.succedent, start.succedent)) return std::nullopt;
  for (const auto& f : start.antecedent) {
    if (!contains_formula(goal.antecedent, f)) return std::nullopt;
  }
  const auto& suc = goal.succedent;
  std::vector<Formula> cur = start.antecedent;
  std::vector<RuleInstance> chain;

  // Contract surplus copies.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < cur.size() && !changed; ++i) {
      const Formula f = cur[i];
      if (count_in(cur, f) <= count_in(goal.antecedent, f)) continue;
      std::size_t j = i + 1;
      while (cur[j] != f) ++j;
      bubble_left(cur, j, 0, suc, chain);
      bubble_left(cur, i + 1, 1, suc, chain);
      cur.erase(cur.begin());
      chain.push_back(structural(RuleTag::Contract, cur, suc));
      changed = true;
    }
  }
  // Thin in missing copies.
  for (const auto& f : goal.antecedent) {
    while (count_in(cur, f) < count_in(goal.antecedent, f)) {
      cur.insert(cur.begin(), f);
      chain.push_back(structural(RuleTag::ThinAnt, cur, suc));
    }
  }
  // Sort into goal order: the k-th copy of f goes to the k-th goal slot of f.
  std::vector<std::size_t> target(cur.size());
  std::vector<bool> used(goal.antecedent.size(), false);
  for (std::size_t i = 0; i < cur.size(); ++i) {
    for (std::size_t g = 0; g < goal.antecedent.size(); ++g) {
      if (!used[g] && goal.antecedent[g] == cur[i]) {
        used[g] = true;
        target[i] = g;
        break;
      }
    }
  }
  for (std::size_t pass = 0; pass < cur.size(); ++pass) {
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
      if (target[j] > target[j + 1]) {
        std::swap(target[j], target[j + 1]);
        std::swap(cur[j], cur[j + 1]);
        chain.push_back(structural(RuleTag::Exchange, cur, suc, j));
      }
    }
  }
  // Keep the goal's own spelling of bound variables on the last sequent.
  if (!chain.empty()) chain.back().conclusion = goal;
  return chain;
}

}  // namespace

std::optional<std::vector<RuleInstance>> elaborate_structural(const Sequent& goal,
                                                             const std::vector<Sequent>& from) {
  for (const auto& s : from) {
    if (auto c = chain_from(goal, s)) return c;
  }
  return std::nullopt;
}

std::string format_report(const CheckReport& report) {
  std::ostringstream os;
  os << (report.ok() ? "ok" : "FAILED") << "\n";
  const auto& s = report.stats;
  os << "  nodes " << s.size << ", height " << s.height << ", cuts " << s.cuts << ", mixes "
     << s.mixes << ", neutralizations " << s.neutralizations << "\n";
  os << "  rules:";
  for (std::size_t i = 0; i < kRuleTagCount; ++i) {
    if (s.rule_counts[i]) os << " " << tag_name(static_cast<RuleTag>(i)) << "=" << s.rule_counts[i];
  }
  os << "\n";
  if (report.failure) {
    os << "  at node [";
    for (std::size_t i = 0; i < report.failure->path.size(); ++i) {
      os << (i ? "." : "") << report.failure->path[i];
    }
    os << "] " << code_name(report.failure->code) << ": " << report.failure->message << "\n";
  }
  return os.str();
}

}  // namespace ljplus
