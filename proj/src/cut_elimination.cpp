#include "ljplus/cut_elimination.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "ljplus/analysis.hpp"
#include "ljplus/builder.hpp"
#include "ljplus/transform.hpp"

namespace ljplus {

using namespace build;

bool MixMeasure::operator<(const MixMeasure& other) const {
  return std::make_tuple(grade, rank()) < std::make_tuple(other.grade, other.rank());
}

std::string to_string(const MixMeasure& m) {
  return "(grade " + std::to_string(m.grade) + ", rank " + std::to_string(m.left_rank) + "+" +
         std::to_string(m.right_rank) + ")";
}

namespace {

// Premises through which the succedent passes unchanged.
std::vector<std::size_t> succedent_carriers(RuleTag tag) {
  switch (tag) {
    case RuleTag::ThinAnt:
    case RuleTag::Contract:
    case RuleTag::Exchange:
    case RuleTag::AndAntL:
    case RuleTag::AndAntR:
    case RuleTag::ForallAnt:
    case RuleTag::ExistsAnt: return {0};
    case RuleTag::OrAnt:
    case RuleTag::Neutralization: return {0, 1};
    case RuleTag::ImpAnt: return {1};
    default: return {};
  }
}

std::size_t left_rank(const Derivation& d, const Formula& a) {
  std::size_t best = 0;
  for (std::size_t i : succedent_carriers(d.tag())) {
    const auto& s = d.premises[i].conclusion().succedent;
    if (s && *s == a) best = std::max(best, left_rank(d.premises[i], a));
  }
  return best + 1;
}

std::size_t right_rank(const Derivation& d, const Formula& a) {
  std::size_t best = 0;
  for (const auto& p : d.premises) {
    if (contains_formula(p.conclusion().antecedent, a)) best = std::max(best, right_rank(p, a));
  }
  return best + 1;
}

std::vector<Formula> concat(std::vector<Formula> a, const std::vector<Formula>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<Formula> cons(const Formula& f, std::vector<Formula> v) {
  v.insert(v.begin(), f);
  return v;
}

std::vector<Formula> tail(const std::vector<Formula>& v) { return {v.begin() + 1, v.end()}; }

class Eliminator {
 public:
  Eliminator(VariablePool pool, EliminationTrace& trace) : pool_(std::move(pool)), trace_(trace) {}

  Derivation eliminate(const Derivation& d) {
    Derivation out;
    out.rule = d.rule;
    for (const auto& p : d.premises) out.premises.push_back(eliminate(p));
    if (d.tag() != RuleTag::Cut && d.tag() != RuleTag::Mix) return out;
    ++trace_.cuts_removed;
    const Formula a = *d.rule.attrs.formula;
    Derivation m = mix(out.premises[0], out.premises[1], a, std::nullopt, 0);
    return weaken(std::move(m), d.conclusion());
  }

 private:
  // A derivation of Γ, Π* ⊢ Λ with no Cut or Mix, where `l` ends in Γ ⊢ a
  // and `r` in Π ⊢ Λ. Both inputs are cut-free.
  Derivation mix(const Derivation& l, const Derivation& r, const Formula& a,
                 const std::optional<MixMeasure>& parent, std::size_t depth) {
    const MixMeasure m = mix_measure(l, r, a);
    ++trace_.reductions;
    trace_.max_depth = std::max(trace_.max_depth, depth);
    if (parent) {
      ++trace_.comparisons;
      if (!(m < *parent)) {
        ++trace_.violations;
        throw std::logic_error("mix measure did not decrease: " + to_string(m) + " after " +
                               to_string(*parent));
      }
    }
    Frame f{l, r, a, m, depth};
    const auto& gamma = l.conclusion().antecedent;
    if (contains_formula(gamma, a)) return weaken(r, f.goal());
    if (m.right_rank > 1) return reduce_right(f);
    if (m.left_rank > 1) return reduce_left(f);
    return reduce_grade(f);
  }

  struct Frame {
    const Derivation& l;
    const Derivation& r;
    const Formula& a;
    MixMeasure measure;
    std::size_t depth;

    const std::vector<Formula>& gamma() const { return l.conclusion().antecedent; }
    const std::optional<Formula>& lambda() const { return r.conclusion().succedent; }
    Sequent goal() const {
      return Sequent{concat(gamma(), remove_all(r.conclusion().antecedent, a)), lambda()};
    }
  };

  Derivation sub(const Frame& f, const Derivation& l, const Derivation& r, const Formula& a) {
    return mix(l, r, a, f.measure, f.depth + 1);
  }

  // Γ, P* ⊢ Δ from a premise P ⊢ Δ of the right derivation: a mix when P
  // holds the mix formula, thinning otherwise.
  Derivation mix_or_thin(const Frame& f, const Derivation& p) {
    const Sequent& s = p.conclusion();
    if (contains_formula(s.antecedent, f.a)) return sub(f, f.l, p, f.a);
    return weaken(p, Sequent{concat(f.gamma(), s.antecedent), s.succedent});
  }

  // Renames the eigenvariable of `d` when it is free in `clash`.
  Derivation avoid_clash(const Derivation& d, const std::set<std::string>& clash) {
    const std::string& v = *d.rule.attrs.variable;
    if (!clash.count(v)) return d;
    const std::string fresh = pool_.fresh(v);
    Derivation out = d;
    out.premises[0] = rename_variable(d.premises[0], v, fresh);
    out.rule.attrs.variable = fresh;
    return out;
  }

  static std::set<std::string> free_in(const std::vector<Formula>& fs) {
    std::set<std::string> out;
    for (const auto& x : fs) {
      auto v = free_variables(x);
      out.insert(v.begin(), v.end());
    }
    return out;
  }

  // Rebuilds a one-premise antecedent rule of `shape` over a new premise.
  static Derivation reapply(const Derivation& shape, Derivation p) {
    const Formula& principal = shape.conclusion().antecedent[0];
    switch (shape.tag()) {
      case RuleTag::AndAntL: return and_ant_l(principal.right(), std::move(p));
      case RuleTag::AndAntR: return and_ant_r(principal.left(), std::move(p));
      case RuleTag::NotAnt: return not_ant(std::move(p));
      case RuleTag::ForallAnt: return forall_ant(principal, *shape.rule.attrs.variable, std::move(p));
      case RuleTag::ExistsAnt: return exists_ant(principal, *shape.rule.attrs.variable, std::move(p));
      default: throw std::logic_error("reapply: unexpected rule " + std::string(tag_name(shape.tag())));
    }
  }

  Derivation reduce_right(const Frame& f) {
    const Derivation& r = f.r;
    const auto& pi = r.conclusion().antecedent;
    const auto pi_star = remove_all(pi, f.a);
    const Sequent goal = f.goal();
    const auto& gamma = f.gamma();

    switch (r.tag()) {
      case RuleTag::ThinAnt:
      case RuleTag::Contract:
      case RuleTag::Exchange:
      case RuleTag::ThinSuc:
        return weaken(mix_or_thin(f, r.premises[0]), goal);

      case RuleTag::AndSuc:
        return and_suc(mix_or_thin(f, r.premises[0]), mix_or_thin(f, r.premises[1]));
      case RuleTag::OrSucL:
        return or_suc_l(f.lambda()->right(), mix_or_thin(f, r.premises[0]));
      case RuleTag::OrSucR:
        return or_suc_r(f.lambda()->left(), mix_or_thin(f, r.premises[0]));
      case RuleTag::ExistsSuc:
        return exists_suc(*f.lambda(), *r.rule.attrs.variable, mix_or_thin(f, r.premises[0]));
      case RuleTag::ForallSuc: {
        Derivation rr = avoid_clash(r, free_in(gamma));
        Derivation p = mix_or_thin(f, rr.premises[0]);
        return forall_suc(*f.lambda(), *rr.rule.attrs.variable, std::move(p));
      }
      case RuleTag::NotSuc: {
        const Formula b = f.lambda()->body();
        Derivation p = weaken(mix_or_thin(f, r.premises[0]), Sequent{cons(b, concat(gamma, pi_star)), std::nullopt});
        return not_suc(std::move(p));
      }
      case RuleTag::ImpSuc: {
        const Formula& b = f.lambda()->left();
        Derivation p = weaken(mix_or_thin(f, r.premises[0]),
                              Sequent{cons(b, concat(gamma, pi_star)), f.lambda()->right()});
        return imp_suc(std::move(p));
      }

      case RuleTag::AndAntL:
      case RuleTag::AndAntR:
      case RuleTag::NotAnt:
      case RuleTag::ForallAnt:
      case RuleTag::ExistsAnt: {
        Derivation rr = r.tag() == RuleTag::ExistsAnt ? avoid_clash(r, free_in(gamma)) : r;
        const Sequent& ps = rr.premises[0].conclusion();
        const auto rest = remove_all(tail(pi), f.a);
        Derivation mixed = mix_or_thin(f, rr.premises[0]);
        std::vector<Formula> front_ctx = concat(gamma, rest);
        if (r.tag() != RuleTag::NotAnt) front_ctx = cons(ps.antecedent[0], front_ctx);
        Derivation p = weaken(std::move(mixed), Sequent{front_ctx, ps.succedent});
        return close_principal(f, reapply(rr, std::move(p)), goal);
      }

      case RuleTag::OrAnt: {
        const auto rest = remove_all(tail(pi), f.a);
        std::vector<Derivation> ps;
        for (const auto& p : r.premises) {
          const Sequent& s = p.conclusion();
          ps.push_back(weaken(mix_or_thin(f, p), Sequent{cons(s.antecedent[0], concat(gamma, rest)), s.succedent}));
        }
        return close_principal(f, or_ant(std::move(ps[0]), std::move(ps[1])), goal);
      }

      case RuleTag::ImpAnt: {
        const Sequent& rs = r.premises[1].conclusion();
        Derivation left = mix_or_thin(f, r.premises[0]);
        const auto rest = remove_all(tail(rs.antecedent), f.a);
        Derivation right = weaken(mix_or_thin(f, r.premises[1]),
                                  Sequent{cons(rs.antecedent[0], concat(gamma, rest)), rs.succedent});
        return close_principal(f, imp_ant(std::move(left), std::move(right)), goal);
      }

      case RuleTag::Neutralization: {
        std::vector<Derivation> ps;
        for (const auto& p : r.premises) {
          const Formula& n = p.conclusion().antecedent[0];
          ps.push_back(weaken(mix_or_thin(f, p), Sequent{cons(n, concat(gamma, pi_star)), f.lambda()}));
        }
        return neutralization(*r.rule.attrs.formula, std::move(ps[0]), std::move(ps[1]));
      }

      default:
        throw std::logic_error("right reduction: unexpected rule " + std::string(tag_name(r.tag())));
    }
  }

  // `d` ends in P, Γ, … ⊢ Λ. When P is the mix formula it is mixed away once
  // more; the new mix has right rank 1.
  Derivation close_principal(const Frame& f, Derivation d, const Sequent& goal) {
    if (d.conclusion().antecedent[0] == f.a) d = sub(f, f.l, d, f.a);
    return weaken(std::move(d), goal);
  }

  Derivation reduce_left(const Frame& f) {
    const Derivation& l = f.l;
    const Sequent goal = f.goal();
    switch (l.tag()) {
      case RuleTag::ThinAnt:
      case RuleTag::Contract:
      case RuleTag::Exchange:
        return weaken(sub(f, l.premises[0], f.r, f.a), goal);
      case RuleTag::AndAntL:
      case RuleTag::AndAntR:
      case RuleTag::ForallAnt:
      case RuleTag::ExistsAnt: {
        Derivation ll = l;
        if (l.tag() == RuleTag::ExistsAnt) {
          auto clash = free_in(f.r.conclusion().antecedent);
          if (f.lambda()) {
            auto v = free_variables(*f.lambda());
            clash.insert(v.begin(), v.end());
          }
          ll = avoid_clash(l, clash);
        }
        return weaken(reapply(ll, sub(f, ll.premises[0], f.r, f.a)), goal);
      }
      case RuleTag::OrAnt:
        return weaken(or_ant(sub(f, l.premises[0], f.r, f.a), sub(f, l.premises[1], f.r, f.a)), goal);
      case RuleTag::ImpAnt:
        return weaken(imp_ant(l.premises[0], sub(f, l.premises[1], f.r, f.a)), goal);
      case RuleTag::Neutralization:
        return weaken(neutralization(*l.rule.attrs.formula, sub(f, l.premises[0], f.r, f.a),
                                     sub(f, l.premises[1], f.r, f.a)),
                      goal);
      default:
        throw std::logic_error("left reduction: unexpected rule " + std::string(tag_name(l.tag())));
    }
  }

  Derivation reduce_grade(const Frame& f) {
    const Derivation& l = f.l;
    const Derivation& r = f.r;
    const Sequent goal = f.goal();
    if (l.tag() == RuleTag::Axiom) return weaken(r, goal);
    if (r.tag() == RuleTag::Axiom) return l;
    if (l.tag() == RuleTag::ThinSuc) return weaken(l.premises[0], goal);
    if (r.tag() == RuleTag::ThinAnt) return weaken(r.premises[0], goal);

    auto pair = [&](RuleTag lt, RuleTag rt) { return l.tag() == lt && r.tag() == rt; };
    const Formula& a = f.a;
    if (pair(RuleTag::AndSuc, RuleTag::AndAntL)) return weaken(sub(f, l.premises[0], r.premises[0], a.left()), goal);
    if (pair(RuleTag::AndSuc, RuleTag::AndAntR)) return weaken(sub(f, l.premises[1], r.premises[0], a.right()), goal);
    if (pair(RuleTag::OrSucL, RuleTag::OrAnt)) return weaken(sub(f, l.premises[0], r.premises[0], a.left()), goal);
    if (pair(RuleTag::OrSucR, RuleTag::OrAnt)) return weaken(sub(f, l.premises[0], r.premises[1], a.right()), goal);
    if (pair(RuleTag::NotSuc, RuleTag::NotAnt)) return weaken(sub(f, r.premises[0], l.premises[0], a.body()), goal);
    if (pair(RuleTag::ImpSuc, RuleTag::ImpAnt)) {
      Derivation inner = sub(f, l.premises[0], r.premises[1], a.right());
      return weaken(sub(f, r.premises[0], inner, a.left()), goal);
    }
    if (pair(RuleTag::ForallSuc, RuleTag::ForallAnt)) {
      Derivation p = regularize(l.premises[0], pool_);
      p = rename_variable(p, *l.rule.attrs.variable, *r.rule.attrs.variable);
      const Formula b = *p.conclusion().succedent;
      return weaken(sub(f, p, r.premises[0], b), goal);
    }
    if (pair(RuleTag::ExistsSuc, RuleTag::ExistsAnt)) {
      Derivation p = regularize(r.premises[0], pool_);
      p = rename_variable(p, *r.rule.attrs.variable, *l.rule.attrs.variable);
      const Formula b = *l.premises[0].conclusion().succedent;
      return weaken(sub(f, l.premises[0], p, b), goal);
    }
    throw std::logic_error("grade reduction: no case for " + std::string(tag_name(l.tag())) + " against " +
                           std::string(tag_name(r.tag())));
  }

  VariablePool pool_;
  EliminationTrace& trace_;
};

}  // namespace

MixMeasure mix_measure(const Derivation& left, const Derivation& right, const Formula& a) {
  return MixMeasure{a.size(), left_rank(left, a), right_rank(right, a)};
}

Derivation eliminate_cuts(const Derivation& d, EliminationTrace* trace) {
  auto report = check(d, CalculusMode::LJ_PLUS);
  if (!report.ok()) throw TransformError("input does not check in LJ+: " + report.failure->message);
  EliminationTrace local;
  EliminationTrace& t = trace ? *trace : local;
  VariablePool pool;
  pool.reserve(d);
  Derivation regular = regularize(d, pool);
  Eliminator e(std::move(pool), t);
  Derivation out = e.eliminate(regular);
  auto after = check(out, CalculusMode::LJ_PLUS);
  if (!after.ok()) throw std::logic_error("cut elimination produced an invalid derivation: " + after.failure->message);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Binder {
  std::string s;
  std::string f;
};

// Index of the innermost binder of `v` on the given side, or -1.
long bound_at(const std::vector<Binder>& stack, const std::string& v, bool target_side) {
  for (long i = static_cast<long>(stack.size()) - 1; i >= 0; --i) {
    if ((target_side ? stack[i].f : stack[i].s) == v) return i;
  }
  return -1;
}

// Does `target` match the subformula `source`, where the variables in
// `open` were bound above `source` and may be instantiated?
bool match(const Formula& target, const Formula& source, const std::set<std::string>& open,
           std::vector<Binder>& stack, std::map<std::string, std::string>& inst) {
  if (target.kind() != source.kind()) return false;
  switch (source.kind()) {
    case Kind::Atom: {
      if (target.symbol() != source.symbol() || target.args().size() != source.args().size()) return false;
      for (std::size_t i = 0; i < source.args().size(); ++i) {
        const std::string& sv = source.args()[i];
        const std::string& tv = target.args()[i];
        long sb = bound_at(stack, sv, false);
        long tb = bound_at(stack, tv, true);
        if (sb >= 0 || tb >= 0) {
          if (sb != tb) return false;
          continue;
        }
        if (open.count(sv)) {
          auto [it, fresh] = inst.emplace(sv, tv);
          if (!fresh && it->second != tv) return false;
        } else if (sv != tv) {
          return false;
        }
      }
      return true;
    }
    case Kind::Top:
    case Kind::Bot: return true;
    case Kind::Forall:
    case Kind::Exists: {
      stack.push_back({source.var(), target.var()});
      bool ok = match(target.body(), source.body(), open, stack, inst);
      stack.pop_back();
      return ok;
    }
    default:
      for (std::size_t i = 0; i < source.child_count(); ++i) {
        if (!match(target.child(i), source.child(i), open, stack, inst)) return false;
      }
      return true;
  }
}

bool occurs_in(const Formula& target, const Formula& source, std::set<std::string>& open) {
  std::vector<Binder> stack;
  std::map<std::string, std::string> inst;
  if (match(target, source, open, stack, inst)) return true;
  if (source.is_quantifier()) {
    bool added = open.insert(source.var()).second;
    bool found = occurs_in(target, source.body(), open);
    if (added) open.erase(source.var());
    return found;
  }
  for (std::size_t i = 0; i < source.child_count(); ++i) {
    if (occurs_in(target, source.child(i), open)) return true;
  }
  return false;
}

}  // namespace

CheckReport predicate_subformula_report(const Derivation& d) {
  if (count_tag(d, RuleTag::Cut) + count_tag(d, RuleTag::Mix) > 0) {
    throw TransformError("predicate subformula check needs a derivation without Cut or Mix");
  }
  CheckReport report;
  report.stats = collect_stats(d);
  const Sequent& end = d.conclusion();
  std::vector<Formula> sources = end.antecedent;
  if (end.succedent) sources.push_back(*end.succedent);

  auto covered = [&](const Formula& f) {
    if (is_propositional(f)) return true;
    for (const auto& s : sources) {
      std::set<std::string> open;
      if (occurs_in(f, s, open)) return true;
    }
    return false;
  };

  for_each_node(d, [&](const std::vector<std::size_t>& path, const Derivation& node) {
    if (report.failure) return;
    std::vector<Formula> fs = node.conclusion().antecedent;
    if (node.conclusion().succedent) fs.push_back(*node.conclusion().succedent);
    for (const auto& f : fs) {
      if (!covered(f)) {
        report.failure = CheckFailure{path, ViolationCode::SubformulaViolation,
                                      "predicate formula " + to_string(f) +
                                          " is not a subformula of the endsequent"};
        return;
      }
    }
  });
  return report;
}

}  // namespace ljplus
