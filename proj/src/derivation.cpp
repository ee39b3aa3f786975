#include "ljplus/derivation.hpp"

#include <algorithm>
#include <array>

namespace ljplus {

namespace {

struct TagInfo {
  RuleTag tag;
  std::string_view name;
  std::size_t premises;
};

constexpr std::array<TagInfo, kRuleTagCount> kTags{{
    {RuleTag::Axiom, "Axiom", 0},
    {RuleTag::TopAxiom, "TopAxiom", 0},
    {RuleTag::BotAxiom, "BotAxiom", 0},
    {RuleTag::LemAxiom, "LemAxiom", 0},
    {RuleTag::ThinAnt, "ThinAnt", 1},
    {RuleTag::ThinSuc, "ThinSuc", 1},
    {RuleTag::Contract, "Contract", 1},
    {RuleTag::Exchange, "Exchange", 1},
    {RuleTag::Cut, "Cut", 2},
    {RuleTag::Mix, "Mix", 2},
    {RuleTag::AndSuc, "AndSuc", 2},
    {RuleTag::AndAntL, "AndAntL", 1},
    {RuleTag::AndAntR, "AndAntR", 1},
    {RuleTag::OrAnt, "OrAnt", 2},
    {RuleTag::OrSucL, "OrSucL", 1},
    {RuleTag::OrSucR, "OrSucR", 1},
    {RuleTag::NotSuc, "NotSuc", 1},
    {RuleTag::NotAnt, "NotAnt", 1},
    {RuleTag::ImpSuc, "ImpSuc", 1},
    {RuleTag::ImpAnt, "ImpAnt", 2},
    {RuleTag::ForallSuc, "ForallSuc", 1},
    {RuleTag::ForallAnt, "ForallAnt", 1},
    {RuleTag::ExistsSuc, "ExistsSuc", 1},
    {RuleTag::ExistsAnt, "ExistsAnt", 1},
    {RuleTag::Neutralization, "Neutralization", 2},
}};

const TagInfo& info(RuleTag tag) { return kTags[static_cast<std::size_t>(tag)]; }

}  // namespace

std::string_view tag_name(RuleTag tag) { return info(tag).name; }

std::optional<RuleTag> tag_from_name(std::string_view name) {
  for (const auto& t : kTags) {
    if (t.name == name) return t.tag;
  }
  return std::nullopt;
}

std::size_t premise_count(RuleTag tag) { return info(tag).premises; }

bool has_eigenvariable(RuleTag tag) {
  return tag == RuleTag::ForallSuc || tag == RuleTag::ExistsAnt;
}

bool has_witness(RuleTag tag) { return tag == RuleTag::ForallAnt || tag == RuleTag::ExistsSuc; }

bool is_quantifier_rule(RuleTag tag) { return has_eigenvariable(tag) || has_witness(tag); }

Sequent endsequent(const Derivation& d) { return d.conclusion(); }

std::size_t height(const Derivation& d) {
  std::size_t h = 0;
  for (const auto& p : d.premises) h = std::max(h, height(p));
  return h + 1;
}

std::size_t node_count(const Derivation& d) {
  std::size_t n = 1;
  for (const auto& p : d.premises) n += node_count(p);
  return n;
}

std::size_t count_tag(const Derivation& d, RuleTag tag) {
  std::size_t n = d.tag() == tag ? 1 : 0;
  for (const auto& p : d.premises) n += count_tag(p, tag);
  return n;
}

namespace {

void visit(const Derivation& d, std::vector<std::size_t>& path,
           const std::function<void(const std::vector<std::size_t>&, const Derivation&)>& fn) {
  fn(path, d);
  for (std::size_t i = 0; i < d.premises.size(); ++i) {
    path.push_back(i);
    visit(d.premises[i], path, fn);
    path.pop_back();
  }
}

}  // namespace

void for_each_node(
    const Derivation& d,
    const std::function<void(const std::vector<std::size_t>&, const Derivation&)>& fn) {
  std::vector<std::size_t> path;
  visit(d, path, fn);
}

std::set<std::string> all_variables(const Derivation& d) {
  std::set<std::string> out;
  for_each_node(d, [&](const std::vector<std::size_t>&, const Derivation& n) {
    auto add = [&](const Formula& f) {
      auto v = ljplus::all_variables(f);
      out.insert(v.begin(), v.end());
    };
    for (const auto& f : n.conclusion().antecedent) add(f);
    if (n.conclusion().succedent) add(*n.conclusion().succedent);
    if (n.rule.attrs.formula) add(*n.rule.attrs.formula);
    if (n.rule.attrs.variable) out.insert(*n.rule.attrs.variable);
    if (n.rule.attrs.bound) out.insert(*n.rule.attrs.bound);
  });
  return out;
}

std::optional<Formula> principal_quantifier(const RuleInstance& rule) {
  const Sequent& c = rule.conclusion;
  switch (rule.tag) {
    case RuleTag::ForallSuc:
    case RuleTag::ExistsSuc:
      if (c.succedent) return c.succedent;
      return std::nullopt;
    case RuleTag::ForallAnt:
    case RuleTag::ExistsAnt:
      if (!c.antecedent.empty()) return c.antecedent.front();
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

Derivation map_formulas(const Derivation& d, const std::function<Formula(const Formula&)>& fn) {
  Derivation out;
  out.rule.tag = d.rule.tag;
  out.rule.attrs = d.rule.attrs;
  for (const auto& f : d.conclusion().antecedent) out.rule.conclusion.antecedent.push_back(fn(f));
  if (d.conclusion().succedent) out.rule.conclusion.succedent = fn(*d.conclusion().succedent);
  if (d.rule.attrs.formula) out.rule.attrs.formula = fn(*d.rule.attrs.formula);
  if (is_quantifier_rule(d.tag())) {
    auto q = principal_quantifier(out.rule);
    if (q && q->is_quantifier()) out.rule.attrs.bound = q->var();
  }
  out.premises.reserve(d.premises.size());
  for (const auto& p : d.premises) out.premises.push_back(map_formulas(p, fn));
  return out;
}

Derivation rename_variable(const Derivation& d, const std::string& from, const std::string& to) {
  Derivation out = map_formulas(d, [&](const Formula& f) { return substitute(f, from, to); });
  std::function<void(Derivation&)> fix = [&](Derivation& n) {
    if (n.rule.attrs.variable && *n.rule.attrs.variable == from) n.rule.attrs.variable = to;
    for (auto& p : n.premises) fix(p);
  };
  fix(out);
  return out;
}

void VariablePool::reserve(const Derivation& d) { reserve(all_variables(d)); }

std::string VariablePool::fresh(const std::string& base) {
  std::string name = fresh_variable(base, used_);
  used_.insert(name);
  return name;
}

}  // namespace ljplus
