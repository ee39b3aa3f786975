#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ljplus/formula.hpp"
#include "ljplus/sequent.hpp"

namespace ljplus {

enum class RuleTag : std::uint8_t {
  Axiom,
  TopAxiom,
  BotAxiom,
  LemAxiom,
  ThinAnt,
  ThinSuc,
  Contract,
  Exchange,
  Cut,
  Mix,
  AndSuc,
  AndAntL,
  AndAntR,
  OrAnt,
  OrSucL,
  OrSucR,
  NotSuc,
  NotAnt,
  ImpSuc,
  ImpAnt,
  ForallSuc,
  ForallAnt,
  ExistsSuc,
  ExistsAnt,
  Neutralization
};

inline constexpr std::size_t kRuleTagCount = 25;

std::string_view tag_name(RuleTag tag);
std::optional<RuleTag> tag_from_name(std::string_view name);
/// Number of upper sequents the rule takes.
std::size_t premise_count(RuleTag tag);
bool has_eigenvariable(RuleTag tag);
bool has_witness(RuleTag tag);
bool is_quantifier_rule(RuleTag tag);

/// Tag-specific data. Which fields are present is fixed by the tag:
/// Exchange and ImpAnt use `index` (:pos, :split); quantifier rules use
/// `variable` (:eigen or :witness) and `bound`; Cut, Mix, Neutralization and
/// LemAxiom use `formula` (:formula, :n, :a).
struct RuleAttributes {
  std::optional<std::size_t> index;
  std::optional<std::string> variable;
  std::optional<std::string> bound;
  std::optional<Formula> formula;
};

struct RuleInstance {
  RuleTag tag;
  Sequent conclusion;
  RuleAttributes attrs;
};

struct Derivation {
  RuleInstance rule;
  std::vector<Derivation> premises;

  const Sequent& conclusion() const { return rule.conclusion; }
  RuleTag tag() const { return rule.tag; }
};

Sequent endsequent(const Derivation& d);

std::size_t height(const Derivation& d);
std::size_t node_count(const Derivation& d);
std::size_t count_tag(const Derivation& d, RuleTag tag);

/// Visits every node in depth-first premise order with its path from the root.
void for_each_node(const Derivation& d,
                   const std::function<void(const std::vector<std::size_t>&, const Derivation&)>& fn);

/// All variable names occurring anywhere in the derivation, including rule
/// attributes and bound variables.
std::set<std::string> all_variables(const Derivation& d);

/// Applies `fn` to every formula in every conclusion and formula attribute.
/// The :bound attribute of quantifier rules is re-read from the principal
/// formula afterwards.
Derivation map_formulas(const Derivation& d, const std::function<Formula(const Formula&)>& fn);

/// Renames the free variable `from` to `to` everywhere, including :eigen and
/// :witness attributes. Valid on a checking derivation when `to` does not
/// occur in it.
Derivation rename_variable(const Derivation& d, const std::string& from, const std::string& to);

/// The formula a quantifier rule introduces, read from its conclusion.
std::optional<Formula> principal_quantifier(const RuleInstance& rule);

/// Source of variable names that have never been used in a given scope.
class VariablePool {
 public:
  VariablePool() = default;
  explicit VariablePool(std::set<std::string> used) : used_(std::move(used)) {}
  void reserve(const std::set<std::string>& names) { used_.insert(names.begin(), names.end()); }
  void reserve(const Derivation& d);
  std::string fresh(const std::string& base = "v");

 private:
  std::set<std::string> used_;
};

}  // namespace ljplus
