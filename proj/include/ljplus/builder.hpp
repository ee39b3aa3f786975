#pragma once

#include <stdexcept>
#include <string>

#include "ljplus/derivation.hpp"

// Smart constructors that compute each conclusion from the premises. They
// throw BuildError when a premise does not have the shape the rule needs;
// the result still goes through the kernel wherever it matters.
namespace ljplus::build {

class BuildError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Derivation axiom(const Formula& a);
Derivation top_axiom();
Derivation bot_axiom();
Derivation lem_axiom(const Formula& a);

Derivation thin_ant(const Formula& a, Derivation d);
Derivation thin_suc(const Formula& a, Derivation d);
Derivation contract(Derivation d);
Derivation exchange(std::size_t pos, Derivation d);

Derivation cut(Derivation left, Derivation right);
Derivation mix(const Formula& a, Derivation left, Derivation right);

Derivation and_suc(Derivation left, Derivation right);
/// From A, Γ ⊢ Λ to A&B, Γ ⊢ Λ.
Derivation and_ant_l(const Formula& b, Derivation d);
/// From B, Γ ⊢ Λ to A&B, Γ ⊢ Λ.
Derivation and_ant_r(const Formula& a, Derivation d);
Derivation or_ant(Derivation left, Derivation right);
/// From Γ ⊢ A to Γ ⊢ A∨B.
Derivation or_suc_l(const Formula& b, Derivation d);
/// From Γ ⊢ B to Γ ⊢ A∨B.
Derivation or_suc_r(const Formula& a, Derivation d);
Derivation not_suc(Derivation d);
Derivation not_ant(Derivation d);
Derivation imp_suc(Derivation d);
Derivation imp_ant(Derivation left, Derivation right);

/// `q` is the quantified formula of the conclusion; `t` the witness or
/// eigenvariable.
Derivation forall_suc(const Formula& q, const std::string& a, Derivation d);
Derivation forall_ant(const Formula& q, const std::string& t, Derivation d);
Derivation exists_suc(const Formula& q, const std::string& t, Derivation d);
Derivation exists_ant(const Formula& q, const std::string& a, Derivation d);

Derivation neutralization(const Formula& n, Derivation pos, Derivation neg);

/// Stacks a structural chain on top of `d`.
Derivation apply_chain(Derivation d, const std::vector<RuleInstance>& chain);

/// Adapts `d` to `goal` by succedent thinning (when the goal has a succedent
/// and d does not), then thinnings, contractions and exchanges.
Derivation weaken(Derivation d, const Sequent& goal);
bool can_weaken(const Sequent& from, const Sequent& goal);

/// Moves the antecedent formula at `from` to position `to` by exchanges.
Derivation move(Derivation d, std::size_t from, std::size_t to);

}  // namespace ljplus::build
