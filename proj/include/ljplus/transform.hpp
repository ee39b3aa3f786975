#pragma once

#include <stdexcept>
#include <string>

#include "ljplus/derivation.hpp"

namespace ljplus {

/// A transformation's precondition does not hold for its input.
class TransformError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The five-node derivation of ⊢ N ∨ ¬N for a propositional symbol N.
Derivation lem_gadget(const Formula& n);

/// Replaces every atomic LemAxiom leaf by lem_gadget.
Derivation lem_to_neutralization(const Derivation& d);

/// ⊢ n ∨ ¬n for propositional n, built by recursion on n. Atoms use the
/// neutralization gadget.
Derivation derive_lem(const Formula& n);

/// Same construction with atomic LemAxiom leaves in place of the gadget.
Derivation derive_lem_atomic(const Formula& n);

/// Replaces each Neutralization on N by a cut of derive_lem_atomic(N) against
/// an OrAnt of the two premises.
Derivation neutralization_to_lem(const Derivation& d);

/// Replaces the propositional symbol `r` by `c` throughout.
Derivation specialize(const Derivation& d, const std::string& r, const Formula& c);

/// From derivations of ⊢ a{r|⊤} and ⊢ a{r|⊥}, a derivation of ⊢ a that ends
/// in a Neutralization on r.
Derivation merge_by_substitution(const Derivation& d_top, const Derivation& d_bot, const Formula& a,
                                 const std::string& r);

/// X, h ⊢ Y where X and Y differ only at leaves where one has the atom r and
/// the other has the constant matching h (⊤ for h = r, ⊥ for h = ¬r).
Derivation replacement_lemma(const Formula& x, const Formula& y, const std::string& r, bool top);

enum class EquivDirection { ImpToDisj, DisjToImp };

/// N ⊃ F ⊢ ¬N ∨ F (one Neutralization) or ¬N ∨ F ⊢ N ⊃ F (plain LJ).
Derivation derive_impl_disj_equiv(const Formula& n, const Formula& f, EquivDirection direction);

/// Every Cut becomes a Mix followed by the structural steps that restore the
/// Cut's conclusion.
Derivation cut_to_mix(const Derivation& d);

/// Gives every ForallSuc/ExistsAnt a fresh eigenvariable, renamed inside
/// the subtree above it.
Derivation regularize(const Derivation& d, VariablePool& pool);

}  // namespace ljplus
