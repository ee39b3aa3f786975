#pragma once

#include <string>
#include <vector>

#include "ljplus/derivation.hpp"

namespace ljplus {

struct Extraction {
  Derivation derivation;
  /// The instances A(t1), …, A(tn) in the order they appear in the
  /// disjunction.
  std::vector<Formula> instances;
  std::vector<std::string> witnesses;
};

/// Turns a cut-free derivation of ⊢ ∃x A(x) into one of
/// A(t1) ∨ … ∨ A(tn) (left-associated; just A(t1) when n = 1).
///
/// The lower part of the derivation, where every antecedent formula is
/// propositional and the succedent is the existential, is kept. Its upper
/// frontier is made of ExistsSuc and ThinSuc inferences; each ExistsSuc
/// becomes a chain of OrSuc steps and each ThinSuc thins the disjunction
/// instead. Witnesses are collected depth-first, visiting premises from
/// right to left, and duplicates are kept.
Extraction extract_disjuncts(const Derivation& d);

}  // namespace ljplus
