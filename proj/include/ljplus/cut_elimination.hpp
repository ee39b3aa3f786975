#pragma once

#include <cstddef>
#include <string>

#include "ljplus/derivation.hpp"
#include "ljplus/kernel.hpp"

namespace ljplus {

/// Gentzen's termination measure for a single Mix: the size of the mix
/// formula and the left and right ranks of its two premises.
struct MixMeasure {
  std::size_t grade = 0;
  std::size_t left_rank = 0;
  std::size_t right_rank = 0;

  std::size_t rank() const { return left_rank + right_rank; }
  /// Lexicographic on (grade, rank).
  bool operator<(const MixMeasure& other) const;
};

std::string to_string(const MixMeasure& m);

/// The measure of a mix of `left` against `right` on `a`.
MixMeasure mix_measure(const Derivation& left, const Derivation& right, const Formula& a);

/// Bookkeeping from one eliminate_cuts run. Every reduction compares the
/// measure of each mix it spawns against its own; `violations` counts the
/// comparisons that failed to decrease.
struct EliminationTrace {
  std::size_t cuts_removed = 0;
  std::size_t reductions = 0;
  std::size_t comparisons = 0;
  std::size_t violations = 0;
  std::size_t max_depth = 0;
};

/// Returns a derivation of the same endsequent with no Cut and no Mix.
/// Neutralization nodes stay. Throws TransformError when `d` does not check
/// in LJ_PLUS, and std::logic_error if the measure ever fails to decrease.
Derivation eliminate_cuts(const Derivation& d, EliminationTrace* trace = nullptr);

/// Checks that every non-propositional formula of `d` is a subformula of an
/// endsequent formula, allowing bound renaming and instantiation of the
/// variables bound above the subformula. Throws TransformError when `d`
/// contains Cut or Mix.
CheckReport predicate_subformula_report(const Derivation& d);

}  // namespace ljplus
