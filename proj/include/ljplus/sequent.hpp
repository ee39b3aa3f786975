#pragma once

#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "ljplus/formula.hpp"

namespace ljplus {

/// Γ ⊢ Λ with an ordered antecedent and at most one succedent formula.
struct Sequent {
  std::vector<Formula> antecedent;
  std::optional<Formula> succedent;

  bool operator==(const Sequent& other) const;
  bool operator!=(const Sequent& other) const { return !(*this == other); }
};

std::set<std::string> free_variables(const Sequent& s);
std::string to_string(const Sequent& s);
std::ostream& operator<<(std::ostream& os, const Sequent& s);

/// Position of the first formula in `formulas` equal (up to bound renaming) to
/// `f`, or npos.
std::size_t find_formula(const std::vector<Formula>& formulas, const Formula& f);
bool contains_formula(const std::vector<Formula>& formulas, const Formula& f);
/// `formulas` with every occurrence of `f` removed, order preserved.
std::vector<Formula> remove_all(const std::vector<Formula>& formulas, const Formula& f);

}  // namespace ljplus
