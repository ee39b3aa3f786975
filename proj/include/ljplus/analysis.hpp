#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ljplus/formula.hpp"
#include "ljplus/sequent.hpp"

namespace ljplus {

/// Child selectors from a formula root: 0 for the only or left child, 1 for
/// the right child.
using OccurrencePath = std::vector<std::uint8_t>;

enum class Polarity : std::uint8_t { Positive, Negative };

enum class FormulaClass : std::uint8_t { Propositional, PurelyPredicate, Mixed, ConstantOnly };

class InvalidPath : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

const Formula& subformula_at(const Formula& f, const OccurrencePath& path);
Formula replace_at(const Formula& f, const OccurrencePath& path, const Formula& replacement);
bool is_valid_path(const Formula& f, const OccurrencePath& path);

/// Polarity of every subformula occurrence, keyed by path. The root is
/// positive; ¬ and the antecedent of ⊃ flip.
std::map<OccurrencePath, Polarity> occurrence_polarities(const Formula& f);

/// Each propositional symbol occurs with a single polarity. Predicate atoms
/// are not constrained.
bool is_unipolar(const Formula& f);

/// Every connective strictly above `path` is & or ∨.
bool is_strictly_positive(const Formula& f, const OccurrencePath& path);

FormulaClass classify(const Formula& f);
/// Propositional or constant-only.
bool is_propositional(const Formula& f);
const char* to_string(FormulaClass c);

/// Symbols with their arities, in name order.
std::map<std::string, std::size_t> symbols(const Formula& f);
std::map<std::string, std::size_t> symbols(const Sequent& s);

/// A{R|F}: every atom of the propositional symbol `symbol` replaced by
/// `replacement`.
Formula subst_prop(const Formula& a, const std::string& symbol, const Formula& replacement);

/// Paths of all atom occurrences of `symbol` in `f`.
std::vector<OccurrencePath> atom_paths(const Formula& f, const std::string& symbol);

/// f_x arises from f_a by replacing every free occurrence of `a` by `x`
/// without capture, up to renaming of bound variables.
bool generalizes(const Formula& f_a, const std::string& a, const std::string& x,
                 const Formula& f_x);

/// Enumerates all subformula occurrences in preorder.
void for_each_occurrence(const Formula& f,
                         const std::function<void(const OccurrencePath&, const Formula&)>& fn);

}  // namespace ljplus
