#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "ljplus/derivation.hpp"

namespace ljplus {

class DecisionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Valuation = std::map<std::string, bool>;

/// Two-valued evaluation. Throws DecisionError on predicate symbols or a
/// symbol missing from `v`.
bool eval_prop(const Formula& f, const Valuation& v);

/// ⊢ c when c evaluates to true, c ⊢ when it evaluates to false. Plain LJ.
Derivation derive_constant(const Formula& c);

/// A derivation of ⊢ f for a classical tautology f: the first symbol in
/// name order is replaced by ⊤ and by ⊥, both cases are proved recursively,
/// and the two proofs are merged with a Neutralization on that symbol.
Derivation synthesize_proof(const Formula& f);

struct Derivable {
  Derivation witness;
};
struct NotDerivable {
  Valuation falsifying;
};
using Decision = std::variant<Derivable, NotDerivable>;

inline constexpr std::size_t kDefaultSymbolLimit = 20;

/// Truth-table decision. The falsifying valuation is the first in binary
/// counting order over the symbols sorted by name (false before true).
Decision decide_prop(const Formula& f, std::size_t symbol_limit = kDefaultSymbolLimit);

/// The first falsifying valuation, or nothing for a tautology.
std::optional<Valuation> falsify(const Formula& f, std::size_t symbol_limit = kDefaultSymbolLimit);

}  // namespace ljplus
