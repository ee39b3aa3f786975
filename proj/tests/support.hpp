#pragma once

// Helpers shared by the unit tests and the acceptance runner: random formula
// generation and a truth-table oracle that does not go through the library's
// evaluator.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ljplus/formula.hpp"

namespace testsupport {

using ljplus::Formula;
using ljplus::Kind;

struct FormulaShape {
  std::vector<std::string> props;
  std::vector<std::string> unary;  // unary predicate symbols
  std::vector<std::string> vars{"x", "y"};
  bool constants = true;
  bool quantifiers = false;
  std::size_t max_size = 9;
};

inline std::size_t pick(std::mt19937& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/// Random formula with at most `budget` AST nodes. Atoms are chosen from the
/// shape; with quantifiers enabled, unary predicates take variables.
inline Formula random_formula(std::mt19937& rng, const FormulaShape& s, std::size_t budget) {
  auto leaf = [&]() {
    std::size_t options = s.props.size() + s.unary.size() + (s.constants ? 2 : 0);
    std::size_t i = pick(rng, options);
    if (i < s.props.size()) return Formula::atom(s.props[i]);
    i -= s.props.size();
    if (i < s.unary.size()) return Formula::atom(s.unary[i], {s.vars[pick(rng, s.vars.size())]});
    return i == s.unary.size() ? Formula::top() : Formula::bot();
  };
  if (budget <= 1 || pick(rng, 5) == 0) return leaf();
  std::size_t choice = pick(rng, s.quantifiers ? 6 : 4);
  if (choice == 0) return Formula::negation(random_formula(rng, s, budget - 1));
  if (choice >= 4) {
    const std::string& v = s.vars[pick(rng, s.vars.size())];
    Formula body = random_formula(rng, s, budget - 1);
    return choice == 4 ? Formula::forall(v, body) : Formula::exists(v, body);
  }
  std::size_t left = 1 + pick(rng, budget - 2);
  if (left > budget - 2) left = budget - 2;
  Formula l = random_formula(rng, s, left);
  Formula r = random_formula(rng, s, budget - 1 - l.size());
  static const Kind kinds[] = {Kind::And, Kind::Or, Kind::Implies};
  return Formula::binary(kinds[choice - 1], l, r);
}

/// Closes `f` by binding each free variable with a random quantifier.
inline Formula close_formula(std::mt19937& rng, Formula f) {
  for (const auto& v : ljplus::free_variables(f)) {
    f = pick(rng, 2) ? Formula::forall(v, f) : Formula::exists(v, f);
  }
  return f;
}

/// Truth table of a propositional formula over `symbols` (at most 6), one bit
/// per valuation: bit i is the value when symbol j is true iff bit j of i is set.
inline std::uint64_t truth_table(const Formula& f, const std::vector<std::string>& symbols) {
  if (symbols.size() > 6) throw std::invalid_argument("truth_table: at most 6 symbols");
  const unsigned rows = 1u << symbols.size();
  const std::uint64_t all = rows == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1;
  switch (f.kind()) {
    case Kind::Top: return all;
    case Kind::Bot: return 0;
    case Kind::Atom: {
      if (!f.args().empty()) throw std::invalid_argument("truth_table: predicate atom");
      for (std::size_t j = 0; j < symbols.size(); ++j) {
        if (symbols[j] != f.symbol()) continue;
        std::uint64_t column = 0;
        for (unsigned i = 0; i < rows; ++i) {
          if (i >> j & 1) column |= std::uint64_t{1} << i;
        }
        return column;
      }
      throw std::invalid_argument("truth_table: unknown symbol " + f.symbol());
    }
    case Kind::Not: return ~truth_table(f.body(), symbols) & all;
    case Kind::And: return truth_table(f.left(), symbols) & truth_table(f.right(), symbols);
    case Kind::Or: return truth_table(f.left(), symbols) | truth_table(f.right(), symbols);
    case Kind::Implies: return (~truth_table(f.left(), symbols) | truth_table(f.right(), symbols)) & all;
    case Kind::Forall:
    case Kind::Exists: return truth_table(f.body(), symbols);
  }
  return 0;
}

inline bool oracle_tautology(const Formula& f, const std::vector<std::string>& symbols) {
  const unsigned rows = 1u << symbols.size();
  const std::uint64_t all = rows == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << rows) - 1;
  return truth_table(f, symbols) == all;
}

/// Every formula over `leaves` built with ¬, &, ∨, ⊃ with exactly `size` AST nodes.
inline std::vector<std::vector<Formula>> formulas_by_size(const std::vector<Formula>& leaves, std::size_t max_size) {
  std::vector<std::vector<Formula>> by(max_size + 1);
  if (max_size >= 1) by[1] = leaves;
  for (std::size_t n = 2; n <= max_size; ++n) {
    for (const auto& b : by[n - 1]) by[n].push_back(Formula::negation(b));
    for (std::size_t l = 1; l + 1 < n; ++l) {
      for (const auto& a : by[l]) {
        for (const auto& b : by[n - 1 - l]) {
          for (Kind k : {Kind::And, Kind::Or, Kind::Implies}) by[n].push_back(Formula::binary(k, a, b));
        }
      }
    }
  }
  return by;
}

}  // namespace testsupport
