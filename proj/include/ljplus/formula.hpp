#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace ljplus {

enum class Kind : std::uint8_t { Atom, Top, Bot, Not, And, Or, Implies, Forall, Exists };

/// Immutable first-order formula over variable-only terms.
///
/// Copies share structure. operator== is equality up to renaming of bound
/// variables; use identical() for exact syntactic comparison.
class Formula {
 public:
  static Formula atom(std::string symbol, std::vector<std::string> args = {});
  static Formula top();
  static Formula bot();
  static Formula negation(Formula child);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  static Formula binary(Kind kind, Formula left, Formula right);
  static Formula quantifier(Kind kind, std::string var, Formula body);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }
  bool is_binary() const;
  bool is_quantifier() const;
  bool is_constant() const { return is(Kind::Top) || is(Kind::Bot); }

  /// Predicate or propositional symbol of an atom.
  const std::string& symbol() const;
  const std::vector<std::string>& args() const;
  /// Bound variable of a quantifier.
  const std::string& var() const;

  std::size_t child_count() const;
  const Formula& child(std::size_t i) const;
  const Formula& left() const { return child(0); }
  const Formula& right() const { return child(1); }
  const Formula& body() const { return child(0); }

  /// Number of AST nodes.
  std::size_t size() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  friend bool identical(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Node node);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  std::string name;  // atom symbol or bound variable
  std::vector<std::string> args;
  std::vector<Formula> children;
  std::size_t size = 1;
};

bool identical(const Formula& a, const Formula& b);
bool alpha_equivalent(const Formula& a, const Formula& b);

std::set<std::string> free_variables(const Formula& f);
/// Free and bound variable names.
std::set<std::string> all_variables(const Formula& f);
bool occurs_free(const Formula& f, const std::string& var);

/// Capture-avoiding replacement of free occurrences of `var` by `replacement`.
/// Binders that would capture the replacement are renamed.
Formula substitute(const Formula& f, const std::string& var, const std::string& replacement);

/// Replaces every free occurrence of `var` by `replacement`, failing instead of
/// renaming when some occurrence would be captured.
bool substitute_strict(const Formula& f, const std::string& var, const std::string& replacement,
                       Formula& out);

/// A variable name derived from `base` that is not in `avoid`.
std::string fresh_variable(const std::string& base, const std::set<std::string>& avoid);

std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace ljplus
