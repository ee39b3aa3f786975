#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ljplus/formula.hpp"
#include "ljplus/sequent.hpp"

namespace ljplus {

/// Syntax error with a 1-based line and column inside the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

class ArityError : public std::runtime_error {
 public:
  ArityError(const std::string& symbol, std::size_t expected, std::size_t found);
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

/// Symbol arities fixed by first use. Arity 0 marks a propositional symbol.
class Signature {
 public:
  /// Records the arity of `name`, throwing ArityError on a conflicting use.
  void declare(const std::string& name, std::size_t arity);
  void declare_all(const Formula& f);
  std::optional<std::size_t> arity(const std::string& name) const;
  const std::map<std::string, std::size_t>& symbols() const { return arities_; }

 private:
  std::map<std::string, std::size_t> arities_;
};

Formula parse_formula(std::string_view text);
Formula parse_formula(std::string_view text, Signature& signature);
Sequent parse_sequent(std::string_view text);
Sequent parse_sequent(std::string_view text, Signature& signature);

/// Same as to_string; the output parses back to an alpha-identical AST.
std::string render_formula(const Formula& f);

bool is_identifier(std::string_view s);
bool is_variable(std::string_view s);

}  // namespace ljplus
