#pragma once

#include <string>
#include <string_view>

#include "ljplus/kripke.hpp"

namespace ljplus {

/// Line-oriented structure format:
///
///   node NAME
///   le NAME NAME
///   dom NAME ELEM...
///   val NAME ATOM...      ATOM is R or P(e1,...,en)
///
/// '#' starts a comment. Nodes named in le/dom/val lines must be declared
/// first; elements are declared by their first appearance in a dom line.
/// The order is closed reflexively and transitively on load. Errors are
/// KripkeError with a line number.
KripkeStructure parse_structure(std::string_view text);

std::string write_structure(const KripkeStructure& s);

KripkeStructure read_structure_file(const std::string& path);

}  // namespace ljplus
