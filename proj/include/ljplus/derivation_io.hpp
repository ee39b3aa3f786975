#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ljplus/derivation.hpp"
#include "ljplus/kernel.hpp"
#include "ljplus/syntax.hpp"

namespace ljplus {

/// Reads one derivation in the S-expression format. Errors are ParseError
/// with the line and column of the offending token; formula errors inside a
/// string are reported at the string's opening quote.
Derivation parse_derivation(std::string_view text);
Derivation parse_derivation(std::string_view text, Signature& signature);

std::string write_derivation(const Derivation& d);

/// The mode named by a "; mode: NAME" comment line, if present.
std::optional<CalculusMode> mode_directive(std::string_view text);

Derivation read_derivation_file(const std::string& path);
void write_derivation_file(const std::string& path, const Derivation& d,
                           std::optional<CalculusMode> mode = std::nullopt,
                           const std::string& comment = {});

std::string read_text_file(const std::string& path);

}  // namespace ljplus
