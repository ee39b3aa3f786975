#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ljplus/derivation.hpp"

namespace ljplus {

enum class CalculusMode : std::uint8_t { LJ, LJ_PLUS, LJ_ATOMIC_LEM, LK_LEM };

std::string_view mode_name(CalculusMode mode);
/// Accepts "lj", "lj+", "lj-atomic-lem" and "lk" (also "lk-lem").
std::optional<CalculusMode> mode_from_name(std::string_view name);

enum class ViolationCode : std::uint8_t {
  ArityMismatch,
  ShapeMismatch,
  EigenvariableViolation,
  ModeViolation,
  AttributeMismatch,
  SubformulaViolation,
};

std::string_view code_name(ViolationCode code);

struct CheckFailure {
  std::vector<std::size_t> path;  // premise indices from the root
  ViolationCode code;
  std::string message;
};

struct CheckStats {
  std::array<std::size_t, kRuleTagCount> rule_counts{};
  std::size_t cuts = 0;
  std::size_t mixes = 0;
  std::size_t neutralizations = 0;
  std::size_t height = 0;
  std::size_t size = 0;
};

struct CheckReport {
  std::optional<CheckFailure> failure;
  CheckStats stats;

  bool ok() const { return !failure; }
};

CheckStats collect_stats(const Derivation& d);

/// Checks a single inference: `premises` are the conclusions of the upper
/// sequents in order.
CheckReport check_rule(const RuleInstance& instance, const std::vector<Sequent>& premises,
                       CalculusMode mode);

/// Checks every node; the failure, if any, is the first in depth-first
/// preorder.
CheckReport check(const Derivation& d, CalculusMode mode);

/// Chain of ThinAnt, Contract and Exchange instances leading from one of
/// `from` to `goal`, listed top-down. The first instance's premise is the
/// first reachable member of `from`. An empty chain means the goal already
/// equals that premise.
std::optional<std::vector<RuleInstance>> elaborate_structural(const Sequent& goal,
                                                             const std::vector<Sequent>& from);

std::string format_report(const CheckReport& report);

}  // namespace ljplus
