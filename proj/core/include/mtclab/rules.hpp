#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mtclab/hypothesis.hpp"

namespace mtclab {

struct Rule {
  std::string id;
  std::string anchor;
  bool imported = false;    ///< result taken from outside the mechanized argument
  bool saturating = false;  ///< part of the saturation loop (catalog order)
  std::string summary;
};

/// Every registered rule; saturating rules appear in application order.
[[nodiscard]] const std::vector<Rule>& rule_catalog();
/// InputError for an unknown id.
[[nodiscard]] const Rule& find_rule(std::string_view id);
[[nodiscard]] bool is_registered_anchor(std::string_view anchor);

enum class OutcomeKind { Facts, Refutation, NotApplicable };

struct RuleOutcome {
  OutcomeKind kind = OutcomeKind::NotApplicable;
  Hypothesis refined;  ///< equal to the input unless kind == Facts
  std::string delta;   ///< what changed, or why h is refuted
};

/// Sound refinement of h by one rule. Facts never widen a domain. Throws
/// InputError for an unknown rule id or a rule that is not saturating.
[[nodiscard]] RuleOutcome apply_rule(const Hypothesis& h, std::string_view rule_id);

/// Multisets of k values, each >= 1 and congruent to r mod 8, summing to s;
/// each returned nonincreasing.
[[nodiscard]] std::vector<std::vector<int>> congruent_partitions(int k, int s, int r);

}  // namespace mtclab
