#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtclab/hypothesis.hpp"

namespace mtclab {

struct ProofStep {
  std::string id;      ///< "<hypothesis id>#<n>"
  std::string parent;  ///< hypothesis id the step refines
  std::string rule_id;
  std::string delta;
  std::string anchor;
  bool imported = false;

  bool operator==(const ProofStep&) const = default;
};

/// Builds a step whose anchor and provenance come from the rule catalog.
[[nodiscard]] ProofStep make_step(const std::string& hyp_id, int n, const std::string& rule_id, std::string delta);

/// step_id TAB parent TAB rule_id TAB delta TAB anchor; imported anchors are prefixed "[imported] ".
[[nodiscard]] std::string format_step(const ProofStep& s);
[[nodiscard]] std::string format_trace(const std::vector<ProofStep>& steps);

enum class CaseStatus { Refuted, Pointed, PerfectOpen, Open, Inconclusive };
[[nodiscard]] std::string to_string(CaseStatus s);

struct CaseNode {
  Hypothesis hypothesis;  ///< state after saturation
  std::vector<CaseNode> children;
  CaseStatus status = CaseStatus::Open;
  std::optional<ProofStep> closing_step;
  std::vector<ProofStep> steps;  ///< steps recorded at this node, children excluded
};

/// Status of a node with children: refuted iff every child is refuted.
[[nodiscard]] CaseStatus join_status(const std::vector<CaseNode>& children);
/// Depth-first trace: a node's own steps, then each child's in order.
void collect_trace(const CaseNode& node, std::vector<ProofStep>& out);
[[nodiscard]] std::size_t count_nodes(const CaseNode& node);

/// Default 10^6, overridden by MTCLAB_STEP_BUDGET.
[[nodiscard]] std::uint64_t default_step_budget();

struct SaturateOptions {
  std::uint64_t budget = default_step_budget();
};

/// Applies the saturating rules in catalog order to a fixpoint, restarting
/// after every change, then splits the first open finite candidate set
/// (|G|, |G_ad|, rank_ad, component ranks) smallest value first.
[[nodiscard]] CaseNode saturate(const Hypothesis& h, const SaturateOptions& opts = {});

}  // namespace mtclab
