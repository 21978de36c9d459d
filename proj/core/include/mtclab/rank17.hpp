#pragma once

#include <string>
#include <vector>

#include "mtclab/saturate.hpp"

namespace mtclab {

struct G3Analysis {
  bool applicable = false;
  CaseNode tree;                           ///< root refines the input hypothesis
  std::vector<std::string> open_witnesses;  ///< dimension data surviving every check
};

/// Fusion-rule analysis of the case rank 17, MNSD, |G| = 3, rank_ad = 11,
/// C_pt inside C_ad. Not applicable to any other hypothesis.
[[nodiscard]] G3Analysis g3_rank17_analysis(const Hypothesis& h, const SaturateOptions& opts = {});

}  // namespace mtclab
