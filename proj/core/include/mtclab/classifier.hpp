#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtclab/saturate.hpp"

namespace mtclab {

/// rank, 1, and every odd 1 < o < rank with rank >= o + 2·(smallest prime of o).
/// Pre: rank odd, 3 <= rank <= 99.
[[nodiscard]] std::vector<std::int64_t> admissible_group_orders(int rank);

enum class Verdict { Pointed, PointedOrPerfect, Open };
[[nodiscard]] std::string to_string(Verdict v);

struct Classification {
  int rank = 0;
  Verdict verdict = Verdict::Open;
  bool partial = false;  ///< rank outside 13..23
  std::vector<std::int64_t> group_orders;
  CaseNode root;
  std::vector<ProofStep> trace;
  std::vector<std::string> open_witnesses;
};

[[nodiscard]] bool is_fully_supported_rank(int rank);

/// Case tree over |G(C)| for an MNSD modular category of the given rank.
[[nodiscard]] Classification classify(int rank, const SaturateOptions& opts = {});

}  // namespace mtclab
