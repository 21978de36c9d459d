#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtclab/saturate.hpp"

namespace mtclab {

/// Perfect MNSD case: dim = 1 + 2(d_1^2 + ... + d_m^2) with odd d_1 >= ... >= d_m >= 3.
/// Stage j: c_j d_j^2 = 1 + 2(d_{j+1}^2 + ... + d_m^2), and d_j = t_j d_{j+1}.
struct ChainBranch {
  std::int64_t l = 0;
  std::vector<std::int64_t> ratios;  ///< t_1, ..., t_j chosen so far
  std::int64_t c = 0;                ///< current cofactor c_{j+1}
  int stage = 0;                     ///< j + 1, index of the leading symbol d_{stage}
  std::string reason;
};

struct ChainResult {
  bool refuted = false;
  std::vector<std::int64_t> l_candidates;
  std::vector<ChainBranch> open;
  CaseNode tree;  ///< root carries the hypothesis id passed in
};

/// Pre: rank odd >= 3. A branch is refuted only through exact arithmetic;
/// anything relying on an unestablished ratio integrality is left open.
[[nodiscard]] ChainResult perfect_chain(int rank, const std::string& hyp_id = "");

/// Every nonincreasing tuple of odd d in [3, bound] with d_i^2 | 1 + 2 sum d_j^2.
[[nodiscard]] std::vector<std::vector<std::int64_t>> brute_force_dims(int rank, int bound);

}  // namespace mtclab
