#include "mtclab/classifier.hpp"

#include <algorithm>

#include "mtclab/chain.hpp"
#include "mtclab/errors.hpp"
#include "mtclab/rank17.hpp"

namespace mtclab {

namespace {

using I64 = std::int64_t;

void check_rank(int rank) {
  if (rank < 3 || rank > 99 || rank % 2 == 0)
    throw InputError("rank must be odd with 3 <= rank <= 99, got " + std::to_string(rank));
}

I64 smallest_prime(I64 o) { return prime_divisors(o).front(); }

// Runs the fusion-rule analysis under every open leaf it applies to.
void attach_rank17(CaseNode& node, const SaturateOptions& opts, std::vector<std::string>& witnesses) {
  if (!node.children.empty()) {
    for (auto& c : node.children) attach_rank17(c, opts, witnesses);
    node.status = join_status(node.children);
    return;
  }
  if (node.status != CaseStatus::Open) return;
  Hypothesis h = node.hypothesis;
  h.id += "/fusion";
  G3Analysis a = g3_rank17_analysis(h, opts);
  if (!a.applicable) return;
  witnesses.insert(witnesses.end(), a.open_witnesses.begin(), a.open_witnesses.end());
  node.children.push_back(std::move(a.tree));
  node.status = join_status(node.children);
}

}  // namespace

std::vector<I64> admissible_group_orders(int rank) {
  check_rank(rank);
  std::vector<I64> out{1};
  for (I64 o = 3; o < rank; o += 2)
    if (rank >= o + 2 * smallest_prime(o)) out.push_back(o);
  out.push_back(rank);
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pointed: return "pointed";
    case Verdict::PointedOrPerfect: return "pointed-or-perfect";
    case Verdict::Open: return "open";
  }
  return "?";
}

bool is_fully_supported_rank(int rank) { return rank >= 13 && rank <= 23 && rank % 2 == 1; }

Classification classify(int rank, const SaturateOptions& opts) {
  check_rank(rank);
  Classification out;
  out.rank = rank;
  out.partial = !is_fully_supported_rank(rank);
  out.group_orders = admissible_group_orders(rank);

  CaseNode& root = out.root;
  root.hypothesis = mnsd_modular_hypothesis(rank, std::to_string(rank));
  const std::string& id = root.hypothesis.id;
  int n = 0;
  std::string orders;
  for (auto it = out.group_orders.rbegin(); it != out.group_orders.rend(); ++it)
    orders += (orders.empty() ? "" : ",") + std::to_string(*it);
  root.steps.push_back(make_step(id, ++n, "CASES", "|G| odd, divides dim, ≤ " + std::to_string(rank) +
                                                       "; candidates after pruning: {" + orders + "}"));
  for (I64 o = 3; o < rank; o += 2) {
    if (std::find(out.group_orders.begin(), out.group_orders.end(), o) != out.group_orders.end()) continue;
    const I64 p = smallest_prime(o);
    root.steps.push_back(make_step(
        id, ++n, "R3",
        "|G| = " + std::to_string(o) + ": not pointed, so G(C_ad) ≠ 1 (R11) has an odd prime p ≥ " +
            std::to_string(p) + " and rank_ad ≥ 3; rank ≥ 3 + " + std::to_string(o) + " + 2p − 3 ≥ " +
            std::to_string(o + 2 * p) + " > " + std::to_string(rank)));
  }

  for (auto it = out.group_orders.rbegin(); it != out.group_orders.rend(); ++it) {
    const I64 o = *it;
    Hypothesis h = root.hypothesis;
    h.id = id + "/G=" + std::to_string(o);
    h.g_order = Domain::exactly(o);
    if (o == 1) {
      ChainResult chain = perfect_chain(rank, h.id);
      root.children.push_back(std::move(chain.tree));
      continue;
    }
    CaseNode node = saturate(h, opts);
    if (rank == 17) attach_rank17(node, opts, out.open_witnesses);
    root.children.push_back(std::move(node));
  }
  root.status = join_status(root.children);

  bool nonperfect_closed = true;
  bool perfect_closed = true;
  for (const auto& c : root.children) {
    const bool is_perfect = c.hypothesis.g_order.is_known() && c.hypothesis.g_order.value() == 1;
    const bool closed = c.status == CaseStatus::Refuted || c.status == CaseStatus::Pointed;
    (is_perfect ? perfect_closed : nonperfect_closed) &= closed;
  }
  if (nonperfect_closed && perfect_closed)
    out.verdict = Verdict::Pointed;
  else if (nonperfect_closed)
    out.verdict = Verdict::PointedOrPerfect;
  else
    out.verdict = Verdict::Open;
  collect_trace(root, out.trace);
  return out;
}

}  // namespace mtclab
