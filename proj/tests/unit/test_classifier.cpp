#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mtclab/classifier.hpp"
#include "mtclab/errors.hpp"
#include "mtclab/rules.hpp"

using namespace mtclab;

namespace {

std::string golden(int rank) {
  std::ifstream in(std::string(MTCLAB_GOLDEN_DIR) + "/rank" + std::to_string(rank) + ".trace");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_leaves(const CaseNode& n) {
  if (n.children.empty()) {
    if (n.status == CaseStatus::Refuted || n.status == CaseStatus::Pointed) {
      REQUIRE(n.closing_step.has_value());
      CHECK(is_registered_anchor(n.closing_step->anchor));
    }
    return;
  }
  CHECK(n.status == join_status(n.children));
  for (const auto& c : n.children) check_leaves(c);
}

const CaseNode* child(const CaseNode& n, const std::string& id) {
  for (const auto& c : n.children)
    if (c.hypothesis.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("admissible group orders") {
  const auto o13 = admissible_group_orders(13);
  CHECK(o13 == std::vector<std::int64_t>{1, 3, 13});
  const auto o15 = admissible_group_orders(15);
  for (std::int64_t o : {1, 3, 5, 9, 15}) CHECK(std::count(o15.begin(), o15.end(), o) == 1);
  CHECK(admissible_group_orders(3) == std::vector<std::int64_t>{1, 3});
  // Direct rule: o = 1, o = rank, or rank >= o + 2·minprime(o), o odd.
  for (int rank = 3; rank <= 99; rank += 2) {
    std::vector<std::int64_t> expect;
    for (std::int64_t o = 1; o <= rank; o += 2) {
      std::int64_t p = 3;
      while (o > 1 && o % p != 0) p += 2;
      if (o == 1 || o == rank || rank >= o + 2 * p) expect.push_back(o);
    }
    auto got = admissible_group_orders(rank);
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
}

TEST_CASE("verdicts") {
  CHECK(classify(13).verdict == Verdict::Pointed);
  CHECK(classify(15).verdict == Verdict::Pointed);
  for (int r : {19, 21, 23}) CHECK(classify(r).verdict == Verdict::PointedOrPerfect);
  CHECK_THROWS_AS((void)classify(14), InputError);
  CHECK_THROWS_AS((void)classify(1), InputError);
  CHECK_THROWS_AS((void)classify(101), InputError);
  CHECK(classify(11).partial);
  CHECK_FALSE(classify(13).partial);
}

TEST_CASE("rank 17 stays open on the |G| = 3 fusion branch") {
  const auto c = classify(17);
  CHECK(c.verdict == Verdict::Open);
  REQUIRE_FALSE(c.open_witnesses.empty());
  CHECK(std::any_of(c.open_witnesses.begin(), c.open_witnesses.end(),
                    [](const std::string& w) { return w.find("dim = 225") != std::string::npos; }));
}

TEST_CASE("rank 21 closes |G| = 3 with rank_ad = 7 by R10") {
  const auto c = classify(21);
  const auto* g3 = child(c.root, "21/G=3");
  REQUIRE(g3 != nullptr);
  CHECK(g3->status == CaseStatus::Refuted);
  bool r10 = false;
  for (const auto& s : c.trace)
    if (s.rule_id == "R10" && s.parent == "21/G=3" && s.delta.find("(7,7,7): 3 ∤ 7") != std::string::npos) r10 = true;
  CHECK(g3->hypothesis.rank_ad == Domain::exactly(7));
  CHECK(r10);
}

TEST_CASE("every closed leaf carries a registered anchor") {
  for (int r = 13; r <= 23; r += 2) {
    CAPTURE(r);
    const auto c = classify(r);
    check_leaves(c.root);
    CHECK(count_nodes(c.root) < 10000);
    for (const auto& s : c.trace) CHECK(is_registered_anchor(s.anchor));
    const auto* perfect = child(c.root, std::to_string(r) + "/G=1");
    REQUIRE(perfect != nullptr);
    CHECK(perfect->status == (r <= 15 ? CaseStatus::Refuted : CaseStatus::PerfectOpen));
  }
}

TEST_CASE("traces match the golden files") {
  for (int r = 13; r <= 23; r += 2) {
    CAPTURE(r);
    const auto expect = golden(r);
    REQUIRE_FALSE(expect.empty());
    CHECK(format_trace(classify(r).trace) == expect);
  }
}

TEST_CASE("classification is deterministic") {
  for (int r : {13, 17, 23}) CHECK(format_trace(classify(r).trace) == format_trace(classify(r).trace));
}
