#include <algorithm>
#include <complex>
#include <map>

#include "doctest.h"
#include "mtclab/catalog.hpp"
#include "mtclab/classifier.hpp"
#include "mtclab/modular_data.hpp"
#include "mtclab/rank17.hpp"
#include "mtclab/subcat.hpp"
#include "oracles.hpp"

using namespace mtclab;

namespace {

using CMat = std::vector<std::vector<std::complex<double>>>;

CMat mul(const CMat& a, const CMat& b) {
  const std::size_t n = a.size();
  CMat c(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

const CaseNode* find(const CaseNode& n, const std::string& id) {
  if (n.hypothesis.id == id) return &n;
  for (const auto& c : n.children)
    if (const auto* f = find(c, id)) return f;
  return nullptr;
}

}  // namespace

TEST_CASE("gauged rank 17 ring") {
  const auto r = gauged_rank17_ring();
  CHECK(r.rank() == 17);
  CHECK(oracle::is_fusion_ring(r));
  CHECK(is_mnsd(r));
  const auto md = gauged_rank17_modular();
  const auto dims = *integer_dims(md);
  std::map<std::int64_t, int> count;
  for (auto d : dims) ++count[d];
  CHECK(count == std::map<std::int64_t, int>{{1, 3}, {3, 8}, {5, 6}});
  CHECK(pointed_subring(r).group.order() == 3);
  CHECK(adjoint_subring(r).rank() == 11);
  CHECK(pointed_subring(r).subring.is_subset_of(adjoint_subring(r)));
}

TEST_CASE("gauged rank 17 modular data") {
  const auto md = gauged_rank17_modular();
  CHECK(verify_balancing(md).empty());
  CHECK(is_modular(md));
  CHECK(check_centralizer_identities(md).empty());
  CHECK(oracle::unitarity_defect(md, 225.0) < 1e-8);
}

TEST_CASE("modular relation (S T⁻¹)³ = p₋ S² on every modular catalog entry") {
  for (const auto& ex : modular_catalog()) {
    const auto& md = ex.md;
    if (ex.name == "z3_degenerate") continue;
    CAPTURE(ex.name);
    // p₋ = Σ θ_i⁻¹ d_i², |p₋|² = dim.
    const auto n = static_cast<std::size_t>(md.rank());
    CMat s(n, std::vector<std::complex<double>>(n));
    CMat t(n, std::vector<std::complex<double>>(n));
    std::complex<double> gauss = 0;
    double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) s[i][j] = oracle::evaluate(md.s(static_cast<int>(i), static_cast<int>(j)));
      t[i][i] = std::conj(oracle::root_of_unity(md.conductor(), md.twists()[i]));
      gauss += t[i][i] * std::norm(s[0][i]);
      total += std::norm(s[0][i]);
    }
    CHECK(std::norm(gauss) == doctest::Approx(total));
    const auto st = mul(s, t);
    const auto lhs = mul(mul(st, st), st);
    const auto s2 = mul(s, s);
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(lhs[i][j] - gauss * s2[i][j]));
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("rank 17 analysis closes all but the l² = 25 branch") {
  const auto c = classify(17);
  const auto* leaf = find(c.root, "17/G=3/fusion");
  REQUIRE(leaf != nullptr);
  CHECK(find(c.root, "17/G=3/fusion/fixed=2")->status == CaseStatus::Refuted);
  CHECK(find(c.root, "17/G=3/fusion/fixed=8/l2=1")->status == CaseStatus::Refuted);
  CHECK(find(c.root, "17/G=3/fusion/fixed=8/l2=9")->status == CaseStatus::Refuted);
  const auto* open = find(c.root, "17/G=3/fusion/fixed=8/l2=25");
  REQUIRE(open != nullptr);
  CHECK(open->status == CaseStatus::Open);
  CHECK(leaf->status == CaseStatus::Open);

  // The surviving dimension data is realized by the gauged example.
  const auto md = gauged_rank17_modular();
  const auto dims = integer_dims(md);
  REQUIRE(dims.has_value());
  std::int64_t total = 0;
  for (auto d : *dims) total += d * d;
  CHECK(total == 225);
}

TEST_CASE("rank 17 analysis is not applicable elsewhere") {
  auto h = mnsd_modular_hypothesis(19, "x");
  CHECK_FALSE(g3_rank17_analysis(h).applicable);
  auto h17 = mnsd_modular_hypothesis(17, "y");
  h17.g_order = Domain::exactly(9);
  CHECK_FALSE(g3_rank17_analysis(h17).applicable);
}
