#include "mtclab/chain.hpp"

#include <functional>

#include "mtclab/errors.hpp"
#include "mtclab/hypothesis.hpp"

namespace mtclab {

namespace {

using I64 = std::int64_t;

std::string sub(I64 n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  for (char ch : std::to_string(n)) s += digits[ch - '0'];
  return s;
}

std::string d(I64 i) { return "d" + sub(i); }

// c·d_j² = 1 + 2(d_{j+1}² + … + d_m²), rendered.
std::string tail(I64 from, I64 m) {
  if (from > m) return "1";
  if (from == m) return "1 + 2" + d(from) + "²";
  return "1 + 2(" + d(from) + "² + … + " + d(m) + "²)";
}

std::string coef(I64 c) { return c == 1 ? "" : std::to_string(c) + "·"; }

// The equation for d_{j+1} after substituting d_j = t·d_{j+1} into c·d_j² = ….
std::string substituted(I64 c, I64 t, I64 j, I64 m) {
  const I64 c2 = c * t * t - 2;
  if (c2 > 0) return coef(c2) + d(j + 1) + "² = " + tail(j + 2, m);
  return coef(c * t * t) + d(j + 1) + "² = 1 + 2" + d(j + 1) + "²" + (j + 2 <= m ? " + …" : "");
}

struct Chain {
  I64 m;
  ChainResult* result;

  // Verifies l·T₁² = c_j + 2Σ_{i≤j} T_i² with T_i = d_i/d_j.
  static void check_identity(I64 l, const std::vector<I64>& ratios, I64 c) {
    const std::size_t k = ratios.size() + 1;
    std::vector<I64> T(k, 1);
    for (std::size_t i = k - 1; i-- > 0;) T[i] = T[i + 1] * ratios[i];
    I64 rhs = c;
    for (auto t : T) rhs += 2 * t * t;
    if (l * T[0] * T[0] != rhs) throw InternalError("chain identity violated");
  }

  // Stage j (1-based): c·d_j² = 1 + 2Σ_{i>j} d_i², ratios t_1..t_{j-1} fixed.
  void stage(CaseNode& node, I64 l, std::vector<I64> ratios, I64 c, I64 j, bool integral, int& n) {
    auto record = [&](const std::string& rule, std::string delta) {
      node.steps.push_back(make_step(node.hypothesis.id, ++n, rule, std::move(delta)));
      return node.steps.back();
    };
    check_identity(l, ratios, c);
    if (c <= 0 || j == m) {
      std::string why = c <= 0 ? coef(c) + d(j) + "² = " + tail(j + 1, m) + " with " + std::to_string(c) + " ≤ 0"
                               : coef(c) + d(j) + "² = 1 with " + d(j) + " ≥ 3";
      if (c == -1) why = d(j) + "² = 1 + 2" + d(j) + "²" + (j < m ? " + …" : "") + " is impossible";
      node.closing_step = record("CH-CONTRA", why);
      node.status = CaseStatus::Refuted;
      return;
    }
    if (!integral) {
      std::string why = d(j + 1) + "² | " + std::to_string(l) + "·" + d(1) + "²";
      if (ratios.empty())
        why += ", but " + std::to_string(l) + " is not square-free: " + d(1) + "/" + d(2) +
               " need not be an integer";
      else
        why += " with " + d(1) + " = " + std::to_string(ratios.back()) + "·" + d(j) +
               ": ratio integrality not established";
      record("CH-OPEN", why);
      node.status = CaseStatus::PerfectOpen;
      result->open.push_back({l, ratios, c, static_cast<int>(j), why});
      return;
    }
    const I64 slots = 2 * (m - j);
    std::vector<I64> ts;
    for (I64 t = 1; c * t * t <= slots; t += 2) ts.push_back(t);
    std::string head = coef(c) + d(j) + "² = " + tail(j + 1, m) + " ≤ 1 + " + std::to_string(slots) + d(j + 1) +
                       "²; " + d(j) + " = t·" + d(j + 1) + ", t odd, " + coef(c) + "t² ≤ " + std::to_string(slots);
    if (ts.empty()) {
      node.closing_step = record("CH-CONTRA", head + ": no odd t");
      node.status = CaseStatus::Refuted;
      return;
    }
    if (ts.size() == 1) {
      const I64 c2 = c - 2;
      record("CH-STAGE", head + " ⇒ t = 1: " + d(j) + " = " + d(j + 1) + ", so " + substituted(c, 1, j, m));
      ratios.push_back(1);
      stage(node, l, std::move(ratios), c2, j + 1, integral, n);
      return;
    }
    std::string tset;
    for (auto t : ts) tset += (tset.empty() ? "" : ",") + std::to_string(t);
    record("CH-STAGE", head + " ⇒ t ∈ {" + tset + "}");
    for (auto t : ts) {
      CaseNode child;
      child.hypothesis = node.hypothesis;
      child.hypothesis.id = node.hypothesis.id + "/t" + std::to_string(j) + "=" + std::to_string(t);
      int cn = 0;
      auto r = ratios;
      r.push_back(t);
      const I64 c2 = c * t * t - 2;
      if (t > 1) {
        child.steps.push_back(make_step(child.hypothesis.id, ++cn, "CH-STAGE",
                                        d(j) + " = " + std::to_string(t) + "·" + d(j + 1) + ", so " +
                                            substituted(c, t, j, m)));
      } else {
        child.steps.push_back(make_step(child.hypothesis.id, ++cn, "CH-STAGE",
                                        d(j) + " = " + d(j + 1) + ", so " + substituted(c, t, j, m)));
      }
      stage(child, l, std::move(r), c2, j + 1, integral && t == 1, cn);
      node.children.push_back(std::move(child));
    }
    node.status = join_status(node.children);
  }
};

}  // namespace

ChainResult perfect_chain(int rank, const std::string& hyp_id) {
  if (rank < 3 || rank % 2 == 0) throw InputError("perfect_chain needs an odd rank >= 3, got " + std::to_string(rank));
  ChainResult res;
  const I64 m = (rank - 1) / 2;
  CaseNode& root = res.tree;
  root.hypothesis = mnsd_modular_hypothesis(rank, hyp_id.empty() ? std::to_string(rank) + "/G=1" : hyp_id);
  root.hypothesis.g_order = Domain::exactly(1);
  root.hypothesis.flags = {Flag::Integral, Flag::OddDim, Flag::Perfect, Flag::NotPointed};
  const std::string& id = root.hypothesis.id;
  int n = 0;
  auto record = [&](const std::string& rule, std::string delta) {
    root.steps.push_back(make_step(id, ++n, rule, std::move(delta)));
  };
  record("R12", "dim = " + tail(1, m) + " = l·" + d(1) + "², l odd");
  std::vector<I64> ls;
  for (I64 l = 3; l <= 2 * m; l += 2) ls.push_back(l);
  record("CH-BOUND", "l·" + d(1) + "² ≤ 1 + " + std::to_string(2 * m) + d(1) + "² and " + d(1) + " ≥ 3 ⇒ 3 ≤ l ≤ " +
                         std::to_string(2 * m));
  for (auto l : ls)
    if (l % 8 == rank % 8) res.l_candidates.push_back(l);
  std::string lset;
  for (auto l : res.l_candidates) lset += (lset.empty() ? "" : ",") + std::to_string(l);
  if (res.l_candidates.empty()) {
    record("D3", "l ≡ dim ≡ rank = " + std::to_string(rank) + " (mod 8) since " + d(1) + "² ≡ 1: no l in range");
    root.closing_step = root.steps.back();
    root.status = CaseStatus::Refuted;
    res.refuted = true;
    return res;
  }
  record("D3", "l ≡ dim ≡ rank ≡ " + std::to_string(rank % 8) + " (mod 8) since " + d(1) + "² ≡ 1 ⇒ l ∈ {" + lset +
                   "}");
  Chain chain{m, &res};
  for (auto l : res.l_candidates) {
    CaseNode child;
    child.hypothesis = root.hypothesis;
    child.hypothesis.id = id + "/l=" + std::to_string(l);
    int cn = 0;
    const I64 c1 = l - 2;
    child.steps.push_back(make_step(child.hypothesis.id, ++cn, "D3",
                                    "l = " + std::to_string(l) + ": " + coef(c1) + d(1) + "² = " + tail(2, m)));
    chain.stage(child, l, {}, c1, 1, is_square_free(l), cn);
    root.children.push_back(std::move(child));
  }
  root.status = join_status(root.children);
  res.refuted = root.status == CaseStatus::Refuted;
  return res;
}

std::vector<std::vector<std::int64_t>> brute_force_dims(int rank, int bound) {
  if (rank < 1 || rank % 2 == 0) throw InputError("brute_force_dims needs an odd rank, got " + std::to_string(rank));
  if (bound % 2 == 0 || bound > 99) throw InputError("bound must be odd and at most 99");
  const int m = (rank - 1) / 2;
  std::vector<std::vector<I64>> out;
  if (m == 0 || bound < 3) return out;
  std::vector<I64> cur(static_cast<std::size_t>(m));
  std::function<void(int, I64, I64)> rec = [&](int i, I64 cap, I64 sum) {
    if (i == m) {
      const I64 dim = 1 + 2 * sum;
      for (auto x : cur)
        if (dim % (x * x) != 0) return;
      out.push_back(cur);
      return;
    }
    for (I64 x = 3; x <= cap; x += 2) {
      cur[static_cast<std::size_t>(i)] = x;
      rec(i + 1, x, sum + x * x);
    }
  };
  rec(0, bound, 0);
  return out;
}

}  // namespace mtclab
