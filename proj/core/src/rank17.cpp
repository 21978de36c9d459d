#include "mtclab/rank17.hpp"

#include <cstdint>
#include <numeric>

#include "mtclab/errors.hpp"

namespace mtclab {

namespace {

using I64 = std::int64_t;

struct Node {
  CaseNode node;
  int n = 0;

  explicit Node(const Hypothesis& h, const std::string& id) {
    node.hypothesis = h;
    node.hypothesis.id = id;
  }
  const std::string& id() const { return node.hypothesis.id; }
  void step(const std::string& rule, std::string delta) {
    node.steps.push_back(make_step(id(), ++n, rule, std::move(delta)));
  }
  void close(const std::string& rule, std::string delta) {
    step(rule, std::move(delta));
    node.closing_step = node.steps.back();
    node.status = CaseStatus::Refuted;
  }
};

std::string set_string(const std::vector<I64>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

CaseNode two_fixed(const Hypothesis& h) {
  Node a(h, h.id + "/fixed=2");
  a.step("G3-FREE",
         "X₁, X₁* fixed; X₂, …, X₄* form two free Z3-orbits ⇒ d₂ = d₃ = d₄ =: d; "
         "dim = 3·(3 + 2d₁² + 6d²) = 9 + 6d₁² + 18d²");
  // g = gcd(d1, d): g^2 divides dim, 6 d1^2 and 18 d^2, so g^2 | 9.
  std::vector<I64> gs;
  for (I64 g = 1; g * g <= 9; g += 2)
    if (9 % (g * g) == 0) gs.push_back(g);
  a.step("G3-GCD", "g := gcd(d₁, d): g² | dim (R12) and g² | 6d₁² + 18d² ⇒ g² | 9 ⇒ g ∈ " + set_string(gs));

  for (auto g : gs) {
    Node c(h, a.id() + "/gcd=" + std::to_string(g));
    if (g == 3) {
      c.close("G3-UNIT", "X₂ ⊗ X₂* = 1 ⊕ …: d² = 1 + d₁·A + d·B with 3 | d₁, 3 | d ⇒ 3 | 1");
    } else {
      c.step("G3-DIV1",
             "Y ∈ {X₂, …, X₄*}: X₁ ⊗ Y has no invertible summand, d₁d = d₁α + dβ with gcd(d₁, d) = 1 ⇒ "
             "(α, β) ∈ {(0, d₁), (d, 0)}; β = 0 gives N^{X₁}_{YY*} = 0 and d² = 1 + d·k ⇒ d | 1, so α = 0 for "
             "every Y");
      std::vector<I64> d1s;
      for (I64 v = 3; v <= 3; v += 2)
        if (3 % v == 0) d1s.push_back(v);
      c.step("G3-D1", "N^{Y}_{X₁X₁*} = 0 for all Y ⇒ X₁ ⊗ X₁* = 1 ⊕ g ⊕ g² ⊕ aX₁ ⊕ bX₁*: d₁² = 3 + d₁(a + b) ⇒ "
                      "d₁ | 3, d₁ ≥ 3 ⇒ d₁ ∈ " +
                          set_string(d1s));
      const I64 d1 = d1s.at(0);
      const I64 base = 9 + 6 * d1 * d1;
      std::vector<I64> ds;
      for (I64 d = 3; d * d <= base; d += 2)
        if (base % (d * d) == 0) ds.push_back(d);
      bool all_bad = true;
      for (auto d : ds)
        if (std::gcd(d1, d) == 1) all_bad = false;
      if (!all_bad) throw InternalError("rank-17 gcd branch did not close");
      std::string dsq;
      for (auto d : ds) dsq += (dsq.empty() ? "" : ",") + std::to_string(d * d);
      c.close("G3-DSQ", "dim = " + std::to_string(base) + " + 18d²; d² | dim ⇒ d² | " + std::to_string(base) +
                            " = 3²·7 ⇒ d² ∈ {" + dsq + "} ⇒ gcd(d₁, d) = 3 ≠ 1");
    }
    a.node.children.push_back(std::move(c.node));
  }
  a.node.status = join_status(a.node.children);
  return a.node;
}

CaseNode eight_fixed(const Hypothesis& h, const SaturateOptions& opts, std::vector<std::string>& witnesses) {
  Node b(h, h.id + "/fixed=8");
  b.step("G3-ORBIT",
         "G(C) fixes X₁, …, X₄*; C_g = {Y₁, Y₂, Y₃} and a trivial action would put g in every G[Y] ⇒ free "
         "action, d_{Y_i} = d; X_i ⊗ Y₁ = N(Y₁ ⊕ Y₂ ⊕ Y₃) ⇒ d_{X_i} = 3N ⇒ 3 | d_{X_i}");
  b.step("G3-L",
         "dim = 3·dim(C_g) = 9d²; c_i := d_{X_i}/3, c_i² | d² (R12), d = l·c₁ with c₁ = max c_i, l odd; "
         "l²c₁² = 1 + 6(c₁² + … + c₄²) ≤ 1 + 24c₁² ⇒ l² ≤ 24 + 1/c₁²: l² ∈ {1,9} for c₁ ≥ 3, l² ∈ {1,9,25} "
         "for c₁ = 1");
  std::vector<I64> l2s;
  for (I64 l = 1; l * l <= 25; l += 2) l2s.push_back(l * l);

  for (auto l2 : l2s) {
    Node c(h, b.id() + "/l2=" + std::to_string(l2));
    if (l2 == 1) {
      c.close("G3-CONTRA", "d = c₁ ⇒ d_{X₁}² = 9d² = dim = 9 + 6(d_{X₁}² + … + d_{X₄}²) > d_{X₁}²");
    } else if (l2 == 9) {
      if (3 % 9 == 0) throw InternalError("nine-divides-three check");
      c.close("G3-NINE", "9 | d² and 9 | d_{X_i}²; 3 + 2(d_{X₁}² + … + d_{X₄}²) = 3d² ⇒ 9 | 3");
    } else {
      // l^2 = 25 needs 25c1^2 <= 1 + 24c1^2, so c1 = 1 and all c_i = 1.
      const I64 c1 = 1;
      if (25 * c1 * c1 > 1 + 24 * c1 * c1) throw InternalError("l^2 = 25 bound");
      const I64 d2 = 1 + 6 * 4;
      if (d2 != l2 * c1 * c1) throw InternalError("l^2 = 25 identity");
      const I64 d = 5, dx = 3;
      const I64 dim = 9 * d2;
      c.step("G3-L", "l² = 25 needs 25c₁² ≤ 1 + 24c₁² ⇒ c₁ = … = c₄ = 1: d_{X_i} = 3, d² = 1 + 24 = 25, d = 5, "
                     "dim = 225");
      Hypothesis w = h;
      w.id = c.id() + "/dims";
      w.dim = Domain::exactly(dim);
      w.nonunit_dims = std::vector<I64>{dx, dx, dx, dx, dx, dx, dx, dx, d, d, d, d, d, d};
      w.component_dims = std::vector<std::vector<I64>>{{1, 1, 1, dx, dx, dx, dx, dx, dx, dx, dx}, {d, d, d}, {d, d, d}};
      CaseNode sat = saturate(w, opts);
      if (sat.status != CaseStatus::Refuted) {
        witnesses.push_back("d_X = (3,3,3,3), d_Y = (5,5,5), dim = 225");
        const std::string sid = sat.hypothesis.id;
        sat.steps.push_back(make_step(sid, static_cast<int>(sat.steps.size()) + 1, "G3-OPEN",
                                      "no rule refutes d_X = (3,3,3,3), d_Y = (5,5,5), dim = 225: branch left open"));
      }
      c.node.children.push_back(std::move(sat));
      c.node.status = join_status(c.node.children);
    }
    b.node.children.push_back(std::move(c.node));
  }
  b.node.status = join_status(b.node.children);
  return b.node;
}

}  // namespace

G3Analysis g3_rank17_analysis(const Hypothesis& h, const SaturateOptions& opts) {
  G3Analysis out;
  if (!(h.rank == 17 && h.mnsd && h.g_order.is_known() && h.g_order.value() == 3 && h.rank_ad.is_known() &&
        h.rank_ad.value() == 11 && h.has(Flag::CptInsideCad)))
    return out;
  out.applicable = true;
  Node root(h, h.id);
  std::vector<I64> fs;
  for (I64 f = 0; f <= 8; ++f)
    if ((8 - f) % 3 == 0 && f % 2 == 0) fs.push_back(f);
  root.step("G3-FIX", "Z3 acts on the 8 non-invertibles of C_ad: fixed count f ≡ 8 (mod 3), f even (no "
                      "self-dual simples) ⇒ f ∈ " +
                          set_string(fs));
  if (fs != std::vector<I64>{2, 8}) throw InternalError("fixed-point dichotomy");
  root.node.children.push_back(two_fixed(h));
  root.node.children.push_back(eight_fixed(h, opts, out.open_witnesses));
  root.node.status = join_status(root.node.children);
  out.tree = std::move(root.node);
  return out;
}

}  // namespace mtclab
