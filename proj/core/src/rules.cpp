#include "mtclab/rules.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "mtclab/errors.hpp"

namespace mtclab {

namespace {

using I64 = std::int64_t;
using Candidates = std::vector<std::vector<int>>;

std::vector<Rule> build_catalog() {
  auto sat = [](std::string id, std::string anchor, bool imported, std::string summary) {
    return Rule{std::move(id), std::move(anchor), imported, true, std::move(summary)};
  };
  auto aux = [](std::string id, std::string anchor, bool imported, std::string summary) {
    return Rule{std::move(id), std::move(anchor), imported, false, std::move(summary)};
  };
  return {
      sat("I1", "are always integral", true, "MNSD modular categories are integral of odd dimension"),
      sat("DEF", "is called pointed if", false, "bookkeeping: bounds, divisibility, pointedness flags"),
      sat("U1", "isomorphic to the group of", true, "modular: U(C) = G(C), dim = |G| dim(C_ad)"),
      sat("R13", "it is maximally non-self-dual", false, "MNSD: odd ranks, dual components have equal rank"),
      sat("R7", "dimension p^4 are pointed", true, "dim p^4, or p^5 with p odd, is pointed"),
      sat("R8", "Then C_ad is pointed", true, "dim p^3 has pointed adjoint"),
      sat("R6", "FPdim(C_ad) ≠ p^2", false, "integral modular: dim(C_ad) is not a prime square"),
      sat("R11", "trivial if and only if", false, "ranks 13..23: (C_ad)_pt trivial iff C_pt trivial"),
      sat("R4", "rank(C) = rank(C_ad) rank(C_pt)", false, "(C_ad)_pt trivial: rank = rank_ad |G|"),
      sat("R5", "then it is not cyclic", false, "cd in 1 + pZ: G(C_ad) is not a nontrivial cyclic p-group"),
      sat("R9", "|G(C)| is square-free", false, "square-free |G|: non-invertible dims are coprime"),
      sat("R12", "there exists an odd integer l", true, "d_X^2 divides dim"),
      sat("D2", "cannot be equal to", false, "C_ad pointed is impossible, so rank_ad >= |G_ad| + 2"),
      sat("R3", "rank(C_ad) + |G(C)| + 2p − 3", false,
          "rank >= rank_ad + |G| + 2p - 3; some component holds p non-invertibles"),
      sat("R1", "rank(D) ≡ dim(D)", false, "odd dimension: dim = rank mod 8 for subrings"),
      sat("R2", "rank(C_ad) ≡ rank(C_g)", false, "odd dimension: component ranks = rank_ad mod 8"),
      sat("R10", "rank(C_g) ≡ 0", false, "C_pt in C_ad and |G| = p^k: p divides every rank(C_g), g != e"),
      aux("CASES", "all the possible options for", false, "enumerate candidate |G(C)|"),
      aux("SPLIT", "case split", false, "split a finite candidate set"),
      aux("CH-BOUND", "implies that l ≤ 12", false, "l d1^2 <= 1 + 2m d1^2"),
      aux("D3", "and therefore l=5", false, "l = dim/d1^2 = rank mod 8 (rank(D) ≡ dim(D))"),
      aux("CH-STAGE", "implies q=1", false, "stage inequality bounds the ratio d_j/d_{j+1}"),
      aux("CH-CONTRA", "which is a contradiction", false, "cofactor exhausted"),
      aux("CH-OPEN", "there exists an odd integer m such that", false,
          "ratio integrality not established; branch left open"),
      aux("G3-FIX", "has 2 or 8 fixed elements", false, "Z3 action on non-invertibles of C_ad"),
      aux("G3-FREE", "are not fixed by the action", false, "free orbits have equal dimension"),
      aux("G3-GCD", "gcd(d₁, d) = 1, 3", false, "gcd of the two dimensions"),
      aux("G3-UNIT", "thus 3 divides 1", false, "unit coefficient in X2 X2*"),
      aux("G3-DIV1", "and so d divides 1", false, "Y Y* without X1 forces d | 1"),
      aux("G3-D1", "implies that d₁ = 3", false, "X1 X1* = 1 + g + g^2 + multiples of X1, X1*"),
      aux("G3-DSQ", "Thus, d² = 9, which is a contradiction", false, "d^2 divides 3^2 7"),
      aux("G3-ORBIT", "X_i ⊗ Y₁ = N(Y₁ ⊕ Y₂ ⊕ Y₃)", false, "g-translation equalizes coefficients"),
      aux("G3-L", "l² ≤ 24", false, "l^2 c1^2 <= 1 + 24 c1^2"),
      aux("G3-NINE", "we have that 9 divides 3", false, "l^2 = 9"),
      aux("G3-CONTRA", "which is again a contradiction", false, "l^2 = 1"),
      aux("G3-OPEN", "l² ≤ 24", false, "boundary c1 = 1 survives every rule"),
  };
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string tuple_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string candidates_string(const Candidates& c) {
  if (c.empty()) return "{}";
  std::vector<std::string> parts;
  for (const auto& v : c) parts.push_back(tuple_string(v));
  return "{" + join(parts, ",") + "}";
}

bool is_prime_power_of(I64 v, I64 p) {
  if (v < p) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

I64 ipow(I64 b, int e) {
  I64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::optional<I64> exact_root(I64 n, int k) {
  if (n < 1) return std::nullopt;
  for (I64 b = 1;; ++b) {
    I64 v = ipow(b, k);
    if (v == n) return b;
    if (v > n) return std::nullopt;
  }
}

class Builder {
 public:
  explicit Builder(const Hypothesis& h) : h_(h) {}

  Hypothesis& h() { return h_; }

  void narrow(const char* name, Domain Hypothesis::*field, const Domain& nd, const std::string& why = "") {
    const Domain& old = h_.*field;
    if (nd == old) return;
    if (!nd.is_subset_of(old)) throw InternalError(std::string("rule widened ") + name);
    std::string s = std::string(name) + ": " + old.to_string() + " → " + nd.to_string();
    if (!why.empty()) s += " (" + why + ")";
    changes_.push_back(std::move(s));
    h_.*field = nd;
    if (nd.empty() && refutation_.empty()) refutation_ = changes_.back();
  }

  void narrow_filter(const char* name, Domain Hypothesis::*field, const std::function<bool(I64)>& keep,
                     const std::function<std::string(I64)>& why_removed = nullptr) {
    const Domain& old = h_.*field;
    if (!old.is_finite()) return;
    std::vector<std::string> reasons;
    Domain nd = old.filtered([&](I64 v) {
      bool k = keep(v);
      if (!k && why_removed) reasons.push_back(why_removed(v));
      return k;
    });
    narrow(name, field, nd, join(reasons, "; "));
  }

  void set_components(Candidates nc, const std::string& why = "") {
    if (h_.component_ranks && *h_.component_ranks == nc) return;
    std::string old = h_.component_ranks ? candidates_string(*h_.component_ranks) : "?";
    std::string s = "components: " + old + " → " + candidates_string(nc);
    if (!why.empty()) s += " (" + why + ")";
    changes_.push_back(std::move(s));
    bool now_empty = nc.empty();
    h_.component_ranks = std::move(nc);
    if (now_empty && refutation_.empty()) refutation_ = changes_.back();
  }

  void filter_components(const std::function<bool(const std::vector<int>&)>& keep,
                         const std::function<std::string(const std::vector<int>&)>& why_removed) {
    if (!h_.component_ranks) return;
    Candidates kept;
    std::vector<std::string> reasons;
    for (const auto& c : *h_.component_ranks) {
      if (keep(c))
        kept.push_back(c);
      else
        reasons.push_back(tuple_string(c) + ": " + why_removed(c));
    }
    if (kept.size() != h_.component_ranks->size()) set_components(std::move(kept), join(reasons, "; "));
  }

  void flag(Flag f, const std::string& why = "") {
    if (!h_.flags.insert(f).second) return;
    std::string s = "+" + to_string(f);
    if (!why.empty()) s += " (" + why + ")";
    changes_.push_back(std::move(s));
  }

  void refute(const std::string& why) {
    if (refutation_.empty()) refutation_ = why;
  }

  void note(const std::string& s) { notes_.push_back(s); }

  RuleOutcome finish(const Hypothesis& input) {
    auto conflict = [&](Flag a, Flag b) {
      if (h_.has(a) && h_.has(b)) refute(to_string(a) + " and " + to_string(b));
    };
    conflict(Flag::Pointed, Flag::NotPointed);
    conflict(Flag::CadptTrivial, Flag::CadptNontrivial);
    conflict(Flag::AdPointed, Flag::AdNotPointed);
    RuleOutcome out;
    if (!refutation_.empty()) {
      out.kind = OutcomeKind::Refutation;
      out.refined = input;
      std::vector<std::string> all = changes_;
      if (std::find(all.begin(), all.end(), refutation_) == all.end()) all.push_back(refutation_);
      out.delta = join(all, "; ");
      return out;
    }
    if (changes_.empty()) {
      out.kind = OutcomeKind::NotApplicable;
      out.refined = input;
      out.delta = join(notes_, "; ");
      return out;
    }
    out.kind = OutcomeKind::Facts;
    out.refined = std::move(h_);
    out.delta = join(changes_, "; ");
    return out;
  }

 private:
  Hypothesis h_;
  std::vector<std::string> changes_;
  std::vector<std::string> notes_;
  std::string refutation_;
};

Domain clamp(const Domain& d, I64 lo, I64 hi) { return d.with_min(lo).with_max(hi); }

void rule_I1(Builder& b) {
  auto& h = b.h();
  if (!(h.mnsd && h.modular)) return;
  b.flag(Flag::Integral);
  b.flag(Flag::OddDim);
}

void rule_DEF(Builder& b) {
  auto& h = b.h();
  const int r = h.rank;
  b.narrow("|G|", &Hypothesis::g_order, clamp(h.g_order, 1, r));
  b.narrow("|G_ad|", &Hypothesis::g_ad_order, clamp(h.g_ad_order, 1, r));
  b.narrow("rank_ad", &Hypothesis::rank_ad, clamp(h.rank_ad, 1, r));

  if (h.g_order.is_finite() && h.g_ad_order.is_finite()) {
    auto os = h.g_order.values();
    auto as = h.g_ad_order.values();
    b.narrow_filter("|G_ad|", &Hypothesis::g_ad_order, [&](I64 a) {
      return std::any_of(os.begin(), os.end(), [&](I64 o) { return o % a == 0; });
    });
    b.narrow_filter("|G|", &Hypothesis::g_order, [&](I64 o) {
      return std::any_of(as.begin(), as.end(), [&](I64 a) { return o % a == 0; });
    });
  }
  if (!h.g_ad_order.empty()) b.narrow("rank_ad", &Hypothesis::rank_ad, h.rank_ad.with_min(h.g_ad_order.min()));

  if (h.g_order.is_known() && h.g_order.value() == r) b.flag(Flag::Pointed, "|G| = rank");
  if (h.g_order.is_finite() && !h.g_order.empty() && *h.g_order.max() < r) b.flag(Flag::NotPointed, "|G| < rank");
  if (h.has(Flag::Pointed)) {
    b.narrow("|G|", &Hypothesis::g_order, h.g_order.filtered([r](I64 o) { return o == r; }));
    b.narrow("|G_ad|", &Hypothesis::g_ad_order, h.g_ad_order.filtered([](I64 a) { return a == 1; }));
    b.narrow("rank_ad", &Hypothesis::rank_ad, h.rank_ad.filtered([](I64 v) { return v == 1; }));
  }
  if (h.has(Flag::NotPointed)) b.narrow_filter("|G|", &Hypothesis::g_order, [r](I64 o) { return o != r; });

  if (h.g_order.is_known() && h.g_order.value() == 1) b.flag(Flag::Perfect, "|G| = 1");
  if (h.has(Flag::Perfect)) b.narrow_filter("|G|", &Hypothesis::g_order, [](I64 o) { return o == 1; });

  if (h.g_order.is_known() && h.g_ad_order.is_known() && h.g_order.value() == h.g_ad_order.value())
    b.flag(Flag::CptInsideCad, "|G_ad| = |G|");
  if (h.has(Flag::CptInsideCad) && h.g_order.is_finite() && h.g_ad_order.is_finite()) {
    auto os = h.g_order;
    auto as = h.g_ad_order;
    b.narrow_filter("|G_ad|", &Hypothesis::g_ad_order, [&](I64 a) { return os.contains(a); });
    b.narrow_filter("|G|", &Hypothesis::g_order, [&](I64 o) { return as.contains(o); });
  }

  if (h.g_ad_order.is_known() && h.g_ad_order.value() == 1) b.flag(Flag::CadptTrivial, "|G_ad| = 1");
  if (h.g_ad_order.is_finite() && !h.g_ad_order.empty() && !h.g_ad_order.contains(1))
    b.flag(Flag::CadptNontrivial, "|G_ad| > 1");
  if (h.has(Flag::CadptTrivial)) b.narrow_filter("|G_ad|", &Hypothesis::g_ad_order, [](I64 a) { return a == 1; });
  if (h.has(Flag::CadptNontrivial)) {
    if (h.g_ad_order.is_finite())
      b.narrow_filter("|G_ad|", &Hypothesis::g_ad_order, [](I64 a) { return a != 1; });
    else
      b.narrow("|G_ad|", &Hypothesis::g_ad_order, h.g_ad_order.with_min(2));
  }

  if (h.has(Flag::AdPointed) && h.g_ad_order.is_finite()) {
    auto as = h.g_ad_order;
    b.narrow("rank_ad", &Hypothesis::rank_ad, h.rank_ad.is_finite() ? h.rank_ad.filtered([&](I64 v) {
      return as.contains(v);
    }) : as, "C_ad pointed");
    if (h.dim_ad.is_finite())
      b.narrow_filter("dim_ad", &Hypothesis::dim_ad, [&](I64 v) { return as.contains(v); });
    else
      b.narrow("dim_ad", &Hypothesis::dim_ad, as.with_min(h.dim_ad.min()), "C_ad pointed");
  }

  if (h.dim.is_known()) {
    const I64 d = h.dim.value();
    if (h.dim_ad.is_finite()) {
      b.narrow_filter("dim_ad", &Hypothesis::dim_ad, [d](I64 v) { return d % v == 0; });
    } else {
      std::vector<I64> divs;
      for (I64 v = h.dim_ad.min(); v <= d; ++v)
        if (d % v == 0) divs.push_back(v);
      b.narrow("dim_ad", &Hypothesis::dim_ad, Domain::of(divs), "dim_ad divides dim");
    }
  }

  if (h.nonunit_dims) {
    const auto& nd = *h.nonunit_dims;
    const I64 o = r - static_cast<I64>(nd.size());
    b.narrow("|G|", &Hypothesis::g_order, h.g_order.is_finite() ? h.g_order.filtered([o](I64 v) { return v == o; })
                                                                 : Domain::exactly(o).with_min(h.g_order.min()),
             "invertibles = rank - non-invertibles");
    I64 total = o;
    for (auto d : nd) total += d * d;
    b.narrow("dim", &Hypothesis::dim, h.dim.is_finite() ? h.dim.filtered([total](I64 v) { return v == total; })
                                                         : Domain::exactly(total).with_min(h.dim.min()),
             "sum of squared dims");
  }
  if (h.component_dims && !h.component_dims->empty()) {
    const auto& cd = *h.component_dims;
    std::vector<int> sizes;
    for (const auto& c : cd) sizes.push_back(static_cast<int>(c.size()));
    if (!h.component_ranks)
      b.set_components({sizes}, "component dimensions");
    else
      b.filter_components([&](const std::vector<int>& c) { return c == sizes; },
                          [](const std::vector<int>&) { return std::string("differs from component dimensions"); });
    I64 ad = 0;
    for (auto d : cd[0]) ad += d * d;
    b.narrow("dim_ad", &Hypothesis::dim_ad,
             h.dim_ad.is_finite() ? h.dim_ad.filtered([ad](I64 v) { return v == ad; })
                                  : Domain::exactly(ad).with_min(h.dim_ad.min()),
             "dimension of the identity component");
    const I64 rad = static_cast<I64>(cd[0].size());
    b.narrow("rank_ad", &Hypothesis::rank_ad,
             h.rank_ad.is_finite() ? h.rank_ad.filtered([rad](I64 v) { return v == rad; })
                                   : Domain::exactly(rad).with_min(h.rank_ad.min()));
  }
  if (h.component_ranks && h.rank_ad.is_finite()) {
    auto ra = h.rank_ad;
    b.filter_components([&](const std::vector<int>& c) { return !c.empty() && ra.contains(c[0]); },
                        [&](const std::vector<int>&) { return "rank_ad ∉ " + ra.to_string(); });
  }
}

void rule_U1(Builder& b) {
  auto& h = b.h();
  if (!h.modular) return;
  const int r = h.rank;
  if (h.g_order.is_finite() && !h.g_order.empty())
    b.narrow("rank_ad", &Hypothesis::rank_ad, h.rank_ad.with_max(r - (h.g_order.min() - 1)),
             "one simple per non-trivial component");
  if (h.g_order.is_known() && h.g_order.value() == 1) {
    b.narrow("rank_ad", &Hypothesis::rank_ad, h.rank_ad.filtered([r](I64 v) { return v == r; }), "trivial grading");
  }
  if (h.g_order.is_known()) {
    const I64 o = h.g_order.value();
    if (h.dim_ad.is_known()) {
      const I64 d = o * h.dim_ad.value();
      b.narrow("dim", &Hypothesis::dim,
               h.dim.is_finite() ? h.dim.filtered([d](I64 v) { return v == d; })
                                 : Domain::exactly(d).with_min(h.dim.min()),
               "dim = |G| dim_ad");
    }
    if (h.dim.is_known()) {
      const I64 d = h.dim.value();
      if (d % o != 0) {
        b.refute("|G| = " + std::to_string(o) + " does not divide dim = " + std::to_string(d));
      } else {
        const I64 ad = d / o;
        b.narrow("dim_ad", &Hypothesis::dim_ad,
                 h.dim_ad.is_finite() ? h.dim_ad.filtered([ad](I64 v) { return v == ad; })
                                      : Domain::exactly(ad).with_min(h.dim_ad.min()),
                 "dim_ad = dim/|G|");
      }
    }
    b.filter_components(
        [&](const std::vector<int>& c) {
          return static_cast<I64>(c.size()) == o && std::accumulate(c.begin(), c.end(), 0) == r;
        },
        [&](const std::vector<int>&) { return "need " + std::to_string(o) + " components summing to rank"; });
  }
  if (h.component_dims) {
    const auto& cd = *h.component_dims;
    auto sq = [](const std::vector<I64>& c) {
      I64 s = 0;
      for (auto d : c) s += d * d;
      return s;
    };
    for (const auto& c : cd)
      if (sq(c) != sq(cd[0])) {
        b.refute("graded components of unequal dimension");
        break;
      }
  }
}

void rule_R13(Builder& b) {
  auto& h = b.h();
  if (!h.mnsd) return;
  if (h.rank % 2 == 0) {
    b.refute("MNSD rank " + std::to_string(h.rank) + " is even");
    return;
  }
  auto odd = [](I64 v) { return v % 2 != 0; };
  b.narrow_filter("|G|", &Hypothesis::g_order, odd);
  b.narrow_filter("|G_ad|", &Hypothesis::g_ad_order, odd);
  b.narrow_filter("rank_ad", &Hypothesis::rank_ad, odd);
  b.filter_components(
      [](const std::vector<int>& c) {
        if (c.empty() || c[0] % 2 == 0 || c.size() % 2 == 0) return false;
        for (std::size_t i = 1; i + 1 < c.size(); i += 2)
          if (c[i] != c[i + 1]) return false;
        return true;
      },
      [](const std::vector<int>&) { return std::string("dual components must have equal rank"); });
  if (h.nonunit_dims && h.nonunit_dims->size() % 2 != 0) b.refute("odd number of non-invertibles");
}

void rule_R7(Builder& b) {
  auto& h = b.h();
  if (!(h.modular && h.has(Flag::Integral) && h.dim.is_known())) return;
  const I64 d = h.dim.value();
  if (auto p = exact_root(d, 4); p && is_prime(*p)) b.flag(Flag::Pointed, "dim = " + std::to_string(*p) + "^4");
  if (auto p = exact_root(d, 5); p && *p % 2 == 1 && is_prime(*p))
    b.flag(Flag::Pointed, "dim = " + std::to_string(*p) + "^5");
}

void rule_R8(Builder& b) {
  auto& h = b.h();
  if (!h.has(Flag::Integral)) return;
  if (h.dim.is_known())
    if (auto p = exact_root(h.dim.value(), 3); p && is_prime(*p))
      b.flag(Flag::AdPointed, "dim = " + std::to_string(*p) + "^3");
  if (h.modular && h.dim_ad.is_known())
    if (auto p = exact_root(h.dim_ad.value(), 3); p && *p % 2 == 1 && is_prime(*p)) {
      const I64 q = *p;
      b.narrow_filter("|G_ad|", &Hypothesis::g_ad_order, [q](I64 a) { return a == q * q || a == q * q * q; });
    }
}

void rule_R6(Builder& b) {
  auto& h = b.h();
  if (!(h.modular && h.has(Flag::Integral))) return;
  auto prime_square = [](I64 v) {
    auto p = exact_root(v, 2);
    return p && is_prime(*p);
  };
  b.narrow_filter(
      "dim_ad", &Hypothesis::dim_ad, [&](I64 v) { return !prime_square(v); },
      [](I64 v) { return std::to_string(v) + " is a prime square"; });
}

void rule_R11(Builder& b) {
  auto& h = b.h();
  if (!(h.mnsd && h.modular && h.rank >= 13 && h.rank <= 23 && h.has(Flag::NotPointed))) return;
  if (h.g_order.is_finite() && !h.g_order.empty()) {
    if (!h.g_order.contains(1)) b.flag(Flag::CadptNontrivial, "C_pt nontrivial");
    if (h.g_order.is_known() && h.g_order.value() == 1) b.flag(Flag::CadptTrivial, "C_pt trivial");
  }
  if (h.has(Flag::CadptTrivial)) b.narrow_filter("|G|", &Hypothesis::g_order, [](I64 o) { return o == 1; });
  if (h.has(Flag::CadptNontrivial)) b.narrow_filter("|G|", &Hypothesis::g_order, [](I64 o) { return o != 1; });
}

void rule_R4(Builder& b) {
  auto& h = b.h();
  if (!(h.modular && h.has(Flag::CadptTrivial) && h.g_order.is_finite())) return;
  auto os = h.g_order.values();
  const int r = h.rank;
  auto fits = [&](I64 v) {
    return std::any_of(os.begin(), os.end(), [&](I64 o) { return v * o == r; });
  };
  if (h.rank_ad.is_finite()) {
    b.narrow_filter("rank_ad", &Hypothesis::rank_ad, fits,
                    [](I64 v) { return std::to_string(v) + " · |G| ≠ rank"; });
  } else {
    std::vector<I64> vs;
    for (auto o : os)
      if (r % o == 0 && h.rank_ad.contains(r / o)) vs.push_back(r / o);
    b.narrow("rank_ad", &Hypothesis::rank_ad, Domain::of(vs), "rank = rank_ad · |G|");
  }
}

void rule_R5(Builder& b) {
  auto& h = b.h();
  if (!(h.modular && h.has(Flag::NotPointed) && h.cd_prime)) return;
  const I64 p = *h.cd_prime;
  b.narrow_filter(
      "|G_ad|", &Hypothesis::g_ad_order, [p](I64 a) { return a != p; },
      [](I64 a) { return "Z" + std::to_string(a) + " is cyclic"; });
  if (h.g_order.is_known() && is_square_free(h.g_order.value()))
    b.narrow_filter(
        "|G_ad|", &Hypothesis::g_ad_order, [p](I64 a) { return !is_prime_power_of(a, p); },
        [](I64 a) { return "subgroup of order " + std::to_string(a) + " of a cyclic group is cyclic"; });
}

void rule_R9(Builder& b) {
  auto& h = b.h();
  if (!(h.modular && h.has(Flag::Integral) && h.g_order.is_known() && is_square_free(h.g_order.value()) &&
        h.nonunit_dims && !h.nonunit_dims->empty()))
    return;
  I64 g = 0;
  for (auto d : *h.nonunit_dims) g = std::gcd(g, d);
  if (g != 1) b.refute("gcd of non-invertible dims is " + std::to_string(g) + " with square-free |G|");
}

void rule_R12(Builder& b) {
  auto& h = b.h();
  if (!(h.modular && h.has(Flag::Integral) && h.dim.is_known() && h.nonunit_dims)) return;
  const I64 d = h.dim.value();
  for (auto x : *h.nonunit_dims)
    if (d % (x * x) != 0) {
      b.refute(std::to_string(x) + "^2 does not divide dim = " + std::to_string(d));
      return;
    }
}

// Multisets of n odd values d >= 3 with d^2 | dim and sum of squares = target.
bool pair_dims_feasible(I64 n, I64 target, I64 dim) {
  if (n == 0) return target == 0;
  if (target < 9 * n) return false;
  std::vector<I64> sq;
  for (I64 d = 3; d * d <= target; d += 2)
    if (dim % (d * d) == 0) sq.push_back(d * d);
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(n + 1),
                                       std::vector<char>(static_cast<std::size_t>(target + 1), 0));
  reach[0][0] = 1;
  for (I64 c = 0; c < n; ++c)
    for (I64 s = 0; s <= target; ++s) {
      if (!reach[c][s]) continue;
      for (auto q : sq)
        if (s + q <= target) reach[c + 1][s + q] = 1;
    }
  return reach[n][target] != 0;
}

void rule_D2(Builder& b) {
  auto& h = b.h();
  if (!(h.mnsd && h.modular && h.has(Flag::Integral) && h.has(Flag::NotPointed) && h.g_order.is_known() &&
        h.g_ad_order.is_known()))
    return;
  const I64 o = h.g_order.value();
  const I64 a = h.g_ad_order.value();
  if (a == 1 || h.has(Flag::AdPointed)) return;
  if (!h.has(Flag::AdNotPointed)) {
    std::string why;
    const I64 dim = o * a;
    if (auto p = exact_root(a, 2); p && is_prime(*p)) {
      why = "pointed C_ad has dim_ad = " + std::to_string(a) + " = " + std::to_string(*p) + "^2 (R6)";
    } else if (auto q4 = exact_root(dim, 4); q4 && is_prime(*q4)) {
      why = "dim = " + std::to_string(dim) + " = " + std::to_string(*q4) + "^4 would be pointed (R7)";
    } else if (auto q5 = exact_root(dim, 5); q5 && *q5 % 2 == 1 && is_prime(*q5)) {
      why = "dim = " + std::to_string(dim) + " = " + std::to_string(*q5) + "^5 would be pointed (R7)";
    } else {
      const I64 pairs = (h.rank - o) / 2;
      const I64 target = (dim - o) / 2;
      if (pair_dims_feasible(pairs, target, dim)) return;
      why = "pointed C_ad gives dim = " + std::to_string(dim) + ", and no " + std::to_string(pairs) +
            " odd d ≥ 3 with d² | " + std::to_string(dim) + " have Σd² = " + std::to_string(target);
    }
    b.flag(Flag::AdNotPointed, why);
  }
  b.narrow("rank_ad", &Hypothesis::rank_ad, h.rank_ad.with_min(a + 2), "|G_ad| plus a dual pair");
}

void rule_R3(Builder& b) {
  auto& h = b.h();
  if (!(h.modular && h.has(Flag::OddDim) && h.g_order.is_known() && h.g_ad_order.is_known())) return;
  const I64 o = h.g_order.value();
  const I64 a = h.g_ad_order.value();
  I64 p = 0;
  for (auto q : prime_divisors(a))
    if (q % 2 == 1) p = std::max(p, q);
  if (p == 0) return;
  const I64 bound = h.rank - o - 2 * p + 3;
  b.narrow("rank_ad", &Hypothesis::rank_ad, h.rank_ad.with_max(bound),
           "p = " + std::to_string(p) + ": rank_ad ≤ " + std::to_string(h.rank) + " − " + std::to_string(o) +
               " − " + std::to_string(2 * p) + " + 3");
  b.filter_components(
      [p](const std::vector<int>& c) {
        for (std::size_t i = 1; i < c.size(); ++i)
          if (c[i] >= p) return true;
        return false;
      },
      [p](const std::vector<int>&) { return "no component with " + std::to_string(p) + " non-invertibles"; });
}

void rule_R1(Builder& b) {
  auto& h = b.h();
  if (!h.has(Flag::OddDim)) return;
  const I64 r8 = h.rank % 8;
  if (h.dim.is_known() && h.dim.value() % 8 != r8) {
    b.refute("dim = " + std::to_string(h.dim.value()) + " ≢ rank = " + std::to_string(h.rank) + " (mod 8)");
    return;
  }
  if (h.dim.is_finite()) b.narrow_filter("dim", &Hypothesis::dim, [r8](I64 v) { return v % 8 == r8; });
  if (h.dim_ad.is_known()) {
    const I64 d8 = h.dim_ad.value() % 8;
    b.narrow_filter(
        "rank_ad", &Hypothesis::rank_ad, [d8](I64 v) { return v % 8 == d8; },
        [&](I64 v) { return std::to_string(v) + " ≢ dim_ad = " + std::to_string(h.dim_ad.value()) + " (mod 8)"; });
  } else if (h.rank_ad.is_known() && h.dim_ad.is_finite()) {
    const I64 r8a = h.rank_ad.value() % 8;
    b.narrow_filter("dim_ad", &Hypothesis::dim_ad, [r8a](I64 v) { return v % 8 == r8a; });
  }
}

bool congruent_partition_exists(int k, int s, int r) {
  if (k == 0) return s == 0;
  // values v = r8 + 8t >= 1
  const int base = r % 8 == 0 ? 8 : r % 8;
  const int rest = s - k * base;
  return rest >= 0 && rest % 8 == 0;
}

void rule_R2(Builder& b) {
  auto& h = b.h();
  if (!(h.modular && h.has(Flag::OddDim) && h.g_order.is_known() && h.rank_ad.is_finite())) return;
  const I64 o = h.g_order.value();
  if (o == 1) return;
  const bool pairs = h.mnsd;
  const int k = static_cast<int>(pairs ? (o - 1) / 2 : o - 1);
  auto sum_for = [&](I64 ra) -> I64 { return pairs ? (h.rank - ra) / 2 : h.rank - ra; };
  const char* unit = pairs ? " dual pair(s)" : "";
  b.narrow_filter(
      "rank_ad", &Hypothesis::rank_ad,
      [&](I64 ra) {
        if (pairs && (h.rank - ra) % 2 != 0) return false;
        return congruent_partition_exists(k, static_cast<int>(sum_for(ra)), static_cast<int>(ra % 8));
      },
      [&](I64 ra) {
        return std::to_string(ra) + ": no " + std::to_string(k) + unit + " of ranks ≡ " + std::to_string(ra % 8) +
               " (mod 8) summing to " + std::to_string(sum_for(ra));
      });
  b.filter_components(
      [](const std::vector<int>& c) {
        for (std::size_t i = 1; i < c.size(); ++i)
          if ((c[i] - c[0]) % 8 != 0) return false;
        return true;
      },
      [](const std::vector<int>& c) { return "component ranks ≢ " + std::to_string(c[0]) + " (mod 8)"; });
  if (!h.component_ranks && h.rank_ad.is_known()) {
    const I64 ra = h.rank_ad.value();
    auto parts = congruent_partitions(k, static_cast<int>(sum_for(ra)), static_cast<int>(ra % 8));
    Candidates cands;
    for (const auto& p : parts) {
      std::vector<int> c{static_cast<int>(ra)};
      for (int v : p) {
        c.push_back(v);
        if (pairs) c.push_back(v);
      }
      cands.push_back(std::move(c));
    }
    b.set_components(std::move(cands), "ranks ≡ " + std::to_string(ra % 8) + " (mod 8)");
  }
}

void rule_R10(Builder& b) {
  auto& h = b.h();
  if (!(h.modular && h.has(Flag::CptInsideCad) && h.has(Flag::NotPointed) && h.g_order.is_known())) return;
  auto p = prime_power_base(h.g_order.value());
  if (!p) return;
  const int q = static_cast<int>(*p);
  b.filter_components(
      [q](const std::vector<int>& c) {
        for (std::size_t i = 1; i < c.size(); ++i)
          if (c[i] % q != 0) return false;
        return true;
      },
      [q](const std::vector<int>& c) {
        for (std::size_t i = 1; i < c.size(); ++i)
          if (c[i] % q != 0) return std::to_string(q) + " ∤ " + std::to_string(c[i]);
        return std::string();
      });
  if (h.component_dims) {
    const auto& cd = *h.component_dims;
    for (std::size_t g = 1; g < cd.size(); ++g) {
      std::map<I64, int> count;
      for (auto d : cd[g]) ++count[d];
      for (const auto& [d, n] : count)
        if (n % q != 0) {
          b.refute(std::to_string(n) + " simples of dimension " + std::to_string(d) + " in a component, " +
                   std::to_string(q) + " ∤ " + std::to_string(n));
          return;
        }
    }
  }
}

using RuleFn = void (*)(Builder&);

RuleFn rule_function(std::string_view id) {
  static const std::map<std::string_view, RuleFn> table{
      {"I1", rule_I1},   {"DEF", rule_DEF}, {"U1", rule_U1}, {"R13", rule_R13}, {"R7", rule_R7},
      {"R8", rule_R8},   {"R6", rule_R6},   {"R11", rule_R11}, {"R4", rule_R4},  {"R5", rule_R5},
      {"R9", rule_R9},   {"R12", rule_R12}, {"D2", rule_D2}, {"R3", rule_R3},   {"R1", rule_R1},
      {"R2", rule_R2},   {"R10", rule_R10},
  };
  auto it = table.find(id);
  return it == table.end() ? nullptr : it->second;
}

}  // namespace

const std::vector<Rule>& rule_catalog() {
  static const std::vector<Rule> catalog = build_catalog();
  return catalog;
}

const Rule& find_rule(std::string_view id) {
  for (const auto& r : rule_catalog())
    if (r.id == id) return r;
  throw InputError("unknown rule id '" + std::string(id) + "'");
}

bool is_registered_anchor(std::string_view anchor) {
  const auto& c = rule_catalog();
  return std::any_of(c.begin(), c.end(), [&](const Rule& r) { return r.anchor == anchor; });
}

std::vector<std::vector<int>> congruent_partitions(int k, int s, int r) {
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  const int base = ((r % 8) + 8) % 8 == 0 ? 8 : ((r % 8) + 8) % 8;
  std::vector<int> cur;
  std::function<void(int, int, int)> rec = [&](int left, int remaining, int cap) {
    if (left == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int v = std::min(cap, remaining - (left - 1) * base); v >= base; --v) {
      if ((v - base) % 8 != 0) continue;
      cur.push_back(v);
      rec(left - 1, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(k, s, s);
  return out;
}

RuleOutcome apply_rule(const Hypothesis& h, std::string_view rule_id) {
  const Rule& rule = find_rule(rule_id);
  RuleFn fn = rule_function(rule.id);
  if (!fn) throw InputError("rule '" + rule.id + "' is not a saturation rule");
  Builder b(h);
  fn(b);
  return b.finish(h);
}

}  // namespace mtclab
