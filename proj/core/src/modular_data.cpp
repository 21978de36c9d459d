#include "mtclab/modular_data.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mtclab/errors.hpp"

namespace mtclab {

ModularData::ModularData(FusionRing ring, int conductor, std::vector<std::int64_t> twists, SMatrix s)
    : ring_(std::move(ring)), n_(conductor), t_(std::move(twists)), s_(std::move(s)) {
  if (n_ < 1) throw InputError("conductor must be positive");
  const auto r = static_cast<std::size_t>(ring_.rank());
  if (t_.size() != r) throw InputError("twist vector length differs from rank");
  for (auto& t : t_) t = ((t % n_) + n_) % n_;
  if (s_.size() != r) throw InputError("S matrix row count differs from rank");
  for (std::size_t i = 0; i < r; ++i) {
    if (s_[i].size() != r) throw InputError("S matrix row " + std::to_string(i) + " has wrong length");
    for (auto& e : s_[i]) {
      if (e.conductor() != n_) e = e.embed(n_);
    }
  }
}

Cyclotomic ModularData::theta(ObjectIndex x) const {
  return Cyclotomic::zeta_power(n_, t_[static_cast<std::size_t>(x)]);
}

Cyclotomic ModularData::total_dim() const {
  Cyclotomic total(n_);
  for (ObjectIndex x = 0; x < rank(); ++x) total += dim(x) * dim(x);
  return total;
}

std::vector<MdViolation> verify_balancing(const ModularData& md) {
  std::vector<MdViolation> out;
  const auto& ring = md.ring();
  const int r = md.rank();
  if (md.twists()[0] != 0) out.push_back({"unit-twist", 0, 0});
  for (ObjectIndex x = 0; x < r; ++x) {
    if (md.twists()[static_cast<std::size_t>(x)] != md.twists()[static_cast<std::size_t>(ring.dual(x))]) {
      out.push_back({"dual-twist", x, ring.dual(x)});
    }
  }
  for (ObjectIndex x = 0; x < r; ++x)
    for (ObjectIndex y = x + 1; y < r; ++y)
      if (!(md.s(x, y) == md.s(y, x))) out.push_back({"symmetry", x, y});

  std::vector<Cyclotomic> theta_d;
  for (ObjectIndex z = 0; z < r; ++z) theta_d.push_back(md.theta(z) * md.dim(z));
  const int n = md.conductor();
  for (ObjectIndex x = 0; x < r; ++x) {
    for (ObjectIndex y = 0; y < r; ++y) {
      Cyclotomic sum(n);
      for (auto z : ring.product_support(x, y)) {
        sum += Cyclotomic(n, Rational(static_cast<long>(ring.n(x, y, z)))) * theta_d[static_cast<std::size_t>(z)];
      }
      const std::int64_t e = -md.twists()[static_cast<std::size_t>(x)] - md.twists()[static_cast<std::size_t>(y)];
      if (!(Cyclotomic::zeta_power(n, e) * sum == md.s(x, y))) out.push_back({"balancing", x, y});
    }
  }
  return out;
}

bool is_modular(const ModularData& md) { return !determinant(md.S()).is_zero(); }

Subring centralizer(const ModularData& md, const Subring& k) {
  Subring out;
  for (ObjectIndex y = 0; y < md.rank(); ++y) {
    bool all = true;
    for (auto x : k.members) {
      if (!(md.s(x, y) == md.dim(x) * md.dim(y))) {
        all = false;
        break;
      }
    }
    if (all) out.members.push_back(y);
  }
  return out;
}

std::vector<std::string> check_centralizer_identities(const ModularData& md) {
  std::vector<std::string> failed;
  const auto pt = pointed_subring(md.ring()).subring;
  const auto ad = adjoint_subring(md.ring());
  if (!(centralizer(md, pt) == ad)) failed.emplace_back("C_pt' = C_ad");
  if (!(centralizer(md, ad) == pt)) failed.emplace_back("C_ad' = C_pt");
  return failed;
}

std::vector<Cyclotomic> xi_values(const ModularData& md, ObjectIndex g) {
  if (g < 0 || g >= md.rank() || !is_invertible(md.ring(), g)) {
    throw InputError("object " + std::to_string(g) + " is not invertible");
  }
  std::vector<Cyclotomic> out;
  for (ObjectIndex x = 0; x < md.rank(); ++x) {
    if (md.dim(x).is_zero()) throw InternalError("zero quantum dimension");
    out.push_back(md.s(g, x) / md.dim(x));
  }
  return out;
}

std::map<ObjectIndex, ObjectIndex> zero_witnesses(const ModularData& md) {
  std::map<ObjectIndex, ObjectIndex> out;
  for (ObjectIndex x = 0; x < md.rank(); ++x) {
    if (stabilizer(md.ring(), x).size() <= 1) continue;
    bool found = false;
    for (ObjectIndex y = 0; y < md.rank() && !found; ++y) {
      if (md.s(x, y).is_zero()) {
        out[x] = y;
        found = true;
      }
    }
    if (!found) {
      throw TheoremViolation("object " + std::to_string(x) +
                             " has a nontrivial stabilizer but no zero in its S-row");
    }
  }
  return out;
}

std::vector<OrbitViolation> orbit_zero_check(const ModularData& md) {
  const auto& ring = md.ring();
  const auto inv = pointed_subring(ring).group.members;
  std::vector<OrbitViolation> out;
  std::set<std::pair<ObjectIndex, ObjectIndex>> seen;
  for (ObjectIndex x = 0; x < md.rank(); ++x) {
    for (ObjectIndex z = 0; z < md.rank(); ++z) {
      if (!md.s(x, z).is_zero()) continue;
      for (auto h : inv) {
        const ObjectIndex hx = ring.product_support(h, x).at(0);
        if (md.s(hx, z).is_zero()) continue;
        if (seen.insert({std::min(hx, z), std::max(hx, z)}).second) out.push_back({x, z, h, hx});
      }
    }
  }
  return out;
}

std::vector<std::pair<ObjectIndex, ObjectIndex>> equal_row_detector(const ModularData& md) {
  std::vector<std::pair<ObjectIndex, ObjectIndex>> out;
  for (ObjectIndex i = 0; i < md.rank(); ++i)
    for (ObjectIndex j = i + 1; j < md.rank(); ++j)
      if (md.S()[static_cast<std::size_t>(i)] == md.S()[static_cast<std::size_t>(j)]) out.emplace_back(i, j);
  return out;
}

std::optional<std::vector<std::int64_t>> integer_dims(const ModularData& md) {
  std::vector<std::int64_t> out;
  for (ObjectIndex x = 0; x < md.rank(); ++x) {
    const auto& d = md.dim(x);
    if (!d.is_rational()) return std::nullopt;
    const Rational q = d.rational_value();
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
    out.push_back(q.get_num().get_si());
  }
  return out;
}

PerfectReport perfect_checks(const ModularData& md, bool bypass_preconditions) {
  PerfectReport report;
  if (!bypass_preconditions) {
    if (!is_modular(md)) {
      report.reason = "S is degenerate";
      return report;
    }
    if (pointed_subring(md.ring()).group.order() != 1) {
      report.reason = "G(C) is nontrivial";
      return report;
    }
    const auto total = md.total_dim();
    bool odd = false;
    if (total.is_rational()) {
      const Rational q = total.rational_value();
      odd = q.get_den() == 1 && mpz_odd_p(q.get_num().get_mpz_t()) != 0;
    }
    if (!odd) {
      report.reason = "total dimension is not an odd integer";
      return report;
    }
  }
  report.applicable = true;
  const auto& ring = md.ring();
  std::set<std::vector<ObjectIndex>> done;
  for (ObjectIndex x = 1; x < md.rank(); ++x) {
    const Subring k = generated_subring(ring, {x});
    if (!done.insert(k.members).second) continue;
    const Subring kc = centralizer(md, k);
    std::string name = "<" + std::to_string(x) + ">";
    if (k.is_subset_of(kc)) report.failures.push_back("symmetric subring " + name);
    std::vector<ObjectIndex> both;
    std::set_intersection(k.members.begin(), k.members.end(), kc.members.begin(), kc.members.end(),
                          std::back_inserter(both));
    if (both.size() != 1) report.failures.push_back("nontrivial k ∩ k' for " + name);
  }
  if (auto dims = integer_dims(md)) {
    for (ObjectIndex x = 0; x < md.rank(); ++x)
      for (ObjectIndex y = x; y < md.rank(); ++y) {
        const auto dx = (*dims)[static_cast<std::size_t>(x)];
        const auto dy = (*dims)[static_cast<std::size_t>(y)];
        if (std::gcd(dx, dy) != 1) continue;
        const auto& s = md.s(x, y);
        if (!s.is_zero() && !(s == md.dim(x) * md.dim(y))) {
          report.failures.push_back("s_{" + std::to_string(x) + "," + std::to_string(y) +
                                    "} not in {0, d_X d_Y}");
        }
      }
  }
  return report;
}

ModularData modular_product(const ModularData& a, const ModularData& b) {
  const int n = std::lcm(a.conductor(), b.conductor());
  const auto ra = static_cast<std::size_t>(a.rank());
  const auto rb = static_cast<std::size_t>(b.rank());
  std::vector<std::int64_t> twists;
  SMatrix s(ra * rb, std::vector<Cyclotomic>(ra * rb));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t i2 = 0; i2 < rb; ++i2) {
      twists.push_back(a.twists()[i] * (n / a.conductor()) + b.twists()[i2] * (n / b.conductor()));
      for (std::size_t j = 0; j < ra; ++j)
        for (std::size_t j2 = 0; j2 < rb; ++j2)
          s[i * rb + i2][j * rb + j2] = a.S()[i][j].embed(n) * b.S()[i2][j2].embed(n);
    }
  return ModularData(deligne_product(a.ring(), b.ring()), n, std::move(twists), std::move(s));
}

ModularData restrict_modular(const ModularData& md, const Subring& sub) {
  std::vector<std::int64_t> twists;
  SMatrix s;
  for (auto x : sub.members) {
    twists.push_back(md.twists()[static_cast<std::size_t>(x)]);
    std::vector<Cyclotomic> row;
    for (auto y : sub.members) row.push_back(md.s(x, y));
    s.push_back(std::move(row));
  }
  return ModularData(restrict_ring(md.ring(), sub), md.conductor(), std::move(twists), std::move(s));
}

}  // namespace mtclab
