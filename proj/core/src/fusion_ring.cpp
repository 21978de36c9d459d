#include "mtclab/fusion_ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "mtclab/errors.hpp"

namespace mtclab {

FusionRing::FusionRing(int rank, std::vector<ObjectIndex> dual, std::vector<FusionEntry> entries)
    : rank_(rank), dual_(std::move(dual)) {
  if (rank_ < 1) throw InputError("fusion ring rank must be positive");
  if (static_cast<int>(dual_.size()) != rank_) {
    throw InputError("dual has " + std::to_string(dual_.size()) + " entries, expected " +
                     std::to_string(rank_));
  }
  for (int i = 0; i < rank_; ++i) {
    const int d = dual_[static_cast<std::size_t>(i)];
    if (d < 0 || d >= rank_) {
      throw InputError("dual(" + std::to_string(i) + ") = " + std::to_string(d) + " out of range");
    }
    if (dual_[static_cast<std::size_t>(d)] != i) {
      throw InputError("dual is not an involutive permutation at index " + std::to_string(i));
    }
  }
  if (dual_[0] != 0) throw InputError("dual(unit) must be the unit");

  const auto r = static_cast<std::size_t>(rank_);
  dense_.assign(r * r * r, 0);
  std::sort(entries.begin(), entries.end(), [](const FusionEntry& a, const FusionEntry& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const auto& en = entries[e];
    for (const int x : {en.i, en.j, en.k}) {
      if (x < 0 || x >= rank_) {
        throw InputError("coefficient index " + std::to_string(x) + " out of range");
      }
    }
    if (en.value < 0) throw InputError("negative fusion coefficient");
    if (e > 0 && std::tie(entries[e - 1].i, entries[e - 1].j, entries[e - 1].k) ==
                     std::tie(en.i, en.j, en.k)) {
      throw InputError("duplicate coefficient triple (" + std::to_string(en.i) + "," +
                       std::to_string(en.j) + "," + std::to_string(en.k) + ")");
    }
    if (en.value == 0) continue;
    dense_[index(en.i, en.j, en.k)] = en.value;
    entries_.push_back(en);
  }
}

std::vector<ObjectIndex> FusionRing::product_support(ObjectIndex i, ObjectIndex j) const {
  std::vector<ObjectIndex> out;
  for (int k = 0; k < rank_; ++k) {
    if (n(i, j, k) > 0) out.push_back(k);
  }
  return out;
}

bool FusionRing::is_commutative() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      for (int k = 0; k < rank_; ++k)
        if (n(i, j, k) != n(j, i, k)) return false;
  return true;
}

FusionRing FusionRing::relabeled(const std::vector<ObjectIndex>& perm) const {
  if (static_cast<int>(perm.size()) != rank_ || perm[0] != 0) {
    throw InputError("relabeling must be a permutation fixing the unit");
  }
  std::vector<ObjectIndex> dual(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    dual[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
        perm[static_cast<std::size_t>(dual_[static_cast<std::size_t>(i)])];
  }
  std::vector<FusionEntry> entries;
  entries.reserve(entries_.size());
  for (const auto& e : entries_) {
    entries.push_back({perm[static_cast<std::size_t>(e.i)], perm[static_cast<std::size_t>(e.j)],
                       perm[static_cast<std::size_t>(e.k)], e.value});
  }
  return FusionRing(rank_, std::move(dual), std::move(entries));
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Unit: return "unit";
    case Axiom::Duality: return "duality";
    case Axiom::Associativity: return "associativity";
    case Axiom::DualSymmetry: return "dual-symmetry";
  }
  return "?";
}

namespace {

std::string tuple_string(std::initializer_list<int> xs) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int x : xs) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace

ValidationReport validate_fusion_ring(const FusionRing& ring) {
  ValidationReport report;
  const int r = ring.rank();

  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) {
      const std::int64_t expect = j == k ? 1 : 0;
      if (ring.n(0, j, k) != expect) {
        report.push_back({Axiom::Unit, {0, j, k},
                          "N^" + std::to_string(k) + "_{0," + std::to_string(j) +
                              "} = " + std::to_string(ring.n(0, j, k))});
      }
      if (j != 0 && ring.n(j, 0, k) != expect) {
        report.push_back({Axiom::Unit, {j, 0, k},
                          "N^" + std::to_string(k) + "_{" + std::to_string(j) +
                              ",0} = " + std::to_string(ring.n(j, 0, k))});
      }
    }
  }

  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const std::int64_t expect = j == ring.dual(i) ? 1 : 0;
      if (ring.n(i, j, 0) != expect) {
        report.push_back({Axiom::Duality, {i, j, 0},
                          "N^0_{" + std::to_string(i) + "," + std::to_string(j) +
                              "} = " + std::to_string(ring.n(i, j, 0)) + ", expected " +
                              std::to_string(expect)});
      }
    }
  }

  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        const auto v = ring.n(i, j, k);
        const auto a = ring.n(ring.dual(j), ring.dual(i), ring.dual(k));
        const auto b = ring.n(j, ring.dual(k), ring.dual(i));
        if (v != a || v != b) {
          report.push_back({Axiom::DualSymmetry, {i, j, k},
                            "N^k_{ij}=" + std::to_string(v) + ", N^{k*}_{j*i*}=" +
                                std::to_string(a) + ", N^{i*}_{j,k*}=" + std::to_string(b)});
        }
      }
    }
  }

  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) {
        for (int l = 0; l < r; ++l) {
          std::int64_t left = 0;
          std::int64_t right = 0;
          for (int m = 0; m < r; ++m) {
            left += ring.n(i, j, m) * ring.n(m, k, l);
            right += ring.n(j, k, m) * ring.n(i, m, l);
          }
          if (left != right) {
            report.push_back({Axiom::Associativity, {i, j, k, l},
                              "((" + std::to_string(i) + "," + std::to_string(j) + ")," +
                                  std::to_string(k) + ") -> " + std::to_string(l) + ": " +
                                  std::to_string(left) + " vs " + std::to_string(right) + " at " +
                                  tuple_string({i, j, k, l})});
          }
        }
      }
    }
  }
  return report;
}

bool is_mnsd(const FusionRing& ring) {
  for (int i = 1; i < ring.rank(); ++i) {
    if (ring.dual(i) == i) return false;
  }
  return true;
}

FusionRing deligne_product(const FusionRing& a, const FusionRing& b) {
  const int rb = b.rank();
  const int rank = a.rank() * rb;
  std::vector<ObjectIndex> dual(static_cast<std::size_t>(rank));
  for (int i = 0; i < a.rank(); ++i)
    for (int ip = 0; ip < rb; ++ip)
      dual[static_cast<std::size_t>(i * rb + ip)] = a.dual(i) * rb + b.dual(ip);
  std::vector<FusionEntry> entries;
  for (const auto& ea : a.entries())
    for (const auto& eb : b.entries())
      entries.push_back({ea.i * rb + eb.i, ea.j * rb + eb.j, ea.k * rb + eb.k, ea.value * eb.value});
  return FusionRing(rank, std::move(dual), std::move(entries));
}

FusionRing cyclic_group_ring(int n) {
  if (n < 1) throw InputError("group order must be positive");
  std::vector<ObjectIndex> dual(static_cast<std::size_t>(n));
  std::vector<FusionEntry> entries;
  for (int i = 0; i < n; ++i) {
    dual[static_cast<std::size_t>(i)] = (n - i) % n;
    for (int j = 0; j < n; ++j) entries.push_back({i, j, (i + j) % n, 1});
  }
  return FusionRing(n, std::move(dual), std::move(entries));
}

std::optional<std::vector<ObjectIndex>> find_isomorphism(const FusionRing& a, const FusionRing& b) {
  const int r = a.rank();
  if (b.rank() != r || a.entries().size() != b.entries().size()) return std::nullopt;

  auto signature = [](const FusionRing& ring, int x) {
    std::vector<std::int64_t> sig;
    for (int j = 0; j < ring.rank(); ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < ring.rank(); ++k) s += ring.n(x, j, k);
      sig.push_back(s);
    }
    std::sort(sig.begin(), sig.end());
    sig.push_back(x == ring.dual(x) ? 1 : 0);
    return sig;
  };
  std::vector<std::vector<std::int64_t>> sig_a(static_cast<std::size_t>(r));
  std::vector<std::vector<std::int64_t>> sig_b(static_cast<std::size_t>(r));
  for (int x = 0; x < r; ++x) {
    sig_a[static_cast<std::size_t>(x)] = signature(a, x);
    sig_b[static_cast<std::size_t>(x)] = signature(b, x);
  }

  std::vector<ObjectIndex> f(static_cast<std::size_t>(r), -1);
  std::vector<bool> used(static_cast<std::size_t>(r), false);
  f[0] = 0;
  used[0] = true;

  auto consistent = [&](int x) {
    const int fx = f[static_cast<std::size_t>(x)];
    const int dx = a.dual(x);
    if (f[static_cast<std::size_t>(dx)] >= 0 && f[static_cast<std::size_t>(dx)] != b.dual(fx)) {
      return false;
    }
    for (int i = 0; i <= x; ++i)
      for (int j = 0; j <= x; ++j)
        for (int k = 0; k <= x; ++k) {
          if (i != x && j != x && k != x) continue;
          if (a.n(i, j, k) != b.n(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)],
                                  f[static_cast<std::size_t>(k)])) {
            return false;
          }
        }
    return true;
  };

  std::function<bool(int)> assign = [&](int x) -> bool {
    if (x == r) return true;
    for (int y = 1; y < r; ++y) {
      if (used[static_cast<std::size_t>(y)]) continue;
      if (sig_a[static_cast<std::size_t>(x)] != sig_b[static_cast<std::size_t>(y)]) continue;
      f[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = true;
      if (consistent(x) && assign(x + 1)) return true;
      used[static_cast<std::size_t>(y)] = false;
      f[static_cast<std::size_t>(x)] = -1;
    }
    return false;
  };
  if (!consistent(0) || !assign(1)) return std::nullopt;
  return f;
}

FusionRing with_adjacent_dual_pairs(const FusionRing& ring) {
  if (!is_mnsd(ring)) throw InputError("adjacent dual-pair labeling requires an MNSD ring");
  std::vector<ObjectIndex> perm(static_cast<std::size_t>(ring.rank()), -1);
  perm[0] = 0;
  int next = 1;
  for (int i = 1; i < ring.rank(); ++i) {
    if (perm[static_cast<std::size_t>(i)] >= 0) continue;
    perm[static_cast<std::size_t>(i)] = next++;
    perm[static_cast<std::size_t>(ring.dual(i))] = next++;
  }
  return ring.relabeled(perm);
}

}  // namespace mtclab
