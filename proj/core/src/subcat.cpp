#include "mtclab/subcat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mtclab/errors.hpp"

namespace mtclab {

bool Subring::contains(ObjectIndex i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

bool Subring::is_subset_of(const Subring& other) const {
  return std::includes(other.members.begin(), other.members.end(), members.begin(), members.end());
}

Subring whole_ring(const FusionRing& ring) {
  Subring s;
  s.members.resize(static_cast<std::size_t>(ring.rank()));
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

Subring trivial_subring() { return Subring{{0}}; }

Subring generated_subring(const FusionRing& ring, const std::vector<ObjectIndex>& seed) {
  std::set<ObjectIndex> in{0};
  for (auto s : seed) {
    if (s < 0 || s >= ring.rank()) throw InputError("seed index out of range");
    in.insert(s);
    in.insert(ring.dual(s));
  }
  std::vector<ObjectIndex> frontier(in.begin(), in.end());
  while (!frontier.empty()) {
    std::vector<ObjectIndex> next;
    const std::vector<ObjectIndex> current(in.begin(), in.end());
    for (auto a : frontier) {
      for (auto b : current) {
        for (auto pair : {std::pair{a, b}, std::pair{b, a}}) {
          for (auto k : ring.product_support(pair.first, pair.second)) {
            if (in.insert(k).second) next.push_back(k);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return Subring{std::vector<ObjectIndex>(in.begin(), in.end())};
}

FusionRing restrict_ring(const FusionRing& ring, const Subring& sub) {
  std::map<ObjectIndex, ObjectIndex> local;
  for (std::size_t i = 0; i < sub.members.size(); ++i) local[sub.members[i]] = static_cast<ObjectIndex>(i);
  std::vector<ObjectIndex> dual;
  for (auto m : sub.members) dual.push_back(local.at(ring.dual(m)));
  std::vector<FusionEntry> entries;
  for (const auto& e : ring.entries()) {
    if (local.count(e.i) && local.count(e.j)) {
      auto k = local.find(e.k);
      if (k == local.end()) throw InputError("subring is not fusion-closed");
      entries.push_back({local[e.i], local[e.j], k->second, e.value});
    }
  }
  return FusionRing(sub.rank(), std::move(dual), std::move(entries));
}

bool is_invertible(const FusionRing& ring, ObjectIndex x) {
  std::int64_t total = 0;
  for (ObjectIndex k = 0; k < ring.rank(); ++k) total += ring.n(x, ring.dual(x), k);
  return total == 1 && ring.n(x, ring.dual(x), 0) == 1;
}

namespace {

InvertibleGroup group_of(const FusionRing& ring, const std::vector<ObjectIndex>& members) {
  std::map<ObjectIndex, int> local;
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> table(members.size(), std::vector<int>(members.size()));
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b < members.size(); ++b) {
      auto support = ring.product_support(members[a], members[b]);
      if (support.size() != 1 || !local.count(support[0])) {
        throw InternalError("invertible objects do not form a group");
      }
      table[a][b] = local[support[0]];
    }
  }
  auto dec = decompose_abelian(table);
  return InvertibleGroup{members, dec.group, dec.coordinates};
}

}  // namespace

PointedPart pointed_subring(const FusionRing& ring) {
  std::vector<ObjectIndex> inv;
  for (ObjectIndex x = 0; x < ring.rank(); ++x) {
    if (is_invertible(ring, x)) inv.push_back(x);
  }
  return PointedPart{Subring{inv}, group_of(ring, inv)};
}

Subring adjoint_of(const FusionRing& ring, const Subring& sub) {
  std::vector<ObjectIndex> seed;
  for (auto x : sub.members) {
    for (auto k : ring.product_support(x, ring.dual(x))) seed.push_back(k);
  }
  return generated_subring(ring, seed);
}

Subring adjoint_subring(const FusionRing& ring) { return adjoint_of(ring, whole_ring(ring)); }

std::vector<std::vector<ObjectIndex>> Grading::components() const {
  std::vector<AbelianGroup::Element> seen;
  std::vector<std::vector<ObjectIndex>> out;
  for (std::size_t x = 0; x < deg.size(); ++x) {
    auto it = std::find(seen.begin(), seen.end(), deg[x]);
    if (it == seen.end()) {
      seen.push_back(deg[x]);
      out.push_back({static_cast<ObjectIndex>(x)});
    } else {
      out[static_cast<std::size_t>(it - seen.begin())].push_back(static_cast<ObjectIndex>(x));
    }
  }
  return out;
}

Grading universal_grading(const FusionRing& ring) {
  const auto r = static_cast<std::size_t>(ring.rank());
  const Subring ad = adjoint_subring(ring);
  std::vector<std::size_t> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (ObjectIndex i = 0; i < ring.rank(); ++i)
    for (auto j : ad.members)
      for (auto k : ring.product_support(i, j)) unite(static_cast<std::size_t>(i), static_cast<std::size_t>(k));

  // Class labels ordered by smallest member; the unit's class gets label 0.
  std::map<std::size_t, int> label;
  std::vector<ObjectIndex> rep;
  for (std::size_t x = 0; x < r; ++x) {
    auto root = find(x);
    if (!label.count(root)) {
      label[root] = static_cast<int>(rep.size());
      rep.push_back(static_cast<ObjectIndex>(x));
    }
  }
  const auto classes = rep.size();
  std::vector<std::vector<int>> table(classes, std::vector<int>(classes));
  for (std::size_t a = 0; a < classes; ++a) {
    for (std::size_t b = 0; b < classes; ++b) {
      auto support = ring.product_support(rep[a], rep[b]);
      table[a][b] = label[find(static_cast<std::size_t>(support.at(0)))];
      for (auto k : support) {
        if (label[find(static_cast<std::size_t>(k))] != table[a][b]) {
          throw InternalError("adjoint cosets do not multiply homogeneously");
        }
      }
    }
  }
  auto dec = decompose_abelian(table);
  Grading g{dec.group, {}};
  for (std::size_t x = 0; x < r; ++x) {
    g.deg.push_back(dec.coordinates[static_cast<std::size_t>(label[find(x)])]);
  }
  return g;
}

Subring trivial_component(const Grading& grading) {
  Subring s;
  const auto e = grading.group.identity();
  for (std::size_t x = 0; x < grading.deg.size(); ++x) {
    if (grading.deg[x] == e) s.members.push_back(static_cast<ObjectIndex>(x));
  }
  return s;
}

std::vector<ObjectIndex> stabilizer(const FusionRing& ring, ObjectIndex x) {
  std::vector<ObjectIndex> out;
  for (ObjectIndex g = 0; g < ring.rank(); ++g) {
    if (is_invertible(ring, g) && ring.n(g, x, x) == 1) out.push_back(g);
  }
  for (auto a : out)
    for (auto b : out) {
      auto support = ring.product_support(a, b);
      if (support.size() != 1 || !std::binary_search(out.begin(), out.end(), support[0])) {
        throw InternalError("stabilizer is not closed under multiplication");
      }
    }
  return out;
}

BigG big_G(const FusionRing& ring) {
  const Subring ad = adjoint_subring(ring);
  BigG out;
  bool first = true;
  for (ObjectIndex x = 0; x < ring.rank(); ++x) {
    if (is_invertible(ring, x) || ad.contains(x)) continue;
    auto st = stabilizer(ring, x);
    if (first) {
      out.members = st;
      first = false;
    } else {
      std::vector<ObjectIndex> both;
      std::set_intersection(out.members.begin(), out.members.end(), st.begin(), st.end(),
                            std::back_inserter(both));
      out.members = std::move(both);
    }
  }
  if (first) {
    out.empty_family = true;
    for (auto g : ad.members) {
      if (is_invertible(ring, g)) out.members.push_back(g);
    }
  }
  return out;
}

CentralSeries upper_central_series(const FusionRing& ring) {
  CentralSeries cs;
  cs.terms.push_back(whole_ring(ring));
  for (int step = 0; step < ring.rank(); ++step) {
    Subring next = adjoint_of(ring, cs.terms.back());
    const bool stationary = next == cs.terms.back();
    cs.terms.push_back(std::move(next));
    if (stationary || cs.terms.back().rank() == 1) break;
  }
  cs.nilpotent = cs.terms.back().rank() == 1;
  return cs;
}

}  // namespace mtclab
