#include "mtclab/abelian_group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "mtclab/errors.hpp"

namespace mtclab {

AbelianGroup::AbelianGroup(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw InputError("invariant factors must exceed 1");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
      throw InputError("invariant factors must form a divisibility chain");
    }
  }
}

std::int64_t AbelianGroup::order() const {
  std::int64_t n = 1;
  for (auto f : factors_) n *= f;
  return n;
}

AbelianGroup::Element AbelianGroup::add(const Element& a, const Element& b) const {
  Element out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = (a[i] + b[i]) % factors_[i];
  return out;
}

AbelianGroup::Element AbelianGroup::negate(const Element& a) const {
  Element out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = (factors_[i] - a[i]) % factors_[i];
  return out;
}

std::string AbelianGroup::format_element(const Element& a) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " x " : "") << 'Z' << factors_[i];
  return os.str();
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

GroupDecomposition decompose_abelian(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InputError("empty group table");
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[static_cast<std::size_t>(a)].size()) != n) throw InputError("group table is not square");
    for (int b = 0; b < n; ++b) {
      if (at(a, b) < 0 || at(a, b) >= n) throw InputError("group table entry out of range");
    }
    if (at(0, a) != a || at(a, 0) != a) throw InputError("label 0 is not the identity");
  }
  for (int a = 0; a < n; ++a) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int b = 0; b < n; ++b) seen[static_cast<std::size_t>(at(a, b))] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw InputError("group table row is not a permutation");
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) throw InputError("group table is not associative");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (at(a, b) != at(b, a)) {
        throw UnsupportedInput("nonabelian group: elements " + std::to_string(a) + " and " +
                               std::to_string(b) + " do not commute");
      }

  std::vector<std::int64_t> order(static_cast<std::size_t>(n), 1);
  for (int a = 0; a < n; ++a) {
    int x = a;
    while (x != 0) {
      x = at(x, a);
      ++order[static_cast<std::size_t>(a)];
    }
    if (a == 0) order[0] = 1;
  }

  // p-primary types from |{x : p^k x = 0}| = p^{sum_i min(k, e_i)}.
  std::map<std::int64_t, std::vector<int>> exponents;  // p -> e_1 >= e_2 >= ...
  for (auto p : prime_factors(n)) {
    std::vector<int> conj;  // conj[k-1] = #{i : e_i >= k}
    std::int64_t prev = 1;
    for (std::int64_t pk = p;; pk *= p) {
      std::int64_t count = 0;
      for (int a = 0; a < n; ++a) count += (pk % order[static_cast<std::size_t>(a)] == 0) ? 1 : 0;
      std::int64_t ratio = count / prev;
      int parts = 0;
      while (ratio > 1) {
        ratio /= p;
        ++parts;
      }
      if (parts == 0) break;
      conj.push_back(parts);
      prev = count;
    }
    std::vector<int> es(static_cast<std::size_t>(conj.empty() ? 0 : conj[0]), 0);
    for (std::size_t k = 0; k < conj.size(); ++k)
      for (int i = 0; i < conj[k]; ++i) es[static_cast<std::size_t>(i)] = static_cast<int>(k) + 1;
    exponents[p] = es;
  }
  std::size_t t = 0;
  for (const auto& [p, es] : exponents) t = std::max(t, es.size());
  std::vector<std::int64_t> factors(t, 1);  // descending while built
  for (const auto& [p, es] : exponents)
    for (std::size_t i = 0; i < es.size(); ++i)
      for (int e = 0; e < es[i]; ++e) factors[i] *= p;
  std::reverse(factors.begin(), factors.end());
  AbelianGroup group(factors);

  // Find generators g_t, ..., g_1 (largest factor first) spanning a direct sum.
  std::vector<int> gens(t, -1);
  auto span_size = [&](std::size_t from) {
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    std::vector<int> frontier{0};
    in[0] = true;
    while (!frontier.empty()) {
      const int x = frontier.back();
      frontier.pop_back();
      for (std::size_t i = from; i < t; ++i) {
        const int y = at(x, gens[i]);
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = true;
          frontier.push_back(y);
        }
      }
    }
    return std::count(in.begin(), in.end(), true);
  };
  std::function<bool(std::size_t)> choose = [&](std::size_t slot_plus_one) -> bool {
    if (slot_plus_one == 0) return true;
    const std::size_t slot = slot_plus_one - 1;
    std::int64_t expected = 1;
    for (std::size_t i = slot; i < t; ++i) expected *= factors[i];
    for (int g = 1; g < n; ++g) {
      if (order[static_cast<std::size_t>(g)] != factors[slot]) continue;
      gens[slot] = g;
      if (span_size(slot) == expected && choose(slot)) return true;
    }
    gens[slot] = -1;
    return false;
  };
  if (!choose(t)) throw InternalError("failed to find a basis for a finite abelian group");

  GroupDecomposition out{group, std::vector<AbelianGroup::Element>(static_cast<std::size_t>(n))};
  AbelianGroup::Element tuple(t, 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t i, int label) {
    if (i == t) {
      out.coordinates[static_cast<std::size_t>(label)] = tuple;
      return;
    }
    int x = label;
    for (std::int64_t a = 0; a < factors[i]; ++a) {
      tuple[i] = a;
      fill(i + 1, x);
      x = at(x, gens[i]);
    }
  };
  fill(0, 0);
  return out;
}

}  // namespace mtclab
