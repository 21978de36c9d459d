#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mtclab {

/// Tri-state integer unknown: a finite candidate set, or unbounded above
/// with a lower bound. A singleton set is a known value.
class Domain {
 public:
  Domain() = default;  ///< unbounded, >= 1
  static Domain at_least(std::int64_t lo);
  static Domain between(std::int64_t lo, std::int64_t hi);
  static Domain of(std::vector<std::int64_t> values);
  static Domain exactly(std::int64_t v) { return of({v}); }

  [[nodiscard]] bool is_finite() const { return finite_; }
  [[nodiscard]] bool empty() const { return finite_ && values_.empty(); }
  [[nodiscard]] bool is_known() const { return finite_ && values_.size() == 1; }
  [[nodiscard]] std::int64_t value() const;
  [[nodiscard]] std::int64_t min() const;
  [[nodiscard]] std::optional<std::int64_t> max() const;
  [[nodiscard]] const std::vector<std::int64_t>& values() const;  ///< finite only
  [[nodiscard]] bool contains(std::int64_t v) const;

  [[nodiscard]] Domain with_min(std::int64_t lo) const;
  [[nodiscard]] Domain with_max(std::int64_t hi) const;
  /// Keeps values satisfying pred; an unbounded domain must be bounded first.
  [[nodiscard]] Domain filtered(const std::function<bool(std::int64_t)>& pred) const;
  [[nodiscard]] bool is_subset_of(const Domain& other) const;

  /// "5", "{5,7}", "{}" or ">=5".
  [[nodiscard]] std::string to_string() const;

  bool operator==(const Domain&) const = default;

 private:
  bool finite_ = false;
  std::vector<std::int64_t> values_;
  std::int64_t lo_ = 1;
};

enum class Flag {
  Integral,
  OddDim,
  CptInsideCad,
  CadptTrivial,
  CadptNontrivial,
  Perfect,
  Pointed,
  NotPointed,
  AdPointed,
  AdNotPointed,
};

[[nodiscard]] std::string to_string(Flag f);

/// Classification state. Component-rank candidates list the identity
/// component first, then the remaining components with dual pairs adjacent.
struct Hypothesis {
  std::string id;
  int rank = 1;
  bool mnsd = false;
  bool modular = false;
  Domain dim;
  Domain dim_ad;
  Domain g_order;
  Domain g_ad_order;
  Domain rank_ad;
  std::optional<std::vector<std::vector<int>>> component_ranks;
  std::optional<std::vector<std::int64_t>> nonunit_dims;
  std::optional<std::vector<std::vector<std::int64_t>>> component_dims;  ///< identity component first
  std::optional<std::int64_t> cd_prime;
  std::set<Flag> flags;

  [[nodiscard]] bool has(Flag f) const { return flags.count(f) != 0; }
  /// One-line summary of every established field.
  [[nodiscard]] std::string describe() const;

  bool operator==(const Hypothesis& o) const;
};

/// MNSD modular hypothesis of the given rank with nothing else known.
[[nodiscard]] Hypothesis mnsd_modular_hypothesis(int rank, std::string id);

[[nodiscard]] bool is_prime(std::int64_t n);
[[nodiscard]] std::vector<std::int64_t> prime_divisors(std::int64_t n);
/// p if n = p^k (k >= 1), nullopt otherwise.
[[nodiscard]] std::optional<std::int64_t> prime_power_base(std::int64_t n);
[[nodiscard]] bool is_square_free(std::int64_t n);

}  // namespace mtclab
