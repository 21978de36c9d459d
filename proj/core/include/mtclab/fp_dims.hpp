#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mtclab/fusion_ring.hpp"
#include "mtclab/rational.hpp"

namespace mtclab {

struct RationalInterval {
  Rational lo;
  Rational hi;

  [[nodiscard]] Rational width() const { return hi - lo; }
  [[nodiscard]] bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  [[nodiscard]] bool overlaps(const RationalInterval& o) const { return lo <= o.hi && o.lo <= hi; }
  bool operator==(const RationalInterval&) const = default;
};

/// A dimension that is either a certified exact integer or a certified
/// enclosing interval with rational endpoints.
class DimValue {
 public:
  DimValue(std::int64_t exact) : value_(exact) {}  // NOLINT(google-explicit-constructor)
  DimValue(RationalInterval interval) : value_(std::move(interval)) {}  // NOLINT

  [[nodiscard]] bool is_exact() const { return std::holds_alternative<std::int64_t>(value_); }
  [[nodiscard]] std::int64_t exact() const { return std::get<std::int64_t>(value_); }
  [[nodiscard]] RationalInterval enclosure() const;
  [[nodiscard]] double approx() const;

  /// True if the two certified values may denote the same real number.
  [[nodiscard]] bool may_equal(const DimValue& other) const;

  /// Exact integers as "n"; intervals as "[lo, hi]" with rational endpoints.
  [[nodiscard]] std::string to_string() const;

  bool operator==(const DimValue&) const = default;

 private:
  std::variant<std::int64_t, RationalInterval> value_;
};

struct FPDimData {
  std::vector<DimValue> dims;
  DimValue total_dim{std::int64_t{0}};
  bool integral = false;
  std::vector<DimValue> cd_set;  ///< distinct values, ascending
};

struct FpDimOptions {
  Rational max_width{1, 1000000000};
  int iteration_cap = 100000;
};

/// Frobenius-Perron dimensions: exact integers when an integer positive
/// solution of d_i d_j = sum_k N^k_{ij} d_k exists, otherwise intervals
/// certified by Collatz-Wielandt bounds evaluated in exact rational
/// arithmetic. Throws CertificationFailure if the width target is missed.
[[nodiscard]] FPDimData fp_dims(const FusionRing& ring, const FpDimOptions& options = {});

/// Exact check of d_i d_j = sum_k N^k_{ij} d_k for an integer vector.
[[nodiscard]] bool satisfies_homomorphism(const FusionRing& ring,
                                          const std::vector<std::int64_t>& dims);

}  // namespace mtclab
