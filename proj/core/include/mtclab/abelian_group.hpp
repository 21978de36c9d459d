#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mtclab {

/// Finite abelian group Z_{n_1} x ... x Z_{n_t} in invariant-factor form,
/// n_1 | n_2 | ... | n_t, all n_i > 1. The trivial group has no factors.
class AbelianGroup {
 public:
  using Element = std::vector<std::int64_t>;

  AbelianGroup() = default;
  /// Throws InputError unless the divisibility chain holds.
  explicit AbelianGroup(std::vector<std::int64_t> factors);

  [[nodiscard]] const std::vector<std::int64_t>& factors() const { return factors_; }
  [[nodiscard]] std::int64_t order() const;
  [[nodiscard]] bool is_trivial() const { return factors_.empty(); }
  [[nodiscard]] bool is_cyclic() const { return factors_.size() <= 1; }

  [[nodiscard]] Element identity() const { return Element(factors_.size(), 0); }
  [[nodiscard]] Element add(const Element& a, const Element& b) const;
  [[nodiscard]] Element negate(const Element& a) const;
  [[nodiscard]] std::string format_element(const Element& a) const;

  /// "1" for the trivial group, otherwise e.g. "Z3 x Z9".
  [[nodiscard]] std::string to_string() const;

  bool operator==(const AbelianGroup&) const = default;

 private:
  std::vector<std::int64_t> factors_;
};

/// Result of identifying a finite group given by a Cayley table.
struct GroupDecomposition {
  AbelianGroup group;
  std::vector<AbelianGroup::Element> coordinates;  ///< label -> tuple
};

/// `table[a][b]` is the label of a*b; label 0 must be the identity.
/// Throws InputError if the table is not a group and UnsupportedInput if the
/// group is nonabelian.
[[nodiscard]] GroupDecomposition decompose_abelian(const std::vector<std::vector<int>>& table);

}  // namespace mtclab
