#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mtclab {

using ObjectIndex = int;

/// One nonzero structure constant N^k_{ij} = value.
struct FusionEntry {
  ObjectIndex i = 0;
  ObjectIndex j = 0;
  ObjectIndex k = 0;
  std::int64_t value = 0;

  auto operator<=>(const FusionEntry&) const = default;
};

/// Grothendieck ring of a fusion category: simple objects 0..rank-1 with the
/// unit at index 0, a duality involution and nonnegative structure constants.
///
/// Coefficients are stored sparsely in canonical (i,j,k) order; a dense cube
/// is kept alongside for O(1) lookup. Values are immutable after construction.
class FusionRing {
 public:
  /// Builds a ring from sparse entries. Entries may come in any order; zero
  /// values are dropped. Throws InputError on a non-involutive dual, an index
  /// out of range, a negative value, or a repeated (i,j,k) triple.
  FusionRing(int rank, std::vector<ObjectIndex> dual, std::vector<FusionEntry> entries);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] static constexpr ObjectIndex unit() { return 0; }
  [[nodiscard]] ObjectIndex dual(ObjectIndex i) const { return dual_.at(static_cast<std::size_t>(i)); }
  [[nodiscard]] const std::vector<ObjectIndex>& duals() const { return dual_; }

  /// N^k_{ij}.
  [[nodiscard]] std::int64_t n(ObjectIndex i, ObjectIndex j, ObjectIndex k) const {
    return dense_[index(i, j, k)];
  }
  [[nodiscard]] const std::vector<FusionEntry>& entries() const { return entries_; }

  /// Constituents k of i⊗j (N^k_{ij} > 0), ascending.
  [[nodiscard]] std::vector<ObjectIndex> product_support(ObjectIndex i, ObjectIndex j) const;

  [[nodiscard]] bool is_commutative() const;

  /// Applies a relabeling perm (old index -> new index); perm[0] must be 0.
  [[nodiscard]] FusionRing relabeled(const std::vector<ObjectIndex>& perm) const;

  bool operator==(const FusionRing& other) const {
    return rank_ == other.rank_ && dual_ == other.dual_ && entries_ == other.entries_;
  }

 private:
  [[nodiscard]] std::size_t index(ObjectIndex i, ObjectIndex j, ObjectIndex k) const {
    const auto r = static_cast<std::size_t>(rank_);
    return (static_cast<std::size_t>(i) * r + static_cast<std::size_t>(j)) * r +
           static_cast<std::size_t>(k);
  }

  int rank_;
  std::vector<ObjectIndex> dual_;
  std::vector<FusionEntry> entries_;
  std::vector<std::int64_t> dense_;
};

enum class Axiom { Unit, Duality, Associativity, DualSymmetry };

[[nodiscard]] std::string to_string(Axiom axiom);

struct Violation {
  Axiom axiom;
  std::vector<ObjectIndex> witness;  // (i,j,k) or (i,j,k,l) for associativity
  std::string detail;
};

using ValidationReport = std::vector<Violation>;

/// Checks unit, duality, associativity and dual-symmetry axioms. Empty report
/// means the ring is valid. Structural problems (bad dual, out-of-range
/// indices) are rejected earlier by the FusionRing constructor.
[[nodiscard]] ValidationReport validate_fusion_ring(const FusionRing& ring);

/// True iff the unit is the only self-dual object.
[[nodiscard]] bool is_mnsd(const FusionRing& ring);

/// External product: object (i, i') has index i * b.rank() + i'.
[[nodiscard]] FusionRing deligne_product(const FusionRing& a, const FusionRing& b);

/// Group ring of Z_n: object j is the residue j, dual(j) = -j.
[[nodiscard]] FusionRing cyclic_group_ring(int n);

/// Search for a unit-preserving relabeling carrying a onto b; returns the
/// permutation (a-index -> b-index) if one exists.
[[nodiscard]] std::optional<std::vector<ObjectIndex>> find_isomorphism(const FusionRing& a,
                                                                       const FusionRing& b);

/// For MNSD rings: relabels so that dual pairs sit at (2i-1, 2i), ordered by
/// the smaller original index of each pair.
[[nodiscard]] FusionRing with_adjacent_dual_pairs(const FusionRing& ring);

}  // namespace mtclab
