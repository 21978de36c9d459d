#pragma once

#include <vector>

#include "mtclab/abelian_group.hpp"
#include "mtclab/fusion_ring.hpp"

namespace mtclab {

/// Fusion-closed, dual-closed set of objects containing the unit.
struct Subring {
  std::vector<ObjectIndex> members;  ///< ascending

  [[nodiscard]] int rank() const { return static_cast<int>(members.size()); }
  [[nodiscard]] bool contains(ObjectIndex i) const;
  [[nodiscard]] bool is_subset_of(const Subring& other) const;
  bool operator==(const Subring&) const = default;
};

[[nodiscard]] Subring whole_ring(const FusionRing& ring);
[[nodiscard]] Subring trivial_subring();

/// Smallest subring containing seed and the unit.
[[nodiscard]] Subring generated_subring(const FusionRing& ring, const std::vector<ObjectIndex>& seed);

/// The ring structure on a subring, objects renumbered in ascending order.
[[nodiscard]] FusionRing restrict_ring(const FusionRing& ring, const Subring& sub);

/// X is invertible iff X ⊗ X* = 1 exactly.
[[nodiscard]] bool is_invertible(const FusionRing& ring, ObjectIndex x);

/// A set of invertible objects with its group structure; coordinates[i] is
/// the tuple of members[i].
struct InvertibleGroup {
  std::vector<ObjectIndex> members;
  AbelianGroup group;
  std::vector<AbelianGroup::Element> coordinates;

  [[nodiscard]] int order() const { return static_cast<int>(members.size()); }
};

/// C_pt together with G(C). Throws UnsupportedInput for a nonabelian G(C).
struct PointedPart {
  Subring subring;
  InvertibleGroup group;
};
[[nodiscard]] PointedPart pointed_subring(const FusionRing& ring);

[[nodiscard]] Subring adjoint_subring(const FusionRing& ring);

/// Adjoint of a subring D: generated by X ⊗ X* for X in D.
[[nodiscard]] Subring adjoint_of(const FusionRing& ring, const Subring& sub);

struct Grading {
  AbelianGroup group;
  std::vector<AbelianGroup::Element> deg;  ///< per object

  /// Objects of each degree, listed in the order of first appearance.
  [[nodiscard]] std::vector<std::vector<ObjectIndex>> components() const;
};

/// Universal grading via C_ad-coset classes. Throws UnsupportedInput if the
/// grading group is nonabelian.
[[nodiscard]] Grading universal_grading(const FusionRing& ring);

/// Identity-degree component (must equal the adjoint subring).
[[nodiscard]] Subring trivial_component(const Grading& grading);

/// G[x] = {g invertible : N^x_{g,x} = 1}; members ascending.
[[nodiscard]] std::vector<ObjectIndex> stabilizer(const FusionRing& ring, ObjectIndex x);

struct BigG {
  std::vector<ObjectIndex> members;
  bool empty_family = false;  ///< no non-invertible X outside C_ad; value is G(C_ad)
};
[[nodiscard]] BigG big_G(const FusionRing& ring);

struct CentralSeries {
  std::vector<Subring> terms;  ///< terms[0] = whole ring
  bool nilpotent = false;
};
[[nodiscard]] CentralSeries upper_central_series(const FusionRing& ring);

}  // namespace mtclab
