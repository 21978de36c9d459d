#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtclab/cyclotomic.hpp"
#include "mtclab/fusion_ring.hpp"
#include "mtclab/subcat.hpp"

namespace mtclab {

using SMatrix = std::vector<std::vector<Cyclotomic>>;

/// Exact (S, T) data over Q(zeta_n): theta_i = zeta_n^{t_i}, dims read off
/// the unit row of S.
class ModularData {
 public:
  /// Entries with a conductor dividing n are embedded into Q(zeta_n); any
  /// other conductor, or a shape mismatch, is an InputError.
  ModularData(FusionRing ring, int conductor, std::vector<std::int64_t> twists, SMatrix s);

  [[nodiscard]] const FusionRing& ring() const { return ring_; }
  [[nodiscard]] int rank() const { return ring_.rank(); }
  [[nodiscard]] int conductor() const { return n_; }
  [[nodiscard]] const std::vector<std::int64_t>& twists() const { return t_; }
  [[nodiscard]] const SMatrix& S() const { return s_; }
  [[nodiscard]] const Cyclotomic& s(ObjectIndex x, ObjectIndex y) const {
    return s_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }
  [[nodiscard]] Cyclotomic theta(ObjectIndex x) const;
  [[nodiscard]] const Cyclotomic& dim(ObjectIndex x) const { return s(0, x); }
  /// Sum of d_X^2.
  [[nodiscard]] Cyclotomic total_dim() const;

  bool operator==(const ModularData&) const = default;

 private:
  FusionRing ring_;
  int n_;
  std::vector<std::int64_t> t_;
  SMatrix s_;
};

struct MdViolation {
  std::string kind;  ///< "balancing", "symmetry", "unit-twist", "dual-twist"
  ObjectIndex x = 0;
  ObjectIndex y = 0;
};

/// Balancing equation plus the structural invariants (S symmetric,
/// theta_unit = 1, theta_{X*} = theta_X). Empty iff all hold exactly.
[[nodiscard]] std::vector<MdViolation> verify_balancing(const ModularData& md);

[[nodiscard]] bool is_modular(const ModularData& md);

/// {Y : s_{X,Y} = d_X d_Y for all X in k}.
[[nodiscard]] Subring centralizer(const ModularData& md, const Subring& k);

/// For modular data: C_pt' = C_ad and C_ad' = C_pt. Returns failed identities.
[[nodiscard]] std::vector<std::string> check_centralizer_identities(const ModularData& md);

/// xi_g(X) = s_{g,X} / d_X. InputError if g is not invertible.
[[nodiscard]] std::vector<Cyclotomic> xi_values(const ModularData& md, ObjectIndex g);

/// For each X with nontrivial stabilizer, the first Y with s_{X,Y} = 0.
/// Throws TheoremViolation if such an X has no zero in its row.
[[nodiscard]] std::map<ObjectIndex, ObjectIndex> zero_witnesses(const ModularData& md);

struct OrbitViolation {
  ObjectIndex x;   ///< s_{x,z} = 0
  ObjectIndex z;
  ObjectIndex h;   ///< invertible
  ObjectIndex hx;  ///< h ⊗ x, with s_{hx,z} != 0
};

/// Zeros of S must be stable under translation by invertibles. Violations
/// are reported once per unordered pair {hx, z}.
[[nodiscard]] std::vector<OrbitViolation> orbit_zero_check(const ModularData& md);

[[nodiscard]] std::vector<std::pair<ObjectIndex, ObjectIndex>> equal_row_detector(const ModularData& md);

struct PerfectReport {
  bool applicable = false;
  std::string reason;  ///< why not applicable
  std::vector<std::string> failures;
};

/// Checks for perfect odd-dimensional modular data: no nontrivial symmetric
/// single-generator subring, k ∩ k' = 1, and s_{X,Y} ∈ {0, d_X d_Y} for
/// coprime integer dims. With bypass_preconditions the checks run anyway.
[[nodiscard]] PerfectReport perfect_checks(const ModularData& md, bool bypass_preconditions = false);

/// Integer dims when every d_X is a rational integer.
[[nodiscard]] std::optional<std::vector<std::int64_t>> integer_dims(const ModularData& md);

/// Product data: S entries multiply, twists add, conductor = lcm.
[[nodiscard]] ModularData modular_product(const ModularData& a, const ModularData& b);

/// Inherited data on a subring (not modular in general).
[[nodiscard]] ModularData restrict_modular(const ModularData& md, const Subring& sub);

}  // namespace mtclab
