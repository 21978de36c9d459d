#pragma once

#include <string>
#include <vector>

#include "mtclab/fusion_ring.hpp"
#include "mtclab/modular_data.hpp"

namespace mtclab {

/// Objects 1, τ with τ ⊗ τ = 1 ⊕ τ.
[[nodiscard]] FusionRing fibonacci_ring();
/// Objects 1, ψ, σ with ψ ⊗ σ = σ, σ ⊗ σ = 1 ⊕ ψ.
[[nodiscard]] FusionRing ising_ring();

/// S from the balancing equation with integer dims; no modularity check.
[[nodiscard]] ModularData balanced_modular_data(FusionRing ring, int conductor, std::vector<std::int64_t> twists,
                                                const std::vector<std::int64_t>& dims);

/// Z_n with S_jk = ζ^{2jk}, θ_j = ζ^{j²}; n odd.
[[nodiscard]] ModularData pointed_modular(int n);
[[nodiscard]] ModularData ising_modular();
[[nodiscard]] ModularData fibonacci_modular();
/// Z_3 with every S entry 1 and trivial twists: premodular, not modular.
[[nodiscard]] ModularData z3_degenerate();

/// Rank 17 MNSD integral ring: Z_3 gauging of the anisotropic metric group (Z_5)^2.
/// Dims 1,1,1, eight 3s, six 5s; |G| = 3, rank_ad = 11, C_pt inside C_ad.
[[nodiscard]] FusionRing gauged_rank17_ring();
[[nodiscard]] ModularData gauged_rank17_modular();

struct RingExample {
  std::string name;
  FusionRing ring;
};
struct ModularExample {
  std::string name;
  ModularData md;
};

[[nodiscard]] std::vector<RingExample> ring_catalog();
[[nodiscard]] std::vector<ModularExample> modular_catalog();

}  // namespace mtclab
