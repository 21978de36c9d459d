#include <complex>

#include "doctest.h"
#include "mtclab/catalog.hpp"
#include "mtclab/errors.hpp"
#include "mtclab/modular_data.hpp"
#include "mtclab/subcat.hpp"
#include "oracles.hpp"

using namespace mtclab;

TEST_CASE("pointed Z_n data are balanced, modular and unitary") {
  for (int n : {3, 5, 7, 9, 15}) {
    CAPTURE(n);
    const auto md = pointed_modular(n);
    CHECK(verify_balancing(md).empty());
    CHECK(is_modular(md));
    // Exact S conj(S) = n I.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Cyclotomic acc(n);
        for (int k = 0; k < n; ++k) acc += md.s(i, k) * md.s(k, j).conj();
        CHECK(acc == Cyclotomic(n, Rational(i == j ? n : 0)));
      }
    CHECK(oracle::unitarity_defect(md, n) < 1e-9);
    CHECK(check_centralizer_identities(md).empty());
  }
}

TEST_CASE("numeric balancing oracle agrees on every catalog entry") {
  for (const auto& ex : modular_catalog()) {
    CAPTURE(ex.name);
    const auto& md = ex.md;
    const auto& r = md.ring();
    const int n = md.conductor();
    bool ok = true;
    for (int x = 0; x < r.rank(); ++x)
      for (int y = 0; y < r.rank(); ++y) {
        std::complex<double> sum = 0;
        for (int z = 0; z < r.rank(); ++z)
          sum += static_cast<double>(r.n(x, y, z)) * oracle::root_of_unity(n, md.twists()[static_cast<std::size_t>(z)]) *
                 oracle::evaluate(md.dim(z));
        sum *= std::conj(oracle::root_of_unity(n, md.twists()[static_cast<std::size_t>(x)] + md.twists()[static_cast<std::size_t>(y)]));
        if (std::abs(sum - oracle::evaluate(md.s(x, y))) > 1e-9) ok = false;
      }
    CHECK(verify_balancing(md).empty() == ok);
    CHECK(ok);
  }
}

TEST_CASE("Ising zeros") {
  const auto md = ising_modular();
  CHECK(verify_balancing(md).empty());
  CHECK(is_modular(md));
  const auto w = zero_witnesses(md);
  REQUIRE(w.count(2) == 1);
  CHECK(md.s(2, w.at(2)).is_zero());
  CHECK(orbit_zero_check(md).empty());
  CHECK(check_centralizer_identities(md).empty());
  CHECK(oracle::unitarity_defect(md, 4.0) < 1e-9);
}

TEST_CASE("corrupted Ising ⊠ Z3 breaks orbit stability of zeros") {
  const auto good = modular_product(ising_modular(), pointed_modular(3));
  CHECK(is_modular(good));
  CHECK(orbit_zero_check(good).empty());
  // Objects (σ, 0) = 6 and (σ, 1) = 7 with s_{6,6} = 0; make s_{7,6} nonzero.
  SMatrix s = good.S();
  REQUIRE(s[6][6].is_zero());
  REQUIRE(s[7][6].is_zero());
  const Cyclotomic one(good.conductor(), Rational(1));
  s[7][6] = one;
  s[6][7] = one;
  const ModularData bad(good.ring(), good.conductor(), good.twists(), s);
  const auto v = orbit_zero_check(bad);
  REQUIRE_FALSE(v.empty());
  for (const auto& o : v) {
    CHECK(bad.s(o.x, o.z).is_zero());
    CHECK_FALSE(bad.s(o.hx, o.z).is_zero());
    CHECK(is_invertible(bad.ring(), o.h));
  }
}

TEST_CASE("Z3 with all-ones S is premodular but not modular") {
  const auto md = z3_degenerate();
  CHECK(verify_balancing(md).empty());
  CHECK_FALSE(is_modular(md));
  const auto pairs = equal_row_detector(md);
  const std::vector<std::pair<ObjectIndex, ObjectIndex>> all{{0, 1}, {0, 2}, {1, 2}};
  CHECK(pairs == all);
  for (auto [a, b] : pairs)
    for (int k = 0; k < 3; ++k) CHECK(md.s(a, k) == md.s(b, k));
}

TEST_CASE("Fibonacci data") {
  const auto md = fibonacci_modular();
  CHECK(verify_balancing(md).empty());
  CHECK(is_modular(md));
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(oracle::evaluate(md.dim(1)).real() == doctest::Approx(phi));
  CHECK(oracle::unitarity_defect(md, 1 + phi * phi) < 1e-9);
  CHECK_FALSE(integer_dims(md).has_value());
}

TEST_CASE("products and restrictions") {
  const auto p = modular_product(pointed_modular(3), pointed_modular(5));
  CHECK(p.conductor() == 15);
  CHECK(verify_balancing(p).empty());
  CHECK(is_modular(p));
  const auto sub = generated_subring(p.ring(), {5});
  const auto r = restrict_modular(p, sub);
  CHECK(r.rank() == sub.rank());
  CHECK(verify_balancing(r).empty());
}

TEST_CASE("xi values are characters of G") {
  const auto md = pointed_modular(5);
  for (int g = 0; g < 5; ++g) {
    const auto xi = xi_values(md, g);
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) {
        const auto xy = md.ring().product_support(x, y);
        CHECK(xi[static_cast<std::size_t>(xy[0])] == xi[static_cast<std::size_t>(x)] * xi[static_cast<std::size_t>(y)]);
      }
  }
  CHECK_THROWS_AS((void)xi_values(ising_modular(), 2), InputError);
}

TEST_CASE("mismatched conductor is an input error") {
  SMatrix s{{Cyclotomic(7, Rational(1))}};
  CHECK_THROWS_AS(ModularData(cyclic_group_ring(1), 3, {0}, s), InputError);
  SMatrix wrong_shape{{Cyclotomic(3, Rational(1)), Cyclotomic(3, Rational(1))}};
  CHECK_THROWS_AS(ModularData(cyclic_group_ring(1), 3, {0}, wrong_shape), InputError);
}

TEST_CASE("perturbed twist breaks balancing on the first row") {
  auto t = pointed_modular(5).twists();
  t[1] += 1;
  const ModularData md(cyclic_group_ring(5), 5, t, pointed_modular(5).S());
  const auto v = verify_balancing(md);
  REQUIRE_FALSE(v.empty());
  bool row1 = false;
  for (const auto& e : v)
    if (e.kind == "balancing" && (e.x == 1 || e.y == 1)) row1 = true;
  CHECK(row1);
}

TEST_CASE("restricting Z9 to <3> gives degenerate data") {
  const auto md = pointed_modular(9);
  const auto sub = generated_subring(md.ring(), {3});
  CHECK(sub.members == std::vector<ObjectIndex>{0, 3, 6});
  const auto r = restrict_modular(md, sub);
  CHECK_FALSE(is_modular(r));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(r.s(i, j) == Cyclotomic(9, Rational(1)));
}

TEST_CASE("centralizers") {
  const auto z9 = pointed_modular(9);
  const auto k = generated_subring(z9.ring(), {3});
  CHECK(centralizer(z9, k) == k);
  CHECK(centralizer(z9, whole_ring(z9.ring())) == trivial_subring());
  CHECK(centralizer(z3_degenerate(), trivial_subring()) == whole_ring(z3_degenerate().ring()));
  // Double centralizer and order reversal on every modular catalog entry.
  for (const auto& ex : modular_catalog()) {
    if (!is_modular(ex.md)) continue;
    CAPTURE(ex.name);
    const auto& r = ex.md.ring();
    std::vector<Subring> subs;
    for (int x = 0; x < r.rank(); ++x) subs.push_back(generated_subring(r, {x}));
    for (const auto& a : subs) {
      CHECK(centralizer(ex.md, centralizer(ex.md, a)) == a);
      for (const auto& b : subs)
        if (a.is_subset_of(b)) CHECK(centralizer(ex.md, b).is_subset_of(centralizer(ex.md, a)));
    }
  }
}

TEST_CASE("xi of the unit and of degenerate data") {
  for (const auto& md : {pointed_modular(7), z3_degenerate()}) {
    for (int g = 0; g < md.rank(); ++g) {
      if (g != 0 && md.conductor() != 1) continue;
      for (const auto& v : xi_values(md, g)) CHECK(v == Cyclotomic(md.conductor(), Rational(1)));
    }
  }
  const auto xi = xi_values(pointed_modular(7), 2);
  for (int k = 0; k < 7; ++k) CHECK(xi[static_cast<std::size_t>(k)] == Cyclotomic::zeta_power(7, 4 * k));
}

TEST_CASE("zero witnesses on pointed data and corrupted Ising data") {
  CHECK(zero_witnesses(pointed_modular(5)).empty());
  CHECK(zero_witnesses(ising_modular()).at(2) == 2);
  SMatrix s = ising_modular().S();
  s[2][2] = Cyclotomic(16, Rational(1));
  const ModularData bad(ising_ring(), 16, {0, 8, 1}, s);
  CHECK_THROWS_AS((void)zero_witnesses(bad), TheoremViolation);
  CHECK(orbit_zero_check(pointed_modular(5)).empty());
}

TEST_CASE("hand-corrupted Ising data has one orbit violation") {
  // Zeroing s_{ψ,σ} is not stable under ψ ⊗ ψ = 1, since s_{1,σ} = √2.
  SMatrix s = ising_modular().S();
  s[2][1] = Cyclotomic(16);
  s[1][2] = Cyclotomic(16);
  const ModularData bad(ising_ring(), 16, {0, 8, 1}, s);
  const auto v = orbit_zero_check(bad);
  REQUIRE(v.size() == 1);
  CHECK(bad.s(v[0].x, v[0].z).is_zero());
  CHECK_FALSE(bad.s(v[0].hx, v[0].z).is_zero());
}

TEST_CASE("equal rows") {
  CHECK(equal_row_detector(pointed_modular(5)).empty());
  // Duplicate row 1 of Z5 into row 2 (and column).
  SMatrix s = pointed_modular(5).S();
  s[2] = s[1];
  for (auto& row : s) row[2] = row[1];
  s[2][2] = s[1][1];
  const ModularData md(cyclic_group_ring(5), 5, pointed_modular(5).twists(), s);
  const auto pairs = equal_row_detector(md);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == std::pair<ObjectIndex, ObjectIndex>{1, 2});
}

TEST_CASE("perfect checks") {
  CHECK_FALSE(perfect_checks(pointed_modular(3)).applicable);
  const auto forced = perfect_checks(pointed_modular(3), true);
  CHECK(forced.applicable);
  CHECK_FALSE(forced.failures.empty());
  const auto vec = perfect_checks(pointed_modular(1));
  CHECK(vec.applicable);
  CHECK(vec.failures.empty());
}
