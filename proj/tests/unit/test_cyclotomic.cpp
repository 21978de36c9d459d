#include <complex>
#include <random>

#include "doctest.h"
#include "mtclab/cyclotomic.hpp"
#include "mtclab/errors.hpp"
#include "oracles.hpp"

using namespace mtclab;

namespace {

Cyclotomic random_element(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> len(1, 2 * n);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> poly(static_cast<std::size_t>(len(rng)));
  for (auto& c : poly) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  return Cyclotomic::from_polynomial(n, poly);
}

}  // namespace

TEST_CASE("euler phi and cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(15) == 8);
  CHECK(euler_phi(16) == 8);
  // Φ_n(ζ_n) = 0 numerically, degree φ(n).
  for (int n = 1; n <= 45; ++n) {
    const auto& p = cyclotomic_polynomial(n);
    CHECK(static_cast<int>(p.size()) == euler_phi(n) + 1);
    std::complex<double> acc = 0;
    for (std::size_t k = 0; k < p.size(); ++k) acc += p[k].get_d() * oracle::root_of_unity(n, static_cast<std::int64_t>(k));
    CHECK(std::abs(acc) < 1e-6);
  }
}

TEST_CASE("randomized reduction, roots of unity and embeddings") {
  std::mt19937_64 rng(20240517);
  std::uniform_int_distribution<int> cond(1, 45);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = cond(rng);
    const auto a = random_element(rng, n);
    const auto b = random_element(rng, n);
    CAPTURE(n);
    CHECK(static_cast<int>(a.coeffs().size()) == euler_phi(n));
    CHECK(Cyclotomic::from_polynomial(n, a.coeffs()) == a);
    CHECK(Cyclotomic::from_basis(n, a.coeffs()) == a);
    CHECK(Cyclotomic::zeta_power(n, n) == Cyclotomic(n, Rational(1)));
    CHECK(Cyclotomic::zeta_power(n, 1).pow(n) == Cyclotomic(n, Rational(1)));

    const int m = n * (1 + trial % 3);
    if (m <= 135) {
      CHECK(a.embed(m).embed(m) == a.embed(m));
      CHECK((a * b).embed(m) == a.embed(m) * b.embed(m));
      CHECK((a + b).embed(m) == a.embed(m) + b.embed(m));
      CHECK(std::abs(oracle::evaluate(a.embed(m)) - oracle::evaluate(a)) < 1e-6);
    }

    CHECK(std::abs(oracle::evaluate(a * b) - oracle::evaluate(a) * oracle::evaluate(b)) < 1e-6 * (1 + std::abs(oracle::evaluate(a) * oracle::evaluate(b))));
    CHECK(std::abs(oracle::evaluate(a.conj()) - std::conj(oracle::evaluate(a))) < 1e-6);
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(n, Rational(1)));
  }
}

TEST_CASE("conductor mismatch and zero inverse are rejected") {
  CHECK_THROWS_AS((void)(Cyclotomic(3, Rational(1)) + Cyclotomic(5, Rational(1))), InputError);
  CHECK_THROWS_AS((void)Cyclotomic(3).inverse(), InputError);
  CHECK_THROWS_AS((void)Cyclotomic::from_basis(5, {Rational(1)}), InputError);
  CHECK_THROWS_AS((void)Cyclotomic(3, Rational(1)).embed(4), InputError);
}

TEST_CASE("quadratic subfields") {
  // ζ_8 + ζ_8^7 squares to 2; the Gauss sum over Z_5 squares to 5.
  const auto r2 = Cyclotomic::zeta_power(8, 1) + Cyclotomic::zeta_power(8, 7);
  CHECK(r2 * r2 == Cyclotomic(8, Rational(2)));
  Cyclotomic g(5);
  for (int k = 1; k < 5; ++k) {
    const bool square = (k == 1 || k == 4);
    g += square ? Cyclotomic::zeta_power(5, k) : -Cyclotomic::zeta_power(5, k);
  }
  CHECK((g * g).is_rational());
  CHECK((g * g).rational_value() == 5);
}

TEST_CASE("determinant agrees with numeric evaluation") {
  std::mt19937_64 rng(7);
  for (int n : {3, 5, 12}) {
    std::vector<std::vector<Cyclotomic>> m(3, std::vector<Cyclotomic>(3));
    for (auto& row : m)
      for (auto& e : row) e = random_element(rng, n);
    std::complex<double> z[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) z[i][j] = oracle::evaluate(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    const auto expect = z[0][0] * (z[1][1] * z[2][2] - z[1][2] * z[2][1]) -
                        z[0][1] * (z[1][0] * z[2][2] - z[1][2] * z[2][0]) +
                        z[0][2] * (z[1][0] * z[2][1] - z[1][1] * z[2][0]);
    CHECK(std::abs(oracle::evaluate(determinant(m)) - expect) < 1e-6 * (1 + std::abs(expect)));
  }
}
