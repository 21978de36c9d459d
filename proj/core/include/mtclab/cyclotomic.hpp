#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mtclab/rational.hpp"

namespace mtclab {

/// phi(n).
[[nodiscard]] int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
[[nodiscard]] const std::vector<BigInt>& cyclotomic_polynomial(int n);

/// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
/// Always stored reduced modulo Phi_n. Binary operations require equal
/// conductors (InputError otherwise); use embed() to move to a multiple.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int conductor);  ///< zero
  Cyclotomic(int conductor, Rational value);
  /// Takes coefficients of any polynomial in zeta_n and reduces it.
  static Cyclotomic from_polynomial(int conductor, std::vector<Rational> poly);
  /// Takes an already reduced vector of length phi(n); InputError otherwise.
  static Cyclotomic from_basis(int conductor, std::vector<Rational> coeffs);
  static Cyclotomic zeta_power(int conductor, std::int64_t exponent);

  [[nodiscard]] int conductor() const { return n_; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_rational() const;
  /// Value of a rational element; InputError if not rational.
  [[nodiscard]] Rational rational_value() const;

  /// Image in Q(zeta_m) for a multiple m of the conductor.
  [[nodiscard]] Cyclotomic embed(int m) const;
  /// Complex conjugate (zeta -> zeta^{-1}).
  [[nodiscard]] Cyclotomic conj() const;
  /// Multiplicative inverse; InputError on zero.
  [[nodiscard]] Cyclotomic inverse() const;
  [[nodiscard]] Cyclotomic pow(std::int64_t e) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && c_ == o.c_; }

  /// Exact form "[c0, c1, ...]" with rationals as "p" or "p/q".
  [[nodiscard]] std::string to_string() const;

 private:
  void require_same(const Cyclotomic& o) const;

  int n_;
  std::vector<Rational> c_;
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
[[nodiscard]] Cyclotomic determinant(std::vector<std::vector<Cyclotomic>> m);

}  // namespace mtclab
