#include "mtclab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "mtclab/errors.hpp"

namespace mtclab {

int euler_phi(int n) {
  if (n < 1) throw InputError("conductor must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

std::vector<BigInt> compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<BigInt> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<BigInt> q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const BigInt c = num[i];  // den is monic
      q[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(q);
  }
  return num;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<BigInt>> cache;
  if (n < 1) throw InputError("conductor must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto poly = n == 1 ? std::vector<BigInt>{-1, 1} : compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(int conductor) : n_(conductor) {
  c_.assign(static_cast<std::size_t>(euler_phi(conductor)), Rational(0));
}

Cyclotomic::Cyclotomic(int conductor, Rational value) : Cyclotomic(conductor) { c_[0] = std::move(value); }

Cyclotomic Cyclotomic::from_polynomial(int conductor, std::vector<Rational> poly) {
  const auto& phi = cyclotomic_polynomial(conductor);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    const Rational c = poly[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * Rational(phi[j]);
  }
  poly.resize(deg, Rational(0));
  Cyclotomic out(conductor);
  out.c_ = std::move(poly);
  return out;
}

Cyclotomic Cyclotomic::from_basis(int conductor, std::vector<Rational> coeffs) {
  Cyclotomic out(conductor);
  if (coeffs.size() != out.c_.size()) {
    throw InputError("expected " + std::to_string(out.c_.size()) + " coefficients for conductor " +
                     std::to_string(conductor) + ", got " + std::to_string(coeffs.size()));
  }
  out.c_ = std::move(coeffs);
  return out;
}

Cyclotomic Cyclotomic::zeta_power(int conductor, std::int64_t exponent) {
  const std::int64_t e = ((exponent % conductor) + conductor) % conductor;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
  poly[static_cast<std::size_t>(e)] = 1;
  return from_polynomial(conductor, std::move(poly));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw InputError("cyclotomic value is not rational: " + to_string());
  return c_[0];
}

Cyclotomic Cyclotomic::embed(int m) const {
  if (m % n_ != 0) {
    throw InputError("cannot embed conductor " + std::to_string(n_) + " into " + std::to_string(m));
  }
  const std::size_t step = static_cast<std::size_t>(m / n_);
  std::vector<Rational> poly(c_.empty() ? 1 : (c_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
  return from_polynomial(m, std::move(poly));
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> poly(static_cast<std::size_t>(n_), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    poly[(static_cast<std::size_t>(n_) - i) % static_cast<std::size_t>(n_)] += c_[i];
  }
  return from_polynomial(n_, std::move(poly));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw InputError("division by zero in Q(zeta_" + std::to_string(n_) + ")");
  // Solve (multiplication-by-this matrix) v = e_0 over Q.
  const std::size_t d = c_.size();
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1, Rational(0)));
  Cyclotomic col = *this;
  const Cyclotomic z = zeta_power(n_, 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) a[i][j] = col.c_[i];
    col *= z;
  }
  a[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && a[p][c] == 0) ++p;
    if (p == d) throw InternalError("singular multiplication matrix for nonzero element");
    std::swap(a[p], a[c]);
    const Rational inv = 1 / a[c][c];
    for (std::size_t j = c; j <= d; ++j) a[c][j] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = c; j <= d; ++j) a[r][j] -= f * a[c][j];
    }
  }
  Cyclotomic out(n_);
  for (std::size_t i = 0; i < d; ++i) out.c_[i] = a[i][d];
  return out;
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(n_, Rational(1));
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

void Cyclotomic::require_same(const Cyclotomic& o) const {
  if (n_ != o.n_) {
    throw InputError("conductor mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  require_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  require_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  require_same(o);
  std::vector<Rational> poly(c_.size() * 2, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] != 0) poly[i + j] += c_[i] * o.c_[j];
    }
  }
  *this = from_polynomial(n_, std::move(poly));
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << mtclab::to_string(c_[i]);
  os << ']';
  return os.str();
}

Cyclotomic determinant(std::vector<std::vector<Cyclotomic>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Cyclotomic(1, Rational(1));
  const int cond = m[0][0].conductor();
  Cyclotomic prev(cond, Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return Cyclotomic(cond);
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = Cyclotomic(cond);
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace mtclab
