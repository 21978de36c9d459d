#include "mtclab/fp_dims.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mtclab/errors.hpp"

namespace mtclab {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto valid_int = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw InputError("malformed rational \"" + s + "\"");
  }
  BigInt p(num, 10);
  BigInt q(den, 10);
  if (q == 0) throw InputError("zero denominator in \"" + s + "\"");
  Rational out(p, q);
  out.canonicalize();
  return out;
}

RationalInterval DimValue::enclosure() const {
  if (is_exact()) return {Rational(exact()), Rational(exact())};
  return std::get<RationalInterval>(value_);
}

double DimValue::approx() const {
  if (is_exact()) return static_cast<double>(exact());
  const auto& iv = std::get<RationalInterval>(value_);
  return Rational((iv.lo + iv.hi) / 2).get_d();
}

bool DimValue::may_equal(const DimValue& other) const {
  if (is_exact() && other.is_exact()) return exact() == other.exact();
  return enclosure().overlaps(other.enclosure());
}

std::string DimValue::to_string() const {
  if (is_exact()) return std::to_string(exact());
  const auto& iv = std::get<RationalInterval>(value_);
  return "[" + iv.lo.get_str() + ", " + iv.hi.get_str() + "]";
}

bool satisfies_homomorphism(const FusionRing& ring, const std::vector<std::int64_t>& dims) {
  const int r = ring.rank();
  if (static_cast<int>(dims.size()) != r) return false;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      std::int64_t rhs = 0;
      for (int k = 0; k < r; ++k) rhs += ring.n(i, j, k) * dims[static_cast<std::size_t>(k)];
      if (dims[static_cast<std::size_t>(i)] * dims[static_cast<std::size_t>(j)] != rhs) return false;
    }
  }
  return true;
}

namespace {

bool is_invertible(const FusionRing& ring, int i) {
  std::int64_t total = 0;
  for (int k = 0; k < ring.rank(); ++k) total += ring.n(i, ring.dual(i), k);
  return total == 1 && ring.n(i, ring.dual(i), 0) == 1;
}

// One power-iteration step on M[j][k] = sum_i N^k_{ij}, normalized so v[0] = 1.
std::vector<double> power_step(const FusionRing& ring, const std::vector<double>& v) {
  const int r = ring.rank();
  std::vector<double> out(static_cast<std::size_t>(r), 0.0);
  for (const auto& e : ring.entries()) {
    out[static_cast<std::size_t>(e.j)] += static_cast<double>(e.value) * v[static_cast<std::size_t>(e.k)];
  }
  const double scale = out[0];
  for (auto& x : out) x /= scale;
  return out;
}

struct Bounds {
  std::vector<RationalInterval> dims;
  Rational max_width;
};

Bounds collatz_wielandt(const FusionRing& ring, const std::vector<double>& v) {
  const int r = ring.rank();
  std::vector<Rational> q;
  q.reserve(v.size());
  for (double x : v) q.emplace_back(x);

  Bounds b;
  b.dims.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    std::vector<Rational> lv(static_cast<std::size_t>(r), Rational(0));
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        const auto n = ring.n(i, j, k);
        if (n != 0) lv[static_cast<std::size_t>(j)] += Rational(static_cast<long>(n)) * q[static_cast<std::size_t>(k)];
      }
    Rational lo;
    Rational hi;
    for (int j = 0; j < r; ++j) {
      Rational ratio = lv[static_cast<std::size_t>(j)] / q[static_cast<std::size_t>(j)];
      if (j == 0 || ratio < lo) lo = ratio;
      if (j == 0 || ratio > hi) hi = ratio;
    }
    if (lo < 1) lo = 1;
    b.dims[static_cast<std::size_t>(i)] = {lo, hi};
  }
  for (int i = 0; i < r; ++i) {
    auto& a = b.dims[static_cast<std::size_t>(i)];
    const auto& d = b.dims[static_cast<std::size_t>(ring.dual(i))];
    RationalInterval both{std::max(a.lo, d.lo), std::min(a.hi, d.hi)};
    a = both;
  }
  b.max_width = 0;
  for (const auto& iv : b.dims) b.max_width = std::max(b.max_width, iv.width());
  return b;
}

std::vector<DimValue> distinct_sorted(const std::vector<DimValue>& values) {
  std::vector<DimValue> sorted = values;
  std::sort(sorted.begin(), sorted.end(), [](const DimValue& a, const DimValue& b) {
    return a.enclosure().lo < b.enclosure().lo;
  });
  std::vector<DimValue> out;
  for (const auto& v : sorted) {
    if (!out.empty() && out.back().may_equal(v)) continue;
    out.push_back(v);
  }
  return out;
}

}  // namespace

FPDimData fp_dims(const FusionRing& ring, const FpDimOptions& options) {
  const int r = ring.rank();
  std::vector<double> v(static_cast<std::size_t>(r), 1.0);
  int iter = 0;
  for (; iter < std::min(options.iteration_cap, 200); ++iter) v = power_step(ring, v);

  FPDimData out;
  auto try_exact = [&]() {
    std::vector<std::int64_t> rounded;
    for (double x : v) {
      const double rx = std::round(x);
      if (std::abs(x - rx) > 1e-6 || rx < 1) return false;
      rounded.push_back(static_cast<std::int64_t>(rx));
    }
    if (!satisfies_homomorphism(ring, rounded)) return false;
    std::int64_t total = 0;
    for (auto d : rounded) {
      out.dims.emplace_back(d);
      total += d * d;
    }
    out.total_dim = DimValue(total);
    out.integral = true;
    out.cd_set = distinct_sorted(out.dims);
    return true;
  };
  if (try_exact()) return out;

  Bounds bounds = collatz_wielandt(ring, v);
  while (bounds.max_width > options.max_width) {
    if (iter >= options.iteration_cap) {
      throw CertificationFailure("Frobenius-Perron bounds did not reach width " +
                                 options.max_width.get_str() + " after " +
                                 std::to_string(iter) + " iterations");
    }
    const int batch = std::min(1000, options.iteration_cap - iter);
    for (int s = 0; s < batch; ++s) v = power_step(ring, v);
    iter += batch;
    if (try_exact()) return out;
    bounds = collatz_wielandt(ring, v);
  }

  Rational tlo = 0;
  Rational thi = 0;
  for (int i = 0; i < r; ++i) {
    if (i == 0 || is_invertible(ring, i)) {
      out.dims.emplace_back(std::int64_t{1});
      tlo += 1;
      thi += 1;
      continue;
    }
    const auto& iv = bounds.dims[static_cast<std::size_t>(i)];
    out.dims.emplace_back(iv);
    tlo += iv.lo * iv.lo;
    thi += iv.hi * iv.hi;
  }
  out.total_dim = DimValue(RationalInterval{tlo, thi});
  out.integral = false;
  out.cd_set = distinct_sorted(out.dims);
  return out;
}

}  // namespace mtclab
