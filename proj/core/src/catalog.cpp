#include "mtclab/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "mtclab/errors.hpp"

namespace mtclab {

FusionRing fibonacci_ring() {
  return FusionRing(2, {0, 1}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}});
}

FusionRing ising_ring() {
  return FusionRing(3, {0, 1, 2},
                    {{0, 0, 0, 1},
                     {0, 1, 1, 1},
                     {0, 2, 2, 1},
                     {1, 0, 1, 1},
                     {1, 1, 0, 1},
                     {1, 2, 2, 1},
                     {2, 0, 2, 1},
                     {2, 1, 2, 1},
                     {2, 2, 0, 1},
                     {2, 2, 1, 1}});
}

ModularData balanced_modular_data(FusionRing ring, int conductor, std::vector<std::int64_t> twists,
                                  const std::vector<std::int64_t>& dims) {
  const int r = ring.rank();
  if (static_cast<int>(twists.size()) != r || static_cast<int>(dims.size()) != r)
    throw InputError("twist or dimension vector length differs from rank");
  SMatrix s(static_cast<std::size_t>(r), std::vector<Cyclotomic>(static_cast<std::size_t>(r), Cyclotomic(conductor)));
  for (ObjectIndex x = 0; x < r; ++x)
    for (ObjectIndex y = 0; y < r; ++y) {
      Cyclotomic sum(conductor);
      for (auto z : ring.product_support(x, y))
        sum += Cyclotomic::zeta_power(conductor, twists[static_cast<std::size_t>(z)]) *
               Cyclotomic(conductor, Rational(static_cast<long>(ring.n(x, y, z) * dims[static_cast<std::size_t>(z)])));
      s[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          Cyclotomic::zeta_power(conductor, -twists[static_cast<std::size_t>(x)] - twists[static_cast<std::size_t>(y)]) *
          sum;
    }
  return ModularData(std::move(ring), conductor, std::move(twists), std::move(s));
}

ModularData pointed_modular(int n) {
  if (n < 1 || n % 2 == 0) throw InputError("pointed modular data needs odd n");
  SMatrix s;
  std::vector<std::int64_t> t;
  for (int j = 0; j < n; ++j) {
    std::vector<Cyclotomic> row;
    for (int k = 0; k < n; ++k) row.push_back(Cyclotomic::zeta_power(n, 2 * j * k));
    s.push_back(std::move(row));
    t.push_back((static_cast<std::int64_t>(j) * j) % n);
  }
  return ModularData(cyclic_group_ring(n), n, std::move(t), std::move(s));
}

ModularData ising_modular() {
  const int n = 16;
  const Cyclotomic one(n, Rational(1));
  const Cyclotomic sqrt2 = Cyclotomic::zeta_power(n, 2) + Cyclotomic::zeta_power(n, 14);
  const Cyclotomic zero(n);
  SMatrix s{{one, one, sqrt2}, {one, one, -sqrt2}, {sqrt2, -sqrt2, zero}};
  return ModularData(ising_ring(), n, {0, 8, 1}, std::move(s));
}

ModularData fibonacci_modular() {
  const int n = 5;
  const Cyclotomic one(n, Rational(1));
  const Cyclotomic phi = one + Cyclotomic::zeta_power(n, 1) + Cyclotomic::zeta_power(n, 4);
  SMatrix s{{one, phi}, {phi, -one}};
  return ModularData(fibonacci_ring(), n, {0, 2}, std::move(s));
}

ModularData z3_degenerate() {
  const Cyclotomic one(1, Rational(1));
  SMatrix s(3, std::vector<Cyclotomic>(3, one));
  return ModularData(cyclic_group_ring(3), 1, {0, 0, 0}, std::move(s));
}

namespace {

// F_25 = F_5[s]/(s^2 - 2), element x + y s encoded as (x, y).
struct F25 {
  int x = 0, y = 0;
  F25 operator+(F25 o) const { return {(x + o.x) % 5, (y + o.y) % 5}; }
  F25 operator*(F25 o) const { return {(x * o.x + 2 * y * o.y) % 5, (x * o.y + y * o.x) % 5}; }
  F25 neg() const { return {(5 - x) % 5, (5 - y) % 5}; }
  bool zero() const { return x == 0 && y == 0; }
  int code() const { return x + 5 * y; }
  int norm() const { return ((x * x - 2 * y * y) % 5 + 5) % 5; }
};

struct Gauged {
  FusionRing ring;
  std::vector<std::int64_t> twists;
  std::vector<std::int64_t> dims;
};

Gauged build_gauged() {
  const F25 omega{2, 3};
  {
    F25 w3 = omega * omega * omega;
    if (!(w3.x == 1 && w3.y == 0) || (omega.x == 1 && omega.y == 0))
      throw InternalError("omega is not a primitive cube root of unity");
  }
  auto orbit_rep = [&](F25 a) {
    F25 b = a * omega, c = b * omega;
    return std::min({a.code(), b.code(), c.code()});
  };
  std::vector<int> reps;
  for (int code = 1; code < 25; ++code) {
    F25 a{code % 5, code / 5};
    if (orbit_rep(a) == code) reps.push_back(code);
  }
  if (reps.size() != 8) throw InternalError("expected 8 orbits");

  // Labels: 0,1,2 = g^i; X orbits in dual-adjacent pairs; then (Y_j, Y_j*) pairs.
  std::map<int, int> x_label;
  int next = 3;
  for (int code : reps) {
    if (x_label.count(code)) continue;
    x_label[code] = next++;
    F25 a{code % 5, code / 5};
    x_label[orbit_rep(a.neg())] = next++;
  }
  auto X = [&](F25 a) { return x_label.at(orbit_rep(a)); };
  auto Y = [](int j) { return 11 + 2 * (((j % 3) + 3) % 3); };
  auto Ystar = [](int j) { return 12 + 2 * (((j % 3) + 3) % 3); };
  auto G = [](int i) { return ((i % 3) + 3) % 3; };

  const int r = 17;
  std::vector<ObjectIndex> dual(r);
  dual[0] = 0, dual[1] = 2, dual[2] = 1;
  for (int code : reps) {
    F25 a{code % 5, code / 5};
    dual[static_cast<std::size_t>(X(a))] = X(a.neg());
  }
  for (int j = 0; j < 3; ++j) dual[static_cast<std::size_t>(Y(j))] = Ystar(j), dual[static_cast<std::size_t>(Ystar(j))] = Y(j);

  std::map<std::array<int, 3>, std::int64_t> n;
  auto add = [&](int i, int j, int k, std::int64_t v = 1) { n[{i, j, k}] += v; };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) add(G(i), G(j), G(i + j));
  for (int code : reps) {
    F25 a{code % 5, code / 5};
    for (int i = 0; i < 3; ++i) {
      add(G(i), X(a), X(a));
      add(X(a), G(i), X(a));
    }
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      add(G(i), Y(j), Y(j + i));
      add(Y(j), G(i), Y(j + i));
      add(G(i), Ystar(j), Ystar(j - i));
      add(Ystar(j), G(i), Ystar(j - i));
    }
  for (int ca : reps)
    for (int cb : reps) {
      F25 a{ca % 5, ca / 5}, b{cb % 5, cb / 5};
      F25 wk = {1, 0};
      for (int k = 0; k < 3; ++k, wk = wk * omega) {
        F25 c = a + wk * b;
        if (c.zero()) {
          for (int i = 0; i < 3; ++i) add(X(a), X(b), G(i));
        } else {
          add(X(a), X(b), X(c));
        }
      }
    }
  for (int code : reps) {
    F25 a{code % 5, code / 5};
    for (int j = 0; j < 3; ++j)
      for (int m = 0; m < 3; ++m) {
        add(X(a), Y(j), Y(m));
        add(Y(j), X(a), Y(m));
        add(X(a), Ystar(j), Ystar(m));
        add(Ystar(j), X(a), Ystar(m));
      }
  }
  const int F[3] = {1, 2, 2};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      add(Y(j), Ystar(k), G(j - k));
      add(Ystar(k), Y(j), G(j - k));
      for (int code : reps) {
        F25 a{code % 5, code / 5};
        add(Y(j), Ystar(k), X(a));
        add(Ystar(k), Y(j), X(a));
      }
      for (int m = 0; m < 3; ++m) {
        add(Y(j), Y(k), Ystar(m), F[(j + k + m) % 3]);
        add(Ystar(j), Ystar(k), Y(m), F[(j + k + m) % 3]);
      }
    }
  std::vector<FusionEntry> entries;
  for (const auto& [key, v] : n) entries.push_back({key[0], key[1], key[2], v});

  Gauged out{FusionRing(r, dual, std::move(entries)), std::vector<std::int64_t>(r, 0), std::vector<std::int64_t>(r, 1)};
  for (int code : reps) {
    F25 a{code % 5, code / 5};
    for (F25 b : {a, a.neg()}) {
      const auto x = static_cast<std::size_t>(X(b));
      out.twists[x] = (3 * b.norm()) % 15;
      out.dims[x] = 3;
    }
  }
  for (int j = 0; j < 3; ++j) {
    for (int lbl : {Y(j), Ystar(j)}) {
      out.twists[static_cast<std::size_t>(lbl)] = 5 * j;
      out.dims[static_cast<std::size_t>(lbl)] = 5;
    }
  }
  return out;
}

}  // namespace

FusionRing gauged_rank17_ring() { return build_gauged().ring; }

ModularData gauged_rank17_modular() {
  Gauged g = build_gauged();
  return balanced_modular_data(std::move(g.ring), 15, std::move(g.twists), g.dims);
}

std::vector<RingExample> ring_catalog() {
  std::vector<RingExample> out;
  for (int n : {3, 5, 7, 9, 15}) out.push_back({"z" + std::to_string(n), cyclic_group_ring(n)});
  out.push_back({"z3xz3", deligne_product(cyclic_group_ring(3), cyclic_group_ring(3))});
  out.push_back({"fibonacci", fibonacci_ring()});
  out.push_back({"ising", ising_ring()});
  out.push_back({"z3xfibonacci", deligne_product(cyclic_group_ring(3), fibonacci_ring())});
  out.push_back({"gauged17", gauged_rank17_ring()});
  return out;
}

std::vector<ModularExample> modular_catalog() {
  std::vector<ModularExample> out;
  for (int n : {3, 5, 7, 9, 15}) out.push_back({"pointed_z" + std::to_string(n), pointed_modular(n)});
  out.push_back({"ising", ising_modular()});
  out.push_back({"fibonacci", fibonacci_modular()});
  out.push_back({"z3_degenerate", z3_degenerate()});
  out.push_back({"gauged17", gauged_rank17_modular()});
  return out;
}

}  // namespace mtclab
