#include "mtclab/hypothesis.hpp"

#include <algorithm>
#include <sstream>

#include "mtclab/errors.hpp"

namespace mtclab {

Domain Domain::at_least(std::int64_t lo) {
  Domain d;
  d.lo_ = lo;
  return d;
}

Domain Domain::between(std::int64_t lo, std::int64_t hi) {
  Domain d;
  d.finite_ = true;
  for (auto v = lo; v <= hi; ++v) d.values_.push_back(v);
  return d;
}

Domain Domain::of(std::vector<std::int64_t> values) {
  Domain d;
  d.finite_ = true;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  d.values_ = std::move(values);
  return d;
}

std::int64_t Domain::value() const {
  if (!is_known()) throw InternalError("domain value requested but not known: " + to_string());
  return values_[0];
}

std::int64_t Domain::min() const {
  if (!finite_) return lo_;
  if (values_.empty()) throw InternalError("min of empty domain");
  return values_.front();
}

std::optional<std::int64_t> Domain::max() const {
  if (!finite_ || values_.empty()) return std::nullopt;
  return values_.back();
}

const std::vector<std::int64_t>& Domain::values() const {
  if (!finite_) throw InternalError("values of an unbounded domain");
  return values_;
}

bool Domain::contains(std::int64_t v) const {
  if (!finite_) return v >= lo_;
  return std::binary_search(values_.begin(), values_.end(), v);
}

Domain Domain::with_min(std::int64_t lo) const {
  if (!finite_) return at_least(std::max(lo, lo_));
  return filtered([lo](std::int64_t v) { return v >= lo; });
}

Domain Domain::with_max(std::int64_t hi) const {
  if (!finite_) return between(lo_, hi);
  return filtered([hi](std::int64_t v) { return v <= hi; });
}

Domain Domain::filtered(const std::function<bool(std::int64_t)>& pred) const {
  if (!finite_) throw InternalError("cannot filter an unbounded domain");
  Domain d;
  d.finite_ = true;
  for (auto v : values_)
    if (pred(v)) d.values_.push_back(v);
  return d;
}

bool Domain::is_subset_of(const Domain& other) const {
  if (!finite_) return !other.finite_ && lo_ >= other.lo_;
  return std::all_of(values_.begin(), values_.end(), [&](std::int64_t v) { return other.contains(v); });
}

std::string Domain::to_string() const {
  if (!finite_) return ">=" + std::to_string(lo_);
  if (values_.size() == 1) return std::to_string(values_[0]);
  std::string s = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? "," : "") + std::to_string(values_[i]);
  return s + "}";
}

std::string to_string(Flag f) {
  switch (f) {
    case Flag::Integral: return "integral";
    case Flag::OddDim: return "odd-dim";
    case Flag::CptInsideCad: return "Cpt-inside-Cad";
    case Flag::CadptTrivial: return "Cadpt-trivial";
    case Flag::CadptNontrivial: return "Cadpt-nontrivial";
    case Flag::Perfect: return "perfect";
    case Flag::Pointed: return "pointed";
    case Flag::NotPointed: return "not-pointed";
    case Flag::AdPointed: return "Cad-pointed";
    case Flag::AdNotPointed: return "Cad-not-pointed";
  }
  return "?";
}

namespace {

std::string vec_to_string(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string vec_to_string(const std::vector<int>& v) {
  return vec_to_string(std::vector<std::int64_t>(v.begin(), v.end()));
}

}  // namespace

std::string Hypothesis::describe() const {
  std::ostringstream os;
  os << "rank=" << rank;
  if (mnsd) os << " mnsd";
  if (modular) os << " modular";
  auto dom = [&](const char* name, const Domain& d) {
    if (d.is_finite() || d.min() > 1) os << ' ' << name << '=' << d.to_string();
  };
  dom("dim", dim);
  dom("dim_ad", dim_ad);
  dom("|G|", g_order);
  dom("|G_ad|", g_ad_order);
  dom("rank_ad", rank_ad);
  if (component_ranks) {
    os << " components={";
    for (std::size_t i = 0; i < component_ranks->size(); ++i) {
      os << (i ? "," : "") << vec_to_string((*component_ranks)[i]);
    }
    os << '}';
  }
  if (nonunit_dims) os << " nonunit_dims=" << vec_to_string(*nonunit_dims);
  if (cd_prime) os << " cd-in-1-union-" << *cd_prime << "Z";
  for (auto f : flags) os << ' ' << to_string(f);
  return os.str();
}

bool Hypothesis::operator==(const Hypothesis& o) const {
  return rank == o.rank && mnsd == o.mnsd && modular == o.modular && dim == o.dim && dim_ad == o.dim_ad &&
         g_order == o.g_order && g_ad_order == o.g_ad_order && rank_ad == o.rank_ad &&
         component_ranks == o.component_ranks && nonunit_dims == o.nonunit_dims &&
         component_dims == o.component_dims && cd_prime == o.cd_prime && flags == o.flags;
}

Hypothesis mnsd_modular_hypothesis(int rank, std::string id) {
  Hypothesis h;
  h.id = std::move(id);
  h.rank = rank;
  h.mnsd = true;
  h.modular = true;
  h.g_order = Domain::between(1, rank);
  h.g_ad_order = Domain::between(1, rank);
  h.rank_ad = Domain::between(1, rank);
  return h;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::int64_t> prime_power_base(std::int64_t n) {
  auto ps = prime_divisors(n);
  if (ps.size() != 1) return std::nullopt;
  return ps[0];
}

bool is_square_free(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace mtclab
