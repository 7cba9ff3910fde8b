#include "hilbkit/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hilbkit {

namespace {

constexpr int kMaxExponent = std::numeric_limits<std::uint16_t>::max();

std::uint16_t checked_exponent(long value) {
  if (value < 0) throw std::invalid_argument("negative exponent");
  if (value > kMaxExponent) throw std::overflow_error("exponent overflow");
  return static_cast<std::uint16_t>(value);
}

// grevlex restricted to the variables selected by mask (all when mask == ~0).
int grevlex_compare(const Monomial& a, const Monomial& b, int num_vars,
                    std::uint32_t mask) {
  int da = a.degree_in(mask), db = b.degree_in(mask);
  if (da != db) return da < db ? -1 : 1;
  for (int i = num_vars - 1; i >= 0; --i) {
    if (!(mask >> i & 1u)) continue;
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("too many variables for a monomial");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exps_[i] = checked_exponent(exponents[i]);
    degree_ += exps_[i];
  }
}

Monomial Monomial::variable(int index, int power) {
  if (index < 0 || index >= kMaxVars) throw std::out_of_range("variable index");
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(int i, int value) {
  auto idx = static_cast<std::size_t>(i);
  degree_ -= exps_[idx];
  exps_[idx] = checked_exponent(value);
  degree_ += exps_[idx];
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = checked_exponent(static_cast<long>(exps_[i]) + other.exps_[i]);
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (other.exps_[i] > exps_[i]) throw std::domain_error("monomial does not divide");
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - other.exps_[i]);
  }
  r.degree_ = degree_ - other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

int Monomial::degree_in(std::uint32_t mask) const {
  if (mask == ~0u) return static_cast<int>(degree_);
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (mask >> i & 1u) d += exps_[static_cast<std::size_t>(i)];
  return d;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Monomial> monomials_of_degree(int num_vars, int d) {
  std::vector<Monomial> out;
  if (d < 0 || num_vars <= 0) return out;
  Monomial cur;
  // Distribute the remaining degree over variables var..num_vars-1.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == num_vars - 1) {
      cur.set(var, remaining);
      out.push_back(cur);
      cur.set(var, 0);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur.set(var, e);
      self(self, var + 1, remaining - e);
    }
    cur.set(var, 0);
  };
  rec(rec, 0, d);
  return out;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b, int num_vars) const {
  switch (kind_) {
    case OrderKind::Lex:
      for (int i = 0; i < num_vars; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case OrderKind::GRevLex:
      return grevlex_compare(a, b, num_vars, ~0u);
    case OrderKind::Elimination: {
      if (int c = grevlex_compare(a, b, num_vars, front_)) return c;
      return grevlex_compare(a, b, num_vars, ~front_);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::Lex: return "lex";
    case OrderKind::GRevLex: return "grevlex";
    case OrderKind::Elimination: return "elimination";
  }
  return "?";
}

}  // namespace hilbkit
