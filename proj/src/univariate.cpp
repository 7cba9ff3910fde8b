#include "hilbkit/univariate.hpp"

#include "hilbkit/error.hpp"

namespace hilbkit {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

UPoly UPoly::binomial(long shift, int k) {
  if (k < 0) return UPoly();
  UPoly acc = constant(1);
  Rational fact = 1;
  for (int i = 0; i < k; ++i) {
    acc = acc * UPoly({Rational(shift - i), Rational(1)});
    fact *= i + 1;
  }
  return acc.scale(1 / fact);
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  return UPoly(std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o.scale(-1); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rational> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(v));
}

UPoly UPoly::scale(const Rational& c) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= c;
  return UPoly(std::move(v));
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::divide_one_minus_t() const {
  if ((*this)(1) != 0) throw DomainError("not divisible by 1 - T");
  // p = (1 - T) q  =>  q_i = sum_{j <= i} p_j
  std::vector<Rational> q(c_.empty() ? 0 : c_.size() - 1);
  Rational run = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    run += c_[i];
    q[i] = run;
  }
  return UPoly(std::move(q));
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Rational c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str() + "*" + mono;
    }
  }
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0 && k > n) return 0;
  Integer num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace hilbkit
