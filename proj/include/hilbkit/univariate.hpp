#pragma once

#include <string>
#include <vector>

#include "hilbkit/ring.hpp"

namespace hilbkit {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zeros are trimmed, so equality is coefficient-wise.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly monomial(const Rational& c, int degree);
  // C(m + shift, k) as a polynomial in m: prod_{i=0}^{k-1} (m + shift - i) / k!,
  // and 0 when k < 0.
  static UPoly binomial(long shift, int k);

  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scale(const Rational& c) const;

  Rational operator()(const Rational& x) const;

  // Exact division by (1 - T); requires p(1) = 0.
  UPoly divide_one_minus_t() const;

  // "2*m + 2", "1/2*m^2 - m", "0"
  std::string to_string(const std::string& var = "m") const;

  bool operator==(const UPoly& o) const = default;

 private:
  std::vector<Rational> c_;
  void trim();
};

// Exact integer binomial; zero when k < 0 or k > n for n >= 0.
Integer binomial(long n, long k);

}  // namespace hilbkit
