#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hilbkit/ring.hpp"

namespace hilbkit {

struct Term {
  Rational coeff;
  Monomial mono;
};

/// Sparse polynomial over Q. Terms are kept strictly descending in the ring's
/// monomial order with no zero coefficients; every public operation returns a
/// canonical value.
class Polynomial {
 public:
  explicit Polynomial(PolyRing ring) : ring_(ring) {}

  static Polynomial constant(const PolyRing& ring, const Rational& c);
  static Polynomial variable(const PolyRing& ring, int index);
  static Polynomial term(const PolyRing& ring, const Rational& c, const Monomial& m);
  // Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(const PolyRing& ring, std::vector<Term> terms);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  // Preconditions: nonzero.
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  // Total degree over all variables; -1 for zero.
  int degree() const;
  // Degree counting only variables in mask.
  int degree_in(std::uint32_t mask) const;
  bool is_homogeneous() const;
  // Homogeneous with respect to the x-variables only (t and auxiliaries have
  // degree zero).
  bool is_x_homogeneous() const;
  bool uses_variable(int index) const;

  // Removes the leading term (no-op on zero).
  void pop_leading();

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scale(const Rational& c) const;
  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  // this - c*m*other, in one merge pass.
  Polynomial sub_mul(const Rational& c, const Monomial& m, const Polynomial& other) const;

  Polynomial pow(int e) const;

  // Image under the ring map sending variable var to replacement and fixing
  // all other variables.
  Polynomial substitute(int var, const Polynomial& replacement) const;
  // Simultaneous substitution of every variable (images[i] is the image of
  // variable i; a zero-variable ring map is not allowed).
  Polynomial substitute_all(std::span<const Polynomial> images) const;
  // Specialise a variable to a rational value.
  Polynomial evaluate(int var, const Rational& value) const;

  // Moves the polynomial into a ring with a compatible variable layout (x_i to
  // x_i, t to t, u_k to u_k) and re-sorts under the target's order. Throws if
  // a variable in use has no counterpart.
  Polynomial transfer(const PolyRing& target) const;

  Polynomial monic() const;
  // Divide by the rational content so that the coefficients are coprime
  // integers and the leading coefficient is positive.
  Polynomial primitive() const;

  // Validator for the canonical-form invariant.
  bool is_canonical() const;

  std::string to_string() const;

  bool operator==(const Polynomial& other) const;

 private:
  PolyRing ring_;
  std::vector<Term> terms_;

  void check_ring(const Polynomial& other) const;
};

std::string to_string(const Rational& q);

/// Parses the text grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := var ('^' nat)?
///   coeff  := integer | integer '/' positive-integer
///   var    := 'x' nat | 't'
/// Whitespace is insignificant.
Polynomial parse_polynomial(std::string_view text, const PolyRing& ring);

}  // namespace hilbkit
