#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hilbkit {

// Upper bound on the number of ring variables (x-variables, the parameter t and
// internal auxiliary variables together).
inline constexpr int kMaxVars = 16;

/// Exponent vector over at most kMaxVars variables. The total degree is cached.
/// Exponents are bounded by 65535; every operation that could exceed it throws
/// std::overflow_error.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(int index, int power = 1);

  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  int degree() const { return static_cast<int>(degree_); }
  bool is_one() const { return degree_ == 0; }

  void set(int i, int value);

  Monomial operator*(const Monomial& other) const;
  // Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  // Degree restricted to variables whose bit is set in mask.
  int degree_in(std::uint32_t mask) const;

  bool operator==(const Monomial& other) const = default;

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// All monomials of total degree d in the first num_vars variables, in lex
// descending order.
std::vector<Monomial> monomials_of_degree(int num_vars, int d);

enum class OrderKind { Lex, GRevLex, Elimination };

/// A total, multiplicative monomial order. Variables are ranked by index:
/// x0 > x1 > ... . The elimination order compares the degree in the front
/// block first, then grevlex inside the front block, then grevlex on the rest.
class MonomialOrder {
 public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GRevLex, 0); }
  static MonomialOrder elimination(std::uint32_t front_mask) {
    return MonomialOrder(OrderKind::Elimination, front_mask);
  }

  OrderKind kind() const { return kind_; }
  std::uint32_t front_mask() const { return front_; }

  // Negative, zero or positive as a <, =, > b. Only the first num_vars
  // variables are inspected.
  int compare(const Monomial& a, const Monomial& b, int num_vars) const;

  std::string name() const;

  bool operator==(const MonomialOrder& other) const = default;

 private:
  MonomialOrder(OrderKind kind, std::uint32_t front) : kind_(kind), front_(front) {}

  OrderKind kind_;
  std::uint32_t front_;
};

}  // namespace hilbkit
