#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilbkit/groebner.hpp"

namespace hilbkit {

/// Ideal given by generators in a fixed ring. The grevlex reduced Groebner
/// basis is computed lazily, once, and shared between copies; concurrent
/// readers are safe.
class Ideal {
 public:
  // Zero generators are dropped; an empty list is the zero ideal.
  Ideal(PolyRing ring, std::vector<Polynomial> generators);

  static Ideal parse(const PolyRing& ring, std::span<const std::string> generators);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  // Reduced basis under the ring's grevlex order.
  const GroebnerBasis& gb() const;
  // Uncached basis under another order.
  GroebnerBasis gb(const MonomialOrder& order) const;

  // Generators are homogeneous in all ring variables.
  bool is_homogeneous() const;
  bool is_unit() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;

  // The same ideal generated by its reduced grevlex basis.
  Ideal canonical() const;

  bool operator==(const Ideal& other) const;

  std::string to_string() const;

 private:
  struct Cache;
  PolyRing ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

// Eliminates an auxiliary u from u*I + (1-u)*J.
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect_all(std::span<const Ideal> ideals);

// (I : g) = (I ∩ (g)) / g.
Ideal quotient(const Ideal& ideal, const Polynomial& g);
// Intersection of the quotients by the generators of J.
Ideal quotient(const Ideal& ideal, const Ideal& j);

// (I : g^∞). Variables of a homogeneous ideal use the grevlex trick (put the
// variable last and strip its powers from the basis); anything else uses
// I + (1 - u*g) with u eliminated.
Ideal saturate(const Ideal& ideal, const Polynomial& g);
// (I : J^∞) by iterating quotients until the ideal stops growing.
Ideal saturate(const Ideal& ideal, const Ideal& j);
// Saturation by (x0,...,xn), as the intersection of the saturations by each
// x-variable.
Ideal saturate_irrelevant(const Ideal& ideal);

Ideal irrelevant_ideal(const PolyRing& ring);

// Drops generators lying in the ideal of the others; keeps the input order
// otherwise. Requires homogeneous generators.
Ideal minimalize(const Ideal& ideal);

// Image under x_i -> sum_j matrix[i][j] x_j (x-variables only).
Ideal linear_change(const Ideal& ideal, const std::vector<std::vector<Rational>>& matrix);

struct LinearChange {
  Ideal ideal;
  std::vector<std::vector<Rational>> matrix;
  int attempts;
};

/// Random invertible change of the x-variables with integer entries in
/// [-5, 5] drawn from mt19937_64(seed). Singular draws are redrawn up to three
/// times, then DomainError.
LinearChange random_linear_change(const Ideal& ideal, std::uint64_t seed);

}  // namespace hilbkit
