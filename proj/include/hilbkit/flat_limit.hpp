#pragma once

#include <string>
#include <vector>

#include "hilbkit/hilbert.hpp"
#include "hilbkit/ideal.hpp"

namespace hilbkit {

/// One-parameter family: an ideal in Q[x0..xn, t] whose generators are
/// homogeneous in the x-variables (t has degree zero).
class Family {
 public:
  explicit Family(Ideal total);

  const Ideal& total() const { return total_; }
  // Q[x0..xn] without the parameter.
  const PolyRing& fiber_ring() const { return fiber_ring_; }
  int param_index() const { return total_.ring().param_index(); }

 private:
  Ideal total_;
  PolyRing fiber_ring_;
};

// Special fiber at t = 0 of the t-flat closure, saturated with respect to
// (x0..xn), in canonical form.
Ideal limit_ideal(const Family& family);

// t = t0, then saturation with respect to (x0..xn).
Ideal fiber(const Family& family, const Rational& t0);

// The deterministic sample sequence 1, 2, 1/3, 3, 1/2, -1, 5, ... (all nonzero,
// pairwise distinct).
std::vector<Rational> default_samples(int count);

struct FiberSample {
  Rational t;
  UPoly polynomial;
  bool matches_limit;
};

struct FlatnessReport {
  bool flat = false;
  UPoly limit_polynomial;
  std::vector<FiberSample> fibers;
};

// Throws DomainError when samples < 2.
FlatnessReport flatness_probe(const Family& family, int samples = 3);

}  // namespace hilbkit
