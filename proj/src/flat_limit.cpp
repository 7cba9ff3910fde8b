#include "hilbkit/flat_limit.hpp"

#include "hilbkit/error.hpp"

namespace hilbkit {

Family::Family(Ideal total) : total_(std::move(total)), fiber_ring_(total_.ring().num_vars()) {
  if (!total_.ring().has_param()) throw DomainError("a family needs the parameter t");
  if (total_.is_zero()) throw DomainError("family is identically zero");
  for (const auto& g : total_.generators())
    if (!g.is_x_homogeneous()) throw DomainError("family generators must be homogeneous in x");
}

namespace {

Ideal specialize(const Family& family, const Rational& t0) {
  std::vector<Polynomial> gens;
  for (const auto& g : family.total().generators())
    gens.push_back(g.evaluate(family.param_index(), t0).transfer(family.fiber_ring()));
  return Ideal(family.fiber_ring(), std::move(gens));
}

}  // namespace

Ideal limit_ideal(const Family& family) {
  const PolyRing& ring = family.total().ring();
  Ideal closure = saturate(family.total(), Polynomial::variable(ring, family.param_index()));
  if (closure.is_zero()) throw DomainError("family is identically zero at generic t");
  Family flat(closure);
  return saturate_irrelevant(specialize(flat, 0));
}

Ideal fiber(const Family& family, const Rational& t0) {
  return saturate_irrelevant(specialize(family, t0));
}

std::vector<Rational> default_samples(int count) {
  static const long kNum[] = {1, 2, 1, 3, 1, -1, 5, 2, -2, 7, 1, -3};
  static const long kDen[] = {1, 1, 3, 1, 2, 1, 1, 5, 1, 1, 7, 2};
  std::vector<Rational> out;
  for (int i = 0; i < count; ++i) {
    if (i < 12) {
      out.emplace_back(kNum[i], kDen[i]);
    } else {
      out.emplace_back(11 + i, 1);
    }
    out.back().canonicalize();
  }
  return out;
}

FlatnessReport flatness_probe(const Family& family, int samples) {
  if (samples < 2) throw DomainError("flatness probe needs at least two samples");
  FlatnessReport report;
  report.limit_polynomial = hilbert_series(limit_ideal(family)).polynomial;
  report.flat = true;
  for (const auto& t : default_samples(samples)) {
    UPoly p = hilbert_series(fiber(family, t)).polynomial;
    bool ok = p == report.limit_polynomial;
    report.flat = report.flat && ok;
    report.fibers.push_back({t, std::move(p), ok});
  }
  return report;
}

}  // namespace hilbkit
