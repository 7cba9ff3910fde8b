#include "hilbkit/picard.hpp"

#include <algorithm>

#include "hilbkit/error.hpp"
#include "hilbkit/linalg.hpp"

namespace hilbkit {

std::string to_string(Space space) { return space == Space::H ? "hn" : "wn"; }

namespace {

PairingTable make_h_table() {
  PairingTable t{Space::H, {"M", "F"}, {"N", "E"}, {}};
  t.curves = {
      {"B1", {{"M", {1, true}}, {"F", {1, true}}, {"N", {0, true}}, {"E", {1, true}}}},
      {"B2", {{"M", {1, true}}, {"F", {0, true}}, {"N", {2, true}}, {"E", {-1, false}}}},
      {"B3", {{"M", {2, true}}, {"F", {1, false}}, {"N", {2, true}}, {"E", {0, true}}}},
      {"B4", {{"M", {0, true}}, {"F", {1, true}}, {"N", {-2, false}}, {"E", {2, true}}}},
  };
  return t;
}

PairingTable make_w_table() {
  PairingTable t{Space::W, {"M'", "F'", "R'"}, {"N'", "E'"}, {}};
  for (const auto& c : make_h_table().curves) {
    CurvePairings row{c.curve, {}};
    for (const auto& [name, entry] : c.entries) row.entries[name + "'"] = entry;
    row.entries["R'"] = {0, true};
    t.curves.push_back(std::move(row));
  }
  t.curves.push_back({"B5",
                      {{"M'", {1, true}}, {"F'", {1, true}}, {"R'", {1, true}}, {"N'", {0, true}}, {"E'", {0, true}}}});
  t.curves.push_back({"B6",
                      {{"M'", {0, true}}, {"F'", {0, true}}, {"R'", {1, true}}, {"N'", {0, true}}, {"E'", {-1, false}}}});
  return t;
}

std::optional<long> stated(const CurvePairings& c, const std::string& name) {
  auto it = c.entries.find(name);
  if (it == c.entries.end() || !it->second.stated) return std::nullopt;
  return it->second.value;
}

long to_long(const Rational& q, const std::string& what) {
  if (q.get_den() != 1) throw DomainError(what + " is not integral");
  if (!q.get_num().fits_slong_p()) throw DomainError(what + " is too large");
  return q.get_num().get_si();
}

enum class Solve { Unique, Underdetermined, Inconsistent };

Solve solve_system(const RationalMatrix& a, const RationalVector& b, RationalVector* out) {
  if (a.rows() == 0 || a.rank() < a.cols()) return Solve::Underdetermined;
  auto x = a.solve_unique(b);
  if (!x) return Solve::Inconsistent;
  *out = *x;
  return Solve::Unique;
}

}  // namespace

const PairingTable& default_pairing_table(Space space) {
  static const PairingTable h = make_h_table();
  static const PairingTable w = make_w_table();
  return space == Space::H ? h : w;
}

RelationReport solve_relations(const PairingTable& table) {
  const std::size_t r = table.basis.size();
  // Curve rows against the basis; unset entries are unknown.
  std::vector<std::vector<std::optional<long>>> rows;
  for (const auto& c : table.curves) {
    std::vector<std::optional<long>> row;
    for (const auto& b : table.basis) row.push_back(stated(c, b));
    rows.push_back(std::move(row));
  }
  std::map<std::string, std::vector<long>> classes;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<long> e(r, 0);
    e[i] = 1;
    classes[table.basis[i]] = e;
  }

  auto complete = [&](std::size_t c) {
    return std::all_of(rows[c].begin(), rows[c].end(), [](const auto& v) { return v.has_value(); });
  };

  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& d : table.derived) {
      if (classes.count(d)) continue;
      RationalMatrix a(0, r);
      RationalVector b;
      for (std::size_t c = 0; c < table.curves.size(); ++c) {
        auto v = stated(table.curves[c], d);
        if (!v || !complete(c)) continue;
        RationalVector row;
        for (const auto& x : rows[c]) row.emplace_back(*x);
        a.append_row(row);
        b.emplace_back(*v);
      }
      RationalVector x;
      Solve s = solve_system(a, b, &x);
      if (s == Solve::Inconsistent) throw DomainError("pairing data for " + d + " is inconsistent");
      if (s == Solve::Underdetermined) continue;
      std::vector<long> coords;
      for (const auto& q : x) coords.push_back(to_long(q, d));
      classes[d] = coords;
      progress = true;
    }
    for (std::size_t c = 0; c < table.curves.size(); ++c) {
      if (complete(c)) continue;
      std::vector<std::size_t> unknown;
      for (std::size_t k = 0; k < r; ++k)
        if (!rows[c][k]) unknown.push_back(k);
      RationalMatrix a(0, unknown.size());
      RationalVector b;
      for (const auto& d : table.derived) {
        auto v = stated(table.curves[c], d);
        auto it = classes.find(d);
        if (!v || it == classes.end()) continue;
        Rational rhs = *v;
        RationalVector row;
        for (std::size_t k = 0; k < r; ++k) {
          if (rows[c][k]) {
            rhs -= Rational(*rows[c][k] * it->second[k]);
          }
        }
        for (auto k : unknown) row.emplace_back(it->second[k]);
        a.append_row(row);
        b.push_back(rhs);
      }
      RationalVector x;
      Solve s = solve_system(a, b, &x);
      if (s == Solve::Inconsistent)
        throw DomainError("pairing data for " + table.curves[c].curve + " is inconsistent");
      if (s == Solve::Underdetermined) continue;
      for (std::size_t k = 0; k < unknown.size(); ++k)
        rows[c][unknown[k]] = to_long(x[k], table.curves[c].curve);
      progress = true;
    }
  }

  for (const auto& d : table.derived)
    if (!classes.count(d)) throw DomainError("pairing data does not determine " + d);
  RelationReport report;
  for (std::size_t c = 0; c < table.curves.size(); ++c) {
    if (!complete(c)) throw DomainError("pairing data does not determine the row of " + table.curves[c].curve);
    CurveClass cc{table.curves[c].curve, {}};
    for (const auto& x : rows[c]) cc.row.push_back(*x);
    report.curves.push_back(cc);
  }
  // Every entry, stated or recorded as derived, must match the solution.
  for (std::size_t c = 0; c < table.curves.size(); ++c) {
    for (const auto& [name, entry] : table.curves[c].entries) {
      auto it = classes.find(name);
      if (it == classes.end()) throw DomainError("unknown divisor " + name);
      long v = 0;
      for (std::size_t k = 0; k < r; ++k) v += report.curves[c].row[k] * it->second[k];
      if (v != entry.value)
        throw DomainError(table.curves[c].curve + "." + name + " = " + std::to_string(entry.value) +
                          " contradicts the solved value " + std::to_string(v));
      ++(entry.stated ? report.stated_checked : report.derived_checked);
    }
  }
  report.classes = std::move(classes);
  return report;
}

PicLattice::PicLattice(Space space, int n) : space_(space), n_(n) {
  if (space == Space::H && n < 3) throw DomainError("H_n needs n >= 3");
  if (space == Space::W && n < 4) throw DomainError("the W_n lattice needs n >= 4 (W_3 is H_3)");
  const auto& table = default_pairing_table(space);
  auto rel = solve_relations(table);
  basis_ = table.basis;
  curves_ = rel.curves;
  named_ = rel.classes;
}

const CurveClass& PicLattice::curve(const std::string& name) const {
  for (const auto& c : curves_)
    if (c.name == name) return c;
  throw DomainError("unknown curve " + name);
}

DivisorClass PicLattice::named(const std::string& name) const {
  auto it = named_.find(name);
  if (it == named_.end()) throw DomainError("unknown divisor " + name);
  return {space_, it->second, name};
}

DivisorClass PicLattice::divisor(std::vector<long> coords) const {
  if (coords.size() != basis_.size())
    throw DomainError("divisor needs " + std::to_string(basis_.size()) + " coordinates");
  return {space_, std::move(coords), ""};
}

long pairing(const CurveClass& curve, const DivisorClass& divisor) {
  if (curve.row.size() != divisor.coords.size()) throw DomainError("curve and divisor live in different lattices");
  long v = 0;
  for (std::size_t i = 0; i < curve.row.size(); ++i) v += curve.row[i] * divisor.coords[i];
  return v;
}

namespace {

using Vec2 = std::vector<long>;

long cross(const Vec2& u, const Vec2& v) { return u[0] * v[1] - u[1] * v[0]; }
long dot(const Vec2& u, const Vec2& v) { return u[0] * v[0] + u[1] * v[1]; }
bool on_ray(const Vec2& ray, const Vec2& d) { return cross(ray, d) == 0 && dot(ray, d) > 0; }
// Strictly between u and v (counter-clockwise, angle < pi).
bool strictly_between(const Vec2& u, const Vec2& v, const Vec2& d) { return cross(u, d) > 0 && cross(d, v) > 0; }

ChamberReport chamber_h(const PicLattice& lat, const DivisorClass& d) {
  const Vec2 M = lat.named("M").coords, F = lat.named("F").coords, N = lat.named("N").coords,
             E = lat.named("E").coords;
  const Vec2& x = d.coords;
  if (x[0] == 0 && x[1] == 0) throw DomainError("the zero class has no chamber");
  if (cross(N, x) < 0 || cross(x, E) < 0) throw DomainError("divisor is not effective");
  const int n = lat.n();
  ChamberReport r;
  if (strictly_between(M, F, x)) {
    r.chamber = "(F,M)";
    r.ample = true;
    r.model = "H_n";
  } else if (on_ray(M, x)) {
    r.chamber = "[F,M]";
    r.model = "Sym^2 G(n-2,n)";
  } else if (on_ray(F, x)) {
    r.chamber = "[F,M]";
    r.model = "Theta_n";
  } else if (strictly_between(N, M, x) || on_ray(N, x)) {
    r.chamber = "(M,N]";
    r.base_locus = {"II", "IV"};
    if (!on_ray(N, x)) r.model = "Sym^2 G(n-2,n)";
  } else {
    r.chamber = "[E,F)";
    r.base_locus = {"III", "IV"};
    if (on_ray(E, x)) {
      if (n >= 4) r.model = "G(3,n)";
    } else {
      r.model = n == 3 ? "Psi_3 = G(3,5)" : "Psi_n (flip)";
    }
  }
  // B4 sweeps II and IV; B2 sweeps III and IV.
  if (r.base_locus.empty()) {
    r.validated = pairing(lat.curve("B1"), d) >= 0 && pairing(lat.curve("B2"), d) >= 0 &&
                  pairing(lat.curve("B3"), d) >= 0 && pairing(lat.curve("B4"), d) >= 0;
  } else if (r.chamber == "(M,N]") {
    r.validated = pairing(lat.curve("B4"), d) < 0;
  } else {
    r.validated = pairing(lat.curve("B2"), d) < 0;
  }
  return r;
}

// Coefficients of x in the basis (u, v, w), or nullopt when dependent.
std::optional<std::vector<Rational>> coefficients(const std::vector<std::vector<long>>& gens, const std::vector<long>& x) {
  RationalMatrix a(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = gens[j][i];
  RationalVector b;
  for (long v : x) b.emplace_back(v);
  return a.solve_unique(b);
}

bool in_closed_cone(const std::vector<std::vector<long>>& gens, const std::vector<long>& x,
                    std::vector<Rational>* coeffs = nullptr) {
  auto c = coefficients(gens, x);
  if (!c) return false;
  for (const auto& q : *c)
    if (q < 0) return false;
  if (coeffs) *coeffs = *c;
  return true;
}

ChamberReport chamber_w(const PicLattice& lat, const DivisorClass& d) {
  const auto M = lat.named("M'").coords, F = lat.named("F'").coords, R = lat.named("R'").coords,
             N = lat.named("N'").coords, E = lat.named("E'").coords;
  const auto& x = d.coords;
  if (std::all_of(x.begin(), x.end(), [](long v) { return v == 0; }))
    throw DomainError("the zero class has no chamber");
  if (!in_closed_cone({R, E, N}, x)) throw DomainError("divisor is not effective");
  ChamberReport r;
  std::vector<Rational> c;
  if (in_closed_cone({R, F, M}, x, &c)) {
    // c = (r, f, m)
    const bool hr = c[0] > 0, hf = c[1] > 0, hm = c[2] > 0;
    r.chamber = "<R',F',M'>";
    if (hr && hf && hm) {
      r.ample = true;
      r.model = "W_n";
    } else if (hf && hm) {
      r.model = "Bl_Delta Sym^2 G(1,n)";
    } else if (hf && hr) {
      r.model = "Psi_n";
    } else if (hm && hr) {
      r.model = "relative Chow variety";
    } else if (hf) {
      r.model = "Theta_n";
    } else if (hm) {
      r.model = "Sym^2 G(1,n)";
    } else {
      r.model = "G(3,n)";
    }
    r.validated = true;
    for (const auto& cv : lat.curves()) r.validated = r.validated && pairing(cv, d) >= 0;
    return r;
  }
  if (in_closed_cone({E, F, R}, x) || in_closed_cone({E, F, M}, x)) {
    r.chamber = "<E',F',R'> u <E',F',M'>";
    r.base_locus = {"E'"};
    r.validated = pairing(lat.curve("B2"), d) < 0 || pairing(lat.curve("B6"), d) < 0;
    return r;
  }
  if (in_closed_cone({R, M, N}, x)) {
    r.chamber = "<R',M',N'>";
    r.base_locus = {"N'"};
    r.validated = pairing(lat.curve("B4"), d) < 0;
    return r;
  }
  if (in_closed_cone({E, M, N}, x, &c)) {
    r.chamber = "<E',M',N'>";
    r.base_locus = {"E'", "N'"};
    // Remove the E' part, then B4 must still see N'.
    Rational ce = c[0];
    bool neg_e = pairing(lat.curve("B6"), d) < 0;
    RationalVector moved;
    for (std::size_t i = 0; i < 3; ++i) moved.push_back(Rational(x[i]) - ce * E[i]);
    Rational b4 = 0;
    for (std::size_t i = 0; i < 3; ++i) b4 += Rational(lat.curve("B4").row[i]) * moved[i];
    r.validated = neg_e && b4 < 0;
    return r;
  }
  throw DomainError("effective divisor outside every listed chamber");
}

}  // namespace

ChamberReport chamber_of(const PicLattice& lattice, const DivisorClass& divisor) {
  if (divisor.space != lattice.space() || divisor.coords.size() != lattice.rank())
    throw DomainError("divisor does not belong to this lattice");
  return lattice.space() == Space::H ? chamber_h(lattice, divisor) : chamber_w(lattice, divisor);
}

DivisorClass canonical_class(Space space, int n) {
  if (n < 3) throw DomainError("canonical class needs n >= 3");
  if (space == Space::H || n == 3) {
    // -(n+1)M + (n-2)N with N = 2M - 2F
    return {Space::H, {n - 5, -(2L * n - 4)}, "K"};
  }
  // -(n+1)M' + (n-2)N' + (n-3)E'
  PicLattice lat(Space::W, n);
  auto N = lat.named("N'").coords, E = lat.named("E'").coords;
  std::vector<long> k(3);
  for (std::size_t i = 0; i < 3; ++i) k[i] = (i == 0 ? -(n + 1L) : 0L) + (n - 2L) * N[i] + (n - 3L) * E[i];
  return {Space::W, k, "K'"};
}

bool is_fano(Space space, int n) {
  DivisorClass k = canonical_class(space, n);
  // The ample cone is the interior of the cone spanned by the basis vectors.
  return std::all_of(k.coords.begin(), k.coords.end(), [](long v) { return -v > 0; });
}

DimensionTable dimension_table(int n) {
  if (n < 3) throw DomainError("dimension table needs n >= 3");
  DimensionTable t{};
  t.n = n;
  t.type_I = 4 * n - 4;
  t.type_II = 4 * n - 5;
  t.type_III = 3 * n - 2;
  t.type_IV = 3 * n - 3;
  t.h_prime = 7 * n - 10;
  t.tangent_type_IV = 8 * n - 12;
  t.w = 4 * n - 4;
  t.w_prime = 4 * n - 1;
  t.e = 4 * n - 5;
  t.transversality_identity = t.type_I + t.h_prime - t.type_III == t.tangent_type_IV;
  t.tangent_count_identity = (3 * n - 3) + (5 * (n - 2) + 1) == t.tangent_type_IV;
  t.w_identity = t.w + t.w_prime - t.e == 4 * n;
  return t;
}

}  // namespace hilbkit
