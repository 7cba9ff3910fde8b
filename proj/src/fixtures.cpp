#include "hilbkit/fixtures.hpp"

#include <functional>
#include <map>

#include "hilbkit/error.hpp"

namespace hilbkit::fixtures {

namespace {

Polynomial poly(const PolyRing& ring, const std::string& text) { return parse_polynomial(text, ring); }

std::string xi(int i) { return "x" + std::to_string(i); }

Ideal ideal_of(const PolyRing& ring, std::vector<std::string> gens) { return Ideal::parse(ring, gens); }

void check_n(int n, int lo = 3) {
  if (n < lo || n > 12) throw DomainError("fixture needs " + std::to_string(lo) + " <= n <= 12");
}

std::vector<std::string> poly_lines(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

std::vector<std::string> row_lines(const std::vector<std::vector<Polynomial>>& rows) {
  std::vector<std::string> out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) line += (j ? "; " : "") + row[j].to_string();
    out.push_back(line);
  }
  return out;
}

std::vector<std::vector<Polynomial>> transpose(const std::vector<std::vector<Polynomial>>& cols) {
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t i = 0; i < cols.front().size(); ++i) {
    std::vector<Polynomial> r;
    for (const auto& c : cols) r.push_back(c[i]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::string> pairing_lines(const PairingTable& t) {
  std::vector<std::string> out;
  for (const auto& c : t.curves)
    for (const auto& [name, e] : c.entries)
      out.push_back(c.curve + " " + name + " " + std::to_string(e.value) + (e.stated ? " stated" : " derived"));
  return out;
}

struct Entry {
  std::string kind;
  std::string source;
  int n;
  bool param;
  std::function<std::vector<std::string>()> lines;
};

std::map<std::string, Entry> build_registry() {
  std::map<std::string, Entry> reg;
  const std::vector<std::pair<TypeLabel, std::string>> labels = {
      {TypeLabel::I, "I"}, {TypeLabel::II, "II"}, {TypeLabel::III, "III"}, {TypeLabel::IV, "IV"}};
  for (int n = 3; n <= 8; ++n) {
    const std::string sn = "_n" + std::to_string(n);
    for (const auto& [label, name] : labels)
      reg["ideal_type_" + name + sn] = {"ideal", "normal form of type " + name, n, false,
                                        [n, label] { return poly_lines(normal_form_ideal(n, label).generators()); }};
    reg["lambda" + sn] = {"ideal", "type IV generators in presentation order", n, false,
                          [n] { return poly_lines(lambda_ideal(n).generators()); }};
    reg["mu_matrix" + sn] = {"matrix", "first syzygies of lambda, one row per generator", n, false,
                             [n] { return row_lines(transpose(mu_columns(n))); }};
    reg["nu_vector" + sn] = {"matrix", "relation among the columns of mu", n, false,
                             [n] { return row_lines({nu_vector(n)}); }};
    reg["tangent_trivial" + sn] = {"assignments", "images of lambda under infinitesimal coordinate changes", n,
                                   false, [n] { return row_lines(tangent_trivial(n)); }};
    reg["tangent_versal" + sn] = {"assignments", "first-order deformations of lambda off the type IV orbit", n,
                                  false, [n] { return row_lines(tangent_versal(n)); }};
    reg["b4_pencil" + sn] = {"family", "type II pencil through a type IV point", n, true,
                             [n] { return poly_lines(b4_pencil(n).total().generators()); }};
    reg["non_flat" + sn] = {"family", "family whose fibre at t = 1 jumps", n, true,
                            [n] { return poly_lines(non_flat_family(n).total().generators()); }};
    auto families = degeneration_families(n);
    for (std::size_t k = 0; k < families.size(); ++k)
      reg["family_" + families[k].id + sn] = {"family", families[k].source, n, true, [n, k] {
                                                return poly_lines(degeneration_families(n)[k].family.total().generators());
                                              }};
  }
  for (int n = 3; n <= 5; ++n)
    for (int k = 1; k <= 3; ++k)
      reg["double_structure_n" + std::to_string(n) + "_k" + std::to_string(k)] = {
          "ideal", "double structure on x0 = x1 = 0 with F = x2^k, G = x3^k", n, false,
          [n, k] { return poly_lines(double_structure_ideal(n, k).generators()); }};
  reg["pairing_hn"] = {"pairing", "test curves B1..B4 against M, F, N, E", 0, false,
                       [] { return pairing_lines(default_pairing_table(Space::H)); }};
  reg["pairing_wn"] = {"pairing", "test curves B1..B6 against M', F', R', N', E'", 0, false,
                       [] { return pairing_lines(default_pairing_table(Space::W)); }};
  reg["conic_plane"] = {"ideal", "plane double line with an embedded point, three variables", 0, false,
                        [] { return poly_lines(plane_conic_ideal().generators()); }};
  reg["conic_space"] = {"ideal", "the same scheme in a hyperplane of four variables", 0, false,
                        [] { return poly_lines(space_conic_ideal().generators()); }};
  // Short names refer to P^3.
  for (std::string alias : {"lambda", "mu_matrix", "nu_vector"}) reg[alias] = reg[alias + "_n3"];
  return reg;
}

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> reg = build_registry();
  return reg;
}

}  // namespace

Fixture get(const std::string& id) {
  auto it = registry().find(id);
  if (it == registry().end()) throw DomainError("unknown fixture id '" + id + "'");
  const Entry& e = it->second;
  return Fixture{id, e.kind, e.source, e.n, e.param, e.lines()};
}

std::vector<std::string> ids() {
  std::vector<std::string> out;
  for (const auto& [id, e] : registry()) out.push_back(id);
  return out;
}

std::vector<FamilyCase> degeneration_families(int n) {
  check_n(n);
  PolyRing ring = PolyRing::projective(n, true);
  PolyRing plain = PolyRing::projective(n);
  // Unions are intersections. For n >= 4 the product of the two ideals is not
  // saturated along their common Lambda_{n-4}, so it is not used.
  auto family = [](const Ideal& a, const Ideal& b) { return Family(intersect(a, b)); };
  std::vector<FamilyCase> out;
  out.push_back({"type_III",
                 family(ideal_of(ring, {"x0", "x1"}), ideal_of(ring, {"x0 + t*x3", "x2"})),
                 normal_form_ideal(n, TypeLabel::III).canonical(), TypeLabel::III,
                 "two planes meeting along a line collide into one with an embedded point"});
  out.push_back({"type_II",
                 family(ideal_of(ring, {"x0", "x1"}), ideal_of(ring, {"x0 + t*x2", "x1 + t*x3"})),
                 normal_form_ideal(n, TypeLabel::II).canonical(), TypeLabel::II,
                 "two disjoint planes collide into a double structure"});
  out.push_back({"h_prime",
                 family(ideal_of(ring, {"x0", "x1*x2"}), ideal_of(ring, {"x1", "x2", "t*x3 + x0 - t*x0"})),
                 normal_form_ideal(n, TypeLabel::III).canonical(), TypeLabel::III,
                 "plane pair plus a codimension-three space sliding into their intersection"});
  out.push_back({"substitution",
                 Family(ideal_of(ring, {"x0^2", "x0*x1", "x0*x1 + t*x0*x2", "x1^2 + t*x1*x2"})),
                 ideal_of(plain, {"x0^2", "x0*x1", "x0*x2", "x1^2"}).canonical(), TypeLabel::IV,
                 "type III ideal with x2 replaced by x1 + t*x2"});
  return out;
}

Family b4_pencil(int n) {
  check_n(n);
  return Family(ideal_of(PolyRing::projective(n, true), {"x0^2", "x0*x1", "x1^2", "t*x0*x3 - x1*x2"}));
}

Family non_flat_family(int n) {
  check_n(n, 1);
  return Family(ideal_of(PolyRing::projective(n, true), {"t*x1 - x1", "x0 + t*x1"}));
}

Ideal lambda_ideal(int n) {
  check_n(n);
  return ideal_of(PolyRing::projective(n), {"x0*x1", "x0*x2", "x0^2", "x1^2"});
}

std::vector<std::vector<Polynomial>> mu_columns(int n) {
  check_n(n);
  PolyRing r = PolyRing::projective(n);
  auto col = [&](std::vector<std::string> v) {
    std::vector<Polynomial> out;
    for (const auto& s : v) out.push_back(poly(r, s));
    return out;
  };
  return {col({"x1", "0", "0", "-x0"}), col({"x2", "-x1", "0", "0"}), col({"x0", "0", "-x1", "0"}),
          col({"0", "x0", "-x2", "0"})};
}

std::vector<Polynomial> nu_vector(int n) {
  check_n(n);
  PolyRing r = PolyRing::projective(n);
  return {poly(r, "0"), poly(r, "x0"), poly(r, "-x2"), poly(r, "x1")};
}

std::vector<std::vector<Polynomial>> tangent_trivial(int n) {
  check_n(n);
  PolyRing r = PolyRing::projective(n);
  auto row = [&](std::string a, std::string b, std::string c, std::string d) {
    return std::vector<Polynomial>{poly(r, a), poly(r, b), poly(r, c), poly(r, d)};
  };
  std::vector<std::vector<Polynomial>> out;
  for (int i = 3; i <= n; ++i) {
    const std::string x = xi(i);
    out.push_back(row("x1*" + x, "x2*" + x, "2*x0*" + x, "0"));
    out.push_back(row("x0*" + x, "0", "0", "2*x1*" + x));
    out.push_back(row("0", "x0*" + x, "0", "0"));
  }
  out.push_back(row("0", "x1*x2", "0", "0"));
  out.push_back(row("x1*x2", "x2^2", "0", "0"));
  out.push_back(row("0", "0", "0", "2*x1*x2"));
  return out;
}

std::vector<std::vector<Polynomial>> tangent_versal(int n) {
  check_n(n);
  PolyRing r = PolyRing::projective(n);
  auto at = [&](int slot, const std::string& entry) {
    std::vector<Polynomial> v(4, Polynomial(r));
    v[static_cast<std::size_t>(slot)] = poly(r, entry);
    return v;
  };
  std::vector<std::vector<Polynomial>> out;
  for (int i = 3; i <= n; ++i) {
    const std::string x = xi(i);
    out.push_back(at(1, "x1*" + x));
    out.push_back(at(2, "x0*" + x));
    out.push_back(at(3, "x1*" + x));
    out.push_back(at(3, "x2*" + x));
    out.push_back(at(3, "x0*" + x));
  }
  out.push_back(at(3, "x2^2"));
  return out;
}

Ideal plane_conic_ideal() { return ideal_of(PolyRing(3), {"x0*x1^2", "x1^3"}); }

Ideal space_conic_ideal() { return ideal_of(PolyRing(4), {"x2", "x0*x1^2", "x1^3"}); }

Ideal double_structure_ideal(int n, int k) {
  check_n(n);
  if (k < 1) throw DomainError("double structure needs k >= 1");
  const std::string kk = std::to_string(k);
  return ideal_of(PolyRing::projective(n), {"x0^2", "x0*x1", "x1^2", "x0*x3^" + kk + " - x1*x2^" + kk});
}

Integer double_structure_count(int n, int k, int m) {
  return binomial(n - 2 + m, m) + 2 * binomial(n - 3 + m, m - 1) - binomial(n - 3 + m - k, m - 1 - k);
}

}  // namespace hilbkit::fixtures
