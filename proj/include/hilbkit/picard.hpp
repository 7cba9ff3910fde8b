#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hilbkit {

enum class Space { H, W };

std::string to_string(Space space);

struct PairingEntry {
  long value;
  bool stated;  // false: recorded as a consequence, to be confirmed by the solver
};

struct CurvePairings {
  std::string curve;
  std::map<std::string, PairingEntry> entries;  // divisor name -> value
};

/// Raw test-curve data. basis and named divisors are listed by name.
struct PairingTable {
  Space space;
  std::vector<std::string> basis;    // (M, F) or (M', F', R')
  std::vector<std::string> derived;  // (N, E) or (N', E')
  std::vector<CurvePairings> curves;
};

const PairingTable& default_pairing_table(Space space);

struct DivisorClass {
  Space space;
  std::vector<long> coords;
  std::string name;
};

struct CurveClass {
  std::string name;
  std::vector<long> row;  // pairing against the basis
};

struct RelationReport {
  std::map<std::string, std::vector<long>> classes;  // named divisors in the basis
  std::vector<CurveClass> curves;                     // completed rows
  std::size_t stated_checked = 0;
  std::size_t derived_checked = 0;
};

/// Solves for the named divisors from the stated pairings, completes the curve
/// rows, then re-checks every stated and every recorded derived entry. Throws
/// DomainError on an inconsistent or underdetermined system or a non-integral
/// solution.
RelationReport solve_relations(const PairingTable& table);

class PicLattice {
 public:
  // H needs n >= 3; W needs n >= 4.
  PicLattice(Space space, int n);

  Space space() const { return space_; }
  int n() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<CurveClass>& curves() const { return curves_; }

  const CurveClass& curve(const std::string& name) const;
  // Basis divisors and the solved named divisors.
  DivisorClass named(const std::string& name) const;
  DivisorClass divisor(std::vector<long> coords) const;

 private:
  Space space_;
  int n_;
  std::vector<std::string> basis_;
  std::vector<CurveClass> curves_;
  std::map<std::string, std::vector<long>> named_;
};

long pairing(const CurveClass& curve, const DivisorClass& divisor);

struct ChamberReport {
  std::string chamber;
  std::vector<std::string> base_locus;  // loci (II, IV, ...) or divisors (E', N')
  std::optional<std::string> model;
  bool ample = false;
  // Every base-locus member pairs negatively with a moving curve sweeping it.
  bool validated = false;
};

/// Chamber of an effective divisor. Throws DomainError for the zero class or
/// a class outside the effective cone.
ChamberReport chamber_of(const PicLattice& lattice, const DivisorClass& divisor);

// W with n = 3 is reported in the lattice of H_3.
DivisorClass canonical_class(Space space, int n);
bool is_fano(Space space, int n);

struct DimensionTable {
  int n;
  int type_I, type_II, type_III, type_IV;
  int h_prime;
  int tangent_type_IV;
  int w, w_prime, e;
  // (4n-4) + (7n-10) - (3n-2) == 8n-12
  bool transversality_identity;
  // (3n-3) + (5n-9) == 8n-12
  bool tangent_count_identity;
  // dim W + dim W' - dim E == 4n
  bool w_identity;
};

DimensionTable dimension_table(int n);

}  // namespace hilbkit
