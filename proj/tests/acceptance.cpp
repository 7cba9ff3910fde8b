// One line per acceptance criterion over the full ranges (n up to 8).
#include <cstdio>
#include <map>

#include "hilbkit/verify.hpp"

using namespace hilbkit;

int main() {
  VerifyOptions opts;
  opts.n_min = 3;
  opts.n_max = 8;
  opts.seed = 1;
  VerifyReport report = verify(opts);

  const std::map<std::string, std::string> titles = {
      {"hilbert", "Hilbert polynomials of the normal forms, n = 3..8"},
      {"double_structure", "double-structure Hilbert functions, n = 3..5, k = 1..3"},
      {"limit", "flat limits of the four degenerations"},
      {"tangent", "tangent dimensions, n = 3..6, and the conic examples"},
      {"explicit_basis", "explicit trivial and versal tangent elements, n = 3..5"},
      {"classify", "classification of 120 random images, n = 3..5"},
      {"relations", "lattice relations from the pairing tables"},
      {"chambers", "chambers, models, Fano and dimension identities"},
      {"engine", "engine properties: determinism, order independence, syzygies"}};

  bool all = true;
  int index = 1;
  for (const auto& criterion : criteria()) {
    std::size_t total = 0, passed = 0;
    std::vector<std::string> notes;
    for (const auto& c : report.checks) {
      if (c.criterion != criterion) continue;
      ++total;
      if (c.status == CheckStatus::Pass) ++passed;
      if (c.status == CheckStatus::Fail) std::printf("    failed %s: expected %s, computed %s\n", c.id.c_str(),
                                                     c.expected.c_str(), c.computed.c_str());
      if (c.note.rfind("flag", 0) == 0) notes.push_back(c.id + " computed " + c.computed + " [" + c.note + "]");
    }
    const bool ok = total > 0 && passed == total;
    all = all && ok;
    std::printf("%s  criterion %d  %-16s %zu/%zu  %s\n", ok ? "PASS" : "FAIL", index++, criterion.c_str(), passed,
                total, titles.at(criterion).c_str());
    for (const auto& n : notes) std::printf("      note %s\n", n.c_str());
  }
  return all ? 0 : 1;
}
