#include "hilbkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hilbkit/classify.hpp"
#include "hilbkit/error.hpp"
#include "hilbkit/flat_limit.hpp"
#include "hilbkit/hilbert.hpp"
#include "hilbkit/picard.hpp"
#include "hilbkit/tangent.hpp"
#include "hilbkit/verify.hpp"

namespace hilbkit {

using nlohmann::json;

namespace {

// Reported through exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Ideal parse_ideal_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<PolyRing> ring;
  std::vector<Polynomial> gens;
  static const std::regex header(R"(ring\s+n\s*=\s*(\d+)\s+param\s*=\s*([01]))");
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!ring) {
      std::smatch m;
      if (!std::regex_match(line, m, header)) throw ParseError("expected header 'ring n=<n> param=<0|1>'", 0);
      const int n = std::stoi(m[1]);
      if (n < 1 || n > 24) throw ParseError("n must lie in 1..24", 0);
      ring = PolyRing::projective(n, m[2] == "1");
      continue;
    }
    gens.push_back(parse_polynomial(line, *ring));
  }
  if (!ring) throw ParseError("empty ideal file", 0);
  return Ideal(*ring, std::move(gens));
}

Ideal read_ideal_file(const std::string& path) { return parse_ideal_text(slurp(path)); }

std::string ideal_text(const Ideal& ideal) {
  std::string s = "ring n=" + std::to_string(ideal.ring().num_vars() - 1) +
                  " param=" + (ideal.ring().has_param() ? "1" : "0") + "\n";
  for (const auto& g : ideal.generators()) s += g.to_string() + "\n";
  return s;
}

namespace {

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string order = "grevlex";
};

MonomialOrder order_of(const Globals& g) {
  return g.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

// Writes either the JSON document or the text lines.
void emit(std::ostream& out, const Globals& g, const json& j, const std::string& text) {
  if (g.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
  }
}

std::string lines(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += x + "\n";
  return s;
}

void emit_ideal(std::ostream& out, const Globals& g, const Ideal& ideal) {
  auto gens = strings(ideal.generators());
  emit(out, g, {{"n", ideal.ring().num_vars() - 1}, {"generators", gens}}, lines(gens));
}

json hilbert_json(const HilbertData& hd) {
  return {{"numerator", hd.numerator.to_string("T")},
          {"polynomial", hd.polynomial.to_string()},
          {"dimension", hd.dimension},
          {"degree", hd.degree.get_str()},
          {"agreement_bound", hd.agreement_bound}};
}

std::vector<long> parse_divisor(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    part = trim(part);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) throw UsageError("divisor must be integers separated by commas");
    out.push_back(v);
  }
  return out;
}

Space parse_space(const std::string& s) {
  if (s == "hn") return Space::H;
  if (s == "wn") return Space::W;
  throw UsageError("space must be hn or wn");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Groebner, Hilbert and deformation computations for pairs of codimension-two planes", "hilbkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", g.seed, "Seed for every random choice");
  app.add_option("--order", g.order, "Monomial order for gb, nf and hilbert")->check(CLI::IsMember({"lex", "grevlex"}));

  std::string file, file2, poly_text, divisor_text, space_text = "hn", pairing_path, out_path;
  int degree = 0, samples = 3, n_cone = 3, n_min = 3, n_max = 5;
  bool deep = false, timings = false, gb_syz = false;

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  gb->add_option("file", file, "Ideal file")->required();
  auto* nf = app.add_subcommand("nf", "Normal form of a polynomial");
  nf->add_option("file", file, "Ideal file")->required();
  nf->add_option("--poly", poly_text, "Polynomial")->required();
  auto* hil = app.add_subcommand("hilbert", "Hilbert series and polynomial");
  hil->add_option("file", file, "Ideal file")->required();
  auto* hf = app.add_subcommand("hf", "Hilbert function value");
  hf->add_option("file", file, "Ideal file")->required();
  hf->add_option("--degree", degree, "Degree")->required()->check(CLI::NonNegativeNumber);
  auto* inter = app.add_subcommand("intersect", "Intersection of two ideals");
  inter->add_option("a", file, "Ideal file")->required();
  inter->add_option("b", file2, "Ideal file")->required();
  auto* quot = app.add_subcommand("quotient", "Ideal quotient a : b");
  quot->add_option("a", file, "Ideal file")->required();
  quot->add_option("b", file2, "Ideal file")->required();
  auto* sat = app.add_subcommand("saturate", "Saturation a : b^inf; by (x0..xn) when b is omitted");
  sat->add_option("a", file, "Ideal file")->required();
  sat->add_option("b", file2, "Ideal file");
  auto* lim = app.add_subcommand("limit", "Flat limit at t = 0 of a family file (param=1)");
  lim->add_option("file", file, "Family file")->required();
  lim->add_option("--samples", samples, "Fibres sampled by the flatness probe")->check(CLI::Range(2, 12));
  auto* tan = app.add_subcommand("tangent", "dim Hom(I, S/I)_0");
  tan->add_option("file", file, "Ideal file")->required();
  tan->add_flag("--gb-syzygies", gb_syz, "Use the syzygies of the reduced basis");
  auto* cls = app.add_subcommand("classify", "Type I..IV of an ideal with Hilbert polynomial P_n");
  cls->add_option("file", file, "Ideal file")->required();
  auto* cone = app.add_subcommand("cone", "Chamber of a divisor class");
  cone->add_option("--space", space_text, "hn or wn")->check(CLI::IsMember({"hn", "wn"}));
  cone->add_option("--n", n_cone, "Ambient dimension")->required();
  cone->add_option("--divisor", divisor_text, "Coordinates a,b[,c] in (M,F) or (M',F',R')")->required();
  auto* ver = app.add_subcommand("verify", "Run the full check battery");
  ver->add_option("--n-min", n_min, "Smallest n")->check(CLI::Range(3, 8));
  ver->add_option("--n-max", n_max, "Largest n")->check(CLI::Range(3, 8));
  ver->add_flag("--deep", deep, "Run up to n = 8");
  ver->add_flag("--timings", timings, "Include per-check runtimes");
  ver->add_option("--pairing", pairing_path, "Replacement pairing table (JSON)");
  ver->add_option("--out", out_path, "Write the report here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    if (gb->parsed()) {
      Ideal ideal = read_ideal_file(file);
      GroebnerBasis basis = ideal.gb(order_of(g));
      auto el = strings(basis.elements());
      emit(out, g, {{"order", g.order}, {"basis", el}}, lines(el));
    } else if (nf->parsed()) {
      Ideal ideal = read_ideal_file(file);
      Polynomial f = parse_polynomial(poly_text, ideal.ring());
      Polynomial r = normal_form(f, ideal.gb(order_of(g)));
      emit(out, g, {{"order", g.order}, {"normal_form", r.to_string()}}, r.to_string());
    } else if (hil->parsed()) {
      Ideal ideal = read_ideal_file(file);
      if (!ideal.is_homogeneous()) throw DomainError("Hilbert series needs a homogeneous ideal");
      HilbertData hd = hilbert_series(ideal, order_of(g));
      emit(out, g, hilbert_json(hd), hd.polynomial.to_string());
    } else if (hf->parsed()) {
      Ideal ideal = read_ideal_file(file);
      if (!ideal.is_homogeneous()) throw DomainError("Hilbert function needs a homogeneous ideal");
      std::string v = hilbert_function(ideal, degree).get_str();
      emit(out, g, {{"degree", degree}, {"value", v}}, v);
    } else if (inter->parsed()) {
      emit_ideal(out, g, intersect(read_ideal_file(file), read_ideal_file(file2)).canonical());
    } else if (quot->parsed()) {
      emit_ideal(out, g, quotient(read_ideal_file(file), read_ideal_file(file2)).canonical());
    } else if (sat->parsed()) {
      Ideal a = read_ideal_file(file);
      emit_ideal(out, g, (file2.empty() ? saturate_irrelevant(a) : saturate(a, read_ideal_file(file2))).canonical());
    } else if (lim->parsed()) {
      Family fam(read_ideal_file(file));
      Ideal limit = limit_ideal(fam);
      FlatnessReport rep = flatness_probe(fam, samples);
      json fibres = json::array();
      std::string text = lines(strings(limit.generators()));
      text += std::string("flat ") + (rep.flat ? "true" : "false") + ", limit polynomial " +
              rep.limit_polynomial.to_string() + "\n";
      for (const auto& f : rep.fibers) {
        fibres.push_back({{"t", f.t.get_str()}, {"polynomial", f.polynomial.to_string()}, {"matches_limit", f.matches_limit}});
        text += "  t = " + f.t.get_str() + ": " + f.polynomial.to_string() + "\n";
      }
      emit(out, g,
           {{"limit", strings(limit.generators())},
            {"flat", rep.flat},
            {"limit_polynomial", rep.limit_polynomial.to_string()},
            {"fibers", fibres}},
           text);
      return rep.flat ? kExitOk : kExitMath;
    } else if (tan->parsed()) {
      TangentOptions opts;
      opts.gb_syzygies = gb_syz;
      TangentReport rep = hom_degree_zero(read_ideal_file(file), opts);
      json basis = json::array();
      for (const auto& b : rep.basis) basis.push_back(strings(b));
      emit(out, g,
           {{"dimension", rep.dimension},
            {"generators", strings(rep.generators)},
            {"unknowns", rep.total_unknowns},
            {"constraints", rep.constraints},
            {"constraint_rank", rep.constraint_rank},
            {"syzygies", rep.syzygies},
            {"basis", basis}},
           std::to_string(rep.dimension));
    } else if (cls->parsed()) {
      SchemeType st = classify(read_ideal_file(file), g.seed);
      emit(out, g,
           {{"type", to_string(st.label)},
            {"has_embedded", st.evidence.has_embedded},
            {"generically_reduced", st.evidence.generically_reduced},
            {"retries", st.retries}},
           to_string(st.label));
    } else if (cone->parsed()) {
      Space space = parse_space(space_text);
      PicLattice lat(space, n_cone);
      ChamberReport r = chamber_of(lat, lat.divisor(parse_divisor(divisor_text)));
      const bool fano = is_fano(space, n_cone);
      DivisorClass k = canonical_class(space, n_cone);
      json j = {{"space", space_text},
                {"n", n_cone},
                {"chamber", r.chamber},
                {"base_locus", r.base_locus},
                {"ample", r.ample},
                {"validated", r.validated},
                {"canonical_class", k.coords},
                {"fano", fano}};
      j["model"] = r.model ? json(*r.model) : json(nullptr);
      std::string text = "chamber " + r.chamber + "\nbase locus " +
                         (r.base_locus.empty() ? std::string("empty") : "") + "\n";
      if (!r.base_locus.empty()) {
        text.resize(text.size() - 1);
        for (const auto& b : r.base_locus) text += b + " ";
        text.back() = '\n';
      }
      text += "model " + r.model.value_or("none") + "\nample " + (r.ample ? "true" : "false") + "\nfano " +
              (fano ? "true" : "false") + "\n";
      emit(out, g, j, text);
      return r.validated ? kExitOk : kExitMath;
    } else if (ver->parsed()) {
      VerifyOptions opts;
      opts.seed = g.seed;
      opts.n_min = n_min;
      opts.n_max = deep ? 8 : n_max;
      if (opts.n_min > opts.n_max) throw UsageError("--n-min exceeds --n-max");
      if (!pairing_path.empty()) {
        json pj;
        try {
          pj = json::parse(slurp(pairing_path));
        } catch (const json::exception& e) {
          throw UsageError(std::string("pairing file is not JSON: ") + e.what());
        }
        try {
          opts.pairing_override = pairing_table_from_json(pj);
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
      }
      VerifyReport report = verify(opts);
      std::ostringstream doc;
      emit(doc, g, to_json(report, opts, timings), to_text(report, timings));
      if (out_path.empty()) {
        out << doc.str();
      } else {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write '" + out_path + "'");
        f << doc.str();
      }
      return report.all_pass() ? kExitOk : kExitMath;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMath;
  }
  return kExitOk;
}

}  // namespace hilbkit
