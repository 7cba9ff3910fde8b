#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hilbkit/classify.hpp"
#include "hilbkit/error.hpp"
#include "hilbkit/fixtures.hpp"
#include "hilbkit/flat_limit.hpp"
#include "hilbkit/hilbert.hpp"
#include "hilbkit/picard.hpp"
#include "hilbkit/tangent.hpp"
#include "hilbkit/verify.hpp"

namespace py = pybind11;
using namespace hilbkit;

namespace {

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Space space_of(const std::string& s) {
  if (s == "hn") return Space::H;
  if (s == "wn") return Space::W;
  throw DomainError("space must be 'hn' or 'wn'");
}

py::dict hilbert_dict(const HilbertData& hd) {
  py::dict d;
  d["numerator"] = hd.numerator.to_string("T");
  d["polynomial"] = hd.polynomial.to_string();
  d["dimension"] = hd.dimension;
  d["degree"] = hd.degree.get_si();
  d["agreement_bound"] = hd.agreement_bound;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Groebner, Hilbert and deformation computations over Q";

  // Later registrations are tried first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<Ideal>(m, "Ideal")
      .def(py::init([](int n, const std::vector<std::string>& gens, bool param) {
             return Ideal::parse(PolyRing::projective(n, param), gens);
           }),
           py::arg("n"), py::arg("generators"), py::arg("param") = false,
           "Ideal of Q[x0..xn] (with t when param is true) from polynomial strings.")
      .def_property_readonly("n", [](const Ideal& i) { return i.ring().num_vars() - 1; })
      .def_property_readonly("generators", [](const Ideal& i) { return strings(i.generators()); })
      .def("groebner_basis",
           [](const Ideal& i, const std::string& order) {
             if (order == "grevlex") return strings(i.gb().elements());
             if (order == "lex") return strings(i.gb(MonomialOrder::lex()).elements());
             throw DomainError("order must be 'lex' or 'grevlex'");
           },
           py::arg("order") = "grevlex")
      .def("contains", [](const Ideal& i, const std::string& f) { return i.contains(parse_polynomial(f, i.ring())); })
      .def("normal_form", [](const Ideal& i, const std::string& f) {
        return normal_form(parse_polynomial(f, i.ring()), i.gb()).to_string();
      })
      .def("is_homogeneous", &Ideal::is_homogeneous)
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return a == b; })
      .def("__repr__", &Ideal::to_string);

  m.def("normal_form_ideal", [](int n, const std::string& label) { return normal_form_ideal(n, parse_type_label(label)); },
        py::arg("n"), py::arg("label"));
  m.def("pn_reference", [](int n) { return pn_reference(n).to_string(); });
  m.def("hilbert_series", [](const Ideal& i) { return hilbert_dict(hilbert_series(i)); });
  m.def("hilbert_function", [](const Ideal& i, int d) { return hilbert_function(i, d).get_si(); });
  m.def("intersect", [](const Ideal& a, const Ideal& b) { return intersect(a, b).canonical(); });
  m.def("quotient", [](const Ideal& a, const Ideal& b) { return quotient(a, b).canonical(); });
  m.def("saturate", [](const Ideal& a, const Ideal& b) { return saturate(a, b).canonical(); });
  m.def("saturate_irrelevant", [](const Ideal& a) { return saturate_irrelevant(a).canonical(); });
  m.def("random_linear_change", [](const Ideal& a, std::uint64_t seed) { return random_linear_change(a, seed).ideal; });

  m.def("limit_ideal", [](const Ideal& total) { return limit_ideal(Family(total)); },
        "Flat limit at t = 0 of a family given as an ideal with param=True.");
  m.def("is_flat", [](const Ideal& total, int samples) { return flatness_probe(Family(total), samples).flat; },
        py::arg("total"), py::arg("samples") = 3);

  m.def("tangent_dimension", [](const Ideal& i) {
    TangentOptions o;
    o.with_basis = false;
    return hom_degree_zero(i, o).dimension;
  });

  m.def("classify",
        [](const Ideal& i, std::uint64_t seed) {
          SchemeType st = classify(i, seed);
          py::dict d;
          d["type"] = to_string(st.label);
          d["has_embedded"] = st.evidence.has_embedded;
          d["generically_reduced"] = st.evidence.generically_reduced;
          d["retries"] = st.retries;
          return d;
        },
        py::arg("ideal"), py::arg("seed") = 1);

  m.def("chamber",
        [](const std::string& space, int n, std::vector<long> coords) {
          PicLattice lat(space_of(space), n);
          ChamberReport r = chamber_of(lat, lat.divisor(std::move(coords)));
          py::dict d;
          d["chamber"] = r.chamber;
          d["base_locus"] = r.base_locus;
          d["model"] = r.model ? py::object(py::str(*r.model)) : py::object(py::none());
          d["ample"] = r.ample;
          d["validated"] = r.validated;
          return d;
        },
        py::arg("space"), py::arg("n"), py::arg("divisor"));
  m.def("canonical_class", [](const std::string& space, int n) { return canonical_class(space_of(space), n).coords; });
  m.def("is_fano", [](const std::string& space, int n) { return is_fano(space_of(space), n); });

  m.def("fixture_ids", &fixtures::ids);
  m.def("fixture", [](const std::string& id) {
    fixtures::Fixture f = fixtures::get(id);
    py::dict d;
    d["id"] = f.id;
    d["kind"] = f.kind;
    d["source"] = f.source;
    d["n"] = f.n;
    d["param"] = f.param;
    d["lines"] = f.lines;
    return d;
  });

  m.def("verify_json",
        [](int n_min, int n_max, std::uint64_t seed) {
          VerifyOptions o;
          o.n_min = n_min;
          o.n_max = n_max;
          o.seed = seed;
          py::gil_scoped_release release;
          return to_json(verify(o), o).dump();
        },
        py::arg("n_min") = 3, py::arg("n_max") = 5, py::arg("seed") = 1);
}
