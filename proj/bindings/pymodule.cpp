// Python bindings for the main operations: root system data, characters,
// equal-rank embeddings with restriction and multiplets, Dirac induction,
// the super ring pushforward, and the Clifford matrix checks. Weight
// multisets cross into Python as dicts keyed by coordinate tuples; doubled
// coordinates are kept doubled and named _x2.

#include "superrep/chars.hpp"
#include "superrep/cliffmat.hpp"
#include "superrep/embed.hpp"
#include "superrep/gkrs.hpp"
#include "superrep/rootdata.hpp"
#include "superrep/superring.hpp"
#include "superrep/weights.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace superrep;

namespace {

py::tuple weight_tuple(const Weight& w) {
  py::tuple t(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) t[i] = w[i];
  return t;
}

py::dict multiset_dict(const std::map<Weight, long long>& m) {
  py::dict d;
  for (const auto& [w, c] : m) d[weight_tuple(w)] = c;
  return d;
}

py::dict sr_dict(const SRElement& x) {
  py::dict d;
  d["degree"] = x.degree;
  d["twist"] = x.twist.name();
  d["terms_x2"] = multiset_dict(x.terms_x2);
  return d;
}

py::list report_list(const Report& rep) {
  py::list out;
  for (const auto& c : rep.checks) {
    py::dict d;
    d["identity"] = c.identity;
    d["passed"] = c.passed;
    d["witness"] = c.witness;
    out.append(d);
  }
  return out;
}

py::dict root_system_dict(const std::string& label) {
  RootSystem rs = build_root_system(label);
  py::dict d;
  d["label"] = rs.label;
  d["rank"] = rs.rank;
  d["cartan"] = rs.cartan;
  d["simple_roots"] = rs.simple_roots;
  d["positive_roots"] = rs.positive_roots;
  d["rho"] = rs.rho;
  d["weyl_order"] = weyl_elements(rs, kWeylBoundDefault).size();
  return d;
}

struct PyEmbedding {
  Embedding e;

  explicit PyEmbedding(const std::string& g_label,
                       const std::vector<Weight>& h_roots)
      : e(build_embedding(build_root_system(g_label), h_roots)) {}

  py::dict restrict_(const Weight& lambda) const {
    return multiset_dict(restrict_decomposed_x2(e, lambda));
  }
  py::dict euler(const Weight& lambda) const {
    return multiset_dict(euler_restriction(e, lambda));
  }
  py::list gkrs(const Weight& lambda) const {
    Multiplet m = gkrs_multiplet(e, lambda);
    py::list out;
    for (const auto& t : m.members)
      out.append(py::make_tuple(t.sign, weight_tuple(t.weight)));
    return out;
  }
  py::object dirac_induce(const Weight& mu2) const {
    auto d = dirac_induce_x2(e, mu2);
    if (!d) return py::none();
    return py::make_tuple(d->sign, weight_tuple(d->weight));
  }
  py::tuple adjointness(const Weight& mu2, const Weight& lambda) const {
    auto [lhs, rhs] = verify_adjointness(e, mu2, lambda);
    return py::make_tuple(lhs, rhs);
  }
  py::dict induction_class(const Weight& mu2) const {
    return sr_dict(induction_class_x2(e, mu2));
  }
  py::dict pushforward(const Weight& mu2, long long bound) const {
    SRElement pf = pushforward_truncated(e, induction_class_x2(e, mu2), bound);
    std::map<Weight, long long> nonzero;
    for (const auto& [w2, c] : pf.terms_x2)
      if (c != 0) nonzero[w2] = c;
    return multiset_dict(nonzero);
  }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact multiplet, induction, and Clifford matrix computations";

  m.def("root_system", &root_system_dict, py::arg("label"),
        "Cartan data of a catalogued simple root system.");
  m.def(
      "weyl_dimension",
      [](const std::string& label, const Weight& lambda) {
        return weyl_dimension(build_root_system(label), lambda);
      },
      py::arg("label"), py::arg("lam"),
      "Dimension of the irreducible with the given highest weight.");
  m.def(
      "character",
      [](const std::string& label, const Weight& lambda) {
        return multiset_dict(freudenthal_character(build_root_system(label), lambda));
      },
      py::arg("label"), py::arg("lam"),
      "Full weight multiplicity map of an irreducible, true coordinates.");
  m.def(
      "tensor_decompose",
      [](const std::string& label, const Weight& a, const Weight& b) {
        return multiset_dict(tensor_decompose(build_root_system(label), a, b));
      },
      py::arg("label"), py::arg("lam"), py::arg("mu"),
      "Decomposition of a tensor product of irreducibles.");

  py::class_<PyEmbedding>(m, "Embedding",
                          "Equal-rank subalgebra designated by simple roots "
                          "written in the ambient fundamental coordinates.")
      .def(py::init<const std::string&, const std::vector<Weight>&>(),
           py::arg("g"), py::arg("h_roots"))
      .def_property_readonly(
          "g_label", [](const PyEmbedding& s) { return s.e.g.label; })
      .def_property_readonly(
          "h_simple", [](const PyEmbedding& s) { return s.e.h_simple; })
      .def_property_readonly(
          "complement", [](const PyEmbedding& s) { return s.e.complement; })
      .def_property_readonly(
          "half_lattice", [](const PyEmbedding& s) { return s.e.half_lattice; })
      .def("restrict", &PyEmbedding::restrict_, py::arg("lam"),
           "Subalgebra decomposition of an ambient irreducible; keys are "
           "doubled highest weights.")
      .def("euler", &PyEmbedding::euler, py::arg("lam"),
           "Signed decomposition of the restriction times the half-spin "
           "difference; keys are doubled highest weights.")
      .def("gkrs", &PyEmbedding::gkrs, py::arg("lam"),
           "Closed-form multiplet: list of (sign, doubled weight) pairs.")
      .def("dirac_induce", &PyEmbedding::dirac_induce, py::arg("mu_x2"),
           "Closed-form induction index: None, or (sign, ambient highest "
           "weight in true coordinates).")
      .def("adjointness", &PyEmbedding::adjointness, py::arg("mu_x2"),
           py::arg("lam"), "Both pairings of the adjunction at (mu, lambda).")
      .def("induction_class", &PyEmbedding::induction_class, py::arg("mu_x2"),
           "Index class of mu in the super representation ring.")
      .def("pushforward", &PyEmbedding::pushforward, py::arg("mu_x2"),
           py::arg("bound"),
           "Truncated pushforward of the index class: nonzero coefficients "
           "at doubled ambient dominant weights with coordinate sum <= bound.");

  m.def(
      "classify_clifford",
      [](int n) {
        CliffordClass c = classify_clifford(n);
        py::dict d;
        d["n"] = c.n;
        d["kind"] = c.kind == CliffordKind::Q ? "Q" : "M_pair";
        d["rank_of_sr"] = c.rank_of_sr;
        return d;
      },
      py::arg("n"), "Super-Morita class of the Clifford algebra on n generators.");
  m.def(
      "clifford_commutant_dims",
      [](int n) {
        CommutantResult cc = clifford_commutant(build_clifford(n));
        return py::make_tuple(cc.even_dim, cc.odd_dim);
      },
      py::arg("n"),
      "Graded dimensions (even, odd) of the matrix-model commutant.");
  m.def(
      "thom_report",
      [](bool drop_quarter) {
        return report_list(
            thom_map_check(build_clifford(3), so3_generators(), drop_quarter));
      },
      py::arg("drop_quarter") = false,
      "Untwisting checks for so(3) on three dimensions.");
  m.def(
      "twisted_report",
      [](bool omit_grading) {
        const auto gens = so3_generators();
        return report_list(
            twisted_action_check(build_clifford(3), gens, gens, omit_grading));
      },
      py::arg("omit_grading") = false,
      "Right Clifford action checks for the vector module of so(3).");
}
