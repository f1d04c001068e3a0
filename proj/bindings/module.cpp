#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "maxconv/io.hpp"
#include "maxconv/max_conv.hpp"
#include "maxconv/measure.hpp"
#include "maxconv/operator_model.hpp"
#include "maxconv/subordination.hpp"
#include "maxconv/transforms.hpp"
#include "maxconv/verify_suites.hpp"

namespace py = pybind11;

namespace {

py::dict report_dict(const maxconv::VerifyReport& r) {
  py::dict d;
  d["max_error"] = r.max_error;
  d["witness_x"] = r.witness_x;
  d["pass"] = r.pass;
  return d;
}

py::dict suite_dict(const maxconv::SuiteReport& r) {
  py::dict d;
  d["suite"] = maxconv::suite_name(r.suite);
  d["trials"] = r.trials;
  d["seed"] = r.seed;
  d["tolerance"] = r.tolerance;
  d["max_error"] = r.max_error;
  d["witness_x"] = r.witness_x;
  d["pass"] = r.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "max-convolutions of discrete probability measures";

  py::class_<maxconv::DiscreteMeasure>(m, "DiscreteMeasure")
      .def(py::init<std::vector<double>, std::vector<double>>(),
           py::arg("atoms"), py::arg("weights"))
      .def_static("dirac", &maxconv::DiscreteMeasure::dirac, py::arg("location"))
      .def_static("from_json",
                  [](const std::string& text) {
                    return maxconv::measure_from_json(text);
                  },
                  py::arg("text"))
      .def_property_readonly("atoms",
                             [](const maxconv::DiscreteMeasure& m) {
                               return m.atoms();
                             })
      .def_property_readonly("weights",
                             [](const maxconv::DiscreteMeasure& m) {
                               return m.weights();
                             })
      .def("cdf", &maxconv::DiscreteMeasure::cdf, py::arg("x"))
      .def("cdf_left", &maxconv::DiscreteMeasure::cdf_left, py::arg("x"))
      .def("tail", &maxconv::DiscreteMeasure::tail, py::arg("x"))
      .def("quantile", &maxconv::DiscreteMeasure::quantile, py::arg("u"))
      .def("to_json",
           [](const maxconv::DiscreteMeasure& m) {
             return maxconv::measure_to_json(m);
           })
      .def("__eq__",
           [](const maxconv::DiscreteMeasure& a,
              const maxconv::DiscreteMeasure& b) { return a == b; },
           py::is_operator())
      .def("__repr__", [](const maxconv::DiscreteMeasure& m) {
        std::ostringstream out;
        out.precision(12);
        out << "DiscreteMeasure(";
        const auto& xs = m.atoms();
        const auto& ws = m.weights();
        for (std::size_t i = 0; i < xs.size() && i < 6; ++i) {
          if (i) out << ", ";
          out << xs[i] << ": " << ws[i];
        }
        if (xs.size() > 6) out << ", ...";
        out << ")";
        return out.str();
      });

  m.def("classical_max", &maxconv::classical_max, py::arg("a"), py::arg("b"),
        "CDFs multiply: the maximum of independent draws.");
  m.def("free_max", &maxconv::free_max, py::arg("a"), py::arg("b"),
        "CDF is max(F_a + F_b - 1, 0).");
  m.def("boolean_max", &maxconv::boolean_max, py::arg("a"), py::arg("b"),
        "CDF is F_a F_b / (F_a + F_b - F_a F_b); nonnegative support only.");
  m.def("monotone_max", &maxconv::monotone_max, py::arg("a"), py::arg("b"),
        "Same distribution as classical_max; see the operator model checks.");
  m.def("free_max_power", &maxconv::free_max_power, py::arg("a"), py::arg("t"),
        "CDF is max(t F_a - (t - 1), 0), t >= 1.");
  m.def("subordinate", &maxconv::subordinate, py::arg("sigma"), py::arg("mu"),
        "The factor pairing with sigma so the classical max gives the free max.");

  m.def("sample",
        [](const maxconv::DiscreteMeasure& m, std::size_t n, std::uint64_t seed) {
          return maxconv::sample(m, n, seed);
        },
        py::arg("measure"), py::arg("n"), py::arg("seed"));
  m.def("empirical_from_samples",
        [](std::vector<double> xs) {
          return maxconv::empirical_from_samples(xs);
        },
        py::arg("samples"));
  m.def("ks_distance",
        [](const maxconv::DiscreteMeasure& a, const maxconv::DiscreteMeasure& b,
           double location_tol) {
          return location_tol > 0.0 ? maxconv::ks_distance(a, b, location_tol)
                                    : maxconv::ks_distance(a, b);
        },
        py::arg("a"), py::arg("b"), py::arg("location_tol") = 0.0);
  m.def("discretize_named", &maxconv::discretize_named, py::arg("name"),
        py::arg("n"),
        "Quantile discretization of 'uniform01' or 'truncated_exponential(rate,cap)'.");

  m.def("cauchy_transform",
        [](const maxconv::DiscreteMeasure& m, maxconv::Complex z) {
          return maxconv::cauchy_transform(m, z);
        },
        py::arg("measure"), py::arg("z"));
  m.def("reciprocal_cauchy",
        [](const maxconv::DiscreteMeasure& m, maxconv::Complex z) {
          return maxconv::reciprocal_cauchy(m, z);
        },
        py::arg("measure"), py::arg("z"));
  m.def("atom_at_zero_monotone_projections",
        &maxconv::atom_at_zero_monotone_projections, py::arg("p"), py::arg("q"),
        "Mass at zero of the sum of coupled projections with traces 1-p, 1-q.");

  m.def("verify_projection_join_formula",
        [](double p, double q, int d1, int d2, std::uint64_t seed) {
          return report_dict(
              maxconv::verify_projection_join_formula(p, q, d1, d2, seed));
        },
        py::arg("p"), py::arg("q"), py::arg("d1") = 2, py::arg("d2") = 2,
        py::arg("seed") = 1,
        "Join of coupled projections carries state weight 1 - pq.");

  m.def("run_suite",
        [](const std::string& name, int trials, std::uint64_t seed) {
          return suite_dict(
              maxconv::run_suite(maxconv::parse_suite(name), trials, seed));
        },
        py::arg("suite"), py::arg("trials") = 100, py::arg("seed") = 1);
  m.def("run_all_suites",
        [](int trials, std::uint64_t seed) {
          py::list out;
          for (const auto& r : maxconv::run_all_suites(trials, seed))
            out.append(suite_dict(r));
          return out;
        },
        py::arg("trials") = 100, py::arg("seed") = 1);
  m.def("suite_names", [] {
    std::vector<std::string> names;
    for (auto s : maxconv::all_suites()) names.emplace_back(maxconv::suite_name(s));
    return names;
  });
}
