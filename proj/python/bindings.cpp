#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli_app.hpp"
#include "symmono/errors.hpp"
#include "symmono/functionals.hpp"
#include "symmono/gmean.hpp"
#include "symmono/io.hpp"
#include "symmono/partitions.hpp"
#include "symmono/verify.hpp"

namespace py = pybind11;
using namespace symmono;

namespace {

py::int_ to_py(const BigInt& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

std::vector<Bipartition> bipartitions_of(const py::object& spec, int parties) {
  if (py::isinstance<py::str>(spec)) {
    const auto s = spec.cast<std::string>();
    if (s == "elementary") return Bipartition::elementary(parties);
    if (s == "all") return Bipartition::all(parties);
    return {Bipartition::parse(s)};
  }
  std::vector<Bipartition> out;
  for (const auto& s : spec.cast<std::vector<std::string>>()) out.push_back(Bipartition::parse(s));
  return out;
}

FamilySpec family_of(const MultipartiteState& psi, const py::object& bipartitions,
                     const std::optional<std::vector<double>>& theta, const std::string& shape) {
  const auto bs = bipartitions_of(bipartitions, psi.space().parties());
  require(!bs.empty(), "no bipartitions");
  for (const auto& b : bs) require(b.parties() == psi.space().parties(), "bipartition " + b.to_string() + " has the wrong party count");
  std::vector<double> w = theta ? *theta : std::vector<double>(bs.size(), 1.0 / static_cast<double>(bs.size()));
  require(shape == "balanced" || shape == "left-comb", "shape is balanced or left-comb");
  return FamilySpec::weighted(bs, w, shape == "balanced" ? TreeShape::kBalanced : TreeShape::kLeftComb);
}

WeightedBipartitions theta_of(const MultipartiteState& psi, const py::object& bipartitions,
                              const std::optional<std::vector<double>>& theta) {
  return family_of(psi, bipartitions, theta, "balanced").weighted_bipartitions();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  m.def("enumerate_partitions", [](int n, std::optional<int> max_len) {
    std::vector<std::vector<int>> out;
    for (const auto& p : enumerate_partitions(n, max_len)) out.push_back(p.parts());
    return out;
  }, py::arg("n"), py::arg("max_len") = py::none());
  m.def("irrep_dim", [](std::vector<int> lam) { return to_py(irrep_dim(Partition(std::move(lam)))); });
  m.def("weyl_dim", [](std::vector<int> lam, int d) { return to_py(weyl_dim(Partition(std::move(lam)), d)); });
  m.def("character", [](std::vector<int> lam, std::vector<int> cycles) {
    return to_py(mn_character(Partition(std::move(lam)), CycleType(Partition(std::move(cycles)))));
  });
  m.def("kronecker", [](std::vector<int> a, std::vector<int> b, std::vector<int> c) {
    return to_py(kronecker(Partition(std::move(a)), Partition(std::move(b)), Partition(std::move(c))));
  });
  m.def("littlewood_richardson", [](std::vector<int> lam, std::vector<int> mu, std::vector<int> nu) {
    return to_py(littlewood_richardson(Partition(std::move(lam)), Partition(std::move(mu)), Partition(std::move(nu))));
  });
  m.def("renyi_entropy", [](std::vector<double> p, double alpha) { return renyi_entropy(ProbVector(std::move(p)), alpha); });

  py::class_<MultipartiteState>(m, "State")
      .def(py::init([](const std::string& text, std::uint64_t seed) { return parse_state(text, seed); }),
           py::arg("spec"), py::arg("seed") = 0)
      .def_static("from_amplitudes",
                  [](std::vector<int> dims, std::vector<cplx> amps) { return states::explicit_state(dims, amps); })
      .def_property_readonly("dims", [](const MultipartiteState& s) { return s.space().dims(); })
      .def_property_readonly("amplitudes", [](const MultipartiteState& s) { return Eigen::VectorXcd(s.amplitudes()); })
      .def_property_readonly("digest", [](const MultipartiteState& s) { return state_digest(s); })
      .def("schmidt_spectrum",
           [](const MultipartiteState& s, const std::string& b) { return schmidt_spectrum(s, Bipartition::parse(b)).weights(); })
      .def("flattening_rank",
           [](const MultipartiteState& s, const std::string& b) { return flattening_rank(s, Bipartition::parse(b)); });

  m.def("_estimate_json", [](const MultipartiteState& psi, std::optional<double> alpha, int n_max, const py::object& bipartitions,
                             std::optional<std::vector<double>> theta, const std::string& shape) {
    const FamilySpec spec = family_of(psi, bipartitions, theta, shape);
    py::gil_scoped_release release;
    return to_json(estimate_upper(psi, spec, alpha, n_max)).dump();
  });
  m.def("closed_upper_bound", [](const MultipartiteState& psi, double alpha, const py::object& bipartitions,
                                 std::optional<std::vector<double>> theta) {
    return closed_upper_bound(psi, theta_of(psi, bipartitions, theta), alpha);
  }, py::arg("psi"), py::arg("alpha"), py::arg("bipartitions") = "elementary", py::arg("theta") = py::none());
  m.def("closed_lower_bound", [](const MultipartiteState& psi, double alpha, const py::object& bipartitions,
                                 std::optional<std::vector<double>> theta) {
    return closed_lower_bound(psi, theta_of(psi, bipartitions, theta), alpha);
  }, py::arg("psi"), py::arg("alpha"), py::arg("bipartitions") = "elementary", py::arg("theta") = py::none());
  m.def("_lower_json", [](const MultipartiteState& psi, double alpha, const py::object& bipartitions,
                          std::optional<std::vector<double>> theta, int budget, std::uint64_t seed) {
    return to_json(lower_functional(psi, theta_of(psi, bipartitions, theta), alpha, budget, seed)).dump();
  });

  m.def("gmean", [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double t) { return gmean_pair(a, b, t); },
        py::arg("a"), py::arg("b"), py::arg("t") = 0.5);

  m.def("suite_names", &suite_names);
  m.def("_verify", [](const std::string& suite, std::uint64_t seed, double tol) {
    VerifyConfig cfg;
    cfg.seed = seed;
    cfg.tol = tol;
    std::vector<CheckResult> res;
    {
      py::gil_scoped_release release;
      res = run_suite(suite, cfg);
    }
    py::list out;
    for (const auto& c : res) {
      py::dict d;
      d["suite"] = c.suite;
      d["name"] = c.name;
      d["margin"] = c.margin;
      d["pass"] = c.pass;
      out.append(d);
    }
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
}
