#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "schurlc/errors.hpp"
#include "schurlc/injection.hpp"
#include "schurlc/laurent.hpp"
#include "schurlc/logconcavity.hpp"
#include "schurlc/lr.hpp"
#include "schurlc/schur_ring.hpp"

namespace py = pybind11;
using namespace schurlc;

namespace {

py::int_ to_py(const Integer& x) {
  const std::string digits = to_string(x);
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(digits.c_str(), nullptr, 10));
}

Integer from_py(const py::int_& x) {
  return Integer(std::string(py::str(py::handle(x))));
}

Partition partition(const std::vector<int>& parts) { return Partition(parts); }

py::dict to_py(const SchurExpansion& f) {
  py::dict out;
  for (const auto& [lambda, c] : f.terms())
    out[py::tuple(py::cast(lambda.parts()))] = to_py(c);
  return out;
}

py::dict to_py(const LaurentPoly& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) out[py::int_(e)] = to_py(c);
  return out;
}

py::dict to_py(const IrrDecomp& d) {
  py::dict out;
  for (const auto& [n, c] : d.mults()) out[py::int_(n)] = to_py(c);
  return out;
}

LaurentPoly laurent_from_py(const py::dict& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms)
    p.add_term(e.cast<int>(), from_py(py::reinterpret_borrow<py::int_>(c)));
  return p;
}

py::dict report_to_py(const CheckReport& r) {
  py::list pairs;
  for (const auto& p : r.pairs) {
    py::dict d;
    d["n"] = p.n;
    d["i"] = p.i;
    d["certificate"] =
        std::visit([](const auto& c) { return to_string(c); }, p.certificate);
    if (p.witness) {
      py::object index =
          std::holds_alternative<Partition>(p.witness->index)
              ? py::object(py::tuple(py::cast(
                    std::get<Partition>(p.witness->index).parts())))
              : py::object(py::int_(std::get<int>(p.witness->index)));
      d["witness"] = py::make_tuple(index, to_py(p.witness->coefficient));
    } else {
      d["witness"] = py::none();
    }
    if (!p.note.empty()) d["note"] = p.note;
    pairs.append(d);
  }
  py::dict out;
  out["verdict"] = to_string(r.verdict);
  out["i_max"] = r.i_max;
  out["pairs"] = pairs;
  return out;
}

}  // namespace

PYBIND11_MODULE(_schurlc, m) {
  m.doc() = "Exact Schur function arithmetic and log-concavity checks";

  py::register_exception<schurlc::Error>(m, "SchurlcError", PyExc_ValueError);

  m.def("transpose", [](const std::vector<int>& p) {
    return transpose(partition(p)).parts();
  });
  m.def("dominance_leq", [](const std::vector<int>& a,
                            const std::vector<int>& b) {
    return dominance_leq(partition(a), partition(b));
  });
  m.def("lr_coefficient",
        [](const std::vector<int>& mu, const std::vector<int>& nu,
           const std::vector<int>& theta) {
          return to_py(
              lr_coefficient(partition(mu), partition(nu), partition(theta)));
        });
  m.def("lr_tableaux",
        [](const std::vector<int>& mu, const std::vector<int>& nu,
           const std::vector<int>& theta) {
          std::vector<std::vector<std::vector<int>>> out;
          for (const auto& t :
               lr_tableaux(partition(mu), partition(nu), partition(theta)))
            out.push_back(t.rows());
          return out;
        },
        "LR tableaux as lists of rows (entries right of the inner shape)");
  m.def("schur_product",
        [](const std::vector<int>& mu, const std::vector<int>& nu,
           std::optional<int> vars) {
          SchurExpansion f = schur_product_expand(partition(mu), partition(nu));
          if (vars) f = restrict_vars(f, *vars);
          return to_py(f);
        },
        py::arg("mu"), py::arg("nu"), py::arg("vars") = py::none());
  m.def("quantum_binomial",
        [](int n, int k) { return to_py(quantum_binomial(n, k)); });
  m.def("quantum_int", [](int n) { return to_py(quantum_int(n)); });
  m.def("decompose_irr", [](const py::dict& p) {
    return to_py(decompose_irr(laurent_from_py(p)));
  });
  m.def("is_character",
        [](const py::dict& p) { return is_character(laurent_from_py(p)); });
  m.def("laurent_to_string",
        [](const py::dict& p) { return to_string(laurent_from_py(p)); });
  m.def("family_term",
        [](const std::vector<int>& lambda, const std::vector<int>& beta,
           const std::vector<int>& alpha,
           int n) -> std::optional<std::vector<int>> {
          auto p = family_term(
              FamilySpec{partition(lambda), partition(beta), alpha, 2}, n);
          if (!p) return std::nullopt;
          return p->parts();
        });
  m.def("check_family",
        [](const std::vector<int>& lambda, const std::vector<int>& beta,
           const std::vector<int>& alpha, int terms, int i_max) {
          const FamilySpec spec{partition(lambda), partition(beta), alpha,
                                terms};
          return report_to_py(check_strong_schur_lc(
              family_terms(spec), i_max, &default_product_cache()));
        },
        py::arg("lam"), py::arg("beta"), py::arg("alpha"),
        py::arg("terms") = 4, py::arg("i_max") = 1);
  m.def("check_theorem1",
        [](const std::vector<int>& lambda, int k, int j, int terms,
           int i_max) {
          const FamilySpec spec = theorem1_family(partition(lambda), k, j, terms);
          return report_to_py(check_strong_schur_lc(
              family_terms(spec), i_max, &default_product_cache()));
        },
        py::arg("lam"), py::arg("k"), py::arg("j"), py::arg("terms") = 5,
        py::arg("i_max") = 2);
  m.def("check_diagonal",
        [](int n, int k, int alpha, int beta, int len, int i_max) {
          return report_to_py(
              check_strong_lc_q(diagonal_terms(n, k, alpha, beta, len), i_max));
        },
        py::arg("n"), py::arg("k"), py::arg("alpha"), py::arg("beta"),
        py::arg("len") = 6, py::arg("i_max") = 2);
  m.def("verify_injection",
        [](const std::vector<int>& lambda, int k, int j, int n, int i) {
          const InjectionReport r = verify_injection(partition(lambda), k, j, n, i);
          py::list failures;
          for (const auto& f : r.failures)
            failures.append(py::make_tuple(py::tuple(py::cast(f.theta.parts())),
                                           f.kind, f.detail));
          py::dict out;
          out["passed"] = r.passed();
          out["hypotheses_hold"] = r.hypotheses_hold;
          out["tableaux"] = r.tableaux;
          out["thetas"] = r.thetas.size();
          out["failures"] = failures;
          return out;
        });
}
