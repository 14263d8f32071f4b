#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bruhat/atlas.hpp"
#include "bruhat/bott_samelson.hpp"
#include "bruhat/report_json.hpp"
#include "bruhat/wiring.hpp"

namespace py = pybind11;
using namespace bruhat;

namespace {

std::vector<std::vector<std::string>> matrix_rows(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> rows(m.size());
  for (int i = 1; i <= m.size(); ++i)
    for (int j = 1; j <= m.size(); ++j) rows[i - 1].push_back(m(i, j).to_string());
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bruhat atlas verification for P^{2n-1} inside the SO(2n+2) flag manifold";

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init<long long>(), py::arg("value") = 0)
      .def_static("parse", &Polynomial::parse)
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; })
      .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
      .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
      .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
      .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
      .def("__neg__", [](const Polynomial& a) { return -a; })
      .def("__pow__", &Polynomial::pow)
      .def("__hash__", [](const Polynomial& p) { return py::hash(py::str(p.to_string())); })
      .def("is_zero", &Polynomial::is_zero)
      .def("degree", &Polynomial::degree)
      .def("substitute",
           [](const Polynomial& p, const std::map<std::string, Polynomial>& images) {
             Substitution s;
             for (const auto& [name, img] : images) {
               const Polynomial v = Polynomial::parse(name);
               if (v.size() != 1 || v.degree() != 1 || v.leading_term().coefficient != 1)
                 throw std::invalid_argument("not a variable: " + name);
               s[v.leading_term().monomial.factors().front().first] = img;
             }
             return substitute(p, s);
           })
      .def("divide_exact", [](const Polynomial& p, const Polynomial& g) { return divide_exact(p, g); });

  py::register_exception<MissingVariableError>(m, "MissingVariableError", PyExc_ValueError);
  py::register_exception<DivisionByZeroError>(m, "DivisionByZeroError", PyExc_ZeroDivisionError);

  m.def("distinguished_word", &distinguished_word, py::arg("l"), py::arg("n"));
  m.def("word_length", [](const Word& w, int n) { return length(product(w, n)); }, py::arg("word"),
        py::arg("n"));
  m.def("is_reduced", &is_reduced, py::arg("word"), py::arg("n"));
  m.def("bott_samelson_matrix", [](const Word& w, int n) { return matrix_rows(bott_samelson_matrix(w, n)); },
        py::arg("word"), py::arg("n"));
  m.def(
      "minor",
      [](const Word& w, int n, const IndexTuple& rows, const IndexTuple& cols, const std::string& method) {
        if (method == "lgv") return lgv_minor(diagram_of_word(w, n), rows, cols);
        if (method == "laplace") return minor(bott_samelson_matrix(w, n), rows, cols);
        throw std::invalid_argument("method must be 'lgv' or 'laplace'");
      },
      py::arg("word"), py::arg("n"), py::arg("rows"), py::arg("cols"), py::arg("method") = "laplace");
  m.def(
      "render_diagram",
      [](const Word& w, int n, const std::string& format, bool inverse, bool flipped) {
        WiringDiagram d = diagram_of_word(w, n);
        if (flipped) d = flip(d);
        if (inverse) d = inverse_diagram(d);
        return render(d, parse_render_format(format));
      },
      py::arg("word"), py::arg("n"), py::arg("format") = "svg", py::arg("inverse") = false,
      py::arg("flip") = false);
  m.def(
      "essential_set",
      [](int alpha, int n) {
        std::vector<std::tuple<int, int, int>> out;
        for (const auto& c : essential_set(PermutationMatrixView::of(simple_reflection(alpha, n))))
          out.emplace_back(c.row, c.col, c.rank);
        return out;
      },
      py::arg("alpha"), py::arg("n"));
  m.def("chart_map", [](int l, int n) { return chart_map(l, n).images(); }, py::arg("l"), py::arg("n"));
  m.def(
      "verify_chart_json",
      [](int l, int n) {
        py::gil_scoped_release release;
        return to_json(verify_chart(l, n)).dump();
      },
      py::arg("l"), py::arg("n"));
  m.def(
      "verify_atlas_json",
      [](int n, unsigned threads) {
        py::gil_scoped_release release;
        return to_json(verify_atlas(n, threads)).dump();
      },
      py::arg("n"), py::arg("threads") = 1);
}
