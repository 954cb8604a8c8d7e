// Copyright 2026 The pmeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Field elements cross the boundary as strings in the
// matrix-file syntax ("p/q", integers, "[c0,c1,...]"); the Python package
// converts rationals to fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pmeq/cuts.hpp"
#include "pmeq/dpp.hpp"
#include "pmeq/errors.hpp"
#include "pmeq/io.hpp"
#include "pmeq/pit.hpp"
#include "pmeq/pme.hpp"

namespace py = pybind11;
using namespace pmeq;

namespace {

std::string entry_text(const py::handle& x) { return py::str(x).cast<std::string>(); }

Matrix matrix_from_rows(const Field& field, const py::sequence& rows) {
  const std::size_t n = py::len(rows);
  std::vector<Element> entries;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < n; ++r) {
    py::sequence row = rows[r];
    if (r == 0) cols = py::len(row);
    if (py::len(row) != cols) throw Error(ErrorCode::kDimensionMismatch, "ragged rows");
    for (const auto& x : row) entries.push_back(parse_element(field, entry_text(x)));
  }
  return Matrix(field, n, cols, std::move(entries));
}

Vector vector_from(const Field& field, const py::sequence& xs) {
  Vector out;
  for (const auto& x : xs) out.push_back(parse_element(field, entry_text(x)));
  return out;
}

std::vector<std::vector<std::string>> rows_of(const Matrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c).to_string());
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Principal minor equivalence, rank-one PIT and DPP kernel comparison";

  py::register_exception<Error>(m, "PmeqError", PyExc_ValueError);

  py::class_<Field>(m, "Field")
      .def_static("rationals", &Field::rationals)
      .def_static("prime", &Field::prime, py::arg("p"))
      .def_static("extension", &Field::extension, py::arg("p"), py::arg("modulus"))
      .def_static("parse", &parse_field_header, py::arg("header"))
      .def_property_readonly("header", &Field::header)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("degree", &Field::degree)
      .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
      .def("__hash__", [](const Field& f) { return py::hash(py::str(f.header())); })
      .def("__repr__", [](const Field& f) { return "<Field " + f.header() + ">"; });

  py::class_<Matrix>(m, "Matrix")
      .def(py::init(&matrix_from_rows), py::arg("field"), py::arg("rows"))
      .def_static("parse",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return parse_matrix(in).matrix;
                  })
      .def_property_readonly("field", &Matrix::field)
      .def_property_readonly("shape",
                             [](const Matrix& a) { return py::make_tuple(a.rows(), a.cols()); })
      .def_property_readonly("labels", &Matrix::labels)
      .def("tolist", &rows_of)
      .def("to_text", [](const Matrix& a) { return format_matrix(a); })
      .def("transpose", &Matrix::transpose)
      .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
      .def("__repr__", [](const Matrix& a) { return format_matrix(a); });

  m.def("determinant", [](const Matrix& a) { return determinant(a).to_string(); });
  m.def("principal_minor", [](const Matrix& a, const IndexSet& s) {
    return determinant(principal_submatrix(a, s)).to_string();
  });

  m.def("is_cut", &is_cut, py::arg("a"), py::arg("x"));
  m.def("cut_transpose", &cut_transpose, py::arg("a"), py::arg("x"));
  m.def("minimal_cut", [](const Matrix& a) { return minimal_cut(a); }, py::arg("a"));
  m.def("apply_cut_sequence", &apply_cut_sequence, py::arg("a"), py::arg("sequence"));

  m.def(
      "pme_check",
      [](const Matrix& a, const Matrix& b, bool randomized_shift) {
        Verdict v = pme_check(a, b, {randomized_shift});
        py::dict out;
        out["equivalent"] = v.equivalent;
        out["refuting_subset"] = v.refuting_subset;
        out["reason"] = v.reason;
        out["certificate"] =
            v.certificate ? py::object(py::str(certificate_to_json(*v.certificate)))
                          : py::object(py::none());
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("randomized_shift") = false);
  m.def(
      "verify_certificate",
      [](const Matrix& a, const Matrix& b, const std::string& json) {
        std::string why;
        const bool ok = verify_certificate(a, b, certificate_from_json(json), &why);
        return py::make_tuple(ok, why);
      },
      py::arg("a"), py::arg("b"), py::arg("certificate"));
  m.def(
      "brute_force_pme",
      [](const Matrix& a, const Matrix& b) { return brute_force_pme(a, b).equal; },
      py::arg("a"), py::arg("b"));

  m.def(
      "make_pencil",
      [](const Matrix& a0, const std::vector<std::pair<py::sequence, py::sequence>>& terms) {
        RankOnePencil p;
        p.field = a0.field();
        p.n = a0.rows();
        p.a0 = a0;
        for (const auto& [u, v] : terms) {
          p.terms.push_back({vector_from(p.field, u), vector_from(p.field, v)});
        }
        p.validate();
        return p;
      },
      py::arg("a0"), py::arg("terms"));
  py::class_<RankOnePencil>(m, "RankOnePencil")
      .def_static("from_matrices", &RankOnePencil::from_matrices)
      .def_static("parse",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return parse_pencil(in);
                  })
      .def_property_readonly("n", [](const RankOnePencil& p) { return p.n; })
      .def_property_readonly("m", &RankOnePencil::m)
      .def("to_text", &format_pencil);
  m.def("pit_check", &pit_check, py::arg("p1"), py::arg("p2"));
  m.def("brute_force_pit", &brute_force_pit, py::arg("p1"), py::arg("p2"));

  m.def(
      "subset_probability",
      [](const Matrix& k, const IndexSet& j) {
        return subset_probability(Kernel(k), j).to_string();
      },
      py::arg("kernel"), py::arg("subset"));
  m.def(
      "dpp_equivalent",
      [](const Matrix& k1, const Matrix& k2) {
        return dpp_equivalent(Kernel(k1), Kernel(k2)).equivalent;
      },
      py::arg("k1"), py::arg("k2"));
}
