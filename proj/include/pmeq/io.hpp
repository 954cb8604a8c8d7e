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

// Text formats: matrices, rank-one pencils and JSON certificates.
//
// Matrix file:
//   field rational | field gf <p> | field gf <p>^<k> [c0 c1 ... ck]
//   <n> [labels l1 ... ln]
//   n rows of n entries ("p/q" or integers; "[c0,c1,...]" for extensions)
//
// Pencil file: the field header, n, m (same line or the next), n rows of A0,
// then m terms, each a line "u: <n entries> v: <n entries>" or a line
// "matrix:" followed by n rows of a matrix of rank at most one.
//
// Blank lines and text after '#' are ignored. Labels given as integers are
// used as-is; any other names map to positions 1..n and are kept for output.

#ifndef PMEQ_IO_HPP_
#define PMEQ_IO_HPP_

#include <istream>
#include <string>
#include <vector>

#include "pmeq/field.hpp"
#include "pmeq/linalg.hpp"
#include "pmeq/pit.hpp"
#include "pmeq/pme.hpp"

namespace pmeq {

struct MatrixFile {
  Matrix matrix{Field::rationals(), 0, 0};
  std::vector<std::string> label_names;  // empty unless names were given
};

// All parse failures throw Error(kParse) naming the line, or kInvalidField
// for a bad header.
Field parse_field_header(const std::string& line);
Element parse_element(const Field& field, const std::string& token);

MatrixFile parse_matrix(std::istream& in);
MatrixFile read_matrix_file(const std::string& path);
std::string format_matrix(const Matrix& m, const std::vector<std::string>& label_names = {});

RankOnePencil parse_pencil(std::istream& in);
RankOnePencil read_pencil_file(const std::string& path);
std::string format_pencil(const RankOnePencil& p);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);
Certificate read_certificate_file(const std::string& path);

// "{a,b}" using names when present, else the integer labels.
std::string format_labels(const IndexSet& s, const std::vector<Label>& labels,
                          const std::vector<std::string>& names);

}  // namespace pmeq

#endif  // PMEQ_IO_HPP_
