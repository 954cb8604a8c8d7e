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

// Command-line front end. Exit codes: 0 positive verdict, 1 negative
// verdict, 2 usage or input error, 3 oracle disagreement.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pmeq/cuts.hpp"
#include "pmeq/dpp.hpp"
#include "pmeq/errors.hpp"
#include "pmeq/io.hpp"
#include "pmeq/pit.hpp"
#include "pmeq/pme.hpp"

namespace {

using namespace pmeq;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kOracleDisagrees = 3;

struct PmeArgs {
  std::string mode, a, b, out;
  bool oracle = false, quiet = false, randomized = false;
};

std::vector<std::string> names_for(const MatrixFile& a, const MatrixFile& b) {
  return a.label_names.empty() ? b.label_names : a.label_names;
}

void print_certificate_summary(const Certificate& cert, const std::vector<Label>& labels,
                               const std::vector<std::string>& names) {
  std::cout << "field: " << cert.field.header() << "\n";
  for (const auto& block : cert.blocks) {
    std::cout << "block " << format_labels(block.labels, labels, names) << ": ";
    if (block.cut_sequence.empty()) std::cout << "no cut-transposes";
    for (std::size_t i = 0; i < block.cut_sequence.size(); ++i) {
      std::cout << (i ? " " : "") << format_labels(block.cut_sequence[i], labels, names);
    }
    std::cout << "; witness d = (";
    for (std::size_t i = 0; i < block.witness.d.size(); ++i) {
      std::cout << (i ? ", " : "") << block.witness.d[i].to_string();
    }
    std::cout << ")" << (block.witness.transposed ? " transposed" : "") << "\n";
  }
}

int run_pme(const PmeArgs& args) {
  const MatrixFile fa = read_matrix_file(args.a);
  const MatrixFile fb = read_matrix_file(args.b);
  const auto names = names_for(fa, fb);
  const Verdict v = pme_check(fa.matrix, fb.matrix, {args.randomized});
  if (args.oracle) {
    const OracleResult oracle = brute_force_pme(fa.matrix, fb.matrix);
    if (oracle.equal != v.equivalent) {
      std::cout << "OracleDisagreement: algorithm says "
                << (v.equivalent ? "Equivalent" : "NotEquivalent") << ", brute force says "
                << (oracle.equal ? "Equivalent" : "NotEquivalent") << "\n";
      return kOracleDisagrees;
    }
  }
  const std::vector<Label>& labels = fa.matrix.labels();
  if (v.equivalent) {
    const std::string json = certificate_to_json(*v.certificate);
    if (!args.out.empty()) {
      std::ofstream out(args.out);
      if (!out) throw Error(ErrorCode::kParse, "cannot write " + args.out);
      out << json;
    }
    std::cout << "Equivalent\n";
    if (args.mode == "certify" && args.out.empty()) {
      std::cout << json;
    } else if (!args.quiet) {
      print_certificate_summary(*v.certificate, labels, names);
    }
    if (!args.quiet && args.oracle) std::cout << "oracle: agrees\n";
    return kYes;
  }
  std::cout << "NotEquivalent\n";
  if (!args.quiet) {
    if (v.refuting_subset) {
      const IndexSet& s = *v.refuting_subset;
      std::cout << "refuting subset: " << format_labels(s, labels, names) << "\n"
                << "det A[S] = " << determinant(principal_submatrix(fa.matrix, s)).to_string()
                << ", det B[S] = "
                << determinant(principal_submatrix(fb.matrix, s)).to_string() << "\n";
    } else {
      std::cout << "reason: " << v.reason << "\n";
    }
    if (args.oracle) std::cout << "oracle: agrees\n";
  }
  return kNo;
}

int run_verify(const std::string& a, const std::string& b, const std::string& cert_path) {
  const MatrixFile fa = read_matrix_file(a);
  const MatrixFile fb = read_matrix_file(b);
  const Certificate cert = read_certificate_file(cert_path);
  if (cert.field != fa.matrix.field()) {
    throw Error(ErrorCode::kFieldMismatch,
                "certificate is over " + cert.field.header() + ", matrices over " +
                    fa.matrix.field().header());
  }
  std::string why;
  if (verify_certificate(fa.matrix, fb.matrix, cert, &why)) {
    std::cout << "Valid\n";
    return kYes;
  }
  std::cout << "Invalid: " << why << "\n";
  return kNo;
}

int run_pit(const std::string& p1_path, const std::string& p2_path, bool oracle) {
  const RankOnePencil p1 = read_pencil_file(p1_path);
  const RankOnePencil p2 = read_pencil_file(p2_path);
  const bool equal = pit_check(p1, p2);
  if (oracle && brute_force_pit(p1, p2) != equal) {
    std::cout << "OracleDisagreement: algorithm says " << (equal ? "Equal" : "NotEqual")
              << "\n";
    return kOracleDisagrees;
  }
  std::cout << (equal ? "Equal" : "NotEqual") << "\n";
  return equal ? kYes : kNo;
}

int run_dpp(const std::string& k1_path, const std::string& k2_path) {
  const MatrixFile k1 = read_matrix_file(k1_path);
  const MatrixFile k2 = read_matrix_file(k2_path);
  const Verdict v = dpp_equivalent(Kernel(k1.matrix), Kernel(k2.matrix));
  const auto names = names_for(k1, k2);
  if (v.equivalent) {
    std::cout << "Equivalent\n";
    print_certificate_summary(*v.certificate, k1.matrix.labels(), names);
    return kYes;
  }
  std::cout << "NotEquivalent\n";
  if (v.refuting_subset) {
    std::cout << "refuting subset: "
              << format_labels(*v.refuting_subset, k1.matrix.labels(), names) << "\n";
  }
  return kNo;
}

IndexSet parse_label_set(const std::string& text, const MatrixFile& mf) {
  std::string cleaned = text;
  for (char& c : cleaned) {
    if (c == '{' || c == '}' || c == ',') c = ' ';
  }
  std::istringstream in(cleaned);
  IndexSet out;
  std::string token;
  while (in >> token) {
    const auto& names = mf.label_names;
    auto it = std::find(names.begin(), names.end(), token);
    if (it != names.end()) {
      out.push_back(mf.matrix.labels()[static_cast<std::size_t>(it - names.begin())]);
      continue;
    }
    try {
      std::size_t used = 0;
      const int label = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      const auto& labels = mf.matrix.labels();
      if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
        throw Error(ErrorCode::kUnknownLabel, token);
      }
      out.push_back(label);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kUnknownLabel, token);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int run_cut(const std::string& path, bool minimal, const std::string& transpose) {
  const MatrixFile mf = read_matrix_file(path);
  if (minimal) {
    if (mf.matrix.rows() < 4) {  // both sides of a cut need two labels
      std::cout << "NoCut\n";
      return kNo;
    }
    const auto cut = minimal_cut(mf.matrix);
    if (!cut) {
      std::cout << "NoCut\n";
      return kNo;
    }
    std::cout << format_labels(*cut, mf.matrix.labels(), mf.label_names) << "\n";
    return kYes;
  }
  const IndexSet x = parse_label_set(transpose, mf);
  if (!is_cut(mf.matrix, x)) {
    std::cout << "NotACut: " << format_labels(x, mf.matrix.labels(), mf.label_names)
              << "\n";
    return kNo;
  }
  std::cout << format_matrix(cut_transpose(mf.matrix, x), mf.label_names);
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal minor equivalence and related checks"};
  app.require_subcommand(1);

  PmeArgs pme;
  auto* pme_cmd = app.add_subcommand("pme", "Decide principal minor equivalence");
  pme_cmd->add_option("mode", pme.mode, "check or certify")
      ->required()
      ->check(CLI::IsMember({"check", "certify"}));
  pme_cmd->add_option("A", pme.a)->required();
  pme_cmd->add_option("B", pme.b)->required();
  pme_cmd->add_option("--out", pme.out, "Write the certificate as JSON");
  pme_cmd->add_flag("--oracle", pme.oracle, "Cross-check with all principal minors (n <= 14)");
  pme_cmd->add_flag("--quiet", pme.quiet, "Print only the verdict");
  pme_cmd->add_flag("--randomized-shift", pme.randomized,
                    "Try pseudo-random points first when preprocessing");

  std::string va, vb, vcert;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate");
  verify_cmd->add_option("A", va)->required();
  verify_cmd->add_option("B", vb)->required();
  verify_cmd->add_option("certificate", vcert)->required();

  std::string p1, p2;
  bool pit_oracle = false;
  auto* pit_cmd = app.add_subcommand("pit", "Compare two rank-one determinant pencils");
  pit_cmd->add_option("P1", p1)->required();
  pit_cmd->add_option("P2", p2)->required();
  pit_cmd->add_flag("--oracle", pit_oracle, "Cross-check on {0,1}^m (m <= 12)");

  std::string k1, k2;
  auto* dpp_cmd = app.add_subcommand("dpp", "Compare two DPP kernels");
  dpp_cmd->add_option("K1", k1)->required();
  dpp_cmd->add_option("K2", k2)->required();

  std::string cut_path, transpose;
  bool minimal = false;
  auto* cut_cmd = app.add_subcommand("cut", "Minimal cut or cut-transpose");
  cut_cmd->add_option("A", cut_path)->required();
  auto* minimal_opt = cut_cmd->add_flag("--minimal", minimal, "Print the minimal cut");
  auto* transpose_opt =
      cut_cmd->add_option("--transpose", transpose, "Cut-transpose along X, e.g. {1,4}");
  minimal_opt->excludes(transpose_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*pme_cmd) return run_pme(pme);
    if (*verify_cmd) return run_verify(va, vb, vcert);
    if (*pit_cmd) return run_pit(p1, p2, pit_oracle);
    if (*dpp_cmd) return run_dpp(k1, k2);
    if (*cut_cmd) {
      if (!minimal && transpose.empty()) {
        std::cerr << "cut needs --minimal or --transpose\n";
        return kInputError;
      }
      return run_cut(cut_path, minimal, transpose);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
