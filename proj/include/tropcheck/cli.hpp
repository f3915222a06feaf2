// Copyright 2026 The tropcheck Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/// \file cli.hpp
/// The tropcheck command line: argument parsing, dispatch and report
/// formatting. Verdicts are always reported in the payload; the exit code
/// only signals operational failures.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tropcheck/algebraic.hpp"
#include "tropcheck/cells.hpp"
#include "tropcheck/json_io.hpp"
#include "tropcheck/polytope.hpp"
#include "tropcheck/suites.hpp"
#include "tropcheck/svg.hpp"

namespace tropcheck::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 2,
  kUnsupported = 3,
  kScaleLimit = 4,
};

enum class Format { kText, kJson };

struct Options {
  std::string input;
  std::string output;
  Format format = Format::kText;
  std::uint64_t max_tuples = CellOptions{}.max_tuples;
  bool regularity = false;
  std::string project;
  std::string suite;
  SuiteOptions suite_options;
};

/// Raised for input problems detected before any mathematics runs.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Text rendering

namespace detail {

inline bool is_scalar_json(const Json& j) { return !j.is_object() && !j.is_array(); }

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "null";
  return j.dump();
}

inline bool is_inline_json(const Json& j) {
  if (is_scalar_json(j)) return true;
  if (j.is_object()) return false;
  for (const auto& e : j)
    if (!is_inline_json(e)) return false;
  return true;
}

inline std::string inline_text(const Json& j) {
  if (is_scalar_json(j)) return scalar_text(j);
  std::string out = "[";
  bool first = true;
  for (const auto& e : j) {
    out += (first ? "" : ", ") + inline_text(e);
    first = false;
  }
  return out + "]";
}

inline void render_text(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_inline_json(value)) {
        os << pad << key << ": " << inline_text(value) << '\n';
      } else {
        os << pad << key << ":\n";
        render_text(value, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_inline_json(e)) {
        os << pad << "- " << inline_text(e) << '\n';
      } else {
        os << pad << "-\n";
        render_text(e, os, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

}  // namespace detail

/// Plain-text form carrying exactly the fields of the JSON report.
inline std::string to_text(const Json& j) {
  std::ostringstream os;
  detail::render_text(j, os, 0);
  return os.str();
}

inline std::string format_report(const Json& j, Format format) {
  return format == Format::kJson ? j.dump(2) + "\n" : to_text(j);
}

// ---------------------------------------------------------------------------
// Commands

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Matrix load_matrix(const std::string& path) {
  return matrix_document_from_json(parse_json_text(read_file(path))).matrix;
}

inline PolytopeDocument load_polytope(const std::string& path) {
  return polytope_document_from_json(parse_json_text(read_file(path)));
}

inline Json space_summary(const Polytope& p, const CellOptions& cell_options) {
  PurityReport purity = pure_dimension_check(p, cell_options);
  return Json{{"gendim", generator_dimension(p)},
              {"dualdim", dual_dimension(p)},
              {"tropical_dim", purity.dim},
              {"pure", purity.pure}};
}

inline Json cmd_analyze(const Matrix& a, const Options& options) {
  const CellOptions cell_options{options.max_tuples};
  if (!a.is_finite()) throw InputError("analyze needs a finite matrix");
  if (options.regularity && !a.is_square()) {
    throw Error(ErrorKind::kNotSquare, "regularity needs a square matrix, got " +
                                           std::to_string(a.rows()) + "x" +
                                           std::to_string(a.cols()));
  }
  Json report{{"rows", a.rows()}, {"cols", a.cols()}};
  if (a.is_square()) {
    report["idempotent"] = is_idempotent(a);
    RegularityReport regularity = regularity_witness(a);
    report["regular"] = regularity.regular;
    if (regularity.witness) report["witness"] = to_json(*regularity.witness);
  }
  report["ranks"] = to_json(rank_report(a, cell_options));
  report["row_space"] = space_summary(row_space(a), cell_options);
  report["column_space"] = space_summary(column_space(a), cell_options);
  if (!options.project.empty()) {
    Matrix x = load_matrix(options.project);
    if (x.rows() != a.rows()) {
      throw InputError("projection vectors have length " + std::to_string(x.rows()) +
                       ", expected " + std::to_string(a.rows()));
    }
    Matrix projected(x.rows(), x.cols());
    for (std::size_t j = 0; j < x.cols(); ++j) {
      Vector column = canonical_projection(a, x.column(j));
      for (std::size_t i = 0; i < x.rows(); ++i) projected(i, j) = column[i];
    }
    report["projection"] = to_json(projected);
  }
  return report;
}

inline Json cmd_polytope(const Polytope& p, const Options& options) {
  const CellOptions cell_options{options.max_tuples};
  ProjectivityReport proj = is_projective(p);
  PurityReport purity = pure_dimension_check(p, cell_options);
  Json report{{"ambient", p.ambient()},
              {"generators", p.size()},
              {"gendim", proj.gendim},
              {"dualdim", proj.dualdim},
              {"tropical_dim", purity.dim},
              {"pure", purity.pure},
              {"min_plus_convex", min_plus_convex(p)},
              {"projective", proj.projective},
              {"reason", std::string(to_string(proj.reason))}};
  if (proj.idempotent) report["idempotent"] = to_json(*proj.idempotent);
  return report;
}

inline Json cmd_faces(const Polytope& p, const Options& options) {
  Json faces = Json::array();
  for (const Face& f : enumerate_cells(p, CellOptions{options.max_tuples}).faces) {
    faces.push_back(to_json(f));
  }
  return faces;
}

inline std::string cmd_plot(const Polytope& p, const Options& options) {
  if (p.ambient() != 3) {
    throw Error(ErrorKind::kDimensionMismatch,
                "plot needs ambient dimension 3, got " + std::to_string(p.ambient()));
  }
  return plot_svg(p, CellOptions{options.max_tuples});
}

inline Json cmd_oracle(const Options& options) {
  bool known = false;
  for (const auto& s : all_suites()) known = known || s.name == options.suite;
  if (!known) throw InputError("unknown suite '" + options.suite + "'");
  SuiteResult result = run_suite(options.suite, options.suite_options);
  Json tallies = Json::object();
  for (const auto& [key, value] : result.tallies) tallies[key] = value;
  return Json{{"suite", result.suite},
              {"instances", result.instances},
              {"failures", result.failures},
              {"tallies", std::move(tallies)}};
}

// ---------------------------------------------------------------------------
// Entry point

inline void emit(const std::string& text, const Options& options, std::ostream& out) {
  if (options.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(options.output, std::ios::binary);
  if (!file) throw InputError("cannot write '" + options.output + "'");
  file << text;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decision procedures for tropical polytopes and matrices", "tropcheck"};
  app.require_subcommand(1);
  Options options;
  const std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}};

  auto add_io = [&](CLI::App* cmd, bool input) {
    if (input) cmd->add_option("--input", options.input, "JSON document")->required();
    cmd->add_option("--output", options.output, "write to this file instead of stdout");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", options.format, "text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_tuples = [&](CLI::App* cmd) {
    cmd->add_option("--max-tuples", options.max_tuples, "cell enumeration budget");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "idempotency, regularity and ranks of a matrix");
  add_io(analyze, true);
  add_format(analyze);
  add_tuples(analyze);
  analyze->add_flag("--regularity", options.regularity, "fail unless regularity applies");
  analyze->add_option("--project", options.project,
                      "matrix document whose columns are projected onto C(E)");

  CLI::App* polytope = app.add_subcommand("polytope", "dimensions, convexity and projectivity");
  add_io(polytope, true);
  add_format(polytope);
  add_tuples(polytope);

  CLI::App* faces = app.add_subcommand("faces", "cells of the type decomposition");
  add_io(faces, true);
  add_format(faces);
  add_tuples(faces);

  CLI::App* plot = app.add_subcommand("plot", "SVG of a polytope in FT^3");
  add_io(plot, true);
  add_tuples(plot);

  CLI::App* oracle = app.add_subcommand("oracle", "run a cross-validation suite");
  std::string suite_names;
  for (const auto& s : all_suites()) suite_names += (suite_names.empty() ? "" : ", ") + std::string(s.name);
  oracle->add_option("suite", options.suite, "one of: " + suite_names)->required();
  oracle->add_option("--seed", options.suite_options.seed);
  oracle->add_option("--count", options.suite_options.count);
  oracle->add_option("--n", options.suite_options.n, "largest ambient dimension");
  oracle->add_option("--m", options.suite_options.m, "largest number of generators");
  oracle->add_option("--range", options.suite_options.range, "entries drawn from [-range, range]");
  add_io(oracle, false);
  add_format(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformedInput;
  }

  try {
    if (analyze->parsed()) {
      emit(format_report(cmd_analyze(load_matrix(options.input), options), options.format),
           options, out);
    } else if (polytope->parsed()) {
      emit(format_report(cmd_polytope(load_polytope(options.input).polytope(), options),
                         options.format),
           options, out);
    } else if (faces->parsed()) {
      emit(format_report(cmd_faces(load_polytope(options.input).polytope(), options),
                         options.format),
           options, out);
    } else if (plot->parsed()) {
      emit(cmd_plot(load_polytope(options.input).polytope(), options), options, out);
    } else if (oracle->parsed()) {
      emit(format_report(cmd_oracle(options), options.format), options, out);
    }
  } catch (const InputError& e) {
    err << "tropcheck: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const Error& e) {
    err << "tropcheck: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::kParse:
      case ErrorKind::kNonFiniteEntries:
      case ErrorKind::kEmptyPolytope:
        return kMalformedInput;
      case ErrorKind::kScaleLimitExceeded:
        return kScaleLimit;
      default:
        return kUnsupported;
    }
  }
  return kOk;
}

}  // namespace tropcheck::cli
