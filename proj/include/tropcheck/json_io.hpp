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

/// \file json_io.hpp
/// JSON documents for matrices, polytopes and reports.
///
///   MatrixDocument   {"rows": r, "cols": c, "entries": [[entry, ...], ...]}
///   PolytopeDocument {"ambient": n, "generators": [[entry, ...], ...]}
///
/// An entry is a JSON integer, a string "p/q" or "-inf". Integers that fit
/// in 64 bits are written as JSON numbers, everything else as strings.
/// Generators must be finite.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "tropcheck/algebraic.hpp"
#include "tropcheck/cells.hpp"
#include "tropcheck/error.hpp"
#include "tropcheck/matrix.hpp"
#include "tropcheck/polytope.hpp"
#include "tropcheck/scalar.hpp"

namespace tropcheck {

using Json = nlohmann::ordered_json;

struct MatrixDocument {
  Matrix matrix;

  friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

/// Generators as written, before canonical scaling.
struct PolytopeDocument {
  std::size_t ambient = 0;
  std::vector<Vector> generators;

  Polytope polytope() const { return Polytope(ambient, generators); }

  friend bool operator==(const PolytopeDocument&, const PolytopeDocument&) = default;
};

namespace detail {

[[noreturn]] inline void parse_error(const std::string& what) {
  throw Error(ErrorKind::kParse, what);
}

inline std::size_t read_size(const Json& j, const char* key) {
  if (!j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    parse_error(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

inline const Json& read_array(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    parse_error(std::string("field '") + key + "' must be an array");
  }
  return j.at(key);
}

}  // namespace detail

inline ExtScalar entry_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > INT64_MAX) {
      return ExtScalar::parse(std::to_string(j.get<std::uint64_t>()));
    }
    return ExtScalar(j.get<std::int64_t>());
  }
  if (j.is_string()) return ExtScalar::parse(j.get<std::string>());
  detail::parse_error("entry must be an integer or a string, got " + j.dump());
}

inline Json entry_to_json(const ExtScalar& e) {
  if (e.is_finite() && e.value().is_integer()) {
    const BigInt& n = boost::multiprecision::numerator(e.value().value());
    if (n >= INT64_MIN && n <= INT64_MAX) return Json(n.convert_to<std::int64_t>());
  }
  return Json(e.str());
}

inline Vector vector_from_json(const Json& j) {
  if (!j.is_array()) detail::parse_error("vector must be an array, got " + j.dump());
  Vector v(j.size());
  for (std::size_t p = 0; p < j.size(); ++p) v[p] = entry_from_json(j[p]);
  return v;
}

inline Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(entry_to_json(e));
  return out;
}

inline MatrixDocument matrix_document_from_json(const Json& j) {
  if (!j.is_object()) detail::parse_error("matrix document must be an object");
  const std::size_t rows = detail::read_size(j, "rows");
  const std::size_t cols = detail::read_size(j, "cols");
  const Json& entries = detail::read_array(j, "entries");
  if (rows == 0 || cols == 0) detail::parse_error("matrix must have at least one entry");
  if (entries.size() != rows) {
    detail::parse_error("expected " + std::to_string(rows) + " rows, found " +
                        std::to_string(entries.size()));
  }
  MatrixDocument doc{Matrix(rows, cols)};
  for (std::size_t i = 0; i < rows; ++i) {
    Vector row = vector_from_json(entries[i]);
    if (row.size() != cols) {
      detail::parse_error("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                          " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) doc.matrix(i, c) = row[c];
  }
  return doc;
}

inline Json to_json(const Matrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(vector_to_json(m.row(i)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline Json to_json(const MatrixDocument& doc) { return to_json(doc.matrix); }

inline PolytopeDocument polytope_document_from_json(const Json& j) {
  if (!j.is_object()) detail::parse_error("polytope document must be an object");
  PolytopeDocument doc;
  doc.ambient = detail::read_size(j, "ambient");
  const Json& gens = detail::read_array(j, "generators");
  if (doc.ambient == 0) detail::parse_error("ambient dimension must be positive");
  if (gens.empty()) detail::parse_error("a polytope needs at least one generator");
  for (std::size_t t = 0; t < gens.size(); ++t) {
    Vector g = vector_from_json(gens[t]);
    if (g.size() != doc.ambient) {
      detail::parse_error("generator " + std::to_string(t) + " has length " +
                          std::to_string(g.size()) + ", expected " +
                          std::to_string(doc.ambient));
    }
    if (!g.is_finite()) detail::parse_error("generator " + std::to_string(t) + " is not finite");
    doc.generators.push_back(std::move(g));
  }
  return doc;
}

inline Json to_json(const PolytopeDocument& doc) {
  Json gens = Json::array();
  for (const auto& g : doc.generators) gens.push_back(vector_to_json(g));
  return Json{{"ambient", doc.ambient}, {"generators", std::move(gens)}};
}

inline Json to_json(const Polytope& p) {
  return to_json(PolytopeDocument{p.ambient(), p.generators()});
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

// ---------------------------------------------------------------------------
// Reports

inline Json type_to_json(const TypeVector& s) {
  Json out = Json::array();
  for (const auto& set : s.to_sets()) out.push_back(set);
  return out;
}

inline Json to_json(const Face& f) {
  return Json{{"type", type_to_json(f.exact_type)},
              {"witness", vector_to_json(f.witness)},
              {"dim", f.dim},
              {"covering", f.covering}};
}

inline Json to_json(const RankReport& r) {
  auto [lo, hi] = r.factor_rank_bounds();
  return Json{{"row", r.row_gen_rank},
              {"col", r.col_gen_rank},
              {"tropical", r.tropical_rank},
              {"all_equal", r.all_equal},
              {"factor_rank_bounds", Json::array({lo, hi})}};
}

}  // namespace tropcheck
