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

/// \file algebraic.hpp
/// Idempotents, von Neumann regularity, projectivity and rank reports.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>

#include "tropcheck/cells.hpp"
#include "tropcheck/error.hpp"
#include "tropcheck/matrix.hpp"
#include "tropcheck/polytope.hpp"

namespace tropcheck {

inline bool is_idempotent(const Matrix& a) {
  require_square(a);
  return mat_mul(a, a) == a;
}

struct RegularityReport {
  bool regular = false;
  /// A finite B with A ⊗ B ⊗ A = A when regular.
  std::optional<Matrix> witness;
};

/// Regular iff the greatest B with A⊗B⊗A <= A already achieves equality.
inline RegularityReport regularity_witness(const Matrix& a) {
  require_square(a);
  require_finite(a, "regularity argument");
  Matrix b = double_residual(a);
  if (mat_mul(mat_mul(a, b), a) == a) return {true, std::move(b)};
  return {false, std::nullopt};
}

/// Longest-path closure: zero diagonal, then A^(n-1). Rejects positive cycles.
inline Matrix metric_closure(const Matrix& a) {
  require_square(a);
  require_finite(a, "metric_closure argument");
  const std::size_t n = a.rows();
  Matrix c = a;
  for (std::size_t i = 0; i < n; ++i) c(i, i) = ExtScalar(0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        ExtScalar through = tmul(c(i, k), c(k, j));
        if (c(i, j) < through) c(i, j) = std::move(through);
      }
  for (std::size_t i = 0; i < n; ++i) {
    if (ExtScalar(0) < c(i, i)) {
      throw Error(ErrorKind::kPositiveCycle, "cycle of positive weight through " +
                                                 std::to_string(i));
    }
  }
  return c;
}

/// M_ji = min_t (g_tj - g_ti): column i is the least point of P with
/// non-negative i-th coordinate whenever P is min-plus convex.
inline Matrix infimum_matrix(const Polytope& p) {
  const std::size_t k = p.ambient();
  const auto& gens = p.generators();
  Matrix m(k, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      Scalar best = gens[0][j].value() - gens[0][i].value();
      for (const auto& g : gens) {
        Scalar cand = g[j].value() - g[i].value();
        if (cand < best) best = std::move(cand);
      }
      m(j, i) = std::move(best);
    }
  return m;
}

enum class ProjectivityReason { kDimensionMismatch, kNotMinPlusConvex, kProjective };

constexpr std::string_view to_string(ProjectivityReason r) {
  switch (r) {
    case ProjectivityReason::kDimensionMismatch: return "DimensionMismatch";
    case ProjectivityReason::kNotMinPlusConvex: return "NotMinPlusConvex";
    case ProjectivityReason::kProjective: return "Projective";
  }
  return "Unknown";
}

struct ProjectivityReport {
  bool projective = false;
  std::size_t gendim = 0;
  std::size_t dualdim = 0;
  ProjectivityReason reason = ProjectivityReason::kDimensionMismatch;
  /// k x k idempotent whose column space is the embedded polytope.
  std::optional<Matrix> idempotent;
  std::optional<EmbeddingReport> embedding;
};

/// Decides projectivity by synthesis and verification.
///
/// A projective polytope has equal generator and dual dimension k, and its
/// minimal embedding into FT^k is then the column space of the idempotent
/// built by infimum_matrix. Conversely any idempotent with that column space
/// certifies projectivity.
inline ProjectivityReport is_projective(const Polytope& p) {
  ProjectivityReport report;
  report.gendim = generator_dimension(p);
  report.dualdim = dual_dimension(p);
  if (report.gendim != report.dualdim) {
    report.reason = ProjectivityReason::kDimensionMismatch;
    return report;
  }
  EmbeddingReport embedding = embed_minimal(p);
  Matrix m = infimum_matrix(embedding.embedded);
  const bool ok = is_idempotent(m) && same_set(column_space(m), embedding.embedded);
  report.embedding = std::move(embedding);
  if (!ok) {
    report.reason = ProjectivityReason::kNotMinPlusConvex;
    return report;
  }
  report.projective = true;
  report.reason = ProjectivityReason::kProjective;
  report.idempotent = std::move(m);
  return report;
}

/// The unique idempotent whose column space is P, for P of full generator
/// dimension in its ambient space.
inline Matrix recover_idempotent(const Polytope& p) {
  if (generator_dimension(p) != p.ambient()) {
    throw Error(ErrorKind::kNotFullRank, "generator dimension differs from ambient dimension");
  }
  Matrix m = infimum_matrix(p);
  if (!is_idempotent(m) || !same_set(column_space(m), p)) {
    throw Error(ErrorKind::kNotAnIdempotentColumnSpace,
                "no idempotent matrix has this column space");
  }
  return m;
}

/// E ⊗ x: the least point of C(E) above x, for a full-rank idempotent E.
/// x may contain -inf entries but not only -inf.
inline Vector canonical_projection(const Matrix& e, const Vector& x) {
  require_square(e);
  require_finite(e, "idempotent");
  if (x.size() != e.cols()) throw Error(ErrorKind::kDimensionMismatch, "vector length");
  if (x.is_all_bottom()) throw Error(ErrorKind::kInvalidArgument, "vector is entirely -inf");
  if (!is_idempotent(e)) throw Error(ErrorKind::kNotIdempotent, "E ⊗ E != E");
  if (generator_dimension(column_space(e)) != e.cols()) {
    throw Error(ErrorKind::kNotFullRank, "column generator rank below size");
  }
  return mat_vec(e, x);
}

// ---------------------------------------------------------------------------
// Green's relations, decided through row and column spaces

inline bool greens_R(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::kDimensionMismatch, "row counts differ");
  return same_set(column_space(a), column_space(b));
}

inline bool greens_L(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorKind::kDimensionMismatch, "column counts differ");
  return same_set(row_space(a), row_space(b));
}

inline bool greens_H(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "shapes differ");
  }
  return greens_R(a, b) && greens_L(a, b);
}

// ---------------------------------------------------------------------------

struct RankReport {
  std::size_t row_gen_rank = 0;
  std::size_t col_gen_rank = 0;
  std::size_t tropical_rank = 0;
  bool all_equal = false;

  /// Factor rank lies between the tropical rank and min(row, column) rank.
  std::pair<std::size_t, std::size_t> factor_rank_bounds() const {
    return {tropical_rank, std::min(row_gen_rank, col_gen_rank)};
  }
};

inline RankReport rank_report(const Matrix& a, CellOptions options = {}) {
  require_finite(a, "rank_report argument");
  RankReport r;
  Polytope rows = row_space(a);
  r.row_gen_rank = generator_dimension(rows);
  r.col_gen_rank = generator_dimension(column_space(a));
  r.tropical_rank = tropical_dimension(rows, options);
  r.all_equal = r.row_gen_rank == r.col_gen_rank && r.col_gen_rank == r.tropical_rank;
  return r;
}

}  // namespace tropcheck
