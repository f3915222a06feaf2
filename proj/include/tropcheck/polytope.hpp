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

/// \file polytope.hpp
/// Finitely generated max-plus convex sets in FT^n.
///
/// A Polytope stores its generators in canonical form: every generator is
/// scaled so that its largest entry is 0, duplicates are dropped and the
/// list is sorted lexicographically. Two generators that are scalings of one
/// another therefore compare equal bit for bit.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropcheck/error.hpp"
#include "tropcheck/matrix.hpp"
#include "tropcheck/scalar.hpp"

namespace tropcheck {

/// Scales a finite vector so its largest entry is 0.
inline Vector canonical_scaling(const Vector& v) {
  return scale(-max_entry(v), v);
}

/// Maximal coefficients lambda_t = min_p (x_p - g_tp); the combination
/// ⊕ lambda_t g_t is the largest point of span(gens) below x.
inline std::vector<Scalar> principal_coefficients(const Vector& x,
                                                  std::span<const Vector> gens) {
  std::vector<Scalar> lambda;
  lambda.reserve(gens.size());
  for (const Vector& g : gens) {
    Scalar best = x[0].value() - g[0].value();
    for (std::size_t p = 1; p < x.size(); ++p) {
      Scalar cand = x[p].value() - g[p].value();
      if (cand < best) best = std::move(cand);
    }
    lambda.push_back(std::move(best));
  }
  return lambda;
}

/// Coefficient witness when x lies in the max-plus span of gens.
inline std::optional<std::vector<Scalar>> span_witness(const Vector& x,
                                                       std::span<const Vector> gens) {
  if (gens.empty()) return std::nullopt;
  auto lambda = principal_coefficients(x, gens);
  for (std::size_t p = 0; p < x.size(); ++p) {
    bool attained = false;
    for (std::size_t t = 0; t < gens.size() && !attained; ++t) {
      attained = lambda[t] + gens[t][p].value() == x[p].value();
    }
    if (!attained) return std::nullopt;
  }
  return lambda;
}

inline bool in_span(const Vector& x, std::span<const Vector> gens) {
  return span_witness(x, gens).has_value();
}

class Polytope {
 public:
  Polytope(std::size_t ambient, std::vector<Vector> generators)
      : ambient_(ambient), generators_(std::move(generators)) {
    canonicalize();
  }

  /// Ambient dimension taken from the first generator.
  explicit Polytope(std::vector<Vector> generators)
      : ambient_(leading_length(generators)), generators_(std::move(generators)) {
    canonicalize();
  }

  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<Vector>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }

  /// True once redundant generators have been removed.
  bool is_reduced() const noexcept { return reduced_; }

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_ == b.ambient_ && a.generators_ == b.generators_;
  }

 private:
  friend Polytope reduce_to_extremals(const Polytope& p);

  static std::size_t leading_length(const std::vector<Vector>& gens) {
    return gens.empty() ? 0 : gens.front().size();
  }

  void canonicalize() {
    if (generators_.empty()) {
      throw Error(ErrorKind::kEmptyPolytope, "a polytope needs at least one generator");
    }
    if (ambient_ == 0) throw Error(ErrorKind::kDimensionMismatch, "ambient dimension 0");
    for (auto& g : generators_) {
      if (g.size() != ambient_) {
        throw Error(ErrorKind::kDimensionMismatch,
                    "generator of length " + std::to_string(g.size()) + " in FT^" +
                        std::to_string(ambient_));
      }
      require_finite(g, "polytope generator");
      g = canonical_scaling(g);
    }
    std::sort(generators_.begin(), generators_.end());
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  }

  std::size_t ambient_;
  std::vector<Vector> generators_;
  bool reduced_ = false;
};

/// Polytope generated by the columns of a finite matrix.
inline Polytope column_space(const Matrix& m) {
  require_finite(m, "column_space argument");
  return Polytope(m.rows(), m.columns());
}

/// Polytope generated by the rows of a finite matrix.
inline Polytope row_space(const Matrix& m) {
  require_finite(m, "row_space argument");
  return Polytope(m.cols(), m.rows_list());
}

inline std::optional<std::vector<Scalar>> membership_witness(const Vector& x,
                                                             const Polytope& p) {
  if (x.size() != p.ambient()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "point of length " + std::to_string(x.size()) + " tested against FT^" +
                    std::to_string(p.ambient()));
  }
  require_finite(x, "membership point");
  return span_witness(x, p.generators());
}

inline bool membership(const Vector& x, const Polytope& p) {
  return membership_witness(x, p).has_value();
}

inline Polytope reduce_to_extremals(const Polytope& p) {
  if (p.reduced_) return p;
  std::vector<Vector> kept = p.generators();
  for (std::size_t t = 0; t < kept.size();) {
    std::vector<Vector> others;
    others.reserve(kept.size() - 1);
    for (std::size_t s = 0; s < kept.size(); ++s) {
      if (s != t) others.push_back(kept[s]);
    }
    if (in_span(kept[t], others)) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(t));
    } else {
      ++t;
    }
  }
  Polytope out(p.ambient(), std::move(kept));
  out.reduced_ = true;
  return out;
}

inline std::size_t generator_dimension(const Polytope& p) {
  return reduce_to_extremals(p).size();
}

/// n x q matrix whose columns are the canonical extremal generators.
inline Matrix generator_matrix(const Polytope& p) {
  return Matrix::from_columns(reduce_to_extremals(p).generators());
}

inline Polytope row_space_polytope(const Polytope& p) {
  return row_space(generator_matrix(p));
}

inline std::size_t dual_dimension(const Polytope& p) {
  return generator_dimension(row_space_polytope(p));
}

/// Same point set: every extremal generator of each lies in the other.
inline bool same_set(const Polytope& a, const Polytope& b) {
  if (a.ambient() != b.ambient()) return false;
  auto ra = reduce_to_extremals(a);
  auto rb = reduce_to_extremals(b);
  for (const auto& g : ra.generators())
    if (!membership(g, rb)) return false;
  for (const auto& g : rb.generators())
    if (!membership(g, ra)) return false;
  return true;
}

struct EmbeddingReport {
  std::size_t target_dim;
  Polytope embedded;
  /// Rows of the extremal generator matrix kept by the embedding, ascending.
  std::vector<std::size_t> row_selection;
};

/// Linear embedding into FT^k with k the dual dimension: keep one row of
/// the generator matrix for every extremal point of its row space.
inline EmbeddingReport embed_minimal(const Polytope& p) {
  Matrix g = generator_matrix(p);
  std::vector<Vector> rows = g.rows_list();
  Polytope rs = reduce_to_extremals(Polytope(g.cols(), rows));
  std::vector<std::size_t> selection;
  for (const Vector& extremal : rs.generators()) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (canonical_scaling(rows[i]) == extremal) {
        selection.push_back(i);
        break;
      }
    }
  }
  std::sort(selection.begin(), selection.end());
  std::vector<Vector> columns;
  columns.reserve(g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j) {
    Vector c(selection.size());
    for (std::size_t r = 0; r < selection.size(); ++r) c[r] = g(selection[r], j);
    columns.push_back(std::move(c));
  }
  return EmbeddingReport{selection.size(), Polytope(selection.size(), std::move(columns)),
                         std::move(selection)};
}

/// Closure of the point set under componentwise minimum.
///
/// By distributivity it suffices that min(g, t ⊗ h) lies in P for every
/// pair of extremal generators and every real t. Between consecutive
/// breakpoints g_c - h_c that curve is a max-plus combination of its values
/// at the two endpoints, and outside them it is a scaling of g or h, so only
/// the breakpoints need testing.
inline bool min_plus_convex(const Polytope& p) {
  Polytope r = reduce_to_extremals(p);
  const auto& gens = r.generators();
  for (const Vector& g : gens)
    for (const Vector& h : gens) {
      if (&g == &h) continue;
      for (std::size_t c = 0; c < r.ambient(); ++c) {
        Scalar t = g[c].value() - h[c].value();
        if (!in_span(pointwise_min(g, scale(t, h)), gens)) return false;
      }
    }
  return true;
}

}  // namespace tropcheck
