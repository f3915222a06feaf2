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

/// \file suites.hpp
/// Named cross-validation suites over seeded corpora.
///
/// Each suite pits two independently computed answers against each other
/// (or checks a structural property) on every instance and records a
/// readable description of each disagreement.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tropcheck/algebraic.hpp"
#include "tropcheck/cells.hpp"
#include "tropcheck/oracles.hpp"
#include "tropcheck/polytope.hpp"

namespace tropcheck {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  /// Upper bound on the ambient dimension / matrix size.
  std::size_t n = 4;
  /// Upper bound on the number of generators.
  std::size_t m = 4;
  std::int64_t range = 5;
};

struct SuiteResult {
  std::string suite;
  std::size_t instances = 0;
  std::vector<std::string> failures;
  /// Suite-specific tallies, e.g. how many instances were projective.
  std::map<std::string, std::size_t> tallies;

  bool passed() const { return failures.empty(); }
};

namespace detail {

template <typename T>
std::string describe(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

inline std::string describe(const Polytope& p) {
  std::ostringstream os;
  os << "polytope{";
  for (std::size_t t = 0; t < p.size(); ++t) os << (t ? "," : "") << p.generators()[t];
  os << '}';
  return os.str();
}

}  // namespace detail

/// Every n x n matrix over {-range..range} is regular with projective
/// column space (n taken as 2 unless options.n says otherwise).
inline SuiteResult suite_regularity_2x2(const SuiteOptions& options) {
  SuiteResult result;
  result.suite = "regularity-2x2";
  std::vector<Scalar> entries;
  for (std::int64_t v = -options.range; v <= options.range; ++v) entries.emplace_back(v);
  for (const Matrix& a : exhaustive_matrices(2, entries)) {
    ++result.instances;
    if (!regularity_witness(a).regular) {
      result.failures.push_back("not regular: " + detail::describe(a));
    } else if (!is_projective(column_space(a)).projective) {
      result.failures.push_back("column space not projective: " + detail::describe(a));
    }
  }
  return result;
}

/// Algebraic projectivity pipeline vs. pure dimension = gendim = dualdim
/// from the cell decomposition.
inline SuiteResult suite_triangulation(const SuiteOptions& options) {
  SuiteResult result;
  result.suite = "triangulation";
  CorpusRng rng(options.seed);
  for (std::size_t k = 0; k < options.count; ++k) {
    CorpusParams params{rng.index(1, options.n), rng.index(1, options.m), options.range, 1};
    Polytope p = random_polytope(rng, params);
    ++result.instances;
    ProjectivityReport algebraic = is_projective(p);
    PurityReport geometric = pure_dimension_check(p);
    const bool geometric_verdict = geometric.pure && geometric.dim == algebraic.gendim &&
                                   algebraic.gendim == algebraic.dualdim;
    if (algebraic.projective != geometric_verdict) {
      result.failures.push_back(detail::describe(p) + ": algebraic " +
                                (algebraic.projective ? "projective" : "not projective") +
                                ", geometric " + (geometric_verdict ? "projective" : "not"));
    }
    ++result.tallies[algebraic.projective ? "projective" : "not_projective"];
  }
  return result;
}

/// For gendim = dualdim = ambient: projective <=> min-plus convex, and a
/// min-plus convex verdict is never refuted by sampling.
inline SuiteResult suite_order(const SuiteOptions& options) {
  SuiteResult result;
  result.suite = "order";
  CorpusRng rng(options.seed);
  const std::size_t lo = options.n >= 2 ? 2 : 1;
  while (result.instances < options.count) {
    const std::size_t n = rng.index(lo, options.n);
    const std::size_t m = rng.index(n, std::max(n, options.m));
    Polytope p = random_polytope(rng, CorpusParams{n, m, options.range, 1});
    if (generator_dimension(p) != n || dual_dimension(p) != n) continue;
    ++result.instances;
    const bool projective = is_projective(p).projective;
    const bool convex = min_plus_convex(p);
    if (projective != convex) {
      result.failures.push_back(detail::describe(p) + ": projective " +
                                std::to_string(projective) + " vs min-plus convex " +
                                std::to_string(convex));
    }
    auto counterexample = minplus_sampling_refuter(p, 200, rng.engine()());
    if (counterexample && convex) {
      result.failures.push_back(detail::describe(p) + ": min-plus convex but refuted by " +
                                detail::describe(counterexample->first) + " and " +
                                detail::describe(counterexample->second));
    }
    ++result.tallies[convex ? "min_plus_convex" : "not_min_plus_convex"];
  }
  return result;
}

/// Regular matrices have equal row, column and tropical rank, and the
/// tropical rank matches the submatrix oracle.
inline SuiteResult suite_rank(const SuiteOptions& options) {
  SuiteResult result;
  result.suite = "rank";
  CorpusRng rng(options.seed);
  while (result.instances < options.count) {
    const std::size_t n = rng.index(1, options.n);
    Matrix a;
    switch (result.instances % 3) {
      case 0:
        a = random_idempotent(rng, n, options.range, rng.coin());
        ++result.tallies["closure"];
        break;
      case 1: {
        // Permuted and rescaled idempotent: same regularity class.
        Matrix e = random_idempotent(rng, n, options.range, true);
        std::vector<std::size_t> rows(n), cols(n);
        std::iota(rows.begin(), rows.end(), std::size_t{0});
        std::iota(cols.begin(), cols.end(), std::size_t{0});
        std::shuffle(rows.begin(), rows.end(), rng.engine());
        std::shuffle(cols.begin(), cols.end(), rng.engine());
        a = Matrix(n, n);
        for (std::size_t i = 0; i < n; ++i) {
          Scalar r = rng.scalar(options.range);
          for (std::size_t j = 0; j < n; ++j) a(i, j) = tmul(r, e(rows[i], cols[j]));
        }
        ++result.tallies["permuted"];
        break;
      }
      default: {
        do {
          a = random_matrix(rng, n, n, options.range);
        } while (!regularity_witness(a).regular);
        ++result.tallies["searched"];
        break;
      }
    }
    ++result.instances;
    if (!regularity_witness(a).regular) {
      result.failures.push_back("generator produced a non-regular matrix " + detail::describe(a));
      continue;
    }
    RankReport ranks = rank_report(a);
    const std::size_t oracle = tropical_rank_oracle(a);
    if (!ranks.all_equal || ranks.tropical_rank != oracle) {
      result.failures.push_back(detail::describe(a) + ": row " +
                                std::to_string(ranks.row_gen_rank) + " col " +
                                std::to_string(ranks.col_gen_rank) + " tropical " +
                                std::to_string(ranks.tropical_rank) + " oracle " +
                                std::to_string(oracle));
    }
  }
  return result;
}

/// Order-theoretic and geometric properties of full-rank idempotents.
inline SuiteResult suite_idempotent(const SuiteOptions& options) {
  SuiteResult result;
  result.suite = "idempotent";
  CorpusRng rng(options.seed);
  auto fail = [&](const Matrix& e, const std::string& what) {
    result.failures.push_back(what + ": " + detail::describe(e));
  };
  for (std::size_t k = 0; k < options.count; ++k) {
    const std::size_t n = rng.index(1, options.n);
    Matrix e = random_idempotent_of_rank(rng, n, n, options.range, rng.coin());
    ++result.instances;
    Polytope columns = column_space(e);

    // Extremal columns occur with a zero in the diagonal position.
    bool zero_diagonal = true;
    for (std::size_t i = 0; i < n; ++i) zero_diagonal = zero_diagonal && e(i, i) == ExtScalar(0);
    if (!zero_diagonal) fail(e, "non-zero diagonal");
    try {
      if (zero_diagonal_representatives(e).size() != n) fail(e, "missing representatives");
    } catch (const Error&) {
      fail(e, "extremal column without zero-diagonal representative");
    }

    // Inflation: E x >= x and x E >= x.
    for (int s = 0; s < 5; ++s) {
      Vector x = random_vector(rng, n, options.range, 2);
      if (s % 2 == 1 && n > 1) x[rng.index(0, n - 1)] = ExtScalar::bottom();
      if (!vec_leq(x, mat_vec(e, x)) || !vec_leq(x, vec_mat(x, e))) {
        fail(e, "not inflationary at " + detail::describe(x));
      }
    }

    if (!min_plus_convex(columns) || !min_plus_convex(row_space(e))) {
      fail(e, "row or column space not min-plus convex");
    }

    // E x is the least point of C(E) above x.
    Vector x = random_vector(rng, n, options.range, 2);
    if (n > 1 && rng.coin()) x[rng.index(0, n - 1)] = ExtScalar::bottom();
    Vector projected = canonical_projection(e, x);
    if (!membership(projected, columns) || !vec_leq(x, projected)) {
      fail(e, "projection not in C(E) above x");
    }
    for (int s = 0; s < 100; ++s) {
      Vector y = random_point(rng, columns);
      std::optional<Scalar> lift;
      for (std::size_t p = 0; p < n; ++p) {
        if (x[p].is_bottom()) continue;
        Scalar need = x[p].value() - y[p].value();
        if (!lift || *lift < need) lift = need;
      }
      y = scale(*lift + Scalar(rng.integer(0, 2)), y);
      if (!vec_leq(projected, y)) fail(e, "projection not below dominating point");
    }

    try {
      if (!(recover_idempotent(columns) == e)) fail(e, "recovered a different idempotent");
    } catch (const Error& err) {
      fail(e, std::string("recovery failed: ") + err.what());
    }

    PurityReport purity = pure_dimension_check(columns);
    if (!purity.pure || purity.dim != n) fail(e, "column space not of pure dimension n");
  }
  return result;
}

/// Descent inside C(E) reaches a singleton type below the start type.
inline SuiteResult suite_descent(const SuiteOptions& options) {
  SuiteResult result;
  result.suite = "descent";
  CorpusRng rng(options.seed);
  for (std::size_t k = 0; k < options.count; ++k) {
    const std::size_t n = rng.index(1, options.n);
    Matrix e = random_idempotent(rng, n, options.range, rng.coin());
    Vector x = random_point(rng, column_space(e));
    ++result.instances;
    DescentResult d = descend_to_singletons(e, x);
    std::vector<Vector> gens;
    for (std::size_t j : d.representatives) gens.push_back(e.column(j));
    TypeVector start = type_of(x, gens);
    TypeVector end = type_of(d.point, gens);
    std::string where = detail::describe(e) + " x=" + detail::describe(x);
    if (!end.is_singletons()) result.failures.push_back("type not singleton: " + where);
    if (!end.subset_of(start)) result.failures.push_back("type not contained: " + where);
    if (!in_span(d.point, gens)) result.failures.push_back("left C(E): " + where);
    if (d.iterations > d.iteration_bound) result.failures.push_back("bound exceeded: " + where);
    result.tallies["steps"] += d.iterations;
  }
  return result;
}

/// A polytope with generator dimension at most n has at most one face of
/// dimension n.
inline SuiteResult suite_unique_face(const SuiteOptions& options) {
  SuiteResult result;
  result.suite = "unique-face";
  CorpusRng rng(options.seed);
  while (result.instances < options.count) {
    const std::size_t n = rng.index(1, options.n);
    Polytope p = random_polytope(rng, CorpusParams{n, rng.index(1, std::max(n, options.m)),
                                                   options.range, 1});
    if (generator_dimension(p) > n) continue;
    ++result.instances;
    std::size_t full = 0;
    for (const Face& f : enumerate_cells(p).faces) full += f.covering && f.dim == n;
    if (full > 1) {
      result.failures.push_back(detail::describe(p) + ": " + std::to_string(full) +
                                " faces of full dimension");
    }
    ++result.tallies[full == 1 ? "one_full_face" : "no_full_face"];
  }
  return result;
}

struct NamedSuite {
  std::string_view name;
  std::function<SuiteResult(const SuiteOptions&)> run;
};

inline const std::vector<NamedSuite>& all_suites() {
  static const std::vector<NamedSuite> suites = {
      {"regularity-2x2", suite_regularity_2x2}, {"triangulation", suite_triangulation},
      {"order", suite_order},                   {"rank", suite_rank},
      {"idempotent", suite_idempotent},         {"descent", suite_descent},
      {"unique-face", suite_unique_face},
  };
  return suites;
}

inline SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  for (const auto& s : all_suites()) {
    if (s.name == name) return s.run(options);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown suite '" + std::string(name) + "'");
}

}  // namespace tropcheck
