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


#include <gtest/gtest.h>

#include "tropcheck/algebraic.hpp"
#include "tropcheck/oracles.hpp"

namespace tropcheck {
namespace {

const Matrix kEc{{0, -3, -3}, {0, 0, -3}, {0, 0, 0}};
const ExtScalar kBot = ExtScalar::bottom();

ErrorKind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kInvalidArgument;
}

TEST(IdempotentTest, Examples) {
  EXPECT_TRUE(is_idempotent(kEc));
  EXPECT_TRUE(is_idempotent(Matrix::zeros(4, 4)));
  EXPECT_TRUE(is_idempotent(Matrix{{0}}));
  EXPECT_FALSE(is_idempotent(Matrix{{1}}));
  EXPECT_FALSE(is_idempotent(Matrix{{Scalar(-1, 2)}}));
  EXPECT_EQ(error_kind([] { is_idempotent(Matrix(2, 3, ExtScalar(0))); }), ErrorKind::kNotSquare);
}

TEST(RegularityTest, EcAndZero) {
  RegularityReport r = regularity_witness(kEc);
  ASSERT_TRUE(r.regular);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(r.witness->is_finite());
  EXPECT_EQ(mat_mul(mat_mul(kEc, *r.witness), kEc), kEc);
  EXPECT_TRUE(regularity_witness(Matrix::zeros(2, 2)).regular);
  EXPECT_EQ(error_kind([] { regularity_witness(Matrix{{0, kBot}, {0, 0}}); }),
            ErrorKind::kNonFiniteEntries);
}

TEST(RegularityTest, WitnessWorksWheneverRegular) {
  CorpusRng rng(41);
  int regular = 0;
  int irregular = 0;
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = rng.index(1, 4);
    Matrix a = random_matrix(rng, n, n, 4, 2);
    RegularityReport r = regularity_witness(a);
    if (r.regular) {
      ++regular;
      EXPECT_EQ(mat_mul(mat_mul(a, *r.witness), a), a);
    } else {
      ++irregular;
      EXPECT_FALSE(r.witness.has_value());
    }
  }
  EXPECT_GT(regular, 0);
  EXPECT_GT(irregular, 0);
}

TEST(RegularityTest, NonRegularThreeByThree) {
  CorpusRng rng(42);
  std::optional<Matrix> found;
  for (int k = 0; k < 1000 && !found; ++k) {
    Matrix a = random_matrix(rng, 3, 3, 5);
    if (!regularity_witness(a).regular) found = a;
  }
  ASSERT_TRUE(found.has_value());
  EXPECT_FALSE(is_projective(column_space(*found)).projective) << *found;
  EXPECT_FALSE(is_projective(row_space(*found)).projective) << *found;
}

// Regularity agrees with projectivity of either space.
TEST(RegularityTest, AgreesWithProjectivityOfRowAndColumnSpaces) {
  CorpusRng rng(43);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = rng.index(1, 4);
    Matrix a = random_matrix(rng, n, n, 5);
    const bool regular = regularity_witness(a).regular;
    EXPECT_EQ(is_projective(column_space(a)).projective, regular) << a;
    EXPECT_EQ(is_projective(row_space(a)).projective, regular) << a;
  }
}

// Regular iff both spaces are pure of one dimension equal to both
// generator dimensions.
TEST(RegularityTest, AgreesWithPureDimensionOfBothSpaces) {
  CorpusRng rng(44);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = rng.index(1, 4);
    Matrix a = random_matrix(rng, n, n, 5);
    Polytope rows = row_space(a);
    Polytope cols = column_space(a);
    PurityReport pr = pure_dimension_check(rows);
    PurityReport pc = pure_dimension_check(cols);
    const bool geometric = pr.pure && pc.pure && pr.dim == pc.dim &&
                           pr.dim == generator_dimension(rows) &&
                           pc.dim == generator_dimension(cols);
    EXPECT_EQ(regularity_witness(a).regular, geometric) << a;
  }
}

TEST(RegularityTest, FullRankRegularIffMinPlusConvex) {
  CorpusRng rng(45);
  int checked = 0;
  while (checked < 150) {
    const std::size_t n = rng.index(2, 4);
    Matrix a = random_matrix(rng, n, n, 5);
    Polytope cols = column_space(a);
    Polytope rows = row_space(a);
    if (generator_dimension(cols) != n || generator_dimension(rows) != n) continue;
    ++checked;
    const bool regular = regularity_witness(a).regular;
    EXPECT_EQ(min_plus_convex(cols), regular) << a;
    EXPECT_EQ(min_plus_convex(rows), regular) << a;
  }
}

TEST(MetricClosureTest, Examples) {
  EXPECT_EQ(metric_closure(Matrix::zeros(3, 3)), Matrix::zeros(3, 3));
  Matrix a{{5, -1, -7}, {-2, 5, -1}, {-9, -9, 5}};
  Matrix c = metric_closure(a);
  EXPECT_EQ(c, (Matrix{{0, -1, -2}, {-2, 0, -1}, {-9, -9, 0}}));
  EXPECT_TRUE(is_idempotent(c));
  EXPECT_EQ(metric_closure(c), c);
  EXPECT_EQ(error_kind([] { metric_closure(Matrix{{0, 1}, {0, 0}}); }), ErrorKind::kPositiveCycle);
}

TEST(MetricClosureTest, ClosuresAreIdempotent) {
  CorpusRng rng(46);
  for (int k = 0; k < 200; ++k) {
    Matrix e = random_idempotent(rng, rng.index(1, 5), 6, rng.coin());
    EXPECT_TRUE(is_idempotent(e)) << e;
  }
}

TEST(InfimumMatrixTest, Examples) {
  EXPECT_EQ(infimum_matrix(column_space(kEc)), kEc);
  EXPECT_EQ(infimum_matrix(Polytope(1, {Vector{7}})), (Matrix{{0}}));
  EXPECT_EQ(infimum_matrix(column_space(Matrix::zeros(2, 2))), Matrix::zeros(2, 2));
}

TEST(ProjectivityTest, EcColumnSpace) {
  ProjectivityReport r = is_projective(column_space(kEc));
  EXPECT_TRUE(r.projective);
  EXPECT_EQ(r.reason, ProjectivityReason::kProjective);
  EXPECT_EQ(r.gendim, 3u);
  EXPECT_EQ(r.dualdim, 3u);
  ASSERT_TRUE(r.idempotent.has_value());
  EXPECT_EQ(*r.idempotent, kEc);
}

TEST(ProjectivityTest, EveryPolytopeInFT2IsProjective) {
  CorpusRng rng(47);
  for (int k = 0; k < 200; ++k) {
    Polytope p = random_polytope(rng, {2, rng.index(1, 5), 6, 3});
    ProjectivityReport r = is_projective(p);
    EXPECT_TRUE(r.projective) << p.generators().front();
    ASSERT_TRUE(r.idempotent.has_value());
    EXPECT_TRUE(is_idempotent(*r.idempotent));
  }
}

TEST(ProjectivityTest, NonProjectiveExamples) {
  ProjectivityReport low =
      is_projective(Polytope(3, {Vector{0, 3, 0}, Vector{5, 6, 0}, Vector{2, 0, 0}}));
  EXPECT_FALSE(low.projective);
  EXPECT_EQ(low.gendim, 3u);
  EXPECT_EQ(low.dualdim, 3u);
  EXPECT_EQ(low.reason, ProjectivityReason::kNotMinPlusConvex);

  ProjectivityReport mismatch = is_projective(
      Polytope(3, {Vector{0, 2, 0}, Vector{0, 6, 0}, Vector{3, 0, 0}, Vector{6, 0, 0}}));
  EXPECT_FALSE(mismatch.projective);
  EXPECT_EQ(mismatch.gendim, 4u);
  EXPECT_EQ(mismatch.dualdim, 3u);
  EXPECT_EQ(mismatch.reason, ProjectivityReason::kDimensionMismatch);
}

TEST(ProjectivityTest, CertificateReproducesEmbeddedPolytope) {
  CorpusRng rng(48);
  for (int k = 0; k < 200; ++k) {
    Polytope p = random_polytope(rng, {rng.index(1, 4), rng.index(1, 4), 5, 1});
    ProjectivityReport r = is_projective(p);
    if (!r.projective) continue;
    EXPECT_TRUE(is_idempotent(*r.idempotent));
    EXPECT_TRUE(same_set(column_space(*r.idempotent), r.embedding->embedded));
  }
}

TEST(RecoverIdempotentTest, Examples) {
  EXPECT_EQ(recover_idempotent(column_space(kEc)), kEc);
  EXPECT_EQ(error_kind([] {
              recover_idempotent(Polytope(3, {Vector{0, 0, 0}, Vector{5, -2, 0}, Vector{5, 5, 0}}));
            }),
            ErrorKind::kNotAnIdempotentColumnSpace);
  EXPECT_EQ(error_kind([] { recover_idempotent(Polytope(3, {Vector{0, 1, 2}})); }),
            ErrorKind::kNotFullRank);
}

TEST(RecoverIdempotentTest, RandomFullRankIdempotents) {
  CorpusRng rng(49);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = rng.index(1, 4);
    Matrix e = random_idempotent_of_rank(rng, n, n, 5, true);
    EXPECT_EQ(recover_idempotent(column_space(e)), e);
  }
}

TEST(CanonicalProjectionTest, Examples) {
  EXPECT_EQ(canonical_projection(kEc, Vector{0, 0, 0}), (Vector{0, 0, 0}));
  for (std::size_t i = 0; i < 3; ++i) {
    Vector e_i(3);
    e_i[i] = ExtScalar(0);
    EXPECT_EQ(canonical_projection(kEc, e_i), kEc.column(i));
  }
  EXPECT_EQ(error_kind([] { canonical_projection(kEc, Vector(3)); }),
            ErrorKind::kInvalidArgument);
  EXPECT_EQ(error_kind([] { canonical_projection(Matrix{{0, 1}, {0, 0}}, Vector{0, 0}); }),
            ErrorKind::kNotIdempotent);
  EXPECT_EQ(error_kind([] { canonical_projection(Matrix::zeros(2, 2), Vector{0, 0}); }),
            ErrorKind::kNotFullRank);
}

TEST(CanonicalProjectionTest, FixesColumnSpace) {
  CorpusRng rng(50);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = rng.index(1, 4);
    Matrix e = random_idempotent_of_rank(rng, n, n, 5);
    Vector x = random_point(rng, column_space(e));
    EXPECT_EQ(canonical_projection(e, x), x);
  }
}

TEST(GreensTest, Examples) {
  EXPECT_TRUE(greens_H(kEc, kEc));
  EXPECT_TRUE(greens_H(kEc, mat_mul(kEc, kEc)));
  Matrix swapped = Matrix::from_columns({kEc.column(2), kEc.column(0), kEc.column(1)});
  EXPECT_TRUE(greens_R(kEc, swapped));
  EXPECT_FALSE(greens_L(kEc, swapped));
  EXPECT_FALSE(greens_R(kEc, Matrix::zeros(3, 3)));
  EXPECT_EQ(error_kind([] { greens_R(kEc, Matrix::zeros(2, 3)); }), ErrorKind::kDimensionMismatch);
}

// A and A B are R-related for invertible-like B built from a permutation
// and a diagonal rescaling.
TEST(GreensTest, RightMultiplicationByMonomialKeepsColumnSpace) {
  CorpusRng rng(51);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = rng.index(1, 4);
    Matrix a = random_matrix(rng, n, n, 5);
    Matrix d(n, n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng.engine());
    for (std::size_t i = 0; i < n; ++i) d(i, perm[i]) = rng.scalar(3);
    EXPECT_TRUE(greens_R(a, mat_mul(a, d)));
    EXPECT_TRUE(greens_L(a, mat_mul(d, a)));
  }
}

TEST(RankTest, Examples) {
  RankReport ec = rank_report(kEc);
  EXPECT_EQ(ec.row_gen_rank, 3u);
  EXPECT_EQ(ec.col_gen_rank, 3u);
  EXPECT_EQ(ec.tropical_rank, 3u);
  EXPECT_TRUE(ec.all_equal);
  RankReport zero = rank_report(Matrix::zeros(3, 3));
  EXPECT_EQ(zero.row_gen_rank, 1u);
  EXPECT_EQ(zero.col_gen_rank, 1u);
  EXPECT_EQ(zero.tropical_rank, 1u);
  EXPECT_TRUE(zero.all_equal);
  EXPECT_EQ(zero.factor_rank_bounds(), (std::pair<std::size_t, std::size_t>{1, 1}));
}

// Random 3x3 search never separates row and column rank, so use 4x4.
TEST(RankTest, UnequalRanksMeanNotRegular) {
  CorpusRng rng(52);
  std::optional<Matrix> found;
  for (int k = 0; k < 20000 && !found; ++k) {
    Matrix a = random_matrix(rng, 4, 4, 9);
    if (generator_dimension(row_space(a)) != generator_dimension(column_space(a))) found = a;
  }
  ASSERT_TRUE(found.has_value());
  EXPECT_FALSE(rank_report(*found).all_equal);
  EXPECT_FALSE(regularity_witness(*found).regular);
}

TEST(RankTest, TropicalRankMatchesOracleOnRandomMatrices) {
  CorpusRng rng(53);
  for (int k = 0; k < 150; ++k) {
    Matrix a = random_matrix(rng, rng.index(1, 4), rng.index(1, 4), 4);
    RankReport r = rank_report(a);
    EXPECT_EQ(r.tropical_rank, tropical_rank_oracle(a)) << a;
    EXPECT_LE(r.tropical_rank, std::min(r.row_gen_rank, r.col_gen_rank));
  }
}

}  // namespace
}  // namespace tropcheck
