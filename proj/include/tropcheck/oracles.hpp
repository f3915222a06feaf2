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

/// \file oracles.hpp
/// Seeded corpus generators and brute-force oracles.
///
/// Everything here is independent of the decision procedures it is used to
/// check: the rank oracle works from optimal assignments of submatrices, and
/// the refuter only samples points and calls membership.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "tropcheck/algebraic.hpp"
#include "tropcheck/error.hpp"
#include "tropcheck/matrix.hpp"
#include "tropcheck/polytope.hpp"

namespace tropcheck {

struct CorpusParams {
  std::size_t n = 3;
  std::size_t m = 3;
  /// Numerators are drawn from [-range, range].
  std::int64_t range = 5;
  /// Denominators are drawn from [1, denominator_bound].
  std::int64_t denominator_bound = 1;
};

/// Deterministic source of random corpus entries.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

  Scalar scalar(std::int64_t range, std::int64_t denominator_bound = 1) {
    const std::int64_t den = integer(1, std::max<std::int64_t>(1, denominator_bound));
    return Scalar(integer(-range * den, range * den), den);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline Vector random_vector(CorpusRng& rng, std::size_t n, std::int64_t range,
                            std::int64_t denominator_bound = 1) {
  Vector v(n);
  for (std::size_t p = 0; p < n; ++p) v[p] = rng.scalar(range, denominator_bound);
  return v;
}

inline Matrix random_matrix(CorpusRng& rng, std::size_t rows, std::size_t cols,
                            std::int64_t range, std::int64_t denominator_bound = 1) {
  Matrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.scalar(range, denominator_bound);
  return a;
}

inline Polytope random_polytope(CorpusRng& rng, const CorpusParams& params) {
  std::vector<Vector> gens;
  for (std::size_t t = 0; t < params.m; ++t) {
    gens.push_back(random_vector(rng, params.n, params.range, params.denominator_bound));
  }
  return Polytope(params.n, std::move(gens));
}

inline Polytope random_polytope(std::size_t n, std::size_t m, std::int64_t range,
                                std::uint64_t seed) {
  CorpusRng rng(seed);
  return random_polytope(rng, CorpusParams{n, m, range, 1});
}

/// Metric closure of a random zero-diagonal matrix with non-positive
/// off-diagonal entries. With `conjugate`, the matrix is first replaced by
/// D A D^-1 for a random diagonal D, which keeps cycle weights and so still
/// yields an idempotent.
inline Matrix random_idempotent(CorpusRng& rng, std::size_t n, std::int64_t range,
                                bool conjugate = false) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = i == j ? Scalar(0) : Scalar(rng.integer(-range, 0));
  if (conjugate) {
    std::vector<std::int64_t> d(n);
    for (auto& di : d) di = rng.integer(-range, range);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(i, j) = ExtScalar(a(i, j).value() + Scalar(d[i] - d[j]));
  }
  return metric_closure(a);
}

/// Retries until the column generator rank equals `rank`.
inline Matrix random_idempotent_of_rank(CorpusRng& rng, std::size_t n, std::size_t rank,
                                        std::int64_t range, bool conjugate = false,
                                        std::size_t max_attempts = 100000) {
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    Matrix e = random_idempotent(rng, n, range, conjugate);
    if (generator_dimension(column_space(e)) == rank) return e;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "no idempotent of rank " + std::to_string(rank) + " found");
}

inline Matrix random_idempotent(std::size_t n, std::int64_t range, std::uint64_t seed) {
  CorpusRng rng(seed);
  return random_idempotent(rng, n, range);
}

/// Random max-plus combination of the generators of P.
inline Vector random_point(CorpusRng& rng, const Polytope& p) {
  const auto& gens = p.generators();
  Scalar lo = gens[0][0].value();
  Scalar hi = lo;
  for (const auto& g : gens)
    for (const auto& e : g) {
      lo = min(lo, e.value());
      hi = max(hi, e.value());
    }
  const std::int64_t spread = std::max<std::int64_t>(
      1, (hi - lo).value().convert_to<std::int64_t>() + 1);
  Vector x(p.ambient());
  for (const auto& g : gens) x = vec_add(x, scale(rng.scalar(spread, 4), g));
  return x;
}

/// Every n x n matrix with entries from `entries`, in odometer order.
class ExhaustiveMatrices {
 public:
  ExhaustiveMatrices(std::size_t n, std::vector<Scalar> entries)
      : n_(n), entries_(std::move(entries)) {}

  class iterator {
   public:
    using value_type = Matrix;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const ExhaustiveMatrices* owner, bool done)
        : owner_(owner), digits_(owner->n_ * owner->n_, 0), done_(done || owner->entries_.empty()) {}

    Matrix operator*() const {
      Matrix a(owner_->n_, owner_->n_);
      for (std::size_t k = 0; k < digits_.size(); ++k) {
        a(k / owner_->n_, k % owner_->n_) = owner_->entries_[digits_[k]];
      }
      return a;
    }
    iterator& operator++() {
      std::size_t k = digits_.size();
      while (k > 0) {
        --k;
        if (++digits_[k] < owner_->entries_.size()) return *this;
        digits_[k] = 0;
      }
      done_ = true;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      if (a.done_ || b.done_) return a.done_ == b.done_;
      return a.digits_ == b.digits_;
    }

   private:
    const ExhaustiveMatrices* owner_ = nullptr;
    std::vector<std::size_t> digits_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(this, false); }
  iterator end() const { return iterator(this, true); }

  std::uint64_t count() const {
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < n_ * n_; ++k) total *= entries_.size();
    return total;
  }

 private:
  std::size_t n_;
  std::vector<Scalar> entries_;
};

inline ExhaustiveMatrices exhaustive_matrices(std::size_t n, std::vector<Scalar> entries) {
  return ExhaustiveMatrices(n, std::move(entries));
}

// ---------------------------------------------------------------------------
// Tropical rank from tropically non-singular submatrices

namespace detail {

/// Number of permutations attaining the maximal assignment value.
inline std::size_t optimal_assignment_count(const Matrix& a, std::span<const std::size_t> rows,
                                            std::span<const std::size_t> cols) {
  std::vector<std::size_t> perm(cols.begin(), cols.end());
  std::sort(perm.begin(), perm.end());
  std::optional<Scalar> best;
  std::size_t count = 0;
  do {
    Scalar total(0);
    for (std::size_t k = 0; k < rows.size(); ++k) total += a(rows[k], perm[k]).value();
    if (!best || *best < total) {
      best = std::move(total);
      count = 1;
    } else if (total == *best) {
      ++count;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline void for_each_subset(std::size_t n, std::size_t r,
                            const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
  do {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) subset.push_back(i);
    if (visit(subset)) return;
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace detail

/// Largest r with an r x r submatrix whose optimal assignment is unique.
inline std::size_t tropical_rank_oracle(const Matrix& a) {
  require_finite(a, "rank oracle argument");
  const std::size_t limit = std::min(a.rows(), a.cols());
  if (limit > 5) {
    throw Error(ErrorKind::kScaleLimitExceeded, "rank oracle enumerates at most 5x5 minors");
  }
  for (std::size_t r = limit; r >= 1; --r) {
    bool found = false;
    detail::for_each_subset(a.rows(), r, [&](const std::vector<std::size_t>& rows) {
      detail::for_each_subset(a.cols(), r, [&](const std::vector<std::size_t>& cols) {
        found = detail::optimal_assignment_count(a, rows, cols) == 1;
        return found;
      });
      return found;
    });
    if (found) return r;
  }
  return 0;
}

// ---------------------------------------------------------------------------

/// Samples pairs of points of P and returns one whose componentwise minimum
/// falls outside P. Finding nothing proves nothing.
inline std::optional<std::pair<Vector, Vector>> minplus_sampling_refuter(const Polytope& p,
                                                                         std::size_t samples,
                                                                         std::uint64_t seed) {
  CorpusRng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Vector x = random_point(rng, p);
    Vector y = random_point(rng, p);
    if (!membership(pointwise_min(x, y), p)) return std::make_pair(std::move(x), std::move(y));
  }
  return std::nullopt;
}

}  // namespace tropcheck
