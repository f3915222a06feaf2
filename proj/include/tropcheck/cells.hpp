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

/// \file cells.hpp
/// Type (covector) decomposition of a polytope.
///
/// For generators v_1..v_m in FT^n the type of a point x is the n-tuple
///
///   S_p = { i : x_p - v_ip <= x_q - v_iq for all q }.
///
/// Cells are enumerated through the dual encoding A_i = argmin_q(x_q - v_iq):
/// fixing every A_i turns the exact-type region into a system of difference
/// equalities and strict inequalities, which is decided by Bellman-Ford over
/// (value, strict count) weights compared lexicographically.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tropcheck/error.hpp"
#include "tropcheck/matrix.hpp"
#include "tropcheck/polytope.hpp"
#include "tropcheck/scalar.hpp"

namespace tropcheck {

/// Bit set over generator indices (in a TypeVector) or coordinates (in an
/// ArgminTuple). Both are capped at 64.
using IndexMask = std::uint64_t;

inline constexpr std::size_t kMaxCellIndices = 64;

class TypeVector {
 public:
  TypeVector() = default;
  explicit TypeVector(std::vector<IndexMask> components) : components_(std::move(components)) {}

  /// Builds from explicit index sets, e.g. {{0}, {0, 1}, {2}}.
  static TypeVector from_sets(const std::vector<std::vector<std::size_t>>& sets) {
    std::vector<IndexMask> c;
    c.reserve(sets.size());
    for (const auto& s : sets) {
      IndexMask m = 0;
      for (std::size_t i : s) m |= IndexMask{1} << i;
      c.push_back(m);
    }
    return TypeVector(std::move(c));
  }

  std::size_t size() const noexcept { return components_.size(); }
  IndexMask operator[](std::size_t p) const { return components_[p]; }
  bool contains(std::size_t p, std::size_t i) const { return (components_[p] >> i) & 1U; }

  /// Every component non-empty, i.e. the point lies in the polytope.
  bool is_covering() const {
    for (IndexMask c : components_)
      if (c == 0) return false;
    return true;
  }
  bool is_singletons() const {
    for (IndexMask c : components_)
      if (std::popcount(c) != 1) return false;
    return true;
  }
  /// Componentwise inclusion: this ⊆ other.
  bool subset_of(const TypeVector& other) const {
    if (size() != other.size()) return false;
    for (std::size_t p = 0; p < size(); ++p)
      if (components_[p] & ~other.components_[p]) return false;
    return true;
  }

  std::vector<std::vector<std::size_t>> to_sets() const {
    std::vector<std::vector<std::size_t>> out;
    for (IndexMask c : components_) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < kMaxCellIndices; ++i)
        if ((c >> i) & 1U) s.push_back(i);
      out.push_back(std::move(s));
    }
    return out;
  }

  friend bool operator==(const TypeVector&, const TypeVector&) = default;
  friend auto operator<=>(const TypeVector&, const TypeVector&) = default;

 private:
  std::vector<IndexMask> components_;
};

/// Per-generator argmin sets: sets[i] is a mask over coordinates.
struct ArgminTuple {
  std::vector<IndexMask> sets;

  /// S_p = { i : p ∈ A_i }.
  TypeVector induced_type(std::size_t n) const {
    std::vector<IndexMask> c(n, 0);
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t p = 0; p < n; ++p)
        if ((sets[i] >> p) & 1U) c[p] |= IndexMask{1} << i;
    return TypeVector(std::move(c));
  }

  friend bool operator==(const ArgminTuple&, const ArgminTuple&) = default;
};

namespace detail {

inline void check_cell_scale(std::size_t n, std::size_t m) {
  if (n > kMaxCellIndices || m > kMaxCellIndices) {
    throw Error(ErrorKind::kScaleLimitExceeded,
                "type computations support at most 64 coordinates and generators");
  }
}

/// x_p - v_p for every p, as exact rationals.
inline std::vector<Scalar> difference_profile(const Vector& x, const Vector& v) {
  std::vector<Scalar> d;
  d.reserve(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) d.push_back(x[p].value() - v[p].value());
  return d;
}

inline IndexMask argmin_mask(const std::vector<Scalar>& d) {
  const Scalar* best = &d[0];
  for (const auto& e : d)
    if (e < *best) best = &e;
  IndexMask mask = 0;
  for (std::size_t p = 0; p < d.size(); ++p)
    if (d[p] == *best) mask |= IndexMask{1} << p;
  return mask;
}

inline void check_type_args(const Vector& x, std::span<const Vector> gens) {
  for (const auto& g : gens) {
    if (g.size() != x.size()) {
      throw Error(ErrorKind::kDimensionMismatch, "point and generators differ in length");
    }
  }
  require_finite(x, "type point");
  check_cell_scale(x.size(), gens.size());
}

}  // namespace detail

inline ArgminTuple argmin_tuple_of(const Vector& x, std::span<const Vector> gens) {
  detail::check_type_args(x, gens);
  ArgminTuple a;
  a.sets.reserve(gens.size());
  for (const auto& g : gens) a.sets.push_back(detail::argmin_mask(detail::difference_profile(x, g)));
  return a;
}

/// Type of x with respect to an explicit generator list.
inline TypeVector type_of(const Vector& x, std::span<const Vector> gens) {
  return argmin_tuple_of(x, gens).induced_type(x.size());
}

/// Type of x with respect to the canonical extremal generators of P.
inline TypeVector type_of(const Vector& x, const Polytope& p) {
  if (x.size() != p.ambient()) {
    throw Error(ErrorKind::kDimensionMismatch, "point length differs from ambient dimension");
  }
  return type_of(x, reduce_to_extremals(p).generators());
}

/// Connected components of the graph on coordinates with an edge p--q
/// whenever S_p and S_q share a generator.
inline std::size_t type_graph_components(const TypeVector& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      if (s[p] & s[q]) parent[find(p)] = find(q);
  std::size_t count = 0;
  for (std::size_t p = 0; p < n; ++p) count += find(p) == p;
  return count;
}

// ---------------------------------------------------------------------------
// Difference constraints with strict inequalities

/// x[upper] - x[lower] <= bound, or < bound when strict.
template <typename T>
struct BasicDifferenceConstraint {
  std::size_t upper;
  std::size_t lower;
  T bound;
  bool strict;
};

using DifferenceConstraint = BasicDifferenceConstraint<Scalar>;

/// value + strict_count * ε for an infinitesimal ε > 0; strict_count <= 0.
template <typename T>
struct LexWeight {
  T value{};
  long strict_count = 0;

  friend LexWeight operator+(const LexWeight& a, const LexWeight& b) {
    return {a.value + b.value, a.strict_count + b.strict_count};
  }
  friend bool operator<(const LexWeight& a, const LexWeight& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.strict_count < b.strict_count;
  }
};

namespace detail {

/// Bellman-Ford from an implicit source joined to every unknown by a
/// zero-weight edge. Returns the lexicographic distances, or nothing when a
/// negative cycle (value < 0, or value 0 through a strict edge) exists.
template <typename T>
std::optional<std::vector<LexWeight<T>>> lex_bellman_ford(
    std::size_t vars, std::span<const BasicDifferenceConstraint<T>> constraints) {
  std::vector<LexWeight<T>> dist(vars);
  auto relax_all = [&]() {
    bool changed = false;
    for (const auto& c : constraints) {
      LexWeight<T> cand = dist[c.lower] + LexWeight<T>{c.bound, c.strict ? -1L : 0L};
      if (cand < dist[c.upper]) {
        dist[c.upper] = std::move(cand);
        changed = true;
      }
    }
    return changed;
  };
  bool changed = true;
  for (std::size_t round = 0; round < vars && changed; ++round) changed = relax_all();
  if (changed && relax_all()) return std::nullopt;
  return dist;
}

}  // namespace detail

template <typename T>
bool difference_system_feasible(std::size_t vars,
                                std::span<const BasicDifferenceConstraint<T>> constraints) {
  return detail::lex_bellman_ford<T>(vars, constraints).has_value();
}

/// Decides a conjunction of difference constraints over `vars` unknowns and
/// returns a concrete rational solution, or nothing if infeasible.
inline std::optional<std::vector<Scalar>> solve_difference_system(
    std::size_t vars, std::span<const DifferenceConstraint> constraints) {
  auto dist = detail::lex_bellman_ford<Scalar>(vars, constraints);
  if (!dist) return std::nullopt;

  // Replace ε by a rational small enough to keep every constraint satisfied.
  Scalar eps(1);
  for (const auto& c : constraints) {
    const auto& a = (*dist)[c.upper];
    const auto& b = (*dist)[c.lower];
    Scalar slack = b.value + c.bound - a.value;
    long drift = b.strict_count + (c.strict ? -1L : 0L) - a.strict_count;
    if (slack.sign() > 0 && drift < 0) {
      Scalar limit = slack / Scalar(2 * -drift);
      if (limit < eps) eps = std::move(limit);
    }
  }
  std::vector<Scalar> x;
  x.reserve(vars);
  for (const auto& d : *dist) x.push_back(d.value + Scalar(d.strict_count) * eps);
  for (const auto& c : constraints) {
    Scalar diff = x[c.upper] - x[c.lower];
    if (c.strict ? !(diff < c.bound) : !(diff <= c.bound)) {
      throw std::logic_error("difference system witness violates a constraint");
    }
  }
  return x;
}

namespace detail {

/// Constraints forcing argmin_q(x_q - g_q) = mask exactly; g is indexable
/// by coordinate and yields T.
template <typename T, typename Row>
void append_argmin_constraints(const Row& g, std::size_t n, IndexMask mask,
                               std::vector<BasicDifferenceConstraint<T>>& out) {
  const auto anchor = static_cast<std::size_t>(std::countr_zero(mask));
  for (std::size_t q = 0; q < n; ++q) {
    if (q == anchor) continue;
    T gap = g(anchor) - g(q);
    if ((mask >> q) & 1U) {
      out.push_back({q, anchor, -gap, false});
      out.push_back({anchor, q, gap, false});
    } else {
      out.push_back({anchor, q, gap, true});
    }
  }
}

inline void append_argmin_constraints(const Vector& g, IndexMask mask,
                                      std::vector<DifferenceConstraint>& out) {
  append_argmin_constraints<Scalar>([&](std::size_t q) -> const Scalar& { return g[q].value(); },
                                    g.size(), mask, out);
}

/// Generators rescaled by the common denominator, when every entry and
/// every path sum Bellman-Ford can form stays far inside int64.
inline std::optional<std::vector<std::vector<std::int64_t>>> integer_generators(
    std::span<const Vector> gens) {
  BigInt common = 1;
  for (const auto& g : gens)
    for (const auto& e : g) {
      BigInt d = e.value().denominator();
      common = common / boost::multiprecision::gcd(common, d) * d;
    }
  const BigInt limit = BigInt(1) << 40;
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& g : gens) {
    std::vector<std::int64_t> row;
    for (const auto& e : g) {
      BigInt scaled = e.value().numerator() * (common / e.value().denominator());
      if (abs(scaled) > limit) return std::nullopt;
      row.push_back(scaled.convert_to<std::int64_t>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace detail

/// Finds a point whose argmin tuple is exactly `tuple`, if one exists.
inline std::optional<Vector> tuple_feasible(const ArgminTuple& tuple,
                                            std::span<const Vector> gens) {
  if (tuple.sets.size() != gens.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "argmin tuple and generator count differ");
  }
  if (gens.empty()) return std::nullopt;
  const std::size_t n = gens.front().size();
  detail::check_cell_scale(n, gens.size());
  std::vector<DifferenceConstraint> constraints;
  const IndexMask full = n == 64 ? ~IndexMask{0} : (IndexMask{1} << n) - 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (tuple.sets[i] == 0 || (tuple.sets[i] & ~full)) {
      throw Error(ErrorKind::kInvalidArgument, "argmin sets must be non-empty coordinate sets");
    }
    detail::append_argmin_constraints(gens[i], tuple.sets[i], constraints);
  }
  auto solution = solve_difference_system(n, constraints);
  if (!solution) return std::nullopt;
  std::vector<ExtScalar> entries(solution->begin(), solution->end());
  Vector witness = canonical_scaling(Vector(std::move(entries)));
  if (!(argmin_tuple_of(witness, gens) == tuple)) {
    throw std::logic_error("cell witness does not realise its argmin tuple");
  }
  return witness;
}

inline std::optional<Vector> tuple_feasible(const ArgminTuple& tuple, const Polytope& p) {
  return tuple_feasible(tuple, reduce_to_extremals(p).generators());
}

// ---------------------------------------------------------------------------
// Cell enumeration

struct Face {
  TypeVector exact_type;
  Vector witness;
  std::size_t dim;
  bool covering;
};

struct CellComplexReport {
  /// Sorted by exact type.
  std::vector<Face> faces;
  std::size_t tropical_dim = 0;
  bool pure = false;
};

struct CellOptions {
  /// Upper bound on the nominal number (2^n - 1)^m of argmin tuples.
  std::uint64_t max_tuples = 10'000'000;
};

namespace detail {

inline void check_tuple_budget(std::size_t n, std::size_t m, std::uint64_t max_tuples) {
  check_cell_scale(n, m);
  const std::uint64_t per_generator =
      n >= 63 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << n) - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (per_generator != 0 && total > max_tuples / per_generator) {
      throw Error(ErrorKind::kScaleLimitExceeded,
                  "cell enumeration over (2^" + std::to_string(n) + "-1)^" + std::to_string(m) +
                      " argmin tuples exceeds the limit of " + std::to_string(max_tuples));
    }
    total *= per_generator;
  }
}

}  // namespace detail

/// All cells of the type decomposition induced by the extremal generators.
///
/// Argmin tuples are assigned generator by generator and a prefix is
/// abandoned as soon as its constraints are infeasible; every complete
/// tuple is still decided exactly, so the result equals a full scan.
inline CellComplexReport enumerate_cells(const Polytope& p, CellOptions options = {}) {
  const Polytope reduced = reduce_to_extremals(p);
  const auto& gens = reduced.generators();
  const std::size_t n = reduced.ambient();
  const std::size_t m = gens.size();
  detail::check_tuple_budget(n, m, options.max_tuples);

  const IndexMask full = n == 64 ? ~IndexMask{0} : (IndexMask{1} << n) - 1;
  CellComplexReport report;
  ArgminTuple tuple;
  tuple.sets.assign(m, 0);
  std::vector<BasicDifferenceConstraint<std::int64_t>> fast;
  std::vector<DifferenceConstraint> exact;
  const auto integral = detail::integer_generators(gens);

  auto push_generator = [&](std::size_t i, IndexMask mask) {
    if (integral) {
      const auto& row = (*integral)[i];
      detail::append_argmin_constraints<std::int64_t>([&](std::size_t q) { return row[q]; }, n,
                                                      mask, fast);
    } else {
      detail::append_argmin_constraints(gens[i], mask, exact);
    }
  };
  auto prefix_feasible = [&]() {
    return integral ? difference_system_feasible<std::int64_t>(n, fast)
                    : difference_system_feasible<Scalar>(n, exact);
  };

  auto visit = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      auto witness = tuple_feasible(tuple, gens);
      if (!witness) throw std::logic_error("feasible prefix lost at completion");
      TypeVector type = tuple.induced_type(n);
      const bool covering = type.is_covering();
      const std::size_t dim = type_graph_components(type);
      report.faces.push_back(Face{std::move(type), std::move(*witness), dim, covering});
      return;
    }
    const std::size_t fast_mark = fast.size();
    const std::size_t exact_mark = exact.size();
    for (IndexMask mask = 1; mask <= full && mask != 0; ++mask) {
      push_generator(i, mask);
      if (prefix_feasible()) {
        tuple.sets[i] = mask;
        self(self, i + 1);
      }
      fast.resize(fast_mark);
      exact.resize(exact_mark);
      if (mask == full) break;
    }
  };
  visit(visit, 0);

  std::sort(report.faces.begin(), report.faces.end(),
            [](const Face& a, const Face& b) { return a.exact_type < b.exact_type; });
  report.faces.erase(std::unique(report.faces.begin(), report.faces.end(),
                                 [](const Face& a, const Face& b) {
                                   return a.exact_type == b.exact_type;
                                 }),
                     report.faces.end());

  for (const Face& f : report.faces)
    if (f.covering) report.tropical_dim = std::max(report.tropical_dim, f.dim);
  report.pure = true;
  for (const Face& s : report.faces) {
    if (!s.covering) continue;
    bool found = false;
    for (const Face& t : report.faces) {
      if (t.covering && t.dim == report.tropical_dim && t.exact_type.subset_of(s.exact_type)) {
        found = true;
        break;
      }
    }
    if (!found) {
      report.pure = false;
      break;
    }
  }
  return report;
}

inline std::size_t tropical_dimension(const Polytope& p, CellOptions options = {}) {
  return enumerate_cells(p, options).tropical_dim;
}

struct PurityReport {
  bool pure;
  std::size_t dim;
};

/// Pure iff every point lies in a closed face of maximal dimension.
inline PurityReport pure_dimension_check(const Polytope& p, CellOptions options = {}) {
  auto report = enumerate_cells(p, options);
  return {report.pure, report.tropical_dim};
}

// ---------------------------------------------------------------------------
// Descent to a singleton type inside the column space of an idempotent

struct DescentResult {
  Vector point;
  /// Column indices used as generators; types refer to positions in this list.
  std::vector<std::size_t> representatives;
  std::size_t iterations = 0;
  std::size_t iteration_bound = 0;
};

/// Zero-diagonal columns of E giving one representative per extremal point
/// of C(E), in the order of the canonical extremal generators.
inline std::vector<std::size_t> zero_diagonal_representatives(const Matrix& e) {
  require_square(e);
  require_finite(e, "idempotent");
  Polytope extremals = reduce_to_extremals(column_space(e));
  std::vector<std::size_t> reps;
  for (const Vector& g : extremals.generators()) {
    std::optional<std::size_t> chosen;
    for (std::size_t j = 0; j < e.cols() && !chosen; ++j) {
      if (e(j, j) == ExtScalar(0) && canonical_scaling(e.column(j)) == g) chosen = j;
    }
    if (!chosen) {
      throw Error(ErrorKind::kNotIdempotent,
                  "extremal column without a zero-diagonal representative");
    }
    reps.push_back(*chosen);
  }
  return reps;
}

/// Moves x inside C(E) to a point of singleton type whose type is contained
/// in type(x). Each step enlarges the coefficient of one generator that
/// shares a type component with another, which strictly shrinks the set of
/// such (i, j, p) triples.
inline DescentResult descend_to_singletons(const Matrix& e, const Vector& x) {
  require_square(e);
  require_finite(e, "idempotent");
  if (!(mat_mul(e, e) == e)) throw Error(ErrorKind::kNotIdempotent, "E ⊗ E != E");
  if (x.size() != e.rows()) throw Error(ErrorKind::kDimensionMismatch, "point length");
  require_finite(x, "descent start point");

  DescentResult result;
  result.representatives = zero_diagonal_representatives(e);
  const auto& reps = result.representatives;
  std::vector<Vector> gens;
  for (std::size_t j : reps) gens.push_back(e.column(j));
  if (!in_span(x, gens)) throw Error(ErrorKind::kNotMember, "point is not in C(E)");

  const std::size_t n = x.size();
  const std::size_t r = reps.size();
  result.iteration_bound = r * r * n;
  Vector z = x;
  while (true) {
    auto lambda = principal_coefficients(z, gens);
    // attains[k][q]: generator k reaches coordinate q in the combination.
    std::vector<std::vector<bool>> attains(r, std::vector<bool>(n));
    std::optional<Scalar> min_slack;
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t q = 0; q < n; ++q) {
        Scalar slack = z[q].value() - lambda[k] - gens[k][q].value();
        attains[k][q] = slack.sign() == 0;
        if (slack.sign() > 0 && (!min_slack || slack < *min_slack)) min_slack = std::move(slack);
      }
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t p = 0; p < n && !pair; ++p)
      for (std::size_t i = 0; i < r && !pair; ++i)
        for (std::size_t j = i + 1; j < r && !pair; ++j)
          if (attains[i][p] && attains[j][p]) pair = {i, j};
    if (!pair) break;

    auto [i, j] = *pair;
    // Orient so that generator i does not reach coordinate reps[j].
    if (attains[i][reps[j]]) std::swap(i, j);
    if (attains[i][reps[j]] || !min_slack) {
      throw std::logic_error("descent step has no admissible orientation");
    }
    if (++result.iterations > result.iteration_bound) {
      throw std::logic_error("descent exceeded its iteration bound");
    }
    Scalar eps = *min_slack / Scalar(2);
    z = vec_add(z, scale(lambda[i] + eps, gens[i]));
  }
  result.point = std::move(z);
  return result;
}

}  // namespace tropcheck
