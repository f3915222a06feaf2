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

/// \file scalar.hpp
/// Exact rational scalars and their extension by a bottom element.
///
/// Scalar is an arbitrary-precision rational kept in lowest terms.
/// ExtScalar adjoins -inf, which is the additive zero of the max-plus
/// semiring and absorbs under tropical multiplication.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "tropcheck/error.hpp"

namespace tropcheck {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t v) : value_(v) {}  // NOLINT: implicit from integers
  Scalar(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorKind::kInvalidArgument, "zero denominator");
    BigInt n(num), d(den);
    if (d < 0) {
      n = -n;
      d = -d;
    }
    value_ = BigRational(n, d);
  }
  explicit Scalar(BigRational v) : value_(std::move(v)) {}

  const BigRational& value() const noexcept { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  Scalar operator-() const { return Scalar(BigRational(-value_)); }
  Scalar& operator+=(const Scalar& o) {
    value_ += o.value_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    value_ -= o.value_;
    return *this;
  }
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(BigRational(a.value_ * b.value_));
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.sign() == 0) throw Error(ErrorKind::kInvalidArgument, "division by zero");
    return Scalar(BigRational(a.value_ / b.value_));
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Text form: "n" for integers, "p/q" otherwise (q > 0, lowest terms).
  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  /// Accepts an optional sign followed by an integer or "p/q".
  static Scalar parse(std::string_view text);

 private:
  BigRational value_;
};

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den)) {
    throw Error(ErrorKind::kParse, "malformed scalar '" + std::string(text) + "'");
  }
  BigInt n{std::string(num)};
  BigInt d{std::string(den)};
  if (d == 0) {
    throw Error(ErrorKind::kParse, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Scalar(BigRational(n, d));
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

inline const Scalar& min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
inline const Scalar& max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

/// A Scalar or the bottom element -inf.
class ExtScalar {
 public:
  /// Default-constructs bottom, the additive identity.
  ExtScalar() = default;
  ExtScalar(Scalar s) : finite_(true), value_(std::move(s)) {}  // NOLINT
  ExtScalar(std::int64_t v) : finite_(true), value_(v) {}       // NOLINT

  static ExtScalar bottom() { return ExtScalar(); }

  bool is_bottom() const noexcept { return !finite_; }
  bool is_finite() const noexcept { return finite_; }

  /// Precondition: is_finite().
  const Scalar& value() const {
    if (!finite_) throw Error(ErrorKind::kNonFiniteEntries, "value() of -inf");
    return value_;
  }

  friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtScalar& a, const ExtScalar& b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }

  std::string str() const { return finite_ ? value_.str() : "-inf"; }

  /// Same as Scalar::parse, plus the literal "-inf".
  static ExtScalar parse(std::string_view text) {
    if (text == "-inf") return bottom();
    return ExtScalar(Scalar::parse(text));
  }

 private:
  bool finite_ = false;
  Scalar value_;
};

inline std::ostream& operator<<(std::ostream& os, const ExtScalar& s) {
  return os << s.str();
}

/// Tropical addition: max.
inline ExtScalar tadd(const ExtScalar& a, const ExtScalar& b) {
  return a < b ? b : a;
}

/// Tropical multiplication: ordinary addition, -inf absorbing.
inline ExtScalar tmul(const ExtScalar& a, const ExtScalar& b) {
  if (a.is_bottom() || b.is_bottom()) return ExtScalar::bottom();
  return ExtScalar(a.value() + b.value());
}

}  // namespace tropcheck
