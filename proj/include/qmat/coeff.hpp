#pragma once

// Exact Laurent polynomials in v = q^{1/2} over the integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qmat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of Z[v, v^-1] with v = q^{1/2}.
///
/// Terms are kept sorted by increasing exponent and zero coefficients are
/// never stored, so two values are equal iff their term lists are equal.
class QCoeff {
 public:
  /// (v-exponent, coefficient)
  using Term = std::pair<int, BigInt>;

  QCoeff() = default;
  QCoeff(long long constant);  // NOLINT: integers embed as constants
  QCoeff(const BigInt& constant);  // NOLINT

  /// coefficient * v^k
  static QCoeff v_power(int k, const BigInt& coefficient = 1);
  /// q^p == v^{2p}
  static QCoeff q_power(int p) { return v_power(2 * p); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::span<const Term> terms() const { return terms_; }

  int min_exponent() const;
  int max_exponent() const;

  QCoeff& operator+=(const QCoeff& other);
  QCoeff& operator-=(const QCoeff& other);
  QCoeff& operator*=(const QCoeff& other);

  /// *this += x * y * v^shift, without materializing the product.
  void add_product(const QCoeff& x, const QCoeff& y, int shift = 0);

  /// Multiplies by v^k in place.
  QCoeff& shift(int k);

  friend QCoeff operator+(QCoeff x, const QCoeff& y) { return x += y; }
  friend QCoeff operator-(QCoeff x, const QCoeff& y) { return x -= y; }
  friend QCoeff operator*(const QCoeff& x, const QCoeff& y);
  friend QCoeff operator-(QCoeff x);

  friend bool operator==(const QCoeff&, const QCoeff&) = default;

  /// Decreasing v-exponent, e.g. "v^2 - 2 + v^-2".
  std::string to_string() const;

 private:
  void add_term(int exponent, const BigInt& coefficient);

  std::vector<Term> terms_;
};

/// Substitutes v = t. Throws std::domain_error when t == 0.
Rational specialize(const QCoeff& x, const Rational& t);

}  // namespace qmat
