#pragma once

// The two-variable Chebyshev polynomials
//
//   f_n(x, y) = sum_{l=0}^{floor(n/2)} (-1)^l C(n-l, l) x^{n-2l} y^l,   f_{-1} = 0,
//
// which satisfy f_{n+1} = x f_n - y f_{n-1}.  At y = 1 they are U_n(x).

#include "qmat/algebra.hpp"
#include "qmat/coeff.hpp"

#include <map>
#include <string>
#include <utility>

namespace qmat {

/// Commutative polynomial in (x, y) with integer coefficients.
class FPoly {
 public:
  /// (x-exponent, y-exponent)
  using Exponents = std::pair<int, int>;
  /// Ordered by decreasing x-exponent.
  using Terms = std::map<Exponents, BigInt, std::greater<Exponents>>;

  FPoly() = default;
  static FPoly constant(const BigInt& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int x_exp, int y_exp) const;

  /// Every term has x_exp + 2 * y_exp == weight.
  bool is_weighted_homogeneous(int weight) const;

  FPoly& operator+=(const FPoly& other);
  FPoly& operator-=(const FPoly& other);
  FPoly times_x() const;
  FPoly times_y() const;

  Rational evaluate(const Rational& x, const Rational& y) const;

  friend bool operator==(const FPoly&, const FPoly&) = default;

 private:
  void add(const Exponents& e, const BigInt& c);

  Terms terms_;
};

/// Exact C(n, k) from Pascal's rule; zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

/// The defining sum. Throws std::invalid_argument for n < -1.
FPoly f_sum(int n);
/// The three-term recurrence from f_{-1} = 0, f_0 = 1. Same domain as f_sum.
FPoly f_rec(int n);

/// f_n(x, y) evaluated in the algebra via the recurrence.  x and y must
/// commute; otherwise std::domain_error.
Element f_eval(int n, const Element& x, const Element& y);

/// Term-by-term substitution of x, y into p (x^i y^j order).  Used to
/// cross-check f_eval.
Element substitute(const FPoly& p, const Element& x, const Element& y);

}  // namespace qmat
