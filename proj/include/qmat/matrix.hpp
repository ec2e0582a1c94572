#pragma once

// 2x2 matrices over A_q(Mat(2)).

#include "qmat/algebra.hpp"

namespace qmat {

struct QMatrix2 {
  Element e11, e12, e21, e22;

  friend bool operator==(const QMatrix2&, const QMatrix2&) = default;
};

/// The universal quantum matrix with entries a, b, c, d.
const QMatrix2& generator_matrix();
QMatrix2 identity_matrix();

/// Entries of x multiply from the left.
QMatrix2 operator*(const QMatrix2& x, const QMatrix2& y);
QMatrix2 operator+(const QMatrix2& x, const QMatrix2& y);
QMatrix2 operator-(const QMatrix2& x, const QMatrix2& y);
/// Entrywise s * e and e * s.
QMatrix2 operator*(const Element& s, const QMatrix2& x);
QMatrix2 operator*(const QMatrix2& x, const Element& s);

/// A^n as A * A^{n-1}; A^0 = E. Throws std::invalid_argument for n < 0.
QMatrix2 mat_pow(const QMatrix2& a, int n);

/// e11 e22 - q e12 e21
Element qdet(const QMatrix2& a);
/// e22 e11 - q^-1 e12 e21, the other ordering of the quantum determinant
Element qdet_reversed(const QMatrix2& a);

/// (e22, -q^-1 e12; -q e21, e11)
QMatrix2 qadjoint(const QMatrix2& a);

/// diag(q^{k/2}, q^{-k/2}); c_matrix(1) is C.
QMatrix2 c_matrix(int k);

/// tr(A C) = q^{1/2} e11 + q^{-1/2} e22
Element tau(const QMatrix2& a);
/// tr(C^-1 A) = q^{-1/2} e11 + q^{1/2} e22
Element tau_prime(const QMatrix2& a);

}  // namespace qmat
