#pragma once

// Closed-form expressions for A^n and its entries in terms of the twisted
// traces tau, tau' and the quantum determinant delta, with f_k(t) meaning
// f_k(t, delta).

#include "qmat/matrix.hpp"

namespace qmat {

/// Which of the two equivalent expressions to build.  kLeft is the tau form
/// with generators to the left of f; kRight is the tau' form with f on the
/// left.
enum class Variant { kLeft, kRight };

struct Entries {
  Element a, b, c, d;

  friend bool operator==(const Entries&, const Entries&) = default;
};

struct DiagonalEntries {
  Element a, d;

  friend bool operator==(const DiagonalEntries&, const DiagonalEntries&) = default;
};

/// A C^{-n+1} f_{n-1}(tau) - C^{-n} delta f_{n-2}(tau), for n >= 1.
QMatrix2 power_ch1(const QMatrix2& a, int n);
/// f_{n-1}(tau') C^{n-1} A - f_{n-2}(tau') delta C^n, for n >= 1.
QMatrix2 power_ch2(const QMatrix2& a, int n);

/// Entry formulas for A^n on the generator matrix, n >= 1.
Entries entries_closed(int n, Variant variant);

/// The delta-free expressions for a_n and d_n, valid for n >= 0.
DiagonalEntries entries_alt(int n, Variant variant);

/// Entries of the m-th power of the quantum adjoint of the generator
/// matrix, built from the hat generators, for m >= 1.
QMatrix2 adjoint_power_closed(int m, Variant variant = Variant::kLeft);

}  // namespace qmat
