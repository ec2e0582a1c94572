#pragma once

// Mechanical checks of the quantum-matrix identities.  Every check compares
// canonical forms exactly and reports the first differing monomial.

#include "qmat/closed_form.hpp"
#include "qmat/matrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qmat {

struct Witness {
  std::string relation;
  Monomial monomial;
  /// lhs - rhs coefficient at `monomial`, as rendered QCoeff (or rational) text
  std::string difference;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckReport {
  std::string name;
  std::vector<int> params;
  bool passed = true;
  std::optional<Witness> witness;
  /// free-form remark, e.g. the active case branch
  std::string note;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

/// First monomial (canonical order) where lhs and rhs differ.
std::optional<Witness> compare(const std::string& relation, const Element& lhs, const Element& rhs);

/// Brute-force powers of the generator matrix and of its adjoint, computed
/// once and shared read-only between checks.
class PowerTable {
 public:
  explicit PowerTable(int max_power);

  int max_power() const { return static_cast<int>(powers_.size()) - 1; }
  const QMatrix2& power(int n) const;          // A^n
  const QMatrix2& adjoint_power(int m) const;  // (A^)^m
  const Element& delta_power(int n) const;     // delta^n

 private:
  std::vector<QMatrix2> powers_;
  std::vector<QMatrix2> adjoint_powers_;
  std::vector<Element> delta_powers_;
};

/// The six relations (R_{q^p}) among the entries of m.
CheckReport check_rq(const QMatrix2& m, int p);

/// The five commutation families between entries of A^m-hat and A^n, both
/// left-hand forms each, against the branch selected by m < n.
CheckReport check_vzw(int m, int n);
CheckReport check_vzw(int m, int n, const PowerTable& table);
/// One report per family (rel1..rel5), in order.
std::vector<CheckReport> check_vzw_families(int m, int n, const PowerTable& table);

/// A^2 = A C^-1 tau - C^-2 delta = tau' C A - delta C^2, with tau, tau',
/// delta taken from m itself.
CheckReport check_qch(const QMatrix2& m);

/// x commutes with a, b, c and d.
CheckReport check_central(const Element& x, const std::string& label);
/// delta is central, its two expressions agree, and tau delta = delta tau.
CheckReport check_central_delta();

/// A A^ = A^ A = delta E.
CheckReport check_a_hat_a();

/// Invariants of the adjoint: tau-hat = tau, tau'-hat = tau', delta-hat = delta.
CheckReport check_hat_invariants();

/// a_n d_n - q^n b_n c_n = d_n a_n - q^-n b_n c_n = delta^n.
CheckReport check_qdet_power(int n);
CheckReport check_qdet_power(int n, const PowerTable& table);

/// Twisted traces tau_n = q^{n/2} a_n + q^{-n/2} d_n = tr(A^n C^n) and
/// tau'_n = tr(C^-n A^n): the recurrences tau_{n+1} = tau_n tau - tau_{n-1} delta
/// (with tau_0 = 2) and the closed form tau_n = f_n(tau) - delta f_{n-2}(tau).
/// Requires n >= 1 and a table holding A^{n+1}.
CheckReport check_tau_trace(int n);
CheckReport check_tau_trace(int n, const PowerTable& table);

/// The stronger claim tau_n = f_n(tau), tau'_n = f_n(tau').  It holds at
/// n = 1 and fails from n = 2 on (already at q = 1: tr(A^2) = t^2 - 2 det).
CheckReport check_tau_chebyshev_claim(int n, const PowerTable& table);

/// v = 1 specialization of A^n at the numeric assignment (a, b, c, d),
/// against the numeric matrix power and the classical Chebyshev formula.
CheckReport check_classical_limit(int n, const std::array<Rational, 4>& assignment);
CheckReport check_classical_limit(int n, const std::array<Rational, 4>& assignment, const PowerTable& table);

/// power_ch1 = power_ch2 = A^n on the generator matrix.
CheckReport check_power_formulas(int n, const PowerTable& table);
/// Both variants of each entry formula against A^n; n >= 1.
CheckReport check_entry_formulas(int n, const PowerTable& table);
/// The delta-free diagonal expressions against A^n; n >= 0.
CheckReport check_alt_entry_formulas(int n, const PowerTable& table);
/// Closed adjoint powers (m >= 1) against brute force, plus the
/// cross-identities with the entries of A^m (m >= 0).
CheckReport check_adjoint_power(int m, const PowerTable& table);
/// f_sum(n) = f_rec(n), weighted homogeneity, and for n >= 1 the in-algebra
/// recurrence of f_eval at (tau, delta).
CheckReport check_chebyshev(int n);

/// Every check over its grid up to max_n, in a fixed order.  Checks may run
/// on up to `workers` threads; the result order does not depend on it.
std::vector<CheckReport> run_suite(int max_n, unsigned workers = 1);

/// Fixed rational assignments used by the suite's classical-limit checks.
std::vector<std::array<Rational, 4>> classical_assignments();

}  // namespace qmat
