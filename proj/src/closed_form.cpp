#include "qmat/closed_form.hpp"

#include "qmat/chebyshev.hpp"

#include <stdexcept>
#include <string>

namespace qmat {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1, got " + std::to_string(n));
}

QCoeff v(int k) { return QCoeff::v_power(k); }

// tau, tau' and delta of the generator matrix, with f_k evaluated at them.
struct Invariants {
  Element tau = qmat::tau(generator_matrix());
  Element tau_prime = qmat::tau_prime(generator_matrix());
  Element delta = qdet(generator_matrix());

  Element f(int k) const { return f_eval(k, tau, delta); }
  Element f_prime(int k) const { return f_eval(k, tau_prime, delta); }
};

const Invariants& invariants() {
  static const Invariants inv;
  return inv;
}

}  // namespace

QMatrix2 power_ch1(const QMatrix2& a, int n) {
  require_positive(n, "power_ch1");
  const Element t = tau(a);
  const Element delta = qdet(a);
  return a * c_matrix(1 - n) * f_eval(n - 1, t, delta) - c_matrix(-n) * (delta * f_eval(n - 2, t, delta));
}

QMatrix2 power_ch2(const QMatrix2& a, int n) {
  require_positive(n, "power_ch2");
  const Element t = tau_prime(a);
  const Element delta = qdet(a);
  return f_eval(n - 1, t, delta) * c_matrix(n - 1) * a - (f_eval(n - 2, t, delta) * delta) * c_matrix(n);
}

Entries entries_closed(int n, Variant variant) {
  require_positive(n, "entries_closed");
  const Invariants& inv = invariants();
  const Element a = gen(Gen::a), b = gen(Gen::b), c = gen(Gen::c), d = gen(Gen::d);
  if (variant == Variant::kLeft) {
    const Element f1 = inv.f(n - 1);
    const Element delta_f2 = inv.delta * inv.f(n - 2);
    return {v(1 - n) * (a * f1) - v(-n) * delta_f2,
            v(n - 1) * (b * f1),
            v(1 - n) * (c * f1),
            v(n - 1) * (d * f1) - v(n) * delta_f2};
  }
  const Element f1 = inv.f_prime(n - 1);
  const Element delta_f2 = inv.delta * inv.f_prime(n - 2);
  return {v(n - 1) * (f1 * a) - v(n) * delta_f2,
          v(n - 1) * (f1 * b),
          v(1 - n) * (f1 * c),
          v(1 - n) * (f1 * d) - v(-n) * delta_f2};
}

DiagonalEntries entries_alt(int n, Variant variant) {
  if (n < 0) throw std::invalid_argument("entries_alt: n must be >= 0, got " + std::to_string(n));
  const Invariants& inv = invariants();
  const Element a = gen(Gen::a), d = gen(Gen::d);
  if (variant == Variant::kLeft) {
    const Element fn = inv.f(n);
    const Element f1 = inv.f(n - 1);
    return {v(-n) * fn - v(-n - 1) * (d * f1), v(n) * fn - v(n + 1) * (a * f1)};
  }
  const Element fn = inv.f_prime(n);
  const Element f1 = inv.f_prime(n - 1);
  return {v(n) * fn - v(n + 1) * (f1 * d), v(-n) * fn - v(-n - 1) * (f1 * a)};
}

QMatrix2 adjoint_power_closed(int m, Variant variant) {
  require_positive(m, "adjoint_power_closed");
  const Invariants& inv = invariants();
  // The adjoint is a q^-1-quantum matrix with the same tau, tau' and delta,
  // so these are the entry formulas with q inverted.
  const QMatrix2 hat = qadjoint(generator_matrix());
  if (variant == Variant::kLeft) {
    const Element f1 = inv.f(m - 1);
    const Element delta_f2 = inv.delta * inv.f(m - 2);
    return {v(m - 1) * (hat.e11 * f1) - v(m) * delta_f2,
            v(1 - m) * (hat.e12 * f1),
            v(m - 1) * (hat.e21 * f1),
            v(1 - m) * (hat.e22 * f1) - v(-m) * delta_f2};
  }
  const Element f1 = inv.f_prime(m - 1);
  const Element delta_f2 = inv.delta * inv.f_prime(m - 2);
  return {v(1 - m) * (f1 * hat.e11) - v(-m) * delta_f2,
          v(1 - m) * (f1 * hat.e12),
          v(m - 1) * (f1 * hat.e21),
          v(m - 1) * (f1 * hat.e22) - v(m) * delta_f2};
}

}  // namespace qmat
