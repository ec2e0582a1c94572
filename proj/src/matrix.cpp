#include "qmat/matrix.hpp"

#include <stdexcept>

namespace qmat {

const QMatrix2& generator_matrix() {
  static const QMatrix2 a{gen(Gen::a), gen(Gen::b), gen(Gen::c), gen(Gen::d)};
  return a;
}

QMatrix2 identity_matrix() { return {embed(1), {}, {}, embed(1)}; }

QMatrix2 operator*(const QMatrix2& x, const QMatrix2& y) {
  return {x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22,
          x.e21 * y.e11 + x.e22 * y.e21, x.e21 * y.e12 + x.e22 * y.e22};
}

QMatrix2 operator+(const QMatrix2& x, const QMatrix2& y) {
  return {x.e11 + y.e11, x.e12 + y.e12, x.e21 + y.e21, x.e22 + y.e22};
}

QMatrix2 operator-(const QMatrix2& x, const QMatrix2& y) {
  return {x.e11 - y.e11, x.e12 - y.e12, x.e21 - y.e21, x.e22 - y.e22};
}

QMatrix2 operator*(const Element& s, const QMatrix2& x) {
  return {s * x.e11, s * x.e12, s * x.e21, s * x.e22};
}

QMatrix2 operator*(const QMatrix2& x, const Element& s) {
  return {x.e11 * s, x.e12 * s, x.e21 * s, x.e22 * s};
}

QMatrix2 mat_pow(const QMatrix2& a, int n) {
  if (n < 0) throw std::invalid_argument("mat_pow: negative exponent");
  QMatrix2 out = identity_matrix();
  for (int i = 0; i < n; ++i) out = a * out;
  return out;
}

Element qdet(const QMatrix2& a) { return a.e11 * a.e22 - QCoeff::q_power(1) * (a.e12 * a.e21); }

Element qdet_reversed(const QMatrix2& a) {
  return a.e22 * a.e11 - QCoeff::q_power(-1) * (a.e12 * a.e21);
}

QMatrix2 qadjoint(const QMatrix2& a) {
  return {a.e22, -(QCoeff::q_power(-1) * a.e12), -(QCoeff::q_power(1) * a.e21), a.e11};
}

QMatrix2 c_matrix(int k) { return {embed(QCoeff::v_power(k)), {}, {}, embed(QCoeff::v_power(-k))}; }

Element tau(const QMatrix2& a) { return QCoeff::v_power(1) * a.e11 + QCoeff::v_power(-1) * a.e22; }

Element tau_prime(const QMatrix2& a) {
  return QCoeff::v_power(-1) * a.e11 + QCoeff::v_power(1) * a.e22;
}

}  // namespace qmat
