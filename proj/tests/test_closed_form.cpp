#include "qmat/closed_form.hpp"
#include "qmat/chebyshev.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace qmat {
namespace {

using testing::from_frozen;

const QMatrix2& A = generator_matrix();

Element s(const QCoeff& c) { return Element::scalar(c); }
Element v(int k) { return s(QCoeff::v_power(k)); }

TEST(ClosedForm, BaseCases) {
  EXPECT_EQ(power_ch1(A, 1), A);
  EXPECT_EQ(power_ch2(A, 1), A);
  for (Variant var : {Variant::kLeft, Variant::kRight}) {
    EXPECT_EQ(entries_closed(1, var), (Entries{gen('a'), gen('b'), gen('c'), gen('d')}));
    EXPECT_EQ(entries_alt(0, var), (DiagonalEntries{embed(1), embed(1)}));
    EXPECT_EQ(entries_alt(1, var).a, gen('a'));
  }
  EXPECT_EQ(adjoint_power_closed(1), qadjoint(A));
  EXPECT_EQ(adjoint_power_closed(1, Variant::kRight), qadjoint(A));
}

TEST(ClosedForm, Squares) {
  const Element t = tau(A), tp = tau_prime(A), delta = qdet(A);
  const QMatrix2 a2 = from_frozen(oracle::kA2);
  EXPECT_EQ(power_ch1(A, 2), A * c_matrix(-1) * t - c_matrix(-2) * delta);
  EXPECT_EQ(power_ch1(A, 2), a2);
  EXPECT_EQ(power_ch2(A, 2), tp * c_matrix(1) * A - delta * c_matrix(2));
  EXPECT_EQ(power_ch2(A, 2), a2);
  EXPECT_EQ(v(1) * gen('b') * t, a2.e12);
  EXPECT_EQ(v(-1) * gen('a') * t - v(-2) * delta, a2.e11);
  EXPECT_EQ(entries_closed(2, Variant::kLeft).b, a2.e12);
}

TEST(ClosedForm, AgainstFrozenPowers) {
  const QMatrix2 a3 = from_frozen(oracle::kA3), a4 = from_frozen(oracle::kA4);
  for (Variant var : {Variant::kLeft, Variant::kRight}) {
    EXPECT_EQ(entries_closed(3, var), (Entries{a3.e11, a3.e12, a3.e21, a3.e22}));
    EXPECT_EQ(entries_closed(4, var), (Entries{a4.e11, a4.e12, a4.e21, a4.e22}));
    EXPECT_EQ(entries_alt(3, var), (DiagonalEntries{a3.e11, a3.e22}));
  }
  EXPECT_EQ(power_ch1(A, 4), a4);
  EXPECT_EQ(power_ch2(A, 4), a4);
}

TEST(ClosedForm, AdjointSquare) {
  const QMatrix2 hat2 = from_frozen(oracle::kAhat2);
  const QMatrix2 a2 = from_frozen(oracle::kA2);
  for (Variant var : {Variant::kLeft, Variant::kRight}) EXPECT_EQ(adjoint_power_closed(2, var), hat2);
  EXPECT_EQ(hat2.e12, s(-QCoeff::q_power(-2)) * a2.e12);
  EXPECT_EQ(hat2.e11, a2.e22);
}

// The tau'-form of the (2,2) adjoint entry with the exponents of q as
// sometimes printed, q^{-(m-1)/2} f_{m-1}(tau') a - q^{-m/2} delta f_{m-2}(tau'),
// is not (A^)^m_{22}; the reflected exponents are.
TEST(ClosedForm, AdjointRightDiagonalExponents) {
  const Element tp = tau_prime(A), delta = qdet(A);
  const int m = 2;
  const Element hat_d = gen('a');
  const Element misprinted = v(1 - m) * f_eval(m - 1, tp, delta) * hat_d - v(-m) * delta * f_eval(m - 2, tp, delta);
  const Element reflected = v(m - 1) * f_eval(m - 1, tp, delta) * hat_d - v(m) * delta * f_eval(m - 2, tp, delta);
  const Element brute = mat_pow(qadjoint(A), m).e22;
  EXPECT_NE(misprinted, brute);
  EXPECT_EQ(reflected, brute);
}

TEST(ClosedForm, Domain) {
  EXPECT_THROW(power_ch1(A, 0), std::invalid_argument);
  EXPECT_THROW(power_ch2(A, 0), std::invalid_argument);
  EXPECT_THROW(entries_closed(0, Variant::kLeft), std::invalid_argument);
  EXPECT_THROW(entries_alt(-1, Variant::kLeft), std::invalid_argument);
  EXPECT_THROW(adjoint_power_closed(0), std::invalid_argument);
}

TEST(ClosedFormProperty, IdentityMatrix) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(power_ch1(identity_matrix(), n), identity_matrix());
    EXPECT_EQ(power_ch2(identity_matrix(), n), identity_matrix());
  }
}

TEST(ClosedFormProperty, ThroughTwelve) {
  QMatrix2 brute = identity_matrix();
  for (int n = 1; n <= 12; ++n) {
    brute = A * brute;
    EXPECT_EQ(power_ch1(A, n), brute) << "n = " << n;
    EXPECT_EQ(power_ch2(A, n), brute) << "n = " << n;
  }
}

}  // namespace
}  // namespace qmat
