#include "qmat/algebra.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace qmat {
namespace {

using testing::Sampler;

const Element a = gen('a'), b = gen('b'), c = gen('c'), d = gen('d');
const QCoeff q = QCoeff::q_power(1), q_inv = QCoeff::q_power(-1);

Element delta() { return a * d - q * (b * c); }

TEST(Algebra, Generators) {
  EXPECT_EQ(a, Element::monomial(Monomial{{1, 0, 0, 0}}));
  EXPECT_EQ(d, Element::monomial(Monomial{{0, 0, 0, 1}}));
  EXPECT_EQ(b * c, Element::monomial(Monomial{{0, 1, 1, 0}}));
  EXPECT_THROW(gen('e'), std::invalid_argument);
  EXPECT_THROW(gen_from_name('A'), std::invalid_argument);
}

TEST(Algebra, Embedding) {
  EXPECT_TRUE(embed(0).is_zero());
  EXPECT_EQ(embed(1) * a, a);
  EXPECT_EQ(a * embed(1), a);
}

TEST(Algebra, Addition) {
  EXPECT_EQ(a + Element(), a);
  EXPECT_TRUE((a * b + embed(-1) * (a * b)).is_zero());
  EXPECT_EQ((a + d).terms().size(), 2u);
}

TEST(Algebra, DefiningRelations) {
  EXPECT_EQ(b * a, q_inv * (a * b));
  EXPECT_EQ(c * a, q_inv * (a * c));
  EXPECT_EQ(c * b, b * c);
  EXPECT_EQ(d * b, q_inv * (b * d));
  EXPECT_EQ(d * c, q_inv * (c * d));
  EXPECT_EQ(d * a, a * d - (q - q_inv) * (b * c));
}

TEST(Algebra, DeterminantIsCentral) {
  for (const Element& g : {a, b, c, d}) EXPECT_EQ(delta() * g - g * delta(), Element());
  EXPECT_EQ(delta(), d * a - q_inv * (b * c));
}

TEST(Algebra, NonCentralElement) {
  const Element bc = b * c;
  EXPECT_TRUE(commutes(bc, b));
  EXPECT_TRUE(commutes(bc, c));
  EXPECT_EQ(a * bc, q * q * (bc * a));
  EXPECT_FALSE(commutes(bc, a));
}

TEST(Algebra, Degree) {
  EXPECT_EQ(degree(Element()), -1);
  EXPECT_EQ(degree(embed(5)), 0);
  EXPECT_EQ(degree(a * d + b), 2);
}

TEST(Algebra, FrozenSquareOfDelta) {
  EXPECT_EQ(power(delta(), 2), testing::from_frozen(oracle::kDelta2));
}

TEST(Algebra, ReducerHandlesDeepRewrites) {
  // d^3 a^3 needs nested d-a exchanges
  const Element lhs = power(d, 3) * power(a, 3);
  EXPECT_EQ(lhs, multiply_reference(power(d, 3), power(a, 3)));
  EXPECT_EQ(evaluate_classical(lhs, {2, 3, 5, 7}), Rational(8 * 343));
}

TEST(AlgebraProperty, FastProductMatchesReference) {
  Sampler s(21);
  for (int trial = 0; trial < 150; ++trial) {
    const Element x = s.element(3, 5), y = s.element(3, 5);
    ASSERT_EQ(x * y, multiply_reference(x, y)) << "trial " << trial;
  }
}

TEST(AlgebraProperty, Associativity) {
  Sampler s(22);
  for (int trial = 0; trial < 80; ++trial) {
    const Element x = s.element(2, 3), y = s.element(2, 3), z = s.element(2, 3);
    ASSERT_EQ((x * y) * z, x * (y * z)) << "trial " << trial;
  }
}

TEST(AlgebraProperty, Distributivity) {
  Sampler s(23);
  for (int trial = 0; trial < 80; ++trial) {
    const Element x = s.element(), y = s.element(), z = s.element();
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x + y) * z, x * z + y * z);
  }
}

TEST(AlgebraProperty, DegreeAdditive) {
  Sampler s(24);
  for (int trial = 0; trial < 100; ++trial) {
    const Element x = s.element(3, 4), y = s.element(3, 4);
    if (x.is_zero() || y.is_zero()) continue;
    // top-degree parts cannot cancel: the associated graded ring is a domain
    EXPECT_EQ(degree(x * y), degree(x) + degree(y));
  }
}

TEST(AlgebraProperty, CanonicalOrder) {
  Sampler s(25);
  for (int trial = 0; trial < 100; ++trial) {
    const Element x = s.element(5, 4) * s.element(3, 3);
    const auto terms = x.terms();
    for (std::size_t i = 1; i < terms.size(); ++i) EXPECT_TRUE(canonical_before(terms[i - 1].first, terms[i].first));
    for (const auto& t : terms) EXPECT_FALSE(t.second.is_zero());
  }
}

TEST(AlgebraProperty, ClassicalLimitIsHomomorphism) {
  Sampler s(26);
  for (int trial = 0; trial < 100; ++trial) {
    const Element x = s.element(), y = s.element();
    const std::array<Rational, 4> at = {s.rational(), s.rational(), s.rational(), s.rational()};
    EXPECT_EQ(evaluate_classical(x * y, at), evaluate_classical(x, at) * evaluate_classical(y, at));
  }
}

TEST(AlgebraProperty, CacheDoesNotChangeResults) {
  Sampler s(27);
  const Element x = s.element(4, 5), y = s.element(4, 5);
  const Element warm = x * y;
  clear_straightening_cache();
  EXPECT_EQ(x * y, warm);
}

}  // namespace
}  // namespace qmat
