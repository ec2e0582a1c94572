#pragma once

#include "oracle_values.hpp"
#include "qmat/algebra.hpp"
#include "qmat/matrix.hpp"

#include <random>

namespace qmat::testing {

inline Element from_frozen(const oracle::FrozenElement& frozen) {
  std::vector<Element::Term> terms;
  for (const auto& t : frozen) {
    QCoeff c;
    for (const auto& [e, k] : t.c) c += QCoeff::v_power(e, k);
    terms.emplace_back(Monomial{t.m}, c);
  }
  return Element::from_terms(std::move(terms));
}

inline QMatrix2 from_frozen(const oracle::FrozenMatrix& frozen) {
  return {from_frozen(frozen[0]), from_frozen(frozen[1]), from_frozen(frozen[2]), from_frozen(frozen[3])};
}

/// Small seeded generators for property tests.
class Sampler {
 public:
  explicit Sampler(std::uint32_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  QCoeff coeff(int max_terms = 4, int spread = 6, int magnitude = 9) {
    QCoeff c;
    const int n = integer(0, max_terms);
    for (int i = 0; i < n; ++i) c += QCoeff::v_power(integer(-spread, spread), integer(-magnitude, magnitude));
    return c;
  }

  Monomial monomial(int max_degree) {
    Monomial m;
    int budget = integer(0, max_degree);
    for (int g = 0; g < 4 && budget > 0; ++g) {
      m.exp[g] = integer(0, budget);
      budget -= m.exp[g];
    }
    return m;
  }

  Element element(int max_terms = 3, int max_degree = 3) {
    std::vector<Element::Term> terms;
    const int n = integer(0, max_terms);
    for (int i = 0; i < n; ++i) terms.emplace_back(monomial(max_degree), coeff(2, 4, 5));
    return Element::from_terms(std::move(terms));
  }

  Rational rational(int num = 9, int den = 5) {
    int d = integer(1, den);
    return Rational(integer(-num, num), d);
  }

 private:
  std::mt19937 rng_;
};

}  // namespace qmat::testing
