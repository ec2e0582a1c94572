#pragma once

// The algebra A_q(Mat(2)) on generators a, b, c, d, held in PBW normal form
// a^i b^j c^k d^l.  Products are straightened with the rewriting rules
//
//   b a = q^-1 a b      c a = q^-1 a c      c b = b c
//   d b = q^-1 b d      d c = q^-1 c d      d a = a d - (q - q^-1) b c
//
// which are the defining relations solved for the out-of-order pair.

#include "qmat/coeff.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qmat {

enum class Gen : std::uint8_t { a = 0, b = 1, c = 2, d = 3 };

/// Throws std::invalid_argument for anything other than 'a'..'d'.
Gen gen_from_name(char name);
char gen_name(Gen g);

/// Exponent quadruple (i, j, k, l) of the word a^i b^j c^k d^l.
struct Monomial {
  std::array<int, 4> exp{};

  static Monomial unit() { return {}; }
  static Monomial of(Gen g);

  int operator[](Gen g) const { return exp[static_cast<int>(g)]; }
  int degree() const { return exp[0] + exp[1] + exp[2] + exp[3]; }
  bool is_unit() const { return degree() == 0; }

  std::uint64_t key() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order, largest first: higher total degree precedes
/// lower, ties broken by comparing (i, j, k, l) lexicographically, larger
/// first.  This is the order used for storage, rendering and witnesses.
bool canonical_before(const Monomial& x, const Monomial& y);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class Element {
 public:
  using Term = std::pair<Monomial, QCoeff>;

  Element() = default;

  static Element generator(Gen g);
  static Element scalar(const QCoeff& c);
  static Element monomial(const Monomial& m, const QCoeff& c = 1);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Element from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  /// Terms in canonical order, no zero coefficients.
  std::span<const Term> terms() const { return terms_; }
  /// Coefficient of m (zero when absent).
  QCoeff coefficient(const Monomial& m) const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Element& other);

  friend Element operator+(Element x, const Element& y) { return x += y; }
  friend Element operator-(Element x, const Element& y) { return x -= y; }
  friend Element operator-(Element x);
  friend Element operator*(const Element& x, const Element& y);
  friend Element operator*(const QCoeff& c, Element x);
  friend Element operator*(Element x, const QCoeff& c) { return c * std::move(x); }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::vector<Term> terms_;
};

inline Element gen(Gen g) { return Element::generator(g); }
Element gen(char name);
inline Element embed(const QCoeff& c) { return Element::scalar(c); }

/// x^n by repeated multiplication; n >= 0.
Element power(const Element& x, int n);

/// Right multiplication by one generator, one rewriting rule at a time.
/// This is the reference reducer the fast product is validated against.
Element times_generator(const Element& x, Gen g);

/// Product computed purely by times_generator over the word of each term of y.
Element multiply_reference(const Element& x, const Element& y);

bool commutes(const Element& x, const Element& y);

/// Total degree of the highest-degree term; -1 for zero.
int degree(const Element& x);

/// Replaces each coefficient by its value at v = 1 and evaluates the
/// resulting commutative polynomial at (a, b, c, d) = values.
Rational evaluate_classical(const Element& x, const std::array<Rational, 4>& values);

/// Drops the memoized straightening tables of the calling thread.
void clear_straightening_cache();

}  // namespace qmat
