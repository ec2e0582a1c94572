#include "qmat/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace qmat {

Gen gen_from_name(char name) {
  switch (name) {
    case 'a': return Gen::a;
    case 'b': return Gen::b;
    case 'c': return Gen::c;
    case 'd': return Gen::d;
    default: throw std::invalid_argument(std::string("unknown generator '") + name + "'");
  }
}

char gen_name(Gen g) { return "abcd"[static_cast<int>(g)]; }

Monomial Monomial::of(Gen g) {
  Monomial m;
  m.exp[static_cast<int>(g)] = 1;
  return m;
}

std::uint64_t Monomial::key() const {
  std::uint64_t k = 0;
  for (int e : exp) {
    if (e < 0 || e > 0xFFFF) throw std::overflow_error("monomial exponent out of range");
    k = (k << 16) | static_cast<std::uint64_t>(e);
  }
  return k;
}

bool canonical_before(const Monomial& x, const Monomial& y) {
  const int dx = x.degree();
  const int dy = y.degree();
  if (dx != dy) return dx > dy;
  return x.exp > y.exp;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t k = 0;
  for (int e : m.exp) k = k * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(e);
  return static_cast<std::size_t>(k ^ (k >> 29));
}

namespace {

using Accumulator = std::unordered_map<Monomial, QCoeff, MonomialHash>;

std::vector<Element::Term> drain(Accumulator& acc) {
  std::vector<Element::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.emplace_back(m, std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const Element::Term& x, const Element::Term& y) { return canonical_before(x.first, y.first); });
  return out;
}

struct CacheKey {
  std::uint64_t monomial;
  int extra;
  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

struct CacheKeyHash {
  std::size_t operator()(const CacheKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.monomial * 31 + static_cast<std::uint64_t>(k.extra));
  }
};

using Cache = std::unordered_map<CacheKey, Element, CacheKeyHash>;

// Per-thread memo tables; results never depend on what is cached.
thread_local Cache generator_cache;
thread_local Cache a_power_cache;

// v-exponent picked up each time b or c moves left past one d.
#ifdef QMAT_NEGATIVE_CONTROL
constexpr int kPastD = 0;  // deliberately wrong: d b = b d, d c = c d
#else
constexpr int kPastD = -2;  // d b = q^-1 b d, d c = q^-1 c d
#endif

const QCoeff& q_minus_q_inverse() {
  static const QCoeff value = QCoeff::q_power(1) - QCoeff::q_power(-1);
  return value;
}

Monomial bump(Monomial m, Gen g, int by = 1) {
  m.exp[static_cast<int>(g)] += by;
  return m;
}

const Element& monomial_times_generator(const Monomial& m, Gen g);

Element straighten(const Monomial& m, Gen g) {
  const int j = m[Gen::b];
  const int k = m[Gen::c];
  const int l = m[Gen::d];
  switch (g) {
    case Gen::d:
      return Element::monomial(bump(m, Gen::d));
    case Gen::c:
      return Element::monomial(bump(m, Gen::c), QCoeff::v_power(kPastD * l));
    case Gen::b:
      // c b = b c
      return Element::monomial(bump(m, Gen::b), QCoeff::v_power(kPastD * l));
    case Gen::a:
      break;
  }
  if (l == 0) {
    // a moves left past c^k and b^j
    return Element::monomial(bump(m, Gen::a), QCoeff::v_power(-2 * (j + k)));
  }
  // (w d) a = (w a) d - (q - q^-1) (w b) c  with w = a^i b^j c^k d^(l-1)
  const Monomial w = bump(m, Gen::d, -1);
  Element out = times_generator(monomial_times_generator(w, Gen::a), Gen::d);
  out -= q_minus_q_inverse() * times_generator(monomial_times_generator(w, Gen::b), Gen::c);
  return out;
}

const Element& monomial_times_generator(const Monomial& m, Gen g) {
  const CacheKey key{m.key(), static_cast<int>(g)};
  if (auto it = generator_cache.find(key); it != generator_cache.end()) return it->second;
  Element value = straighten(m, g);
  return generator_cache.emplace(key, std::move(value)).first->second;
}

// m * a^n
const Element& monomial_times_a_power(const Monomial& m, int n) {
  const CacheKey key{m.key(), n};
  if (auto it = a_power_cache.find(key); it != a_power_cache.end()) return it->second;
  Element value = n == 0 ? Element::monomial(m) : times_generator(monomial_times_a_power(m, n - 1), Gen::a);
  return a_power_cache.emplace(key, std::move(value)).first->second;
}

}  // namespace

Element Element::generator(Gen g) { return monomial(Monomial::of(g)); }

Element Element::scalar(const QCoeff& c) { return monomial(Monomial::unit(), c); }

Element Element::monomial(const Monomial& m, const QCoeff& c) {
  Element out;
  if (!c.is_zero()) out.terms_.emplace_back(m, c);
  return out;
}

Element Element::from_terms(std::vector<Term> terms) {
  Accumulator acc;
  for (auto& [m, c] : terms) acc[m] += c;
  Element out;
  out.terms_ = drain(acc);
  return out;
}

QCoeff Element::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return canonical_before(t.first, key); });
  if (it != terms_.end() && it->first == m) return it->second;
  return {};
}

Element& Element::operator+=(const Element& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto x = terms_.begin();
  auto y = other.terms_.begin();
  while (x != terms_.end() || y != other.terms_.end()) {
    if (y == other.terms_.end() || (x != terms_.end() && canonical_before(x->first, y->first))) {
      merged.push_back(std::move(*x++));
    } else if (x == terms_.end() || canonical_before(y->first, x->first)) {
      merged.push_back(*y++);
    } else {
      QCoeff sum = std::move(x->second);
      sum += y->second;
      if (!sum.is_zero()) merged.emplace_back(x->first, std::move(sum));
      ++x;
      ++y;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Element& Element::operator-=(const Element& other) { return *this += -other; }

Element& Element::operator*=(const Element& other) {
  *this = *this * other;
  return *this;
}

Element operator-(Element x) {
  for (auto& t : x.terms_) t.second = -std::move(t.second);
  return x;
}

Element operator*(const QCoeff& c, Element x) {
  if (c.is_zero()) return {};
  if (c.is_one()) return x;
  for (auto& t : x.terms_) t.second = c * t.second;
  return x;
}

Element operator*(const Element& x, const Element& y) {
  if (x.is_zero() || y.is_zero()) return {};
  Accumulator acc;
  for (const auto& [my, cy] : y.terms_) {
    const int b_count = my[Gen::b];
    const int c_count = my[Gen::c];
    const int d_count = my[Gen::d];
    for (const auto& [mx, cx] : x.terms_) {
      const QCoeff scale = cx * cy;
      // (mx a^i) b^j c^k d^l: each appended b or c passes the d^l' of the
      // running word, picking up q^-l'; the d's append freely.
      for (const auto& [m, c] : monomial_times_a_power(mx, my[Gen::a]).terms()) {
        const int shift = kPastD * m[Gen::d] * (b_count + c_count);
        Monomial target = m;
        target.exp[1] += b_count;
        target.exp[2] += c_count;
        target.exp[3] += d_count;
        acc[target].add_product(scale, c, shift);
      }
    }
  }
  Element out;
  out.terms_ = drain(acc);
  return out;
}

Element gen(char name) { return Element::generator(gen_from_name(name)); }

Element power(const Element& x, int n) {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  Element out = Element::scalar(1);
  for (int i = 0; i < n; ++i) out = out * x;
  return out;
}

Element times_generator(const Element& x, Gen g) {
  std::vector<Element::Term> terms;
  for (const auto& [m, c] : x.terms()) {
    for (const auto& [pm, pc] : monomial_times_generator(m, g).terms()) terms.emplace_back(pm, c * pc);
  }
  return Element::from_terms(std::move(terms));
}

Element multiply_reference(const Element& x, const Element& y) {
  Element out;
  for (const auto& [my, cy] : y.terms()) {
    Element partial = x;
    for (int g = 0; g < 4; ++g) {
      for (int r = 0; r < my.exp[g]; ++r) partial = times_generator(partial, static_cast<Gen>(g));
    }
    out += cy * std::move(partial);
  }
  return out;
}

bool commutes(const Element& x, const Element& y) { return x * y == y * x; }

int degree(const Element& x) { return x.is_zero() ? -1 : x.terms().front().first.degree(); }

Rational evaluate_classical(const Element& x, const std::array<Rational, 4>& values) {
  Rational sum = 0;
  for (const auto& [m, c] : x.terms()) {
    Rational term = specialize(c, 1);
    for (int g = 0; g < 4; ++g) {
      for (int r = 0; r < m.exp[g]; ++r) term *= values[g];
    }
    sum += term;
  }
  return sum;
}

void clear_straightening_cache() {
  generator_cache.clear();
  a_power_cache.clear();
}

}  // namespace qmat
