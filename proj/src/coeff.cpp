#include "qmat/coeff.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qmat {

QCoeff::QCoeff(long long constant) {
  if (constant != 0) terms_.emplace_back(0, BigInt(constant));
}

QCoeff::QCoeff(const BigInt& constant) {
  if (constant != 0) terms_.emplace_back(0, constant);
}

QCoeff QCoeff::v_power(int k, const BigInt& coefficient) {
  QCoeff out;
  if (coefficient != 0) out.terms_.emplace_back(k, coefficient);
  return out;
}

bool QCoeff::is_one() const {
  return terms_.size() == 1 && terms_.front().first == 0 && terms_.front().second == 1;
}

int QCoeff::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero QCoeff");
  return terms_.front().first;
}

int QCoeff::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero QCoeff");
  return terms_.back().first;
}

void QCoeff::add_term(int exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.emplace(it, exponent, coefficient);
  }
}

QCoeff& QCoeff::operator+=(const QCoeff& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      BigInt sum = a->second + b->second;
      if (sum != 0) merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

QCoeff& QCoeff::operator-=(const QCoeff& other) { return *this += -other; }

QCoeff& QCoeff::operator*=(const QCoeff& other) {
  *this = *this * other;
  return *this;
}

void QCoeff::add_product(const QCoeff& x, const QCoeff& y, int shift) {
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) add_term(ex + ey + shift, cx * cy);
  }
}

QCoeff& QCoeff::shift(int k) {
  for (auto& t : terms_) t.first += k;
  return *this;
}

QCoeff operator*(const QCoeff& x, const QCoeff& y) {
  QCoeff out;
  if (x.is_zero() || y.is_zero()) return out;
  if (x.is_monomial() || y.is_monomial()) {
    const QCoeff& mono = x.is_monomial() ? x : y;
    const QCoeff& other = x.is_monomial() ? y : x;
    const auto& [e, c] = mono.terms_.front();
    out.terms_.reserve(other.terms_.size());
    for (const auto& [eo, co] : other.terms_) out.terms_.emplace_back(eo + e, co * c);
    return out;
  }
  // dense convolution over the exponent window
  const int lo = x.terms_.front().first + y.terms_.front().first;
  const int hi = x.terms_.back().first + y.terms_.back().first;
  std::vector<BigInt> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) dense[ex + ey - lo] += cx * cy;
  }
  for (int e = lo; e <= hi; ++e) {
    if (dense[e - lo] != 0) out.terms_.emplace_back(e, std::move(dense[e - lo]));
  }
  return out;
}

QCoeff operator-(QCoeff x) {
  for (auto& t : x.terms_) t.second = -t.second;
  return x;
}

std::string QCoeff::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

namespace {

Rational rational_pow(const Rational& base, int k) {
  Rational result = 1;
  Rational b = k < 0 ? Rational(1) / base : base;
  unsigned e = static_cast<unsigned>(k < 0 ? -static_cast<long long>(k) : k);
  while (e != 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace

Rational specialize(const QCoeff& x, const Rational& t) {
  if (t == 0) throw std::domain_error("specialize: v = 0 is outside the Laurent domain");
  Rational sum = 0;
  for (const auto& [e, c] : x.terms()) sum += Rational(c) * rational_pow(t, e);
  return sum;
}

}  // namespace qmat
