#include "qmat/chebyshev.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmat {

FPoly FPoly::constant(const BigInt& c) {
  FPoly p;
  p.add({0, 0}, c);
  return p;
}

void FPoly::add(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt FPoly::coefficient(int x_exp, int y_exp) const {
  auto it = terms_.find({x_exp, y_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool FPoly::is_weighted_homogeneous(int weight) const {
  for (const auto& [e, c] : terms_) {
    if (e.first + 2 * e.second != weight) return false;
  }
  return true;
}

FPoly& FPoly::operator+=(const FPoly& other) {
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

FPoly& FPoly::operator-=(const FPoly& other) {
  for (const auto& [e, c] : other.terms_) add(e, -c);
  return *this;
}

FPoly FPoly::times_x() const {
  FPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{e.first + 1, e.second}, c);
  return out;
}

FPoly FPoly::times_y() const {
  FPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{e.first, e.second + 1}, c);
  return out;
}

Rational FPoly::evaluate(const Rational& x, const Rational& y) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = Rational(c);
    for (int i = 0; i < e.first; ++i) term *= x;
    for (int i = 0; i < e.second; ++i) term *= y;
    sum += term;
  }
  return sum;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  static std::mutex guard;
  static std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
  std::lock_guard lock(guard);
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(prev.size() + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

namespace {

void require_index(int n, const char* what) {
  if (n < -1) throw std::invalid_argument(std::string(what) + ": index must be >= -1, got " + std::to_string(n));
}

}  // namespace

FPoly f_sum(int n) {
  require_index(n, "f_sum");
  FPoly p;
  for (int l = 0; 2 * l <= n; ++l) {
    BigInt c = binomial(n - l, l);
    if (l % 2 != 0) c = -c;
    FPoly term = FPoly::constant(c);
    for (int i = 0; i < n - 2 * l; ++i) term = term.times_x();
    for (int i = 0; i < l; ++i) term = term.times_y();
    p += term;
  }
  return p;
}

FPoly f_rec(int n) {
  require_index(n, "f_rec");
  FPoly previous;                    // f_{-1}
  FPoly current = FPoly::constant(1);  // f_0
  if (n == -1) return previous;
  for (int k = 0; k < n; ++k) {
    FPoly next = current.times_x();
    next -= previous.times_y();
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

Element f_eval(int n, const Element& x, const Element& y) {
  require_index(n, "f_eval");
  if (!commutes(x, y)) throw std::domain_error("f_eval: arguments do not commute");
  Element previous;
  Element current = embed(1);
  if (n == -1) return previous;
  for (int k = 0; k < n; ++k) {
    Element next = x * current - y * previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

Element substitute(const FPoly& p, const Element& x, const Element& y) {
  Element out;
  for (const auto& [e, c] : p.terms()) out += QCoeff(c) * (power(x, e.first) * power(y, e.second));
  return out;
}

}  // namespace qmat
