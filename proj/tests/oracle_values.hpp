// Generated by tests/oracle/gen_oracle.py; do not edit.
#pragma once

#include <array>
#include <utility>
#include <vector>

namespace oracle {

// monomial exponents (a, b, c, d) and (v-exponent, coefficient) pairs
struct FrozenTerm {
  std::array<int, 4> m;
  std::vector<std::pair<int, long long>> c;
};
using FrozenElement = std::vector<FrozenTerm>;
using FrozenMatrix = std::array<FrozenElement, 4>;

inline const FrozenMatrix kA2 = {{
    {{{2, 0, 0, 0}, {{0, 1}}}, {{0, 1, 1, 0}, {{0, 1}}}},
    {{{1, 1, 0, 0}, {{0, 1}}}, {{0, 1, 0, 1}, {{0, 1}}}},
    {{{1, 0, 1, 0}, {{-2, 1}}}, {{0, 0, 1, 1}, {{-2, 1}}}},
    {{{0, 1, 1, 0}, {{0, 1}}}, {{0, 0, 0, 2}, {{0, 1}}}}}};
inline const FrozenMatrix kA3 = {{
    {{{3, 0, 0, 0}, {{0, 1}}}, {{1, 1, 1, 0}, {{-4, 1}, {0, 1}}}, {{0, 1, 1, 1}, {{-2, 1}}}},
    {{{2, 1, 0, 0}, {{0, 1}}}, {{1, 1, 0, 1}, {{0, 1}}}, {{0, 2, 1, 0}, {{0, 1}}}, {{0, 1, 0, 2}, {{0, 1}}}},
    {{{2, 0, 1, 0}, {{-4, 1}}}, {{1, 0, 1, 1}, {{-4, 1}}}, {{0, 1, 2, 0}, {{-4, 1}}}, {{0, 0, 1, 2}, {{-4, 1}}}},
    {{{1, 1, 1, 0}, {{-2, 1}}}, {{0, 1, 1, 1}, {{-4, 1}, {0, 1}}}, {{0, 0, 0, 3}, {{0, 1}}}}}};
inline const FrozenMatrix kA4 = {{
    {{{4, 0, 0, 0}, {{0, 1}}}, {{2, 1, 1, 0}, {{-8, 1}, {-4, 1}, {0, 1}}}, {{1, 1, 1, 1}, {{-6, 1}, {-2, 1}}}, {{0, 2, 2, 0}, {{-4, 1}}}, {{0, 1, 1, 2}, {{-4, 1}}}},
    {{{3, 1, 0, 0}, {{0, 1}}}, {{2, 1, 0, 1}, {{0, 1}}}, {{1, 2, 1, 0}, {{-4, 1}, {0, 1}}}, {{1, 1, 0, 2}, {{0, 1}}}, {{0, 2, 1, 1}, {{-4, 1}, {0, 1}}}, {{0, 1, 0, 3}, {{0, 1}}}},
    {{{3, 0, 1, 0}, {{-6, 1}}}, {{2, 0, 1, 1}, {{-6, 1}}}, {{1, 1, 2, 0}, {{-10, 1}, {-6, 1}}}, {{1, 0, 1, 2}, {{-6, 1}}}, {{0, 1, 2, 1}, {{-10, 1}, {-6, 1}}}, {{0, 0, 1, 3}, {{-6, 1}}}},
    {{{2, 1, 1, 0}, {{-4, 1}}}, {{1, 1, 1, 1}, {{-6, 1}, {-2, 1}}}, {{0, 2, 2, 0}, {{-4, 1}}}, {{0, 1, 1, 2}, {{-8, 1}, {-4, 1}, {0, 1}}}, {{0, 0, 0, 4}, {{0, 1}}}}}};
inline const FrozenMatrix kAhat2 = {{
    {{{0, 1, 1, 0}, {{0, 1}}}, {{0, 0, 0, 2}, {{0, 1}}}},
    {{{1, 1, 0, 0}, {{-4, -1}}}, {{0, 1, 0, 1}, {{-4, -1}}}},
    {{{1, 0, 1, 0}, {{2, -1}}}, {{0, 0, 1, 1}, {{2, -1}}}},
    {{{2, 0, 0, 0}, {{0, 1}}}, {{0, 1, 1, 0}, {{0, 1}}}}}};
inline const FrozenElement kDelta2 = {{{2, 0, 0, 2}, {{0, 1}}}, {{1, 1, 1, 1}, {{-2, -1}, {2, -1}}}, {{0, 2, 2, 0}, {{4, 1}}}};
inline const FrozenElement kTauSquared = {{{2, 0, 0, 0}, {{2, 1}}}, {{1, 0, 0, 1}, {{0, 2}}}, {{0, 1, 1, 0}, {{-2, 1}, {2, -1}}}, {{0, 0, 0, 2}, {{-2, 1}}}};

// (n, [(x-exponent, y-exponent, coefficient)])
struct FrozenF {
  int n;
  std::vector<std::array<long long, 3>> terms;
};
inline const std::vector<FrozenF> kFPolys = {
    {5, {{5, 0, 1LL}, {3, 1, -4LL}, {1, 2, 3LL}}},
    {12, {{12, 0, 1LL}, {10, 1, -11LL}, {8, 2, 45LL}, {6, 3, -84LL}, {4, 4, 70LL}, {2, 5, -21LL}, {0, 6, 1LL}}},
    {20, {{20, 0, 1LL}, {18, 1, -19LL}, {16, 2, 153LL}, {14, 3, -680LL}, {12, 4, 1820LL}, {10, 5, -3003LL}, {8, 6, 3003LL}, {6, 7, -1716LL}, {4, 8, 495LL}, {2, 9, -55LL}, {0, 10, 1LL}}}};

struct FrozenNumericPower {
  std::array<const char*, 4> assignment;
  int n;
  std::array<const char*, 4> power;
};
inline const std::vector<FrozenNumericPower> kNumericPowers = {
    {{"2", "1", "1", "1"}, 4, {"34", "21", "21", "13"}},
    {{"1", "1", "0", "1"}, 3, {"1", "3", "0", "1"}},
    {{"1/2", "-3", "2/3", "5"}, 7, {"-683135/128", "-2049789/64", "683263/96", "683279/16"}}};

}  // namespace oracle
