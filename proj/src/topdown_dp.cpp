#include "motzkin/topdown_dp.hpp"

namespace motzkin {

namespace {
const BigInt kZero = 0;
const BigInt kOne = 1;
}  // namespace

const BigInt& TopDownTable::count(int n, long A, int h, int p) {
  if (n == 0 && A == 0 && h == 0 && p == 0) return kOne;
  if (n < 0 || A < 0 || h <= 0 || p < 0) return kZero;
  if (2 * p > n) return kZero;

  const std::array<long, 4> key{n, A, h, p};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  BigInt total = 0;
  for (int f = 0; f <= n; ++f) {
    const int n2 = n - 2 * p - f;
    if (n2 < 0) break;
    const long A2 = A - static_cast<long>(2 * h - 1) * p - static_cast<long>(h - 1) * f;
    if (A2 < 0) {
      if (h > 1) break;  // A2 decreases with f only for h > 1
      continue;
    }
    BigInt inner = 0;
    if (h > 1) {
      for (int p2 = 1; 2 * p2 <= n2; ++p2)
        inner += binom_(p + f + p2 - 1, p2 - 1) * count(n2, A2, h - 1, p2);
    }
    // ground level: the f flats interleave the p peaks and nothing remains
    if (h == 1 && n2 == 0 && A2 == 0) inner += 1;
    if (inner == 0) continue;
    BigInt coef = binom_(p + f, f);
    if (kind_ == Kind::Weighted && f > 0) coef *= pow_int(2 * h - 1, f);
    total += coef * inner;
  }
  if (kind_ == Kind::Weighted && p > 0 && total != 0) total *= pow_int(h, 2UL * p);
  return memo_.emplace(key, std::move(total)).first->second;
}

BigInt TopDownTable::marginal(int n, long A) {
  BigInt s = 0;
  for (int h = 0; h <= n; ++h) s += height_marginal(n, A, h);
  return s;
}

}  // namespace motzkin
