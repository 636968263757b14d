#ifndef MOTZKIN_TOPDOWN_DP_HPP
#define MOTZKIN_TOPDOWN_DP_HPP

#include <array>
#include <map>

#include "motzkin/bigint.hpp"
#include "motzkin/lastfall_dp.hpp"

namespace motzkin {

// Top-down DP over (n, A, h, p): paths of width n, area A, height exactly h,
// with p peaks and no flats at the top level. Lazily memoized; an independent
// cross-check of the last-fall DP and of the building-sequence algebra.
class TopDownTable {
 public:
  explicit TopDownTable(Kind kind) : kind_(kind) {}

  Kind kind() const { return kind_; }

  // M(n,A,h,p) resp. D(n,d,h,p).
  const BigInt& count(int n, long A, int h, int p);

  // Height marginal M(n,A,h) = M(n,A,h+1,0).
  const BigInt& height_marginal(int n, long A, int h) { return count(n, A, h + 1, 0); }

  // M(n,A) resp. D(n,d): sum of height marginals.
  BigInt marginal(int n, long A);

 private:
  Kind kind_;
  Binomials binom_;
  std::map<std::array<long, 4>, BigInt> memo_;
};

}  // namespace motzkin

#endif
