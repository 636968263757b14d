#ifndef MOTZKIN_RANDOM_HPP
#define MOTZKIN_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "motzkin/bigint.hpp"

namespace motzkin {

// Reproducible random source. Exact-uniform draws over unbounded integer
// ranges (rejection on fixed-width bit strings) and exact Bernoulli trials
// on big rationals; no floating point anywhere near the distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent stream for chain `index` derived from a base seed.
  static Rng for_chain(std::uint64_t base_seed, std::uint64_t index);

  std::uint64_t bits64() { return gen_(); }
  bool coin();

  // Uniform in [0, m), m >= 1.
  std::size_t index(std::size_t m);

  // Uniform in [0, bound) for bound >= 1.
  BigInt below(const BigInt& bound);

  // True with probability min(1, r), r >= 0, exactly.
  bool bernoulli(const Rational& r);

  // k distinct positions out of m, sorted ascending (partial Fisher-Yates).
  std::vector<int> combination(int m, int k);

 private:
  std::mt19937_64 gen_;
  std::uint64_t bit_buf_ = 0;
  int bit_count_ = 0;
};

}  // namespace motzkin

#endif
