#include "motzkin/random.hpp"

#include <algorithm>
#include <numeric>

namespace motzkin {

Rng::Rng(std::uint64_t seed) : gen_(seed) {}

Rng Rng::for_chain(std::uint64_t base_seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(base_seed),
                    static_cast<std::uint32_t>(base_seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  Rng r(0);
  r.gen_.seed(seq);
  return r;
}

bool Rng::coin() {
  if (bit_count_ == 0) {
    bit_buf_ = gen_();
    bit_count_ = 64;
  }
  bool b = bit_buf_ & 1;
  bit_buf_ >>= 1;
  --bit_count_;
  return b;
}

std::size_t Rng::index(std::size_t m) {
  return std::uniform_int_distribution<std::size_t>(0, m - 1)(gen_);
}

BigInt Rng::below(const BigInt& bound) {
  if (bound <= 1) return 0;
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  BigInt r;
  while (true) {
    r = 0;
    for (std::size_t w = 0; w < words; ++w) {
      mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 64);
      r += BigInt(gen_());
    }
    mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), bits);
    if (r < bound) return r;
  }
}

bool Rng::bernoulli(const Rational& r) {
  const BigInt& num = r.get_num();
  const BigInt& den = r.get_den();
  if (num >= den) return true;
  if (num == 0) return false;
  return below(den) < num;
}

std::vector<int> Rng::combination(int m, int k) {
  std::vector<int> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  for (int t = 0; t < k; ++t) {
    std::size_t j = t + index(m - t);
    std::swap(pool[t], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace motzkin
