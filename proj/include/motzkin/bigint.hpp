#ifndef MOTZKIN_BIGINT_HPP
#define MOTZKIN_BIGINT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace motzkin {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt pow_int(long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Pascal triangle of exact binomial coefficients, grown on demand.
// Built once and shared read-only by samplers; growth is not thread-safe,
// so concurrent users either pre-extend with ensure_rows() or own a copy.
class Binomials {
 public:
  Binomials() { rows_.push_back({BigInt(1)}); }

  void ensure_rows(int n) {
    while (static_cast<int>(rows_.size()) <= n) {
      const auto& prev = rows_.back();
      std::vector<BigInt> row(rows_.size() + 1);
      row.front() = 1;
      row.back() = 1;
      for (std::size_t k = 1; k < rows_.size(); ++k)
        row[k] = prev[k - 1] + prev[k];
      rows_.push_back(std::move(row));
    }
  }

  const BigInt& operator()(int n, int k) {
    static const BigInt kZero = 0;
    if (n < 0 || k < 0 || k > n) return kZero;
    ensure_rows(n);
    return rows_[n][k];
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

}  // namespace motzkin

#endif
