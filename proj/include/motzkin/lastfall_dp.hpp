#ifndef MOTZKIN_LASTFALL_DP_HPP
#define MOTZKIN_LASTFALL_DP_HPP

#include <vector>

#include "motzkin/bigint.hpp"
#include "motzkin/path.hpp"
#include "motzkin/random.hpp"

namespace motzkin {

enum class Kind { Unweighted, Weighted };  // M(n,A) vs D(n,d)
enum class Mode { Rolling, Full };

// Last-fall dynamic program over states (n, A, l): unweighted path counts
// M(n,A,l) or permutation counts D(n,d,l). Prefix sums over l are the primary
// representation; point values come from adjacent differences. Rolling mode
// keeps only the layers needed to advance the frontier (marginals are kept
// for every built width in both modes); sampling needs the full table.
class CountTable {
 public:
  static CountTable build(int width, Kind kind, Mode mode);

  int width() const { return width_; }
  Kind kind() const { return kind_; }
  Mode mode() const { return mode_; }

  // M(n,A) resp. D(n,A): the marginal over all last-fall lengths.
  // Zero for out-of-range A; throws std::out_of_range("OutOfRange...") for
  // n beyond the built width.
  const BigInt& marginal(int n, long A) const;

  // Sum of the marginal row: the Motzkin number (Unweighted) or n! (Weighted).
  BigInt row_sum(int n) const;

  // Backtrace sampler: a path of width n and area A, uniform for Unweighted
  // and weight-proportional for Weighted. Throws std::logic_error
  // ("WrongMode...") on a rolling table and std::domain_error
  // ("EmptyClass...") when the marginal is zero.
  MotzkinPath sample_path(int n, long A, Rng& rng) const;

 private:
  CountTable(int width, Kind kind, Mode mode)
      : width_(width), kind_(kind), mode_(mode) {}

  // prefix[A][l] = SM(n,A,l); value(n,A,l) = SM(n,A,l) - SM(n,A,l-1)
  using Layer = std::vector<std::vector<BigInt>>;

  BigInt value(int n, long A, int l) const;
  // sum of values over l in [lo, floor(n/2)]
  BigInt suffix(int n, long A, int lo) const;

  int width_;
  Kind kind_;
  Mode mode_;
  std::vector<Layer> layers_;                  // full mode: one per n
  std::vector<std::vector<BigInt>> marginals_;  // [n][A], both modes
};

}  // namespace motzkin

#endif
