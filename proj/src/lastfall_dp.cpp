#include "motzkin/lastfall_dp.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace motzkin {

namespace {

inline long max_area(int n) { return static_cast<long>(n) * n / 4; }
inline int max_fall(int n) { return n / 2; }

const BigInt kZero = 0;

// SM(n,A,l) for the given layer, reading out-of-range states as zero.
const BigInt& prefix_at(const std::vector<std::vector<BigInt>>& layer, int n,
                        long A, int l) {
  if (A < 0 || A > max_area(n)) return kZero;
  if (l < 0) return kZero;
  return layer[A][std::min(l, max_fall(n))];
}

}  // namespace

CountTable CountTable::build(int width, Kind kind, Mode mode) {
  if (width < 0) throw std::invalid_argument("OutOfRange: negative width");
  CountTable t(width, kind, mode);
  t.marginals_.reserve(width + 1);
  if (mode == Mode::Full) t.layers_.reserve(width + 1);

  Layer roll2, roll1;  // rolling mode: layers n-2 and n-1
  for (int n = 0; n <= width; ++n) {
    const Layer* prev1 = nullptr;
    const Layer* prev2 = nullptr;
    if (mode == Mode::Full) {
      if (n >= 1) prev1 = &t.layers_[n - 1];
      if (n >= 2) prev2 = &t.layers_[n - 2];
    } else {
      if (n >= 1) prev1 = &roll1;
      if (n >= 2) prev2 = &roll2;
    }

    Layer cur(max_area(n) + 1, std::vector<BigInt>(max_fall(n) + 1));
    if (n == 0) {
      cur[0][0] = 1;
    } else {
      const int lmax = max_fall(n);
      const int lmax1 = max_fall(n - 1);
      const int lmax2 = n >= 2 ? max_fall(n - 2) : 0;
      for (long A = 0; A <= max_area(n); ++A) {
        BigInt running = 0;  // prefix sum over l
        for (int l = 0; l <= lmax; ++l) {
          // flat inserted at height l: predecessor fall l' >= l
          if (A - l >= 0) {
            BigInt flats = prefix_at(*prev1, n - 1, A - l, lmax1) -
                           prefix_at(*prev1, n - 1, A - l, l - 1);
            if (kind == Kind::Weighted) flats *= 2 * l + 1;
            running += flats;
          }
          // peak topping at height l: predecessor fall l' >= l-1
          if (l >= 1 && n >= 2 && A - (2 * l - 1) >= 0) {
            BigInt peaks = prefix_at(*prev2, n - 2, A - (2 * l - 1), lmax2) -
                           prefix_at(*prev2, n - 2, A - (2 * l - 1), l - 2);
            if (kind == Kind::Weighted) peaks *= static_cast<long>(l) * l;
            running += peaks;
          }
          cur[A][l] = running;
        }
      }
    }
    std::vector<BigInt> marginal(max_area(n) + 1);
    for (long A = 0; A <= max_area(n); ++A) marginal[A] = cur[A][max_fall(n)];
    t.marginals_.push_back(std::move(marginal));

    if (mode == Mode::Full) {
      t.layers_.push_back(std::move(cur));
    } else {
      roll2 = std::move(roll1);
      roll1 = std::move(cur);
    }
  }
  return t;
}

const BigInt& CountTable::marginal(int n, long A) const {
  if (n < 0 || n > width_)
    throw std::out_of_range("OutOfRange: width " + std::to_string(n) +
                            " beyond built table");
  if (A < 0 || A > max_area(n))
    throw std::out_of_range("OutOfRange: area " + std::to_string(A) +
                            " beyond width " + std::to_string(n));
  return marginals_[n][A];
}

BigInt CountTable::row_sum(int n) const {
  if (n < 0 || n > width_) throw std::out_of_range("OutOfRange: row beyond built table");
  BigInt s = 0;
  for (const BigInt& v : marginals_[n]) s += v;
  return s;
}

BigInt CountTable::value(int n, long A, int l) const {
  if (n < 0 || A < 0 || A > max_area(n) || l < 0 || l > max_fall(n)) return 0;
  const Layer& layer = layers_[n];
  if (l == 0) return layer[A][0];
  return layer[A][l] - layer[A][l - 1];
}

BigInt CountTable::suffix(int n, long A, int lo) const {
  if (n < 0 || A < 0 || A > max_area(n)) return 0;
  const Layer& layer = layers_[n];
  return prefix_at(layer, n, A, max_fall(n)) - prefix_at(layer, n, A, lo - 1);
}

MotzkinPath CountTable::sample_path(int n, long A, Rng& rng) const {
  if (mode_ != Mode::Full)
    throw std::logic_error("WrongMode: sampling requires a full-mode table");
  const BigInt& total = marginal(n, A);
  if (total == 0)
    throw std::domain_error("EmptyClass: no paths of width " + std::to_string(n) +
                            " and area " + std::to_string(A));

  BigInt x = rng.below(total);

  // locate the last-fall length of the full path by prefix-sum search
  int cl = 0;
  while (layers_[n][A][cl] <= x) ++cl;
  if (cl > 0) x -= layers_[n][A][cl - 1];

  int cn = n;
  long cA = A;
  std::vector<std::pair<bool, int>> steps;  // (is_peak, fall length after insert)
  while (cn > 0) {
    const long fa = cA - cl;  // area before the flat insert
    BigInt flat_total = suffix(cn - 1, fa, cl);
    if (kind_ == Kind::Weighted) flat_total *= 2 * cl + 1;
    if (x < flat_total) {
      const long coef = kind_ == Kind::Weighted ? 2 * cl + 1 : 1;
      BigInt cum = 0;
      int lp = cl;
      for (;; ++lp) {
        if (lp > max_fall(cn - 1))
          throw std::logic_error("sampler overran the flat predecessor search");
        BigInt v = value(cn - 1, fa, lp);
        if (v > 0 && x < (cum + v) * coef) {
          x = (x - cum * coef) % v;
          break;
        }
        cum += v;
      }
      steps.emplace_back(false, cl);
      cn -= 1;
      cA = fa;
      cl = lp;
    } else {
      x -= flat_total;
      const long pa = cA - (2 * cl - 1);
      const long coef = kind_ == Kind::Weighted ? static_cast<long>(cl) * cl : 1;
      BigInt cum = 0;
      int lp = std::max(cl - 1, 0);
      for (;; ++lp) {
        if (cn < 2 || lp > max_fall(cn - 2))
          throw std::logic_error("sampler overran the peak predecessor search");
        BigInt v = value(cn - 2, pa, lp);
        if (v > 0 && x < (cum + v) * coef) {
          x = (x - cum * coef) % v;
          break;
        }
        cum += v;
      }
      steps.emplace_back(true, cl);
      cn -= 2;
      cA = pa;
      cl = lp;
    }
  }
  // cn == 0 forces the base state
  if (cA != 0 || cl != 0 || x != 0)
    throw std::logic_error("sampler did not terminate at the base state");

  // replay the insertions forward, oldest first
  std::string path;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const auto [is_peak, l] = *it;
    if (is_peak)
      path.insert(path.size() - (l - 1), "UD");
    else
      path.insert(path.size() - l, 1, 'H');
  }
  return MotzkinPath::parse(path);
}

}  // namespace motzkin
