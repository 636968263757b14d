#include <doctest.h>

#include "motzkin/building_sequence.hpp"
#include "motzkin/lastfall_dp.hpp"
#include "motzkin/topdown_dp.hpp"

using namespace motzkin;

TEST_CASE("base cases and small values") {
  TopDownTable t(Kind::Unweighted);
  CHECK(t.count(0, 0, 0, 0) == 1);
  CHECK(t.count(2, 1, 1, 1) == 1);
  CHECK(t.count(-1, 0, 1, 0) == 0);
  CHECK(t.count(2, 3, 2, 1) == 0);
  CHECK(t.marginal(4, 2) == 3);
  for (int n = 0; n <= 10; ++n) CHECK(t.marginal(n, 0) == 1);
}

TEST_CASE("marginals equal the last-fall DP for both kinds") {
  TopDownTable tm(Kind::Unweighted);
  TopDownTable td(Kind::Weighted);
  CountTable um = CountTable::build(12, Kind::Unweighted, Mode::Rolling);
  CountTable wm = CountTable::build(12, Kind::Weighted, Mode::Rolling);
  for (int n = 0; n <= 12; ++n)
    for (long A = 0; A <= static_cast<long>(n) * n / 4; ++A) {
      CHECK(tm.marginal(n, A) == um.marginal(n, A));
      CHECK(td.marginal(n, A) == wm.marginal(n, A));
    }
}

TEST_CASE("fixed top entry matches the sequence census") {
  Binomials binom;
  TopDownTable tm(Kind::Unweighted);
  TopDownTable td(Kind::Weighted);
  for (int n = 0; n <= 9; ++n)
    for (long A = 0; A <= static_cast<long>(n) * n / 4; ++A)
      for (int h = 1; h <= n / 2; ++h)
        for (int p = 1; 2 * p <= n; ++p) {
          BigInt sum_m = 0, sum_p = 0;
          for (const auto& a : enumerate_sequences(n, A)) {
            if (a.height() != h) continue;
            if (a.peaks[h] != p || a.flats[h] != 0) continue;
            sum_m += path_count(a, binom);
            sum_p += total_weight(a, binom);
          }
          CHECK(tm.count(n, A, h, p) == sum_m);
          CHECK(td.count(n, A, h, p) == sum_p);
        }
}
