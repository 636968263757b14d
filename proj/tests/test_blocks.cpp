#include <doctest.h>

#include <map>
#include <stdexcept>

#include "motzkin/building_sequence.hpp"
#include "motzkin/lastfall_dp.hpp"
#include "motzkin/path.hpp"
#include "motzkin/random.hpp"

using namespace motzkin;

TEST_CASE("parse/str roundtrip and validation") {
  BuildingSequence a = BuildingSequence::parse("1;1,1;2,2");
  CHECK(a.height() == 2);
  CHECK(a.width() == 10);
  CHECK(a.area() == 12);
  CHECK(a.str() == "1;1,1;2,2");
  CHECK(BuildingSequence::parse(a.str()) == a);
  CHECK_THROWS_AS(BuildingSequence::parse("1;0,1"), std::invalid_argument);
}

TEST_CASE("worked example: m, perm, P") {
  Binomials binom;
  BuildingSequence a = BuildingSequence::parse("1;1,1;2,2");
  CHECK(perm_weight(a) == 1200);
  CHECK(path_count(a, binom) == 18);
  CHECK(total_weight(a, binom) == 21600);
}

TEST_CASE("path_to_sequence censuses flats and peaks") {
  CHECK(path_to_sequence(MotzkinPath::parse("UUHDHUHDDH")) ==
        BuildingSequence::parse("1;1,1;2,2"));
  CHECK(path_to_sequence(MotzkinPath::parse("HHH")) == BuildingSequence::parse("3"));
  CHECK(path_to_sequence(MotzkinPath::parse("UD")) == BuildingSequence::parse("0;1,0"));
}

TEST_CASE("m(a) counts exactly the paths with census a") {
  Binomials binom;
  for (int n = 0; n <= 9; ++n) {
    std::map<std::string, long> fiber;
    for (const auto& p : enumerate_paths(n)) fiber[path_to_sequence(p).str()]++;
    long area_max = static_cast<long>(n) * n / 4;
    for (long A = 0; A <= area_max; ++A)
      for (const auto& a : enumerate_sequences(n, A)) {
        CHECK(path_count(a, binom) ==
              (fiber.count(a.str()) ? fiber[a.str()] : 0));
        // every path in the fiber carries weight perm(a)
        CHECK(a.width() == n);
        CHECK(a.area() == A);
      }
  }
}

TEST_CASE("sequence sums reproduce both DP marginals") {
  Binomials binom;
  CountTable um = CountTable::build(10, Kind::Unweighted, Mode::Rolling);
  CountTable wm = CountTable::build(10, Kind::Weighted, Mode::Rolling);
  for (int n = 0; n <= 10; ++n)
    for (long A = 0; A <= static_cast<long>(n) * n / 4; ++A) {
      BigInt sum_m = 0, sum_p = 0;
      for (const auto& a : enumerate_sequences(n, A)) {
        sum_m += path_count(a, binom);
        sum_p += total_weight(a, binom);
      }
      CHECK(sum_m == um.marginal(n, A));
      CHECK(sum_p == wm.marginal(n, A));
    }
}

TEST_CASE("path weight equals perm_weight of its census") {
  for (int n = 0; n <= 9; ++n)
    for (const auto& p : enumerate_paths(n))
      CHECK(p.weight() == perm_weight(path_to_sequence(p)));
}

TEST_CASE("enumeration cap raises") {
  CHECK_THROWS_AS(enumerate_sequences(40, 200, 10), std::length_error);
}

TEST_CASE("sample_path_for_sequence stays in the fiber") {
  Rng rng(5);
  for (int n = 0; n <= 8; ++n)
    for (long A = 0; A <= static_cast<long>(n) * n / 4; ++A)
      for (const auto& a : enumerate_sequences(n, A))
        for (int k = 0; k < 3; ++k) {
          MotzkinPath p = sample_path_for_sequence(a, rng);
          CHECK(p.width() == n);
          CHECK(p.area() == A);
          CHECK(path_to_sequence(p) == a);
        }
}
