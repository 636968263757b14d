#ifndef MOTZKIN_BUILDING_SEQUENCE_HPP
#define MOTZKIN_BUILDING_SEQUENCE_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "motzkin/bigint.hpp"
#include "motzkin/path.hpp"
#include "motzkin/random.hpp"

namespace motzkin {

// Per-height census (f_0, p_1, f_1, ..., p_h, f_h) of a Motzkin path:
// f_i flats and p_i peaks at height i, with p_i >= 1 for 1 <= i <= h.
// Stored canonically: flats/peaks have size h+1, peaks[0] == 0, and the
// top level h carries at least one flat or peak (unless h == 0).
struct BuildingSequence {
  std::vector<int> flats{0};
  std::vector<int> peaks{0};

  int height() const { return static_cast<int>(flats.size()) - 1; }
  int width() const;
  long area() const;

  // Drops empty trailing levels back to canonical form.
  void trim();

  // Throws std::invalid_argument on a malformed sequence.
  void validate() const;

  // Textual form "f0;p1,f1;p2,f2;..."
  std::string str() const;
  static BuildingSequence parse(std::string_view text);

  auto operator<=>(const BuildingSequence&) const = default;
};

// perm(a) = prod (2i+1)^{f_i} * prod i^{2 p_i}: the common weight of all
// paths sharing the sequence.
BigInt perm_weight(const BuildingSequence& a);

// m(a): the number of distinct paths assembled from the sequence.
BigInt path_count(const BuildingSequence& a, Binomials& binom);

// P(a) = m(a) * perm(a): the number of permutations mapping to the sequence.
BigInt total_weight(const BuildingSequence& a, Binomials& binom);

// All of S(n, A) in lexicographic order of (h, f0, p1, f1, ...).
// Throws std::length_error("CapExceeded...") past the cap.
std::vector<BuildingSequence> enumerate_sequences(int n, long area,
                                                  std::size_t cap = 5'000'000);

// Uniform draw among the m(a) paths with path_to_sequence == a, built
// top-down by placing DU valleys and flats level by level.
MotzkinPath sample_path_for_sequence(const BuildingSequence& a, Rng& rng);

// The unique sequence of a path: flats counted per height, peaks matched
// by stack discipline (each D pairs the most recent unmatched U).
BuildingSequence path_to_sequence(const MotzkinPath& path);

}  // namespace motzkin

#endif
