#ifndef MOTZKIN_PERMUTATION_HPP
#define MOTZKIN_PERMUTATION_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "motzkin/bigint.hpp"
#include "motzkin/path.hpp"
#include "motzkin/random.hpp"

namespace motzkin {

// A permutation of {1..n}; images[i] is pi(i+1) (1-indexed values).
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  // Space-separated 1-indexed images, e.g. "5 3 4 1 2".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(images.size()); }
  void validate() const;  // throws on a non-bijection

  // Total displacement sum |i - pi(i)|; always even.
  long displacement() const;

  std::string str() const;
  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return images < o.images; }
};

// Position i maps to U iff pi(i) > i and pi^-1(i) > i, to D iff both are
// smaller, to H otherwise. The result has width n and area displacement/2.
MotzkinPath perm_to_path(const Permutation& pi);

// Uniform draw among the weight(path) permutations with perm_to_path == path:
// U/D matching passes plus the 2h+1-way choice per H move.
Permutation sample_perm_for_path(const MotzkinPath& path, Rng& rng);

// Exact histogram {d : #permutations with displacement 2d} over all of S_n.
// Throws std::invalid_argument("TooLarge...") for n > 10.
std::map<long, BigInt> brute_force_displacement_table(int n);

}  // namespace motzkin

#endif
