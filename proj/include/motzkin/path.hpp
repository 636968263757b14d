#ifndef MOTZKIN_PATH_HPP
#define MOTZKIN_PATH_HPP

#include <string>
#include <string_view>
#include <vector>

#include "motzkin/bigint.hpp"

namespace motzkin {

// A Motzkin path as a move string over {U, H, D}: never below the axis,
// ends on the axis. Immutable once validated.
class MotzkinPath {
 public:
  // Throws std::invalid_argument with a named reason:
  //   BadSymbol, NegativeHeight, NonzeroEnd.
  static MotzkinPath parse(std::string_view moves);

  const std::string& moves() const { return moves_; }
  int width() const { return static_cast<int>(moves_.size()); }
  long area() const { return area_; }

  // h_i per move: for U the height after the move, for D the height before,
  // for H the level of the move.
  const std::vector<int>& heights() const { return heights_; }

  // Number of permutations mapping to this path: prod of h_i for U/D moves
  // and 2h_i+1 for H moves.
  BigInt weight() const;

  bool operator==(const MotzkinPath& o) const { return moves_ == o.moves_; }
  bool operator<(const MotzkinPath& o) const { return moves_ < o.moves_; }

 private:
  MotzkinPath() = default;
  std::string moves_;
  std::vector<int> heights_;
  long area_ = 0;
};

// All valid paths of the given width, lexicographic in D < H < U order.
std::vector<MotzkinPath> enumerate_paths(int width);

// All valid paths of the given width and area.
std::vector<MotzkinPath> enumerate_paths(int width, long area);

}  // namespace motzkin

#endif
