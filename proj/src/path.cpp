#include "motzkin/path.hpp"

#include <stdexcept>

namespace motzkin {

MotzkinPath MotzkinPath::parse(std::string_view moves) {
  MotzkinPath p;
  p.moves_.assign(moves);
  p.heights_.reserve(moves.size());
  int h = 0;
  long doubled_area = 0;  // half-unit trapezoid rule, kept in doubled units
  for (char c : moves) {
    switch (c) {
      case 'U':
        ++h;
        p.heights_.push_back(h);
        doubled_area += 2 * h - 1;
        break;
      case 'D':
        p.heights_.push_back(h);
        doubled_area += 2 * h - 1;
        --h;
        if (h < 0) throw std::invalid_argument("NegativeHeight: path dips below the axis");
        break;
      case 'H':
        p.heights_.push_back(h);
        doubled_area += 2 * h;
        break;
      default:
        throw std::invalid_argument(std::string("BadSymbol: '") + c + "'");
    }
  }
  if (h != 0) throw std::invalid_argument("NonzeroEnd: path does not return to the axis");
  p.area_ = doubled_area / 2;
  return p;
}

BigInt MotzkinPath::weight() const {
  BigInt w = 1;
  for (std::size_t i = 0; i < moves_.size(); ++i) {
    const int h = heights_[i];
    w *= (moves_[i] == 'H') ? 2 * h + 1 : h;
  }
  return w;
}

namespace {

void enumerate_rec(std::string& cur, int remaining, int h, long area2,
                   long want_area2, std::vector<MotzkinPath>& out) {
  if (remaining == 0) {
    if (h == 0 && (want_area2 < 0 || area2 == want_area2))
      out.push_back(MotzkinPath::parse(cur));
    return;
  }
  if (h > remaining) return;  // cannot return to the axis
  if (want_area2 >= 0) {
    // the cheapest completion falls straight down: doubled area h^2
    if (area2 + static_cast<long>(h) * h > want_area2) return;
  }
  if (h > 0) {
    cur.push_back('D');
    enumerate_rec(cur, remaining - 1, h - 1, area2 + 2 * h - 1, want_area2, out);
    cur.pop_back();
  }
  cur.push_back('H');
  enumerate_rec(cur, remaining - 1, h, area2 + 2 * h, want_area2, out);
  cur.pop_back();
  cur.push_back('U');
  enumerate_rec(cur, remaining - 1, h + 1, area2 + 2 * h + 1, want_area2, out);
  cur.pop_back();
}

}  // namespace

std::vector<MotzkinPath> enumerate_paths(int width) {
  std::vector<MotzkinPath> out;
  std::string cur;
  enumerate_rec(cur, width, 0, 0, -1, out);
  return out;
}

std::vector<MotzkinPath> enumerate_paths(int width, long area) {
  std::vector<MotzkinPath> out;
  std::string cur;
  enumerate_rec(cur, width, 0, 0, 2 * area, out);
  return out;
}

}  // namespace motzkin
