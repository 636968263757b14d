#include "motzkin/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace motzkin {

Permutation Permutation::identity(int n) {
  Permutation pi;
  pi.images.resize(n);
  std::iota(pi.images.begin(), pi.images.end(), 1);
  return pi;
}

Permutation Permutation::parse(std::string_view text) {
  Permutation pi;
  std::istringstream in{std::string(text)};
  int v;
  while (in >> v) pi.images.push_back(v);
  pi.validate();
  return pi;
}

void Permutation::validate() const {
  const int n = size();
  std::vector<bool> seen(n, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("BadPermutation: not a bijection on 1..n");
    seen[v - 1] = true;
  }
}

long Permutation::displacement() const {
  long d = 0;
  for (int i = 0; i < size(); ++i) d += std::abs(images[i] - (i + 1));
  return d;
}

std::string Permutation::str() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(images[i]);
  }
  return s;
}

MotzkinPath perm_to_path(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[pi.images[i] - 1] = i + 1;
  std::string moves(n, 'H');
  for (int i = 1; i <= n; ++i) {
    if (pi.images[i - 1] > i && inv[i - 1] > i)
      moves[i - 1] = 'U';
    else if (pi.images[i - 1] < i && inv[i - 1] < i)
      moves[i - 1] = 'D';
  }
  return MotzkinPath::parse(moves);
}

namespace {

struct Edge {
  int from, to;  // 1-indexed positions; pi(from) = to
};

}  // namespace

Permutation sample_perm_for_path(const MotzkinPath& path, Rng& rng) {
  const auto& mv = path.moves();
  const auto& hi = path.heights();
  const int n = path.width();

  // Pass 1, left to right: each D picks an unmatched U on its left,
  // forming a rightward edge pi(u) = d.
  std::vector<Edge> right;
  {
    std::vector<int> open;
    for (int i = 1; i <= n; ++i) {
      if (mv[i - 1] == 'U') {
        open.push_back(i);
      } else if (mv[i - 1] == 'D') {
        std::size_t k = rng.index(open.size());
        right.push_back({open[k], i});
        open[k] = open.back();
        open.pop_back();
      }
    }
  }

  // Pass 2, right to left: each U picks a D on its right unmatched in this
  // pass, forming a leftward edge pi(d) = u.
  std::vector<Edge> left;
  {
    std::vector<int> open;
    for (int i = n; i >= 1; --i) {
      if (mv[i - 1] == 'D') {
        open.push_back(i);
      } else if (mv[i - 1] == 'U') {
        std::size_t k = rng.index(open.size());
        left.push_back({open[k], i});
        open[k] = open.back();
        open.pop_back();
      }
    }
  }

  // Pass 3: each H at height h picks among 2h+1 options: stay fixed, or
  // split one of the h rightward / h leftward edges crossing it.
  std::vector<int> fixed;
  for (int i = 1; i <= n; ++i) {
    if (mv[i - 1] != 'H') continue;
    const int h = hi[i - 1];
    std::vector<std::size_t> rcross, lcross;
    for (std::size_t e = 0; e < right.size(); ++e)
      if (right[e].from < i && i < right[e].to) rcross.push_back(e);
    for (std::size_t e = 0; e < left.size(); ++e)
      if (left[e].to < i && i < left[e].from) lcross.push_back(e);
    // crossing balance forced by the matching passes
    assert(static_cast<int>(rcross.size()) == h);
    assert(static_cast<int>(lcross.size()) == h);
    const std::size_t pick = rng.index(2 * h + 1);
    if (pick == 0) {
      fixed.push_back(i);
    } else if (pick <= static_cast<std::size_t>(h)) {
      // split (x,y) into (x,i) and (i,y)
      const std::size_t e = rcross[pick - 1];
      right.push_back({i, right[e].to});
      right[e].to = i;
    } else {
      // split (d,u) into (d,i) and (i,u)
      const std::size_t e = lcross[pick - h - 1];
      left.push_back({i, left[e].to});
      left[e].to = i;
    }
  }

  Permutation pi;
  pi.images.assign(n, 0);
  for (const Edge& e : right) pi.images[e.from - 1] = e.to;
  for (const Edge& e : left) pi.images[e.from - 1] = e.to;
  for (int i : fixed) pi.images[i - 1] = i;
  pi.validate();
  return pi;
}

std::map<long, BigInt> brute_force_displacement_table(int n) {
  if (n > 10) throw std::invalid_argument("TooLarge: brute force capped at n = 10");
  if (n < 0) throw std::invalid_argument("TooLarge: negative n");
  std::map<long, BigInt> table;
  Permutation pi = Permutation::identity(n);
  do {
    table[pi.displacement() / 2] += 1;
  } while (std::next_permutation(pi.images.begin(), pi.images.end()));
  return table;
}

}  // namespace motzkin
