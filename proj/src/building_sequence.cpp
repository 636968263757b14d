#include "motzkin/building_sequence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace motzkin {

int BuildingSequence::width() const {
  int w = 0;
  for (int f : flats) w += f;
  for (int p : peaks) w += 2 * p;
  return w;
}

long BuildingSequence::area() const {
  long a = 0;
  for (int i = 0; i <= height(); ++i) {
    a += static_cast<long>(i) * flats[i];
    if (i >= 1) a += static_cast<long>(2 * i - 1) * peaks[i];
  }
  return a;
}

void BuildingSequence::trim() {
  while (flats.size() > 1 && flats.back() == 0 && peaks.back() == 0) {
    flats.pop_back();
    peaks.pop_back();
  }
}

void BuildingSequence::validate() const {
  if (flats.empty() || flats.size() != peaks.size())
    throw std::invalid_argument("BadSequence: mismatched level arrays");
  if (peaks[0] != 0)
    throw std::invalid_argument("BadSequence: peaks at height 0");
  const int h = height();
  for (int i = 0; i <= h; ++i) {
    if (flats[i] < 0 || peaks[i] < 0)
      throw std::invalid_argument("BadSequence: negative count");
    if (i >= 1 && peaks[i] == 0)
      throw std::invalid_argument("BadSequence: p_" + std::to_string(i) +
                                  " is zero below the top level");
  }
}

std::string BuildingSequence::str() const {
  std::string s = std::to_string(flats[0]);
  for (int i = 1; i <= height(); ++i)
    s += ";" + std::to_string(peaks[i]) + "," + std::to_string(flats[i]);
  return s;
}

namespace {

int parse_int(std::string_view tok) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw std::invalid_argument("BadSequence: cannot parse '" + std::string(tok) + "'");
  return v;
}

}  // namespace

BuildingSequence BuildingSequence::parse(std::string_view text) {
  BuildingSequence a;
  a.flats.clear();
  a.peaks.clear();
  std::size_t pos = 0;
  bool first = true;
  while (pos <= text.size()) {
    std::size_t sep = text.find(';', pos);
    std::string_view tok = text.substr(pos, sep == std::string_view::npos ? std::string_view::npos : sep - pos);
    if (first) {
      a.flats.push_back(parse_int(tok));
      a.peaks.push_back(0);
      first = false;
    } else {
      std::size_t comma = tok.find(',');
      if (comma == std::string_view::npos)
        throw std::invalid_argument("BadSequence: expected 'p,f' level in '" + std::string(tok) + "'");
      a.peaks.push_back(parse_int(tok.substr(0, comma)));
      a.flats.push_back(parse_int(tok.substr(comma + 1)));
    }
    if (sep == std::string_view::npos) break;
    pos = sep + 1;
  }
  a.validate();
  return a;
}

BigInt perm_weight(const BuildingSequence& a) {
  BigInt w = 1;
  for (int i = 0; i <= a.height(); ++i) {
    if (a.flats[i] > 0) w *= pow_int(2 * i + 1, a.flats[i]);
    if (i >= 1 && a.peaks[i] > 0) w *= pow_int(i, 2UL * a.peaks[i]);
  }
  return w;
}

BigInt path_count(const BuildingSequence& a, Binomials& binom) {
  const int h = a.height();
  if (h == 0) return 1;
  const auto& f = a.flats;
  const auto& p = a.peaks;
  BigInt m = binom(f[h] + p[h] - 1, p[h] - 1);
  for (int i = h; i >= 2; --i) {
    m *= binom(p[i] + f[i - 1], f[i - 1]);
    m *= binom(p[i] + f[i - 1] + p[i - 1] - 1, p[i - 1] - 1);
  }
  m *= binom(p[1] + f[0], f[0]);
  return m;
}

BigInt total_weight(const BuildingSequence& a, Binomials& binom) {
  return path_count(a, binom) * perm_weight(a);
}

namespace {

void enumerate_rec(int level, int w, long r, BuildingSequence& cur,
                   std::vector<BuildingSequence>& out, std::size_t cap) {
  if (level == 0) {
    if (r != 0) return;
    cur.flats[0] = w;
    if (out.size() >= cap) throw std::length_error("CapExceeded: |S(n,A)| past cap");
    out.push_back(cur);
    return;
  }
  // levels 1..level each still need a peak: width 2*level, area level^2 at least
  const long lvl = level;
  for (int fi = 0; fi + 2 * level <= w && lvl * fi + lvl * lvl <= r; ++fi) {
    for (int pi = 1;; ++pi) {
      const int w2 = w - fi - 2 * pi;
      const long r2 = r - lvl * fi - (2 * lvl - 1) * pi;
      if (w2 < 2 * (level - 1) || r2 < (lvl - 1) * (lvl - 1)) break;
      if (r2 <= (lvl - 1) * w2) {
        cur.flats[level] = fi;
        cur.peaks[level] = pi;
        enumerate_rec(level - 1, w2, r2, cur, out, cap);
      }
    }
  }
}

std::vector<int> flattened(const BuildingSequence& a) {
  std::vector<int> v;
  v.push_back(a.height());
  v.push_back(a.flats[0]);
  for (int i = 1; i <= a.height(); ++i) {
    v.push_back(a.peaks[i]);
    v.push_back(a.flats[i]);
  }
  return v;
}

}  // namespace

std::vector<BuildingSequence> enumerate_sequences(int n, long area, std::size_t cap) {
  std::vector<BuildingSequence> out;
  if (n < 0 || area < 0) return out;
  if (area == 0) {
    BuildingSequence flat;
    flat.flats[0] = n;
    out.push_back(flat);
  }
  const int hmax = std::min(n / 2, static_cast<int>(std::sqrt(static_cast<double>(area))) + 1);
  for (int h = 1; h <= hmax; ++h) {
    if (static_cast<long>(h) * h > area) break;
    BuildingSequence cur;
    cur.flats.assign(h + 1, 0);
    cur.peaks.assign(h + 1, 0);
    enumerate_rec(h, n, area, cur, out, cap);
  }
  std::sort(out.begin(), out.end(), [](const BuildingSequence& x, const BuildingSequence& y) {
    return flattened(x) < flattened(y);
  });
  return out;
}

MotzkinPath sample_path_for_sequence(const BuildingSequence& a, Rng& rng) {
  a.validate();
  const int h = a.height();
  const auto& f = a.flats;
  const auto& p = a.peaks;
  if (h == 0) return MotzkinPath::parse(std::string(f[0], 'H'));

  // Split an ordered item list into groups by `valleys` valley markers chosen
  // uniformly among items+valleys slots; each group becomes a U...D unit.
  auto regroup = [&rng](std::vector<std::string> items, int valleys) {
    const int slots = static_cast<int>(items.size()) + valleys;
    std::vector<int> marks = rng.combination(slots, valleys);
    std::vector<std::string> units;
    std::string cur = "U";
    std::size_t next_item = 0, next_mark = 0;
    for (int s = 0; s < slots; ++s) {
      if (next_mark < marks.size() && marks[next_mark] == s) {
        ++next_mark;
        cur += "D";
        units.push_back(std::move(cur));
        cur = "U";
      } else {
        cur += items[next_item++];
      }
    }
    cur += "D";
    units.push_back(std::move(cur));
    return units;
  };

  // Interleave `nflats` H items among the ordered units, uniformly.
  auto add_flats = [&rng](std::vector<std::string> units, int nflats) {
    const int slots = static_cast<int>(units.size()) + nflats;
    std::vector<int> marks = rng.combination(slots, nflats);
    std::vector<std::string> items;
    std::size_t next_unit = 0, next_mark = 0;
    for (int s = 0; s < slots; ++s) {
      if (next_mark < marks.size() && marks[next_mark] == s) {
        ++next_mark;
        items.emplace_back("H");
      } else {
        items.push_back(std::move(units[next_unit++]));
      }
    }
    return items;
  };

  // Top level: f_h flats split into p_h groups by p_h - 1 DU valleys.
  std::vector<std::string> items(f[h], std::string("H"));
  std::vector<std::string> units = regroup(std::move(items), p[h] - 1);

  for (int i = h - 1; i >= 1; --i) {
    units = regroup(add_flats(std::move(units), f[i]), p[i] - 1);
  }
  std::vector<std::string> final_items = add_flats(std::move(units), f[0]);
  std::string path;
  for (const auto& s : final_items) path += s;
  return MotzkinPath::parse(path);
}

BuildingSequence path_to_sequence(const MotzkinPath& path) {
  int maxh = 0;
  for (int h : path.heights()) maxh = std::max(maxh, h);
  BuildingSequence a;
  a.flats.assign(maxh + 1, 0);
  a.peaks.assign(maxh + 1, 0);
  const auto& mv = path.moves();
  const auto& hi = path.heights();
  for (std::size_t i = 0; i < mv.size(); ++i) {
    // each D closes the most recent unmatched U, at the D's own top height
    if (mv[i] == 'H')
      ++a.flats[hi[i]];
    else if (mv[i] == 'D')
      ++a.peaks[hi[i]];
  }
  a.trim();
  return a;
}

}  // namespace motzkin
