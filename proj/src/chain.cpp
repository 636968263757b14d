#include "motzkin/chain.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <thread>

namespace motzkin {

namespace {

int top_level(const std::vector<int>& f, const std::vector<int>& p) {
  for (int k = static_cast<int>(f.size()) - 1; k >= 1; --k)
    if (f[k] > 0 || p[k] > 0) return k;
  return 0;
}

// Applies mv to the padded census (f, p); false when the result is not a
// valid building sequence. All arrays share the same size; indices outside
// it are infeasible (they would need width beyond n anyway).
bool apply_padded(const std::vector<int>& f, const std::vector<int>& p,
                  const LocalMove& mv, std::vector<int>& nf,
                  std::vector<int>& np) {
  const int L = static_cast<int>(f.size()) - 1;
  const int i = mv.i, j = mv.j;
  nf = f;
  np = p;
  const int s = mv.reverse ? -1 : 1;
  switch (mv.op) {
    case MoveOp::PeakToFlat:
      if (i < 1 || j + 1 > L || j < 0) return false;
      np[i] -= s;
      nf[i - 1] += 2 * s;
      nf[j] -= s;
      nf[j + 1] += s;
      break;
    case MoveOp::FlatToValley:
      if (i < 1 || j + 1 > L || j < 0) return false;
      nf[i] -= 2 * s;
      np[i] += s;
      nf[j] -= s;
      nf[j + 1] += s;
      break;
    case MoveOp::FlatToFlat:
      if (i < 0 || i + 1 > L || j < 1) return false;
      nf[i] -= s;
      nf[i + 1] += s;
      nf[j] -= s;
      nf[j - 1] += s;
      break;
    case MoveOp::PeakToValley:
      if (i < 1 || j < 1) return false;
      np[i] -= s;
      nf[i - 1] += 2 * s;
      np[j] -= s;
      nf[j] += 2 * s;
      break;
  }
  for (int k = 0; k <= L; ++k)
    if (nf[k] < 0 || np[k] < 0) return false;
  const int h = top_level(nf, np);
  for (int k = 1; k <= h; ++k)
    if (np[k] == 0) return false;
  return true;
}

// One level's factor of m(a): top level C(f_h+p_h-1, p_h-1), ground
// C(p_1+f_0, f_0), interior levels the flat and valley interleavings.
BigInt level_factor(const std::vector<int>& f, const std::vector<int>& p,
                    int h, int level, Binomials& binom) {
  if (h == 0) return 1;
  if (level == h) return binom(f[h] + p[h] - 1, p[h] - 1);
  if (level == 0) return binom(p[1] + f[0], f[0]);
  return binom(p[level + 1] + f[level], f[level]) *
         binom(p[level + 1] + f[level] + p[level] - 1, p[level] - 1);
}

// P(b)/P(a) from the changed factors only.
Rational ratio_padded(const std::vector<int>& fa, const std::vector<int>& pa,
                      const std::vector<int>& fb, const std::vector<int>& pb,
                      Binomials& binom) {
  const int ha = top_level(fa, pa);
  const int hb = top_level(fb, pb);
  BigInt num = 1, den = 1;

  const int hi = std::max(ha, hb);
  for (int L = 0; L <= hi; ++L) {
    const bool in_a = L <= ha;
    const bool in_b = L <= hb;
    if (in_a && in_b && (L == ha) == (L == hb) && fa[L] == fb[L] &&
        pa[L] == pb[L] &&
        (L >= hi || pa[L + 1] == pb[L + 1]))
      continue;  // identical factor on both sides
    if (in_b) num *= level_factor(fb, pb, hb, L, binom);
    if (in_a) den *= level_factor(fa, pa, ha, L, binom);
  }

  // perm(a) factors: (2L+1)^{f_L} and L^{2 p_L} per changed level
  const int levels = static_cast<int>(fa.size());
  for (int L = 0; L < levels; ++L) {
    if (fa[L] != fb[L]) {
      const int d = fb[L] - fa[L];
      (d > 0 ? num : den) *= pow_int(2 * L + 1, std::abs(d));
    }
    if (L >= 1 && pa[L] != pb[L]) {
      const int d = pb[L] - pa[L];
      (d > 0 ? num : den) *= pow_int(L, 2UL * std::abs(d));
    }
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

void pad_to(const BuildingSequence& a, int levels, std::vector<int>& f,
            std::vector<int>& p) {
  f.assign(levels, 0);
  p.assign(levels, 0);
  for (int k = 0; k <= a.height(); ++k) {
    f[k] = a.flats[k];
    p[k] = a.peaks[k];
  }
}

}  // namespace

std::optional<BuildingSequence> apply_move(const BuildingSequence& a,
                                           const LocalMove& mv) {
  const int levels = std::max({a.height(), mv.i + 1, mv.j + 1}) + 2;
  std::vector<int> f, p, nf, np;
  pad_to(a, levels, f, p);
  if (!apply_padded(f, p, mv, nf, np)) return std::nullopt;
  BuildingSequence b;
  b.flats = std::move(nf);
  b.peaks = std::move(np);
  b.trim();
  if (b.width() != a.width() || b.area() != a.area()) return std::nullopt;
  return b;
}

std::vector<LocalMove> proposal_universe(int n) {
  const int m = n / 2;
  std::vector<LocalMove> u;
  u.reserve(8 * static_cast<std::size_t>(m) * m);
  for (int rev = 0; rev < 2; ++rev)
    for (int i = 1; i <= m; ++i)
      for (int j = 0; j < m; ++j) {
        u.push_back({MoveOp::PeakToFlat, i, j, rev == 1});
        u.push_back({MoveOp::FlatToValley, i, j, rev == 1});
        u.push_back({MoveOp::FlatToFlat, j, i, rev == 1});
        u.push_back({MoveOp::PeakToValley, i, j + 1, rev == 1});
      }
  return u;
}

Rational acceptance_ratio(const BuildingSequence& a, const BuildingSequence& b,
                          Binomials& binom) {
  const int levels = std::max(a.height(), b.height()) + 1;
  std::vector<int> fa, pa, fb, pb;
  pad_to(a, levels, fa, pa);
  pad_to(b, levels, fb, pb);
  return ratio_padded(fa, pa, fb, pb, binom);
}

BuildingSequence initial_state(int n, long A) {
  if (n < 0 || A < 0 || A > static_cast<long>(n) * n / 4)
    throw std::domain_error("Infeasible: no sequence of width " +
                            std::to_string(n) + " and area " + std::to_string(A));
  int peak_h = 0;
  while (static_cast<long>(peak_h + 1) * (peak_h + 1) <= A) ++peak_h;

  BuildingSequence a;
  a.flats.assign(peak_h + 1, 0);
  a.peaks.assign(peak_h + 1, 0);
  for (int k = 1; k <= peak_h; ++k) a.peaks[k] = 1;

  int flats_left = n - 2 * peak_h;
  long area_left = A - static_cast<long>(peak_h) * peak_h;
  while (flats_left > 0) {
    --flats_left;
    // maximal height that keeps the residue reachable by the rest
    long h = std::min<long>(peak_h, area_left);
    h = std::max(h, area_left - static_cast<long>(peak_h) * flats_left);
    ++a.flats[h];
    area_left -= h;
  }
  if (area_left != 0)
    throw std::domain_error("Infeasible: greedy fill cannot exhaust the area");
  a.trim();
  a.validate();
  return a;
}

BlockChain::BlockChain(int n, long A, std::uint64_t base_seed,
                       std::uint64_t chain_index)
    : n_(n), area_(A), max_h_(n / 2), rng_(Rng::for_chain(base_seed, chain_index)) {
  BuildingSequence a0 = initial_state(n, A);
  pad_to(a0, max_h_ + 1, f_, p_);
  nf_ = f_;
  np_ = p_;
  binom_.ensure_rows(n + 2);
}

void BlockChain::step() {
  ++steps_;
  if (max_h_ < 1) return;
  LocalMove mv;
  mv.op = static_cast<MoveOp>(rng_.index(4));
  mv.reverse = rng_.coin();
  // per-op index ranges, each of size floor(n/2): peak indices live in
  // [1, m], flat-raise indices in [0, m-1]
  const int peak = 1 + static_cast<int>(rng_.index(max_h_));
  const int flat = static_cast<int>(rng_.index(max_h_));
  switch (mv.op) {
    case MoveOp::PeakToFlat:
    case MoveOp::FlatToValley:
      mv.i = peak;
      mv.j = flat;
      break;
    case MoveOp::FlatToFlat:
      mv.i = flat;
      mv.j = peak;
      break;
    case MoveOp::PeakToValley:
      mv.i = peak;
      mv.j = flat + 1;
      break;
  }
  if (!apply_padded(f_, p_, mv, nf_, np_)) return;
  const Rational r = ratio_padded(f_, p_, nf_, np_, binom_);
  if (rng_.bernoulli(r)) {
    f_.swap(nf_);
    p_.swap(np_);
  }
}

void BlockChain::advance(long steps) {
  for (long s = 0; s < steps; ++s) step();
}

BuildingSequence BlockChain::current() const {
  BuildingSequence a;
  a.flats = f_;
  a.peaks = p_;
  a.trim();
  return a;
}

Rational tv_distance(const std::map<std::string, long long>& visits,
                     long long total_runs, const BigInt& d_marginal,
                     Binomials& binom) {
  if (total_runs <= 0) throw std::invalid_argument("tv_distance: empty histogram");
  BigInt visited_weight = 0;
  Rational sum_abs = 0;
  for (const auto& [key, count] : visits) {
    const BuildingSequence a = BuildingSequence::parse(key);
    const BigInt weight = total_weight(a, binom);
    visited_weight += weight;
    Rational diff(BigInt(static_cast<long>(count)) * d_marginal -
                      weight * static_cast<long>(total_runs),
                  BigInt(static_cast<long>(total_runs)) * d_marginal);
    diff.canonicalize();
    sum_abs += abs(diff);
  }
  Rational unvisited(d_marginal - visited_weight, d_marginal);
  unvisited.canonicalize();
  Rational tv = (unvisited + sum_abs) / 2;
  tv.canonicalize();
  return tv;
}

std::vector<TvPoint> run_experiment(const ExperimentConfig& cfg,
                                    const BigInt& d_marginal,
                                    double stop_at_tv) {
  if (cfg.runs < 1 || cfg.steps < 0 || cfg.tv_every < 1)
    throw std::invalid_argument("run_experiment: bad configuration");
  Binomials binom;
  binom.ensure_rows(cfg.n + 2);

  std::vector<BlockChain> chains;
  chains.reserve(cfg.runs);
  for (long r = 0; r < cfg.runs; ++r)
    chains.emplace_back(cfg.n, cfg.area, cfg.seed, static_cast<std::uint64_t>(r));

  const int threads = std::max(1, cfg.threads);
  auto advance_all = [&](long steps) {
    if (threads == 1 || chains.size() < 2) {
      for (auto& c : chains) c.advance(steps);
      return;
    }
    std::vector<std::thread> pool;
    const std::size_t per = (chains.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::size_t lo = t * per;
      const std::size_t hi = std::min(chains.size(), lo + per);
      if (lo >= hi) break;
      pool.emplace_back([&chains, lo, hi, steps] {
        for (std::size_t c = lo; c < hi; ++c) chains[c].advance(steps);
      });
    }
    for (auto& th : pool) th.join();
  };

  auto measure = [&](long t) {
    std::map<std::string, long long> hist;
    for (const auto& c : chains) ++hist[c.key()];
    const Rational tv = tv_distance(hist, cfg.runs, d_marginal, binom);
    return TvPoint{t, tv.get_d(), hist.size()};
  };

  std::vector<TvPoint> points;
  points.push_back(measure(0));
  if (stop_at_tv >= 0 && points.back().tv <= stop_at_tv) return points;

  long t = 0;
  while (t < cfg.steps) {
    const long chunk = std::min(cfg.tv_every, cfg.steps - t);
    advance_all(chunk);
    t += chunk;
    points.push_back(measure(t));
    if (stop_at_tv >= 0 && points.back().tv <= stop_at_tv) break;
  }
  return points;
}

long estimate_mixing_time(const ExperimentConfig& cfg, const BigInt& d_marginal,
                          double epsilon) {
  const auto points = run_experiment(cfg, d_marginal, epsilon);
  for (const auto& pt : points)
    if (pt.tv <= epsilon) return pt.t;
  throw std::runtime_error("NotMixed: TV still above " + std::to_string(epsilon) +
                           " after " + std::to_string(cfg.steps) + " steps");
}

}  // namespace motzkin
