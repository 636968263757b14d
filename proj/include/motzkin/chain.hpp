#ifndef MOTZKIN_CHAIN_HPP
#define MOTZKIN_CHAIN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motzkin/bigint.hpp"
#include "motzkin/building_sequence.hpp"
#include "motzkin/random.hpp"

namespace motzkin {

// The four local operations of the Metropolis chain over building sequences,
// each applied to a pair of height indices, forward or reversed.
enum class MoveOp { PeakToFlat, FlatToValley, FlatToFlat, PeakToValley };

struct LocalMove {
  MoveOp op;
  int i = 0;
  int j = 0;
  bool reverse = false;
};

// Applies the move if the result is a valid building sequence of the same
// width and area; nullopt signals "do nothing" (infeasible proposal).
std::optional<BuildingSequence> apply_move(const BuildingSequence& a,
                                           const LocalMove& mv);

// The state-independent proposal universe of width n: 4 operations x 2
// directions x per-op index ranges of size floor(n/2) each (peak indices in
// [1, m], flat-raise indices in [0, m-1]). A step proposes uniformly here.
std::vector<LocalMove> proposal_universe(int n);

// P(b)/P(a) as an exact rational, computed from the changed factors of
// perm(a) and m(a) only. Both sequences must share (n, A).
Rational acceptance_ratio(const BuildingSequence& a, const BuildingSequence& b,
                          Binomials& binom);

// Greedy initial state: one peak per height 1..floor(sqrt(A)), remaining
// width filled with flats at the maximal height that keeps the residual
// area reachable. Throws std::domain_error("Infeasible...") when S(n,A)
// is empty.
BuildingSequence initial_state(int n, long A);

// A single Metropolis chain proposing uniformly from proposal_universe(n);
// infeasible and rejected proposals hold the current state.
class BlockChain {
 public:
  BlockChain(int n, long A, std::uint64_t base_seed, std::uint64_t chain_index);

  void step();
  void advance(long steps);

  long long steps_taken() const { return steps_; }
  BuildingSequence current() const;
  std::string key() const { return current().str(); }

  int width() const { return n_; }
  long area() const { return area_; }

 private:
  int n_;
  long area_;
  int max_h_;  // floor(n/2)
  std::vector<int> f_, p_;    // padded to max_h_ + 1 levels
  std::vector<int> nf_, np_;  // proposal scratch
  long long steps_ = 0;
  Rng rng_;
  Binomials binom_;
};

struct ExperimentConfig {
  int n = 0;
  long area = 0;
  long steps = 0;     // horizon t
  long runs = 1;      // independent chains
  std::uint64_t seed = 0;
  long tv_every = 100;  // TV-report schedule: every k-th step
  int threads = 1;
};

struct TvPoint {
  long t = 0;
  double tv = 1.0;
  std::size_t visited = 0;
};

// Exact TV distance between the empirical visit histogram and the stationary
// law pi(a) = P(a)/D(n,A), charging unvisited sequences their stationary mass.
Rational tv_distance(const std::map<std::string, long long>& visits,
                     long long total_runs, const BigInt& d_marginal,
                     Binomials& binom);

// Runs cfg.runs chains from initial_state in lockstep rounds of cfg.tv_every
// steps, reporting the TV distance at each scheduled step. When stop_at_tv
// is positive the experiment ends at the first scheduled step whose TV drops
// to or below it.
std::vector<TvPoint> run_experiment(const ExperimentConfig& cfg,
                                    const BigInt& d_marginal,
                                    double stop_at_tv = -1.0);

// Smallest scheduled t with TV <= epsilon; throws
// std::runtime_error("NotMixed...") when the horizon is exhausted.
long estimate_mixing_time(const ExperimentConfig& cfg, const BigInt& d_marginal,
                          double epsilon = 0.05);

}  // namespace motzkin

#endif
