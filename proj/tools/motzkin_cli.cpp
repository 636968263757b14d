// Command-line frontend: exact counting of permutations by total
// displacement via weighted Motzkin paths, three samplers, enumeration of
// building sequences, the Metropolis-chain experiment harness, and a
// cross-check suite.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "motzkin/building_sequence.hpp"
#include "motzkin/chain.hpp"
#include "motzkin/lastfall_dp.hpp"
#include "motzkin/path.hpp"
#include "motzkin/permutation.hpp"
#include "motzkin/topdown_dp.hpp"

using json = nlohmann::ordered_json;
using namespace motzkin;

namespace {

// --output is resolved against MOTZKIN_OUTPUT_DIR when relative.
std::unique_ptr<std::ofstream> open_output(const std::string& path, std::ostream*& out) {
  if (path.empty()) {
    out = &std::cout;
    return nullptr;
  }
  std::filesystem::path p(path);
  if (const char* dir = std::getenv("MOTZKIN_OUTPUT_DIR"); dir && p.is_relative())
    p = std::filesystem::path(dir) / p;
  auto f = std::make_unique<std::ofstream>(p);
  if (!*f) throw CLI::ValidationError("--output", "cannot open " + p.string());
  out = f.get();
  return f;
}

long max_area_of(int n) { return static_cast<long>(n) * n / 4; }

// The worst-case-mixing area used by the experiments: ((n-2)/2)^2 for even
// widths, ((n-1)/2)^2 for odd ones.
long hardest_area(int n) {
  const long k = (n % 2 == 0) ? (n - 2) / 2 : (n - 1) / 2;
  return k * k;
}

int cmd_count(int width, bool weighted, const std::string& mode_str,
              const std::string& format, const std::string& output) {
  std::ostream* out;
  auto file = open_output(output, out);
  const Mode mode = mode_str == "full" ? Mode::Full : Mode::Rolling;
  const Kind kind = weighted ? Kind::Weighted : Kind::Unweighted;
  CountTable table = CountTable::build(width, kind, mode);
  if (format == "json") {
    json rows = json::array();
    for (int n = 0; n <= width; ++n)
      for (long d = 0; d <= max_area_of(n); ++d)
        rows.push_back({{"n", n}, {"d", d}, {"count", table.marginal(n, d).get_str()}});
    *out << rows.dump(2) << "\n";
  } else {
    *out << "n,d,count\n";
    for (int n = 0; n <= width; ++n)
      for (long d = 0; d <= max_area_of(n); ++d)
        *out << n << "," << d << "," << table.marginal(n, d) << "\n";
  }
  return 0;
}

int cmd_sample_dp(int n, long area, long count, const std::string& emit,
                  bool weighted, std::uint64_t seed, const std::string& output) {
  std::ostream* out;
  auto file = open_output(output, out);
  const Kind kind = (weighted || emit == "permutation") ? Kind::Weighted : Kind::Unweighted;
  CountTable table = CountTable::build(n, kind, Mode::Full);
  if (table.marginal(n, area) == 0) {
    std::cerr << "EmptyClass: no paths of width " << n << " and area " << area << "\n";
    return 1;
  }
  Rng rng(seed);
  for (long k = 0; k < count; ++k) {
    MotzkinPath path = table.sample_path(n, area, rng);
    if (emit == "permutation")
      *out << sample_perm_for_path(path, rng).str() << "\n";
    else
      *out << path.moves() << "\n";
  }
  return 0;
}

int cmd_sample_seq(const std::string& sequence, long count, std::uint64_t seed,
                   const std::string& output) {
  std::ostream* out;
  auto file = open_output(output, out);
  const BuildingSequence a = BuildingSequence::parse(sequence);
  Rng rng(seed);
  for (long k = 0; k < count; ++k)
    *out << sample_path_for_sequence(a, rng).moves() << "\n";
  return 0;
}

int cmd_enumerate(int n, long area, std::size_t cap, const std::string& format,
                  const std::string& output) {
  std::ostream* out;
  auto file = open_output(output, out);
  Binomials binom;
  const auto seqs = enumerate_sequences(n, area, cap);
  CountTable table = CountTable::build(n, Kind::Weighted, Mode::Rolling);
  BigInt sum = 0;
  if (format == "json") {
    json rows = json::array();
    for (const auto& a : seqs) {
      const BigInt m = path_count(a, binom);
      const BigInt perm = perm_weight(a);
      const BigInt P = m * perm;
      sum += P;
      rows.push_back({{"sequence", a.str()},
                      {"m", m.get_str()},
                      {"perm", perm.get_str()},
                      {"P", P.get_str()}});
    }
    json doc{{"rows", rows},
             {"sum_P", sum.get_str()},
             {"D", table.marginal(n, area).get_str()}};
    *out << doc.dump(2) << "\n";
  } else {
    *out << "sequence,m,perm,P\n";
    for (const auto& a : seqs) {
      const BigInt m = path_count(a, binom);
      const BigInt perm = perm_weight(a);
      const BigInt P = m * perm;
      sum += P;
      *out << '"' << a.str() << "\"," << m << "," << perm << "," << P << "\n";
    }
    *out << "total,,," << sum << "\n";
    *out << "D(" << n << "," << area << "),,," << table.marginal(n, area) << "\n";
  }
  return 0;
}

int cmd_mcmc(const ExperimentConfig& cfg, const std::string& format,
             const std::string& output) {
  std::ostream* out;
  auto file = open_output(output, out);
  CountTable table = CountTable::build(cfg.n, Kind::Weighted, Mode::Rolling);
  const auto points = run_experiment(cfg, table.marginal(cfg.n, cfg.area));
  if (format == "json") {
    json rows = json::array();
    for (const auto& pt : points)
      rows.push_back({{"t", pt.t}, {"tv_distance", pt.tv}, {"visited_states", pt.visited}});
    *out << rows.dump(2) << "\n";
  } else {
    *out << "t,tv_distance,visited_states\n";
    for (const auto& pt : points)
      *out << pt.t << "," << pt.tv << "," << pt.visited << "\n";
  }
  return 0;
}

int cmd_mixing_sweep(const std::vector<int>& widths, long runs, long max_steps,
                     long tv_every, double eps, std::uint64_t seed, int threads,
                     const std::string& format, const std::string& output) {
  std::ostream* out;
  auto file = open_output(output, out);
  json rows = json::array();
  if (format != "json") *out << "n,A,mixing_time\n";
  for (int n : widths) {
    const long A = hardest_area(n);
    CountTable table = CountTable::build(n, Kind::Weighted, Mode::Rolling);
    ExperimentConfig cfg;
    cfg.n = n;
    cfg.area = A;
    cfg.steps = max_steps;
    cfg.runs = runs;
    cfg.seed = seed;
    cfg.tv_every = tv_every;
    cfg.threads = threads;
    const long tmix = estimate_mixing_time(cfg, table.marginal(n, A), eps);
    if (format == "json")
      rows.push_back({{"n", n}, {"A", A}, {"mixing_time", tmix}});
    else
      *out << n << "," << A << "," << tmix << "\n";
    out->flush();
  }
  if (format == "json") *out << rows.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify: the cross-check suite

struct Verifier {
  int failures = 0;

  void check(const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  }
};

int cmd_verify(int max_n, bool scaling, std::uint64_t seed) {
  Verifier v;
  Binomials binom;
  const int brute_n = std::min(max_n, 10);

  CountTable weighted = CountTable::build(std::max(max_n, 2), Kind::Weighted, Mode::Full);
  CountTable unweighted = CountTable::build(std::max(max_n, 2), Kind::Unweighted, Mode::Full);

  // permutation brute force vs the weighted DP
  {
    bool ok = true;
    for (int n = 0; n <= brute_n; ++n) {
      auto table = brute_force_displacement_table(n);
      for (long d = 0; d <= max_area_of(n); ++d) {
        BigInt want = table.count(d) ? table[d] : BigInt(0);
        if (weighted.marginal(n, d) != want) ok = false;
      }
    }
    v.check("displacement-oracle-vs-dp", ok);
  }

  // exhaustive path enumeration vs both kinds, plus the per-path identities
  {
    bool counts_ok = true, weights_ok = true, perm_eq_ok = true, mult_ok = true;
    for (int n = 0; n <= max_n; ++n) {
      std::map<long, BigInt> by_area_count, by_area_weight;
      std::map<std::string, BigInt> mult;
      for (const auto& path : enumerate_paths(n)) {
        by_area_count[path.area()] += 1;
        by_area_weight[path.area()] += path.weight();
        const BuildingSequence a = path_to_sequence(path);
        if (perm_weight(a) != path.weight()) perm_eq_ok = false;
        mult[a.str() + "@" + std::to_string(path.area())] += 1;
      }
      for (long A = 0; A <= max_area_of(n); ++A) {
        BigInt wc = by_area_count.count(A) ? by_area_count[A] : BigInt(0);
        BigInt ww = by_area_weight.count(A) ? by_area_weight[A] : BigInt(0);
        if (unweighted.marginal(n, A) != wc) counts_ok = false;
        if (weighted.marginal(n, A) != ww) weights_ok = false;
        for (const auto& a : enumerate_sequences(n, A)) {
          BigInt got = mult.count(a.str() + "@" + std::to_string(A))
                           ? mult[a.str() + "@" + std::to_string(A)]
                           : BigInt(0);
          if (got != path_count(a, binom)) mult_ok = false;
        }
      }
    }
    v.check("path-enumeration-vs-m", counts_ok);
    v.check("path-weights-vs-d", weights_ok);
    v.check("perm-weight-eq-path-weight", perm_eq_ok);
    v.check("sequence-multiplicity-m", mult_ok);
  }

  // top-down DP vs last-fall DP, both kinds
  {
    bool ok = true;
    TopDownTable tm(Kind::Unweighted), td(Kind::Weighted);
    for (int n = 0; n <= max_n; ++n)
      for (long A = 0; A <= max_area_of(n); ++A) {
        if (tm.marginal(n, A) != unweighted.marginal(n, A)) ok = false;
        if (td.marginal(n, A) != weighted.marginal(n, A)) ok = false;
      }
    v.check("topdown-vs-lastfall", ok);
  }

  // per-class sequence sums vs both marginals
  {
    bool ok = true;
    for (int n = 0; n <= max_n; ++n)
      for (long A = 0; A <= max_area_of(n); ++A) {
        BigInt sum_p = 0, sum_m = 0;
        for (const auto& a : enumerate_sequences(n, A)) {
          sum_p += total_weight(a, binom);
          sum_m += path_count(a, binom);
        }
        if (sum_p != weighted.marginal(n, A)) ok = false;
        if (sum_m != unweighted.marginal(n, A)) ok = false;
      }
    v.check("sequence-sum-vs-dp", ok);
  }

  // rolling and full marginals agree; row sums hit n! and Motzkin totals
  {
    bool ok = true;
    CountTable rolling = CountTable::build(max_n, Kind::Weighted, Mode::Rolling);
    for (int n = 0; n <= max_n; ++n) {
      for (long A = 0; A <= max_area_of(n); ++A)
        if (rolling.marginal(n, A) != weighted.marginal(n, A)) ok = false;
      if (weighted.row_sum(n) != factorial(n)) ok = false;
    }
    v.check("rolling-vs-full-and-rowsums", ok);
  }

  // sampler roundtrips
  {
    bool ok = true;
    Rng rng(seed);
    const int nmax = std::min(max_n, 8);
    for (int n = 0; n <= nmax; ++n) {
      for (const auto& path : enumerate_paths(n)) {
        const Permutation pi = sample_perm_for_path(path, rng);
        if (!(perm_to_path(pi) == path)) ok = false;
        if (pi.displacement() != 2 * path.area()) ok = false;
        const BuildingSequence a = path_to_sequence(path);
        if (!(path_to_sequence(sample_path_for_sequence(a, rng)) == a)) ok = false;
      }
      for (long A = 0; A <= max_area_of(n); ++A) {
        if (unweighted.marginal(n, A) == 0) continue;
        MotzkinPath s = unweighted.sample_path(n, A, rng);
        if (s.width() != n || s.area() != A) ok = false;
        s = weighted.sample_path(n, A, rng);
        if (s.width() != n || s.area() != A) ok = false;
      }
    }
    v.check("sampler-roundtrips", ok);
  }

  if (scaling) {
    std::cout << "-- scaling report --\n";
    std::vector<double> xs, ys;
    for (int n : {20, 40, 60, 80, 100}) {
      const auto t0 = std::chrono::steady_clock::now();
      CountTable t = CountTable::build(n, Kind::Weighted, Mode::Rolling);
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      std::cout << "count n=" << n << " seconds=" << dt.count() << "\n";
      xs.push_back(std::log(static_cast<double>(n)));
      ys.push_back(std::log(std::max(dt.count(), 1e-9)));
    }
    auto slope = [](const std::vector<double>& x, const std::vector<double>& y) {
      double mx = 0, my = 0;
      for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
      mx /= x.size();
      my /= y.size();
      double num = 0, den = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
      }
      return num / den;
    };
    std::cout << "count log-log slope (time vs n): " << slope(xs, ys) << "\n";

    std::vector<double> mx, my;
    for (int n : {8, 10, 12, 14}) {
      const long A = hardest_area(n);
      CountTable t = CountTable::build(n, Kind::Weighted, Mode::Rolling);
      ExperimentConfig cfg;
      cfg.n = n;
      cfg.area = A;
      cfg.steps = 100000;
      cfg.runs = 10000;
      cfg.seed = seed;
      cfg.tv_every = 50;
      const long tmix = estimate_mixing_time(cfg, t.marginal(n, A));
      std::cout << "mixing n=" << n << " A=" << A << " t_mix=" << tmix << "\n";
      mx.push_back(std::log(static_cast<double>(n)));
      my.push_back(std::log(static_cast<double>(std::max(tmix, 1L))));
    }
    std::cout << "mixing log-log slope (t_mix vs n): " << slope(mx, my) << "\n";
  }

  if (v.failures) {
    std::cout << v.failures << " check(s) failed\n";
    return 2;
  }
  std::cout << "all checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting and uniform sampling of permutations by total "
               "displacement, via weighted Motzkin paths"};
  app.require_subcommand(1);

  std::string output, format = "csv", mode = "rolling", emit = "path", sequence;
  bool weighted = false;
  int n = 0, threads = 1, max_n = 8;
  bool scaling = false;
  long area = 0, count = 1, steps = 10000, runs = 1000, tv_every = 100,
       max_steps = 1000000;
  double eps = 0.05;
  std::uint64_t seed = 0;
  std::size_t cap = 5'000'000;
  std::vector<int> widths;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", output, "output file (default stdout)");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* c_count = app.add_subcommand("count", "emit the count triangle n,d,count");
  c_count->add_option("--n", n, "maximum width")->required()->check(CLI::Range(0, 100000));
  c_count->add_flag("--weighted", weighted, "permutation counts D(n,d) instead of path counts M(n,A)");
  c_count->add_option("--mode", mode, "rolling or full")->check(CLI::IsMember({"rolling", "full"}));
  add_common(c_count);

  auto* c_sdp = app.add_subcommand("sample-dp", "sample paths/permutations by DP backtrace");
  c_sdp->add_option("--n", n)->required();
  c_sdp->add_option("--area", area)->required();
  c_sdp->add_option("--count", count);
  c_sdp->add_option("--emit", emit, "path or permutation")
      ->check(CLI::IsMember({"path", "permutation"}));
  c_sdp->add_flag("--weighted", weighted, "weight-proportional paths (forced for --emit permutation)");
  c_sdp->add_option("--mode", mode, "must be full: sampling needs the whole table")
      ->check(CLI::IsMember({"rolling", "full"}));
  c_sdp->add_option("--seed", seed);
  add_common(c_sdp);

  auto* c_sseq = app.add_subcommand("sample-seq", "sample paths for a building sequence");
  c_sseq->add_option("--sequence", sequence, "building sequence \"f0;p1,f1;...\"")->required();
  c_sseq->add_option("--count", count);
  c_sseq->add_option("--seed", seed);
  add_common(c_sseq);

  auto* c_enum = app.add_subcommand("enumerate", "list S(n,A) with m, perm, P");
  c_enum->add_option("--n", n)->required();
  c_enum->add_option("--area", area)->required();
  c_enum->add_option("--cap", cap, "abort past this many sequences");
  add_common(c_enum);

  auto* c_mcmc = app.add_subcommand("mcmc", "total-variation curve of the block chain");
  c_mcmc->add_option("--n", n)->required();
  c_mcmc->add_option("--area", area)->required();
  c_mcmc->add_option("--steps", steps);
  c_mcmc->add_option("--runs", runs);
  c_mcmc->add_option("--seed", seed);
  c_mcmc->add_option("--tv-every", tv_every);
  c_mcmc->add_option("--threads", threads);
  add_common(c_mcmc);

  auto* c_sweep = app.add_subcommand("mixing-sweep", "t_mix rows over widths at the hardest area");
  c_sweep->add_option("--widths", widths, "widths to sweep")->required();
  c_sweep->add_option("--runs", runs);
  c_sweep->add_option("--seed", seed);
  c_sweep->add_option("--tv-every", tv_every);
  c_sweep->add_option("--eps", eps);
  c_sweep->add_option("--max-steps", max_steps);
  c_sweep->add_option("--threads", threads);
  add_common(c_sweep);

  auto* c_verify = app.add_subcommand("verify", "cross-check suite over all backends");
  c_verify->add_option("--max-n", max_n, "exhaustive checks up to this width");
  c_verify->add_flag("--scaling", scaling, "emit the runtime / mixing-time scaling report");
  c_verify->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_count->parsed()) return cmd_count(n, weighted, mode, format, output);
    if (c_sdp->parsed()) {
      if (c_sdp->count("--mode") && mode == "rolling") {
        std::cerr << "WrongMode: sample-dp needs the full table; rolling mode "
                     "drops the layers the backtrace reads\n";
        return 1;
      }
      return cmd_sample_dp(n, area, count, emit, weighted, seed, output);
    }
    if (c_sseq->parsed()) return cmd_sample_seq(sequence, count, seed, output);
    if (c_enum->parsed()) return cmd_enumerate(n, area, cap, format, output);
    if (c_mcmc->parsed()) {
      ExperimentConfig cfg{n, area, steps, runs, seed, tv_every, threads};
      return cmd_mcmc(cfg, format, output);
    }
    if (c_sweep->parsed())
      return cmd_mixing_sweep(widths, runs, max_steps, tv_every, eps, seed,
                              threads, format, output);
    if (c_verify->parsed()) return cmd_verify(max_n, scaling, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
