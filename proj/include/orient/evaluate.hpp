#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "orient/algorithms.hpp"
#include "orient/model.hpp"

namespace orient {

struct EvalOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::size_t bootstrap = 1000;
  std::string instance_id = "instance";
  /// Record wall time; off by default so that reruns are byte-identical.
  bool timing = false;
};

struct EvaluationReport {
  std::string instance_id;
  std::string algorithm;
  double d = std::numeric_limits<double>::quiet_NaN();
  double alpha = std::numeric_limits<double>::quiet_NaN();
  std::size_t n_samples = 0;
  double mean_alg = 0.0;
  double mean_opt = 0.0;
  double ratio = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::uint64_t seed = 0;
  long long wall_ms = 0;
  double se_alg = 0.0;  // standard errors of the two means
  double se_opt = 0.0;
  std::vector<double> alg_costs;
  std::vector<double> opt_costs;
};

namespace detail {

/// Runs body(worker, index) for index in [0, n) on `threads` workers and
/// rethrows the first exception.
template <class Body>
void parallel_for(std::size_t n, std::size_t threads, Body&& body) {
  threads = std::max<std::size_t>(1, std::min(threads, n));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&](std::size_t worker) {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(worker, i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
        return;
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

inline double mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

inline double standard_error(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
}

inline constexpr std::uint64_t kPrepareStream = 0x70726570ULL;
inline constexpr std::uint64_t kBootstrapStream = 0x626f6f74ULL;

}  // namespace detail

/// Percentile interval of the ratio of means over paired bootstrap resamples.
inline std::pair<double, double> bootstrap_ratio_ci(const std::vector<double>& alg, const std::vector<double>& opt,
                                                    std::size_t resamples, std::uint64_t seed,
                                                    std::size_t threads = 1) {
  const std::size_t n = alg.size();
  if (n == 0 || resamples == 0) return {0.0, 0.0};
  std::vector<double> ratios(resamples);
  detail::parallel_for(resamples, threads, [&](std::size_t, std::size_t b) {
    Rng rng = make_rng(seed, b);
    double sa = 0.0, so = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = static_cast<std::size_t>(rng() % n);
      sa += alg[j];
      so += opt[j];
    }
    ratios[b] = so > 0.0 ? sa / so : (sa > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
  });
  std::sort(ratios.begin(), ratios.end());
  auto at = [&](double q) {
    const auto k = static_cast<std::size_t>(std::floor(q * static_cast<double>(resamples - 1) + 0.5));
    return ratios[std::min(k, resamples - 1)];
  };
  return {at(0.025), at(0.975)};
}

/// Runs `alg` and the offline optimum on the same sampled realizations.
/// Realization i is drawn from the stream derive_seed(seed, i), so results do
/// not depend on the number of threads.
inline EvaluationReport evaluate(const Instance& inst, const Algorithm& alg, const EvalOptions& opt) {
  if (opt.samples == 0) throw ValidationError("need at least one sample");
  const auto start = std::chrono::steady_clock::now();
  const Runner run = alg.prepare(inst, derive_seed(opt.seed, detail::kPrepareStream));

  EvaluationReport rep;
  rep.instance_id = opt.instance_id;
  rep.algorithm = alg.name;
  rep.d = alg.d;
  rep.alpha = alg.alpha;
  rep.n_samples = opt.samples;
  rep.seed = opt.seed;
  rep.alg_costs.assign(opt.samples, 0.0);
  rep.opt_costs.assign(opt.samples, 0.0);

  const std::size_t workers = std::max<std::size_t>(1, std::min(opt.threads, opt.samples));
  std::vector<OptimumOracle> oracles(workers, OptimumOracle(inst));
  detail::parallel_for(opt.samples, workers, [&](std::size_t w, std::size_t i) {
    Rng rng = make_rng(opt.seed, i);
    const Realization r = sample_realization(inst, rng);
    const QueryTranscript t = run(r);
    if (!is_feasible(inst, r, t.queried_mask()))
      throw std::logic_error(alg.name + " produced an infeasible query set");
    const double best = oracles[w].cost(r);
    if (best > t.total_cost() + 1e-9 * std::max(1.0, best))
      throw std::logic_error("offline optimum exceeds the cost of " + alg.name);
    rep.alg_costs[i] = t.total_cost();
    rep.opt_costs[i] = best;
  });

  rep.mean_alg = detail::mean(rep.alg_costs);
  rep.mean_opt = detail::mean(rep.opt_costs);
  rep.se_alg = detail::standard_error(rep.alg_costs);
  rep.se_opt = detail::standard_error(rep.opt_costs);
  rep.ratio = rep.mean_opt > 0.0 ? rep.mean_alg / rep.mean_opt : 1.0;
  std::tie(rep.ci_lo, rep.ci_hi) = bootstrap_ratio_ci(rep.alg_costs, rep.opt_costs, opt.bootstrap,
                                                      derive_seed(opt.seed, detail::kBootstrapStream), workers);
  if (opt.timing)
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                      .count();
  return rep;
}

// ---------------------------------------------------------------------------
// CSV

inline const char* kCsvHeader = "instance_id,algorithm,d,alpha,n_samples,mean_alg,mean_opt,ratio,ci_lo,ci_hi,seed,wall_ms";

namespace detail {

inline std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

inline void write_csv_row(std::ostream& out, const EvaluationReport& r) {
  using detail::csv_number;
  out << detail::csv_field(r.instance_id) << ',' << detail::csv_field(r.algorithm) << ',' << csv_number(r.d) << ','
      << csv_number(r.alpha) << ',' << r.n_samples << ',' << csv_number(r.mean_alg) << ',' << csv_number(r.mean_opt)
      << ',' << csv_number(r.ratio) << ',' << csv_number(r.ci_lo) << ',' << csv_number(r.ci_hi) << ',' << r.seed
      << ',' << r.wall_ms << '\n';
}

/// Row for an evaluation that could not run: numeric results are nan.
inline void write_csv_failure(std::ostream& out, const std::string& instance_id, const Algorithm& alg,
                              std::size_t samples, std::uint64_t seed) {
  using detail::csv_number;
  out << detail::csv_field(instance_id) << ',' << detail::csv_field(alg.name) << ',' << csv_number(alg.d) << ','
      << csv_number(alg.alpha) << ',' << samples << ",nan,nan,nan,nan,nan," << seed << ",0\n";
}

}  // namespace orient
