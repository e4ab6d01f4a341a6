#pragma once

#include "linklab/embedding.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace linklab {

inline constexpr const char *kToolVersion = "linklab 1.0.0";

/// Linking data of one dual pair. For lambda `omegas` holds the single 3D
/// linking number; for Lambda it holds omega(T, S(Tbar)) then
/// omega(Tbar, S(T)).
struct PairRecord {
  DualPair pair;
  std::vector<long> omegas;
  int retries = 0;

  /// Per-pair term: |omega| for lambda, (|w1| + |w2|) / 2 for Lambda.
  Rational term() const {
    Rational sum = 0;
    for (const auto w : omegas)
      sum += std::labs(w);
    return omegas.size() == 2 ? Rational(sum / 2) : sum;
  }

  friend bool operator==(const PairRecord &, const PairRecord &) = default;
};

struct LinkReport {
  std::string invariant; ///< "lambda" or "Lambda"
  std::uint64_t seed = 0;
  std::vector<PairRecord> pairs;
  /// Sum of |omega| over all pairs (both orientations for Lambda).
  long total = 0;
  /// Absent exactly when `parity_anomaly` is set.
  std::optional<int> value;
  bool parity_anomaly = false;
  int retries = 0;

  friend bool operator==(const LinkReport &, const LinkReport &) = default;
};

/// Conway-Gordon invariant: sum over the 10 dual pairs of |lk(T, Tbar)|,
/// mod 2. Each pair uses its own seed derived from `seed`.
inline LinkReport lambda(const EmbeddedK6 &e, std::uint64_t seed) {
  auto check = verify_embedding3(e);
  if (!check.valid())
    throw InvalidEmbedding("lambda: input is not an embedding", std::move(check));
  LinkReport r{"lambda", seed, {}, 0, std::nullopt, false, 0};
  const auto pairs = dual_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto lk = lk3(e.cycle(pairs[i].t), e.cycle(pairs[i].t_bar), mix_seed(seed, i));
    r.pairs.push_back({pairs[i], {lk.value}, lk.retries});
    r.total += std::labs(lk.value);
    r.retries += lk.retries;
  }
  r.value = static_cast<int>(r.total % 2);
  return r;
}

/// The 4D invariant: with S the sum over dual pairs of
/// |lk(T, S(Tbar))| + |lk(Tbar, S(T))|, the value is (S / 2) mod 2. An odd S
/// is reported as a parity anomaly and no value is emitted.
inline LinkReport big_lambda(const EmbeddedSuspension &e, std::uint64_t seed) {
  auto check = verify_embedding4(e);
  if (!check.valid())
    throw InvalidEmbedding("big_lambda: input is not an embedding", std::move(check));
  const auto &c = EmbeddedSuspension::complex();
  LinkReport r{"Lambda", seed, {}, 0, std::nullopt, false, 0};
  const auto pairs = dual_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto &[t, t_bar] = pairs[i];
    const auto forward = lk4(e.cycle(t), e.surface(suspension_two_cycle(c, t_bar)), mix_seed(seed, 2 * i));
    const auto backward = lk4(e.cycle(t_bar), e.surface(suspension_two_cycle(c, t)), mix_seed(seed, 2 * i + 1));
    r.pairs.push_back({pairs[i], {forward.value, backward.value}, forward.retries + backward.retries});
    r.total += std::labs(forward.value) + std::labs(backward.value);
    r.retries += forward.retries + backward.retries;
  }
  if (r.total % 2)
    r.parity_anomaly = true;
  else
    r.value = static_cast<int>((r.total / 2) % 2);
  return r;
}

/// One trial of the invariance harness.
struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  LinkReport lambda;
  LinkReport big_lambda;
  /// |omega(T,S(Tbar))| = |omega(Tbar,S(T))| = |omega_3(T,Tbar)| for all pairs.
  bool pairs_agree = false;

  bool ok() const {
    return lambda.value == 1 && big_lambda.value == 1 && !big_lambda.parity_anomaly && pairs_agree;
  }
};

struct FuzzSummary {
  std::size_t trials = 0;
  std::size_t lambda_ones = 0;
  std::size_t big_lambda_ones = 0;
  std::size_t anomalies = 0;
  std::size_t pair_disagreements = 0;
  long retries = 0;
  std::vector<TrialRecord> records;

  bool ok() const {
    return lambda_ones == trials && big_lambda_ones == trials && anomalies == 0 &&
           pair_disagreements == 0;
  }
};

/// Random base in [-100,100]^3 and random rational apex offsets; lambda on
/// the base, Lambda on sigma6 of it.
inline TrialRecord fuzz_trial(std::uint64_t master_seed, std::size_t index) {
  TrialRecord rec;
  rec.index = index;
  rec.seed = mix_seed(master_seed, index);
  Rng rng(rec.seed);
  const auto base = random_generic_k6(rng.next(), 100);
  const Box<3> apex_box{{Rational(-50), Rational(-50), Rational(-50)},
                        {Rational(50), Rational(50), Rational(50)}};
  const Point3 apex_a = rng.grid_point(apex_box);
  const Point3 apex_b = rng.grid_point(apex_box);
  rec.lambda = lambda(base, mix_seed(rec.seed, 1));
  rec.big_lambda = big_lambda(sigma6(base, apex_a, apex_b), mix_seed(rec.seed, 2));
  rec.pairs_agree = true;
  for (std::size_t i = 0; i < rec.lambda.pairs.size(); ++i) {
    const long w3 = std::labs(rec.lambda.pairs[i].omegas[0]);
    const auto &w4 = rec.big_lambda.pairs[i].omegas;
    if (std::labs(w4[0]) != w3 || std::labs(w4[1]) != w3)
      rec.pairs_agree = false;
  }
  return rec;
}

/// Runs `trials` independent trials on up to `jobs` threads. Per-trial seeds
/// depend only on (seed, index), so the summary is the same for any `jobs`.
inline FuzzSummary fuzz_invariance(std::size_t trials, std::uint64_t seed, unsigned jobs = 1) {
  if (trials == 0)
    throw std::invalid_argument("fuzz_invariance: trials must be at least 1");
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(trials)));
  std::vector<TrialRecord> records(trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < trials;) {
      try {
        records[i] = fuzz_trial(seed, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);

  FuzzSummary s;
  s.trials = trials;
  for (const auto &r : records) {
    s.lambda_ones += r.lambda.value == 1;
    s.big_lambda_ones += r.big_lambda.value == 1;
    s.anomalies += r.big_lambda.parity_anomaly;
    s.pair_disagreements += !r.pairs_agree;
    s.retries += r.lambda.retries + r.big_lambda.retries;
  }
  s.records = std::move(records);
  return s;
}

} // namespace linklab
